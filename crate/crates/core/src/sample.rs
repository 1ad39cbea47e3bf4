//! Seeded random generators for structures that satisfy their identities.
//!
//! Products are drawn from small lists of classical algebras, moved by a
//! random unimodular change of basis, and paired with a random element of the
//! (linear) space of admissible twists.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cochain::{cohomology2, commutant_basis, tau_space, Flavor};
use crate::deform::{extend, DeformationSeries, FormalIso};
use crate::exactlin::rational::{binomial, frac, int, Rational};
use crate::exactlin::TruncSeries;
use crate::homcore::{BilinearMap, HomAlgebra, Kind, LinearMap};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer in `[-3, 3]`, occasionally divided by 2 or 3.
pub fn small_rational(rng: &mut SampleRng) -> Rational {
    let n = rng.gen_range(-3..=3);
    match rng.gen_range(0..6) {
        0 => frac(n, 2),
        1 => frac(n, 3),
        _ => int(n),
    }
}

pub fn small_int(rng: &mut SampleRng) -> Rational {
    int(rng.gen_range(-3..=3))
}

pub fn linear_map(rng: &mut SampleRng, n: usize) -> LinearMap {
    let m = (0..n * n).map(|_| small_rational(rng)).collect();
    LinearMap::from_flat(n, m).expect("n² entries")
}

pub fn bilinear_map(rng: &mut SampleRng, n: usize) -> BilinearMap {
    let c = (0..n.pow(3)).map(|_| small_rational(rng)).collect();
    BilinearMap::from_flat(n, c).expect("n³ entries")
}

pub fn alternating_map(rng: &mut SampleRng, n: usize) -> BilinearMap {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            entries.push((i, j, (0..n).map(|_| small_rational(rng)).collect()));
        }
    }
    BilinearMap::alternating_from(n, &entries).expect("alternating by construction")
}

pub fn symmetric_map(rng: &mut SampleRng, n: usize) -> BilinearMap {
    let mut b = BilinearMap::zero(n);
    for i in 0..n {
        for j in i..n {
            let out: Vec<Rational> = (0..n).map(|_| small_rational(rng)).collect();
            b.set_pair(i, j, out.clone());
            b.set_pair(j, i, out);
        }
    }
    b
}

/// Random combination of basis elements with small integer coefficients.
pub fn combination(rng: &mut SampleRng, basis: &[LinearMap], n: usize) -> LinearMap {
    basis.iter().fold(LinearMap::zero(n), |acc, b| {
        acc.add(&b.scale(&small_int(rng))).expect("same dimension")
    })
}

/// Unimodular integer matrix: a product of random elementary row operations.
pub fn unimodular(rng: &mut SampleRng, n: usize) -> LinearMap {
    let mut p = LinearMap::identity(n);
    if n < 2 {
        return p;
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let mut e = LinearMap::identity(n);
        e.set(i, j, small_int(rng));
        p = e.compose(&p).expect("same dimension");
    }
    p
}

/// `(x, y) ↦ P μ(P⁻¹x, P⁻¹y)`.
pub fn transport(mu: &BilinearMap, p: &LinearMap, p_inv: &LinearMap) -> BilinearMap {
    mu.pre_compose(p_inv, p_inv)
        .and_then(|m| m.post_compose(p))
        .expect("same dimension")
}

fn table(n: usize, entries: &[(usize, usize, &[i64])]) -> BilinearMap {
    let e: Vec<_> = entries
        .iter()
        .map(|(i, j, out)| (*i, *j, out.iter().map(|&x| int(x)).collect()))
        .collect();
    BilinearMap::from_entries(n, &e).expect("fixed tables")
}

fn lie_table(n: usize, entries: &[(usize, usize, &[i64])]) -> BilinearMap {
    let e: Vec<_> = entries
        .iter()
        .map(|(i, j, out)| (*i, *j, out.iter().map(|&x| int(x)).collect()))
        .collect();
    BilinearMap::alternating_from(n, &e).expect("fixed tables")
}

/// Commutative associative algebras of dimension ≤ 3.
pub fn commutative_associative_tables() -> Vec<BilinearMap> {
    vec![
        table(1, &[(0, 0, &[1])]),
        table(1, &[]),
        // dual numbers
        table(2, &[(0, 0, &[1, 0]), (0, 1, &[0, 1]), (1, 0, &[0, 1])]),
        // K × K
        table(2, &[(0, 0, &[1, 0]), (1, 1, &[0, 1])]),
        // e1 e1 = e2
        table(2, &[(0, 0, &[0, 1])]),
        // K[x]/(x³)
        table(
            3,
            &[
                (0, 0, &[1, 0, 0]),
                (0, 1, &[0, 1, 0]),
                (1, 0, &[0, 1, 0]),
                (0, 2, &[0, 0, 1]),
                (2, 0, &[0, 0, 1]),
                (1, 1, &[0, 0, 1]),
            ],
        ),
        // K[x,y]/(x,y)²
        table(
            3,
            &[
                (0, 0, &[1, 0, 0]),
                (0, 1, &[0, 1, 0]),
                (1, 0, &[0, 1, 0]),
                (0, 2, &[0, 0, 1]),
                (2, 0, &[0, 0, 1]),
            ],
        ),
        // K × K × K
        table(3, &[(0, 0, &[1, 0, 0]), (1, 1, &[0, 1, 0]), (2, 2, &[0, 0, 1])]),
        // K × dual numbers
        table(3, &[(0, 0, &[1, 0, 0]), (1, 1, &[0, 1, 0]), (1, 2, &[0, 0, 1]), (2, 1, &[0, 0, 1])]),
    ]
}

/// Associative algebras of dimension ≤ 3, commutative or not.
pub fn associative_tables() -> Vec<BilinearMap> {
    let mut v = commutative_associative_tables();
    // e1 a left unit, e2 left-annihilating
    v.push(table(2, &[(0, 0, &[1, 0]), (0, 1, &[0, 1])]));
    // upper triangular 2×2 matrices: E11, E12, E22
    v.push(table(
        3,
        &[(0, 0, &[1, 0, 0]), (0, 1, &[0, 1, 0]), (1, 2, &[0, 1, 0]), (2, 2, &[0, 0, 1])],
    ));
    v
}

/// Lie algebras of dimension ≤ 3.
pub fn lie_tables() -> Vec<BilinearMap> {
    vec![
        lie_table(1, &[]),
        lie_table(2, &[]),
        lie_table(2, &[(0, 1, &[0, 1])]),
        lie_table(3, &[]),
        lie_table(3, &[(0, 1, &[0, 0, 1])]),
        lie_table(3, &[(0, 1, &[0, 1, 0]), (0, 2, &[0, 0, 1])]),
        lie_table(3, &[(0, 1, &[0, 2, 0]), (0, 2, &[0, 0, -2]), (1, 2, &[1, 0, 0])]),
        lie_table(3, &[(0, 1, &[0, 0, 1]), (1, 2, &[1, 0, 0]), (2, 0, &[0, 1, 0])]),
    ]
}

fn structure(rng: &mut SampleRng, tables: &[BilinearMap], flavor: Flavor, kind: Kind) -> HomAlgebra {
    let base = &tables[rng.gen_range(0..tables.len())];
    let n = base.dim();
    let p = unimodular(rng, n);
    let p_inv = p.inverse().expect("unimodular");
    let mu = transport(base, &p, &p_inv);
    let twists = tau_space(&mu, flavor).expect("consistent dimensions");
    let alpha = combination(rng, &twists, n);
    HomAlgebra::with_default_labels(kind, mu, alpha).expect("valid by construction")
}

/// Hom-associative algebra of dimension ≤ 3 satisfying its identity.
pub fn hom_associative(rng: &mut SampleRng) -> HomAlgebra {
    structure(rng, &associative_tables(), Flavor::Associative, Kind::HomAssociative)
}

/// Commutative Hom-associative algebra of dimension ≤ 3.
pub fn commutative_hom_associative(rng: &mut SampleRng) -> HomAlgebra {
    structure(
        rng,
        &commutative_associative_tables(),
        Flavor::Associative,
        Kind::HomAssociative,
    )
}

/// Hom-Lie algebra of dimension ≤ 3 satisfying Hom-Jacobi.
pub fn hom_lie(rng: &mut SampleRng) -> HomAlgebra {
    structure(rng, &lie_tables(), Flavor::Lie, Kind::HomLie)
}

/// Random 1-cochain commuting with `alpha`.
pub fn commuting_map(rng: &mut SampleRng, alpha: &LinearMap) -> LinearMap {
    let basis = commutant_basis(alpha).expect("square map");
    combination(rng, &basis, alpha.dim())
}

/// Random combination of bilinear maps with small integer coefficients.
pub fn bilinear_combination(rng: &mut SampleRng, maps: &[BilinearMap], n: usize) -> BilinearMap {
    maps.iter().fold(BilinearMap::zero(n), |acc, m| {
        acc.add(&m.scale(&small_int(rng))).expect("same dimension")
    })
}

/// Random twist making `product` a Hom-algebra of the flavor.
pub fn admissible_twist(rng: &mut SampleRng, product: &BilinearMap, flavor: Flavor) -> LinearMap {
    let basis = tau_space(product, flavor).expect("consistent dimensions");
    combination(rng, &basis, product.dim())
}

/// A genuine associative deformation built by repeated extension; stops
/// early if an order is obstructed.
pub fn associative_deformation(rng: &mut SampleRng, order: usize) -> DeformationSeries {
    let base = hom_associative(rng);
    let mut d = DeformationSeries::trivial(&base, 0).expect("valid base");
    let cocycles = cohomology2(&base, Flavor::Associative).expect("valid base").basis_z2;
    for s in 1..=order {
        let alpha = admissible_twist(rng, &base.product, Flavor::Associative);
        if s == 1 {
            let maps: Vec<BilinearMap> = cocycles.iter().map(|c| c.map.clone()).collect();
            d.products.push(bilinear_combination(rng, &maps, base.dim()));
            d.twists.push(alpha);
            continue;
        }
        match extend(&d, &alpha).expect("consistent shapes") {
            Some(e) => d = e,
            None => break,
        }
    }
    d
}

/// Arbitrary higher-order data over `base`; usually not a deformation.
pub fn raw_series(rng: &mut SampleRng, base: &HomAlgebra, flavor: Flavor, order: usize) -> DeformationSeries {
    let n = base.dim();
    let mut d = DeformationSeries::trivial(base, 0).expect("valid base");
    for _ in 0..order {
        d.products.push(match flavor {
            Flavor::Associative => bilinear_map(rng, n),
            Flavor::Lie => alternating_map(rng, n),
        });
        d.twists.push(linear_map(rng, n));
    }
    d
}

pub fn formal_iso(rng: &mut SampleRng, n: usize, order: usize) -> FormalIso {
    let mut maps = vec![LinearMap::identity(n)];
    for _ in 0..order {
        maps.push(linear_map(rng, n));
    }
    FormalIso::new(maps).expect("identity constant term")
}

/// Order-2 deformation of a random commutative base, or `None` if the
/// sampled order-1 data is obstructed. Twists beyond order 0 are zero unless
/// `twisted`.
pub fn commutative_deformation(rng: &mut SampleRng, twisted: bool) -> Option<DeformationSeries> {
    let base = commutative_hom_associative(rng);
    let n = base.dim();
    let z2: Vec<_> = cohomology2(&base, Flavor::Associative)
        .expect("valid base")
        .basis_z2
        .into_iter()
        .map(|c| c.map)
        .collect();
    let taus = tau_space(&base.product, Flavor::Associative).expect("consistent dimensions");
    let mut twist = || if twisted { combination(rng, &taus, n) } else { LinearMap::zero(n) };
    let (a1, a2) = (twist(), twist());
    let mu1 = bilinear_combination(rng, &z2, n);
    let d = DeformationSeries::new(
        Flavor::Associative,
        vec![base.product.clone(), mu1],
        vec![base.alpha.clone(), a1],
    )
    .expect("consistent shapes");
    extend(&d, &a2).expect("consistent shapes")
}

/// `K[x,y]/(xᵖ, y²)` with `xᵃyᵇ·xᶜyᵈ = (1+t)^{bc} xᵃ⁺ᶜyᵇ⁺ᵈ`, Yau-twisted by
/// the grading automorphism `xᵃyᵇ ↦ λ(t)ᵃν(t)ᵇ xᵃyᵇ` for random series λ, ν,
/// then moved by a random unimodular basis change.
pub fn twisted_quantum_plane(rng: &mut SampleRng, order: usize) -> DeformationSeries {
    let (p, r) = (rng.gen_range(1..=3usize), 2);
    let n = p * r;
    let idx = |a: usize, b: usize| a + p * b;
    let mut products = vec![BilinearMap::zero(n); order + 1];
    for a in 0..p {
        for b in 0..r {
            for c in 0..p - a {
                for d in 0..r - b {
                    for (s, mu) in products.iter_mut().enumerate() {
                        mu.set(idx(a, b), idx(c, d), idx(a + c, b + d), binomial((b * c) as u64, s as u64));
                    }
                }
            }
        }
    }
    let draw = |rng: &mut SampleRng| {
        let mut c: Vec<Rational> = (0..=order).map(|_| small_int(rng)).collect();
        if c[0] == int(0) {
            c[0] = int(1);
        }
        TruncSeries::from_coeffs(c, order)
    };
    let (lam, nu) = (draw(rng), draw(rng));
    let mut twists = vec![LinearMap::zero(n); order + 1];
    for a in 0..p {
        for b in 0..r {
            let w = lam
                .pow(a as u32)
                .and_then(|x| x.mul(&nu.pow(b as u32)?))
                .expect("same truncation order");
            for (s, t) in twists.iter_mut().enumerate() {
                t.set(idx(a, b), idx(a, b), w.coeff(s));
            }
        }
    }
    let yau: Vec<BilinearMap> = (0..=order)
        .map(|s| {
            (0..=s).fold(BilinearMap::zero(n), |acc, k| {
                acc.add(&products[s - k].post_compose(&twists[k]).expect("same dimension"))
                    .expect("same dimension")
            })
        })
        .collect();
    let g = unimodular(rng, n);
    let g_inv = g.inverse().expect("unimodular");
    DeformationSeries::new(
        Flavor::Associative,
        yau.iter().map(|m| transport(m, &g, &g_inv)).collect(),
        twists
            .iter()
            .map(|t| g.compose(t).and_then(|x| x.compose(&g_inv)).expect("same dimension"))
            .collect(),
    )
    .expect("consistent shapes")
}
