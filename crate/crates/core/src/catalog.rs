//! Built-in parameterized instances: sl2 and its Hom-Lie deformations, the
//! sl2 twist family, the q-deformed Witt/Virasoro families and a quantum
//! plane deformation of a commutative algebra.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::Rng;

use crate::cochain::{cohomology2, tau_condition_lie, tau_space, Flavor};
use crate::deform::{residual_lie, DeformationSeries};
use crate::error::{Error, Result};
use crate::exactlin::rational::{self, frac, int, Rational};
use crate::exactlin::{kernel_basis, rref, Matrix, Vector};
use crate::graded::GradedFamily;
use crate::homcore::{twisted_jacobiator, BilinearMap, HomAlgebra, Kind, LinearMap, TriTensor};
use crate::sample;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    Algebra,
    Deformation,
    Graded,
}

impl EntryKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EntryKind::Algebra => "algebra",
            EntryKind::Deformation => "deformation",
            EntryKind::Graded => "graded",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub kind: EntryKind,
    pub params: Vec<(&'static str, Rational)>,
    /// Default truncation order for entries that take one.
    pub default_order: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Algebra(HomAlgebra),
    Deformation {
        series: DeformationSeries,
        labels: Vec<String>,
    },
    Graded(GradedFamily),
}

fn params(names: &[&'static str]) -> Vec<(&'static str, Rational)> {
    names.iter().map(|&n| (n, rational::one())).collect()
}

pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "sl2-efh",
            summary: "sl2 on (e, f, h): [h,f] = -2f, [h,e] = 2e, [e,f] = h, alpha = id",
            kind: EntryKind::Algebra,
            params: vec![],
            default_order: None,
        },
        CatalogEntry {
            name: "sl2-x",
            summary: "sl2 on (x1, x2, x3): [x1,x2] = 2x2, [x1,x3] = -2x3, [x2,x3] = x1, alpha = id",
            kind: EntryKind::Algebra,
            params: vec![],
            default_order: None,
        },
        CatalogEntry {
            name: "jackson-sl2",
            summary: "Jackson sl2 as a Hom-Lie deformation of sl2-efh, truncated at order N",
            kind: EntryKind::Deformation,
            params: vec![],
            default_order: Some(10),
        },
        CatalogEntry {
            name: "sl2-twist",
            summary: "sl2-x brackets with alpha rows (a, d, c; 2c, b, f; 2d, e, b)",
            kind: EntryKind::Algebra,
            params: params(&["a", "b", "c", "d", "e", "f"]),
            default_order: None,
        },
        CatalogEntry {
            name: "sl2-inf-1",
            summary: "infinitesimal Hom-Lie deformation of sl2-x, first family",
            kind: EntryKind::Deformation,
            params: params(&["a1", "a2", "a3", "b1", "b2", "b3"]),
            default_order: Some(1),
        },
        CatalogEntry {
            name: "sl2-inf-2",
            summary: "infinitesimal Hom-Lie deformation of sl2-x, second family",
            kind: EntryKind::Deformation,
            params: params(&["a1", "a2", "b1", "b2", "b3", "b4"]),
            default_order: Some(1),
        },
        CatalogEntry {
            name: "sl2-inf-3",
            summary: "infinitesimal Hom-Lie deformation of sl2-x, third family (a3 nonzero)",
            kind: EntryKind::Deformation,
            params: params(&["a1", "a2", "a3", "a4", "a5", "b"]),
            default_order: Some(1),
        },
        CatalogEntry {
            name: "sl2-nonlie",
            summary: "Hom-Lie deformation of sl2-x that is not a Lie algebra unless a1 = a3 = 0",
            kind: EntryKind::Deformation,
            params: params(&["a1", "a2", "a3", "a4", "b1", "b2"]),
            default_order: Some(2),
        },
        CatalogEntry {
            name: "qplane",
            summary: "K[x,y]/(x^2,y^2) with yx = (1+t)xy, Yau-twisted by alpha(x) = lambda x, alpha(y) = nu y",
            kind: EntryKind::Deformation,
            params: params(&["lambda", "nu"]),
            default_order: Some(2),
        },
        CatalogEntry {
            name: "qwitt",
            summary: "q-deformed Witt algebra: [x_n,x_m] = ({n}_q - {m}_q) x_{n+m}, alpha(x_n) = (q^n + 1) x_n",
            kind: EntryKind::Graded,
            params: vec![("q", int(2))],
            default_order: None,
        },
        CatalogEntry {
            name: "virq",
            summary: "q-deformed Virasoro algebra, central extension of qwitt with alpha(c) = 2c",
            kind: EntryKind::Graded,
            params: vec![("q", int(2))],
            default_order: None,
        },
        CatalogEntry {
            name: "witt-deformation",
            summary: "qwitt at q = 1 + t on non-negative indices as a deformation of the Witt algebra",
            kind: EntryKind::Graded,
            params: vec![],
            default_order: Some(4),
        },
    ]
}

pub fn entry(name: &str) -> Result<CatalogEntry> {
    entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

/// Builds an entry. Missing parameters take their defaults; unknown ones are
/// rejected.
pub fn get(name: &str, given: &BTreeMap<String, Rational>, order: Option<usize>) -> Result<Instance> {
    let e = entry(name)?;
    for key in given.keys() {
        if !e.params.iter().any(|(p, _)| p == key) {
            return Err(Error::UnknownParameter {
                entry: name.to_string(),
                param: key.clone(),
            });
        }
    }
    let p = |key: &str| -> Rational {
        given.get(key).cloned().unwrap_or_else(|| {
            e.params
                .iter()
                .find(|(n, _)| *n == key)
                .map(|(_, d)| d.clone())
                .expect("parameter declared by the entry")
        })
    };
    let n = order.or(e.default_order);
    let deformation = |series: DeformationSeries, labels: Vec<String>| Instance::Deformation { series, labels };
    Ok(match name {
        "sl2-efh" => Instance::Algebra(sl2_efh()),
        "sl2-x" => Instance::Algebra(sl2_x()),
        "sl2-twist" => Instance::Algebra(HomAlgebra::new(
            Kind::HomLie,
            x_labels(),
            sl2_x_bracket(),
            sl2_twist(&p("a"), &p("b"), &p("c"), &p("d"), &p("e"), &p("f")),
        )?),
        "jackson-sl2" => deformation(jackson_sl2(n.expect("default order"))?, efh_labels()),
        "sl2-inf-1" => deformation(
            pad(sl2_inf_1(&p("a1"), &p("a2"), &p("a3"), &p("b1"), &p("b2"), &p("b3"))?, n)?,
            x_labels(),
        ),
        "sl2-inf-2" => deformation(
            pad(sl2_inf_2(&p("a1"), &p("a2"), &p("b1"), &p("b2"), &p("b3"), &p("b4"))?, n)?,
            x_labels(),
        ),
        "sl2-inf-3" => deformation(
            pad(sl2_inf_3(&p("a1"), &p("a2"), &p("a3"), &p("a4"), &p("a5"), &p("b"))?, n)?,
            x_labels(),
        ),
        "sl2-nonlie" => deformation(
            pad(sl2_nonlie(&p("a1"), &p("a2"), &p("a3"), &p("a4"), &p("b1"), &p("b2"))?, n)?,
            x_labels(),
        ),
        "qplane" => deformation(
            pad(quantum_plane(&p("lambda"), &p("nu"))?, n)?,
            ["1", "x", "y", "xy"].iter().map(|s| s.to_string()).collect(),
        ),
        "qwitt" => Instance::Graded(GradedFamily::QWitt(p("q"))),
        "virq" => Instance::Graded(GradedFamily::Virq(p("q"))),
        "witt-deformation" => Instance::Graded(GradedFamily::WittDeformation(n.expect("default order"))),
        _ => unreachable!("entry() accepted the name"),
    })
}

/// Truncates or zero-pads to order `n` (no change when `None`).
fn pad(mut d: DeformationSeries, n: Option<usize>) -> Result<DeformationSeries> {
    let Some(n) = n else { return Ok(d) };
    if n < d.order() {
        return d.truncate(n);
    }
    let dim = d.dim();
    d.products.resize(n + 1, BilinearMap::zero(dim));
    d.twists.resize(n + 1, LinearMap::zero(dim));
    Ok(d)
}

fn efh_labels() -> Vec<String> {
    ["e", "f", "h"].iter().map(|s| s.to_string()).collect()
}

fn x_labels() -> Vec<String> {
    ["x1", "x2", "x3"].iter().map(|s| s.to_string()).collect()
}

fn vec3(a: Rational, b: Rational, c: Rational) -> Vector {
    vec![a, b, c]
}

fn bracket3(e12: Vector, e13: Vector, e23: Vector) -> Result<BilinearMap> {
    BilinearMap::alternating_from(3, &[(0, 1, e12), (0, 2, e13), (1, 2, e23)])
}

fn matrix3(rows: [[Rational; 3]; 3]) -> LinearMap {
    LinearMap::from_rows(rows.into_iter().map(|r| r.to_vec()).collect()).expect("3x3")
}

/// `[e,f] = h`, `[f,h] = 2f`, `[e,h] = −2e` on (e, f, h).
pub fn sl2_efh_bracket() -> BilinearMap {
    bracket3(
        vec3(int(0), int(0), int(1)),
        vec3(int(-2), int(0), int(0)),
        vec3(int(0), int(2), int(0)),
    )
    .expect("alternating")
}

pub fn sl2_efh() -> HomAlgebra {
    HomAlgebra::new(Kind::HomLie, efh_labels(), sl2_efh_bracket(), LinearMap::identity(3)).expect("sl2")
}

pub fn sl2_x_bracket() -> BilinearMap {
    bracket3(
        vec3(int(0), int(2), int(0)),
        vec3(int(0), int(0), int(-2)),
        vec3(int(1), int(0), int(0)),
    )
    .expect("alternating")
}

pub fn sl2_x() -> HomAlgebra {
    HomAlgebra::new(Kind::HomLie, x_labels(), sl2_x_bracket(), LinearMap::identity(3)).expect("sl2")
}

/// Rows `(a, d, c; 2c, b, f; 2d, e, b)`.
pub fn sl2_twist(a: &Rational, b: &Rational, c: &Rational, d: &Rational, e: &Rational, f: &Rational) -> LinearMap {
    let two = int(2);
    matrix3([
        [a.clone(), d.clone(), c.clone()],
        [&two * c, b.clone(), f.clone()],
        [&two * d, e.clone(), b.clone()],
    ])
}

/// Orders `0..=N` of the Jackson deformation on (e, f, h).
pub fn jackson_sl2(order: usize) -> Result<DeformationSeries> {
    let mut products = vec![sl2_efh_bracket()];
    let mut twists = vec![LinearMap::identity(3)];
    for k in 1..=order {
        if k == 1 {
            products.push(bracket3(
                vec3(int(0), int(0), frac(1, 2)),
                vec3(int(0), int(0), int(0)),
                vec3(int(0), int(2), int(0)),
            )?);
            twists.push(LinearMap::diagonal(vec![frac(-1, 2), frac(1, 2), int(0)]));
        } else {
            products.push(BilinearMap::zero(3));
            let sign = if k % 2 == 0 { 1 } else { -1 };
            twists.push(LinearMap::diagonal(vec![frac(sign, 2), int(0), int(0)]));
        }
    }
    DeformationSeries::new(Flavor::Lie, products, twists)
}

fn infinitesimal(bracket1: BilinearMap, alpha1: LinearMap) -> Result<DeformationSeries> {
    DeformationSeries::new(
        Flavor::Lie,
        vec![sl2_x_bracket(), bracket1],
        vec![LinearMap::identity(3), alpha1],
    )
}

pub fn sl2_inf_1(
    a1: &Rational,
    a2: &Rational,
    a3: &Rational,
    b1: &Rational,
    b2: &Rational,
    b3: &Rational,
) -> Result<DeformationSeries> {
    let z = Rational::zero;
    let bracket = bracket3(
        vec3(z(), -a1, int(1)),
        vec3(z(), a2.clone(), a1.clone()),
        vec3(a3.clone(), z(), z()),
    )?;
    let alpha = matrix3([
        [b1.clone(), z(), z()],
        [z(), b2.clone(), -(b3 * a2)],
        [z(), b3.clone(), b2.clone()],
    ]);
    infinitesimal(bracket, alpha)
}

pub fn sl2_inf_2(
    a1: &Rational,
    a2: &Rational,
    b1: &Rational,
    b2: &Rational,
    b3: &Rational,
    b4: &Rational,
) -> Result<DeformationSeries> {
    let z = Rational::zero;
    let two = int(2);
    let bracket = bracket3(
        vec3(z(), -(&two * a1), z()),
        vec3(z(), a2.clone(), &two * a1),
        vec3(-a1, z(), z()),
    )?;
    let alpha = matrix3([
        [b1.clone(), z(), b3.clone()],
        [&two * b3, b2.clone(), b4.clone()],
        [z(), z(), b2.clone()],
    ]);
    infinitesimal(bracket, alpha)
}

pub fn sl2_inf_3(
    a1: &Rational,
    a2: &Rational,
    a3: &Rational,
    a4: &Rational,
    a5: &Rational,
    b: &Rational,
) -> Result<DeformationSeries> {
    let bracket = bracket3(
        vec3(int(0), -a1, a2.clone()),
        vec3(a3.clone(), a4.clone(), a1.clone()),
        vec3(a5.clone(), -a3, int(0)),
    )?;
    infinitesimal(bracket, LinearMap::scalar(3, b.clone()))
}

/// The family that is Hom-Lie but not Lie; twist entry (3,3) is `1 − (a₂/2)t`.
pub fn sl2_nonlie(
    a1: &Rational,
    a2: &Rational,
    a3: &Rational,
    a4: &Rational,
    b1: &Rational,
    b2: &Rational,
) -> Result<DeformationSeries> {
    let z = Rational::zero;
    let half = frac(1, 2);
    let bracket1 = bracket3(
        vec3(a1.clone(), -a2, z()),
        vec3(a3.clone(), a4.clone(), a2.clone()),
        vec3(-(a2 * &half), z(), z()),
    )?;
    let alpha1 = matrix3([
        [b1.clone(), a1 * &half, (b2 - a3) * &half],
        [b2.clone(), -(a2 * &half), -(a4 * &half)],
        [z(), z(), -(a2 * &half)],
    ]);
    infinitesimal(bracket1, alpha1)
}

/// `K[x,y]/(x², y²)` on (1, x, y, xy) with `xᵃyᵇ·xᶜyᵈ = (1+t)^{bc} xᵃ⁺ᶜyᵇ⁺ᵈ`,
/// composed with the grading automorphism `α(xᵃyᵇ) = λᵃνᵇ xᵃyᵇ`.
pub fn quantum_plane(lambda: &Rational, nu: &Rational) -> Result<DeformationSeries> {
    let mut mu0 = BilinearMap::zero(4);
    let mut mu1 = BilinearMap::zero(4);
    for p in 0..4 {
        for q in 0..4 {
            let (a, b, c, d) = (p % 2, p / 2, q % 2, q / 2);
            if a + c > 1 || b + d > 1 {
                continue;
            }
            let out = (a + c) + 2 * (b + d);
            mu0.set(p, q, out, int(1));
            if b * c == 1 {
                mu1.set(p, q, out, int(1));
            }
        }
    }
    let alpha = LinearMap::diagonal(vec![int(1), lambda.clone(), nu.clone(), lambda * nu]);
    DeformationSeries::new(
        Flavor::Associative,
        vec![mu0.post_compose(&alpha)?, mu1.post_compose(&alpha)?],
        vec![alpha, LinearMap::zero(4)],
    )
}

/// Classical Jacobiator of `Σ products[i] tⁱ`, one tensor per power of t.
pub fn classical_jacobiator_orders(products: &[BilinearMap]) -> Result<Vec<TriTensor>> {
    let n = products[0].dim();
    let id = LinearMap::identity(n);
    let top = 2 * (products.len() - 1);
    (0..=top)
        .map(|s| {
            let mut acc = TriTensor::zero(n);
            for i in 0..products.len() {
                if s >= i && s - i < products.len() {
                    acc = acc.add(&twisted_jacobiator(&products[i], &products[s - i], &id)?)?;
                }
            }
            Ok(acc)
        })
        .collect()
}

/// Solution space of Hom-Jacobi for the sl2-x brackets, with α unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistSolution {
    pub dimension: usize,
    pub basis: Vec<LinearMap>,
    /// Linear relations on the entries `m_ij` (row-major coefficient vectors)
    /// cutting out the solution space, in reduced echelon form.
    pub relations: Vec<Vector>,
}

impl TwistSolution {
    /// Relations rendered as `m21 - 2 m13 = 0`.
    pub fn relation_strings(&self) -> Vec<String> {
        self.relations
            .iter()
            .map(|r| {
                let mut terms = Vec::new();
                for (idx, c) in r.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let name = format!("m{}{}", idx / 3 + 1, idx % 3 + 1);
                    let sign = if rational::is_negative(c) { "-" } else { "+" };
                    let mag = if rational::is_negative(c) { -c } else { c.clone() };
                    let coeff = if mag == rational::one() { String::new() } else { format!("{} ", rational::format(&mag)) };
                    terms.push((sign, format!("{coeff}{name}")));
                }
                let mut s = String::new();
                for (k, (sign, t)) in terms.iter().enumerate() {
                    if k == 0 {
                        if *sign == "-" {
                            s.push('-');
                        }
                    } else {
                        s.push_str(&format!(" {sign} "));
                    }
                    s.push_str(t);
                }
                format!("{s} = 0")
            })
            .collect()
    }
}

pub fn solve_sl2_twists() -> Result<TwistSolution> {
    let basis = tau_space(&sl2_x_bracket(), Flavor::Lie)?;
    let rows: Vec<Vector> = basis.iter().map(|m| m.flat().to_vec()).collect();
    let relations = if rows.is_empty() {
        (0..9)
            .map(|i| (0..9).map(|j| if i == j { rational::one() } else { Rational::zero() }).collect())
            .collect()
    } else {
        let ann = kernel_basis(&Matrix::from_rows(rows)?);
        if ann.is_empty() {
            Vec::new()
        } else {
            let e = rref(&Matrix::from_rows(ann)?);
            (0..e.rank()).map(|r| e.reduced.row(r).to_vec()).collect()
        }
    };
    Ok(TwistSolution {
        dimension: basis.len(),
        basis,
        relations,
    })
}

/// Per-source tallies for the conjecture probe.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SourceCensus {
    pub drawn: usize,
    /// `(V, [·,·]₀, α₁)` is Hom-Lie.
    pub side_condition: usize,
    /// Hom-Jacobi holds through order 1.
    pub infinitesimal: usize,
    /// Hom-Jacobi holds at every order of the polynomial bracket and twist.
    pub exact_hom_lie: usize,
    /// `[·,·]₀ + t[·,·]₁` satisfies the classical Jacobi identity for all t.
    pub lie: usize,
    pub counterexamples: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProbeStats {
    pub samples: usize,
    pub seed: u64,
    pub sources: BTreeMap<String, SourceCensus>,
    /// Descriptions of draws meeting the side condition and the
    /// infinitesimal deformation equation whose bracket is not Lie.
    pub counterexamples: Vec<String>,
}

impl ProbeStats {
    pub fn counterexample_count(&self) -> usize {
        self.sources.values().map(|s| s.counterexamples).sum()
    }
}

pub const PROBE_SOURCES: [&str; 5] = ["sl2-inf-1", "sl2-inf-2", "sl2-inf-3", "random-cocycle", "sl2-nonlie"];

fn draw_params(rng: &mut sample::SampleRng, k: usize) -> Vec<Rational> {
    (0..k).map(|_| int(rng.gen_range(-3..=3))).collect()
}

fn probe_draw(rng: &mut sample::SampleRng, source: &str) -> Result<(DeformationSeries, String)> {
    let sl2 = sl2_x();
    let p = draw_params(rng, 6);
    let fmt = |p: &[Rational]| p.iter().map(rational::format).collect::<Vec<_>>().join(",");
    Ok(match source {
        "sl2-inf-1" => (sl2_inf_1(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5])?, fmt(&p)),
        "sl2-inf-2" => (sl2_inf_2(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5])?, fmt(&p)),
        "sl2-inf-3" => (sl2_inf_3(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5])?, fmt(&p)),
        "sl2-nonlie" => (sl2_nonlie(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5])?, fmt(&p)),
        "random-cocycle" => {
            let z2 = cohomology2(&sl2, Flavor::Lie)?.basis_z2;
            let mut bracket = BilinearMap::zero(3);
            let mut coeffs = Vec::new();
            for c in &z2 {
                let k = int(rng.gen_range(-2..=2));
                bracket = bracket.add(&c.map.scale(&k))?;
                coeffs.push(k);
            }
            let twists = tau_space(&sl2.product, Flavor::Lie)?;
            let alpha = sample::combination(rng, &twists, 3);
            let label = format!("{}; alpha1 = {:?}", fmt(&coeffs), alpha.rows().iter().map(|r| fmt(r)).collect::<Vec<_>>());
            (infinitesimal(bracket, alpha)?, label)
        }
        other => return Err(Error::UnknownEntry(other.to_string())),
    })
}

/// Samples infinitesimal Hom-Lie deformations of sl2 and tests whether the
/// deformed bracket is a Lie bracket. Evidence only.
pub fn probe_conjecture(samples: usize, seed: u64) -> Result<ProbeStats> {
    let mut rng = sample::rng(seed);
    let mut stats = ProbeStats {
        samples,
        seed,
        ..ProbeStats::default()
    };
    if samples == 0 {
        return Ok(stats);
    }
    let sl2 = sl2_x();
    for k in 0..samples {
        let source = PROBE_SOURCES[k % PROBE_SOURCES.len()];
        let (d, label) = probe_draw(&mut rng, source)?;
        let census = stats.sources.entry(source.to_string()).or_default();
        census.drawn += 1;
        let side = tau_condition_lie(&sl2, &d.twists[1])?.is_zero();
        let infinitesimal = (0..=1).all(|s| residual_lie(&d, s).map(|r| r.is_zero()).unwrap_or(false));
        let exact = {
            let mut e = d.clone();
            e.products.resize(4, BilinearMap::zero(3));
            e.twists.resize(4, LinearMap::zero(3));
            (0..=3).all(|s| residual_lie(&e, s).map(|r| r.is_zero()).unwrap_or(false))
        };
        let lie = classical_jacobiator_orders(&d.products)?.iter().all(TriTensor::is_zero);
        census.side_condition += side as usize;
        census.infinitesimal += infinitesimal as usize;
        census.exact_hom_lie += exact as usize;
        census.lie += lie as usize;
        if side && infinitesimal && !lie {
            census.counterexamples += 1;
            stats.counterexamples.push(format!("{source}({label})"));
        }
    }
    Ok(stats)
}
