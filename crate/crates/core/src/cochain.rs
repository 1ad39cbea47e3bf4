//! Cochains, the twist maps ρ¹/ρ², the coboundary operators δ¹/δ² in their
//! Hom-associative and Hom-Lie flavors, and exact computation of Z², B², H².
//!
//! A 2-Hom-cochain is a pair `(φ, τ)` whose τ-part obeys a constraint that is
//! the same for cocycles and coboundaries, so the quotient Z²/B² is computed on
//! the φ-part alone:
//! `dim H² = dim ker δ² − dim δ¹({f : f∘α = α∘f})`.
//!
//! Degree-one cocycles `{f : δ¹f = 0, f∘α = α∘f}` are returned as a space
//! (see [`derivations`]); no quotient is taken in degree one.
//!
//! Coordinates of a 2-cochain are row-major in `(i, j, k)`; for the Lie flavor
//! only pairs `i < j` are kept, ordered lexicographically.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::rational::{self, Rational};
use crate::exactlin::{kernel_basis, span_basis, Matrix, Vector};
use crate::homcore::{
    check_dim, combine, hom_associativity_report, hom_lie_report, twisted_associator, twisted_jacobiator,
    BilinearMap, HomAlgebra, Kind, LinearMap, TriTensor,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Associative,
    Lie,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Associative => "assoc",
            Flavor::Lie => "lie",
        }
    }

    /// The flavor whose identity a structure of this kind satisfies.
    pub fn for_kind(kind: Kind) -> Option<Flavor> {
        match kind {
            Kind::HomAssociative => Some(Flavor::Associative),
            Kind::HomLie => Some(Flavor::Lie),
            Kind::HomLeibniz => None,
        }
    }
}

impl std::str::FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "assoc" | "associative" | "hom-associative" => Ok(Flavor::Associative),
            "lie" | "hom-lie" => Ok(Flavor::Lie),
            other => Err(format!("unknown flavor {other:?} (expected assoc or lie)")),
        }
    }
}

pub type Cochain1 = LinearMap;

/// A bilinear 2-cochain; the Lie flavor is alternating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain2 {
    pub map: BilinearMap,
    pub flavor: Flavor,
}

impl Cochain2 {
    pub fn new(map: BilinearMap, flavor: Flavor) -> Result<Self> {
        if flavor == Flavor::Lie {
            if let Some((i, j)) = map.alternation_defect() {
                return Err(Error::NotAlternating(i, j));
            }
        }
        Ok(Cochain2 { map, flavor })
    }

    pub fn coords(&self) -> Vector {
        to_coords(&self.map, self.flavor)
    }
}

/// `(φ, τ)`. The τ-constraint is checked on demand against a base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomCochain2 {
    pub phi: Cochain2,
    pub tau: LinearMap,
}

impl HomCochain2 {
    /// `ρ²(τ) = 0` (associative) or `↻[τ(x),[y,z]] = 0` (Lie).
    pub fn tau_admissible(&self, base: &HomAlgebra) -> Result<bool> {
        Ok(match self.phi.flavor {
            Flavor::Associative => rho2_assoc(base, &self.tau)?.is_zero(),
            Flavor::Lie => tau_condition_lie(base, &self.tau)?.is_zero(),
        })
    }

    /// Membership in Z²: admissible τ and `δ²φ = 0`.
    pub fn is_cocycle(&self, base: &HomAlgebra) -> Result<bool> {
        if !self.tau_admissible(base)? {
            return Ok(false);
        }
        let d = match self.phi.flavor {
            Flavor::Associative => delta2_hom(base, &self.phi.map)?,
            Flavor::Lie => delta2_hl(base, &self.phi.map)?,
        };
        Ok(d.is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub flavor: Flavor,
    pub cochain_dim: usize,
    pub dim_z2: usize,
    pub dim_b2: usize,
    pub dim_h2: usize,
    pub basis_z2: Vec<Cochain2>,
    pub basis_b2: Vec<Cochain2>,
}

fn pairs(n: usize, flavor: Flavor) -> Vec<(usize, usize)> {
    match flavor {
        Flavor::Associative => (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect(),
        Flavor::Lie => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
    }
}

pub fn cochain_space_dim(n: usize, flavor: Flavor) -> usize {
    pairs(n, flavor).len() * n
}

pub fn to_coords(map: &BilinearMap, flavor: Flavor) -> Vector {
    pairs(map.dim(), flavor)
        .into_iter()
        .flat_map(|(i, j)| map.pair(i, j).to_vec())
        .collect()
}

pub fn from_coords(n: usize, coords: &[Rational], flavor: Flavor) -> Result<BilinearMap> {
    check_dim(cochain_space_dim(n, flavor), coords.len())?;
    let mut entries = Vec::new();
    for (p, (i, j)) in pairs(n, flavor).into_iter().enumerate() {
        entries.push((i, j, coords[p * n..(p + 1) * n].to_vec()));
    }
    match flavor {
        Flavor::Associative => BilinearMap::from_entries(n, &entries),
        Flavor::Lie => BilinearMap::alternating_from(n, &entries),
    }
}

/// Basis cochain with a single unit coordinate.
fn unit_cochain(n: usize, index: usize, flavor: Flavor) -> BilinearMap {
    let mut coords = vec![Rational::zero(); cochain_space_dim(n, flavor)];
    coords[index] = rational::one();
    from_coords(n, &coords, flavor).expect("coordinate length matches")
}

fn unit_linear(n: usize, index: usize) -> LinearMap {
    let mut m = vec![Rational::zero(); n * n];
    m[index] = rational::one();
    LinearMap::from_flat(n, m).expect("n² entries")
}

/// `ρ¹τ = τ∘α − α∘τ`.
pub fn rho1(a: &HomAlgebra, tau: &Cochain1) -> Result<LinearMap> {
    commutator(tau, &a.alpha)
}

pub(crate) fn commutator(tau: &LinearMap, alpha: &LinearMap) -> Result<LinearMap> {
    tau.compose(alpha)?.sub(&alpha.compose(tau)?)
}

/// `ρ²τ = μ ∘_τ μ`.
pub fn rho2_assoc(a: &HomAlgebra, tau: &LinearMap) -> Result<TriTensor> {
    twisted_associator(&a.product, &a.product, tau)
}

/// `μ_i ∘_α μ_j (x,y,z) = μ_i(α(x), μ_j(y,z)) − μ_i(μ_j(x,y), α(z))`.
pub fn alpha_associator(mu_i: &BilinearMap, mu_j: &BilinearMap, alpha: &LinearMap) -> Result<TriTensor> {
    twisted_associator(mu_i, mu_j, alpha)
}

/// `δ¹f(x,y) = f(μ(x,y)) − μ(f(x),y) − μ(x,f(y))` on a raw product.
pub(crate) fn delta1_raw(mu: &BilinearMap, f: &LinearMap) -> Result<BilinearMap> {
    let id = LinearMap::identity(mu.dim());
    mu.post_compose(f)?
        .sub(&mu.pre_compose(f, &id)?)?
        .sub(&mu.pre_compose(&id, f)?)
}

pub fn delta1_hom(a: &HomAlgebra, f: &Cochain1) -> Result<Cochain2> {
    Cochain2::new(delta1_raw(&a.product, f)?, Flavor::Associative)
}

pub fn delta1_hl(g: &HomAlgebra, f: &Cochain1) -> Result<Cochain2> {
    expect_lie(g)?;
    Cochain2::new(delta1_raw(&g.product, f)?, Flavor::Lie)
}

/// `δ²φ(x,y,z) = φ(α(x),μ(y,z)) − φ(μ(x,y),α(z)) + μ(α(x),φ(y,z)) − μ(φ(x,y),α(z))`.
pub(crate) fn delta2_hom_raw(mu: &BilinearMap, alpha: &LinearMap, phi: &BilinearMap) -> Result<TriTensor> {
    let n = mu.dim();
    check_dim(n, phi.dim())?;
    check_dim(n, alpha.dim())?;
    let cols: Vec<Vector> = (0..n).map(|i| alpha.column(i)).collect();
    let one = rational::one();
    let minus = -rational::one();
    Ok(TriTensor::from_fn(n, |i, j, k| {
        combine(
            n,
            &[
                (&one, &phi.apply(&cols[i], mu.pair(j, k))),
                (&minus, &phi.apply(mu.pair(i, j), &cols[k])),
                (&one, &mu.apply(&cols[i], phi.pair(j, k))),
                (&minus, &mu.apply(phi.pair(i, j), &cols[k])),
            ],
        )
    }))
}

pub fn delta2_hom(a: &HomAlgebra, phi: &BilinearMap) -> Result<TriTensor> {
    delta2_hom_raw(&a.product, &a.alpha, phi)
}

/// `δ²φ(x,y,z) = ↻_{x,y,z} { φ(α(x),[y,z]) + [α(x),φ(y,z)] }`.
pub(crate) fn delta2_hl_raw(bracket: &BilinearMap, alpha: &LinearMap, phi: &BilinearMap) -> Result<TriTensor> {
    let n = bracket.dim();
    check_dim(n, phi.dim())?;
    check_dim(n, alpha.dim())?;
    let cols: Vec<Vector> = (0..n).map(|i| alpha.column(i)).collect();
    let one = rational::one();
    let term = |a: usize, b: usize, c: usize| {
        combine(
            n,
            &[
                (&one, &phi.apply(&cols[a], bracket.pair(b, c))),
                (&one, &bracket.apply(&cols[a], phi.pair(b, c))),
            ],
        )
    };
    Ok(TriTensor::from_fn(n, |i, j, k| {
        combine(n, &[(&one, &term(i, j, k)), (&one, &term(j, k, i)), (&one, &term(k, i, j))])
    }))
}

fn expect_lie(g: &HomAlgebra) -> Result<()> {
    if g.kind != Kind::HomLie {
        return Err(Error::KindMismatch {
            expected: Kind::HomLie.to_string(),
            found: g.kind.to_string(),
        });
    }
    Ok(())
}

pub fn delta2_hl(g: &HomAlgebra, phi: &BilinearMap) -> Result<TriTensor> {
    expect_lie(g)?;
    if let Some((i, j)) = phi.alternation_defect() {
        return Err(Error::NotAlternating(i, j));
    }
    delta2_hl_raw(&g.product, &g.alpha, phi)
}

/// `↻_{x,y,z} [τ(x),[y,z]]`.
pub fn tau_condition_lie(g: &HomAlgebra, tau: &LinearMap) -> Result<TriTensor> {
    expect_lie(g)?;
    twisted_jacobiator(&g.product, &g.product, tau)
}

/// Matrix of a linear operator given by its action on basis elements.
fn linearize(rows: usize, cols: usize, image: impl Fn(usize) -> Result<Vector>) -> Result<Matrix> {
    let columns = (0..cols).map(image).collect::<Result<Vec<_>>>()?;
    let m = Matrix::from_columns(rows, &columns);
    Ok(m)
}

fn delta2_raw(mu: &BilinearMap, alpha: &LinearMap, phi: &BilinearMap, flavor: Flavor) -> Result<TriTensor> {
    match flavor {
        Flavor::Associative => delta2_hom_raw(mu, alpha, phi),
        Flavor::Lie => delta2_hl_raw(mu, alpha, phi),
    }
}

/// δ² as a matrix from 2-cochain coordinates to flattened trilinear tensors.
pub(crate) fn delta2_matrix(mu: &BilinearMap, alpha: &LinearMap, flavor: Flavor) -> Result<Matrix> {
    let n = mu.dim();
    linearize(n.pow(4), cochain_space_dim(n, flavor), |c| {
        Ok(delta2_raw(mu, alpha, &unit_cochain(n, c, flavor), flavor)?.flat().to_vec())
    })
}

/// Basis of `{f : f∘α = α∘f}`.
pub fn commutant_basis(alpha: &LinearMap) -> Result<Vec<LinearMap>> {
    let n = alpha.dim();
    let m = linearize(n * n, n * n, |c| Ok(commutator(&unit_linear(n, c), alpha)?.flat().to_vec()))?;
    kernel_basis(&m)
        .into_iter()
        .map(|v| LinearMap::from_flat(n, v))
        .collect()
}

/// Basis of the admissible τ-parts for a product: `{τ : μ ∘_τ μ = 0}`
/// (associative) or `{τ : ↻[τ(x),[y,z]] = 0}` (Lie). These are also the
/// twists making the product a Hom-algebra of that flavor.
pub fn tau_space(product: &BilinearMap, flavor: Flavor) -> Result<Vec<LinearMap>> {
    let n = product.dim();
    let m = linearize(n.pow(4), n * n, |c| {
        let e = unit_linear(n, c);
        Ok(match flavor {
            Flavor::Associative => twisted_associator(product, product, &e)?,
            Flavor::Lie => twisted_jacobiator(product, product, &e)?,
        }
        .flat()
        .to_vec())
    })?;
    kernel_basis(&m)
        .into_iter()
        .map(|v| LinearMap::from_flat(n, v))
        .collect()
}

fn identity_check(mu: &BilinearMap, alpha: &LinearMap, flavor: Flavor) -> Result<()> {
    let report = match flavor {
        Flavor::Associative => hom_associativity_report(mu, alpha)?,
        Flavor::Lie => hom_lie_report(mu, alpha)?,
    };
    if !report.passed {
        return Err(Error::InvalidBase(report.to_string()));
    }
    Ok(())
}

/// Z², B² and H² of the base in the requested flavor. The base must satisfy
/// the flavor's defining identity.
pub fn cohomology2(a: &HomAlgebra, flavor: Flavor) -> Result<CohomologyReport> {
    let (mu, alpha) = (&a.product, &a.alpha);
    identity_check(mu, alpha, flavor)?;
    let n = a.dim();
    let cdim = cochain_space_dim(n, flavor);

    let z2 = kernel_basis(&delta2_matrix(mu, alpha, flavor)?);
    let images = commutant_basis(alpha)?
        .iter()
        .map(|f| Ok(to_coords(&delta1_raw(mu, f)?, flavor)))
        .collect::<Result<Vec<_>>>()?;
    let b2 = span_basis(&images, cdim);

    let wrap = |vs: &[Vector]| -> Result<Vec<Cochain2>> {
        vs.iter()
            .map(|v| Cochain2::new(from_coords(n, v, flavor)?, flavor))
            .collect()
    };
    Ok(CohomologyReport {
        flavor,
        cochain_dim: cdim,
        dim_z2: z2.len(),
        dim_b2: b2.len(),
        dim_h2: z2.len() - b2.len(),
        basis_z2: wrap(&z2)?,
        basis_b2: wrap(&b2)?,
    })
}

/// Basis of `{f : δ¹f = 0, f∘α = α∘f}`. Both flavors impose the same
/// constraints; the flavor only names which operator is meant.
pub fn derivations(a: &HomAlgebra, _flavor: Flavor) -> Result<Vec<Cochain1>> {
    let n = a.dim();
    let (mu, alpha) = (&a.product, &a.alpha);
    let d1 = linearize(n.pow(3), n * n, |c| Ok(delta1_raw(mu, &unit_linear(n, c))?.flat().to_vec()))?;
    let r1 = linearize(n * n, n * n, |c| Ok(commutator(&unit_linear(n, c), alpha)?.flat().to_vec()))?;
    kernel_basis(&d1.vstack(&r1)?)
        .into_iter()
        .map(|v| LinearMap::from_flat(n, v))
        .collect()
}
