//! Finite-dimensional Hom-algebras given by structure constants, and
//! exhaustive checkers for their defining identities.
//!
//! Structures are stored raw: a candidate that violates its identity is still
//! representable, and the checkers report the lexicographically first failing
//! basis triple together with the full residual vector.

mod maps;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

pub use maps::{BilinearMap, LinearMap, TriTensor};
pub(crate) use maps::{check_dim, combine};

use crate::error::{Error, Result};
use crate::exactlin::rational::{self, Rational};
use crate::exactlin::{solve_affine, Matrix, Vector};
use crate::report::{Report, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    HomAssociative,
    HomLie,
    HomLeibniz,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::HomAssociative => "hom-associative",
            Kind::HomLie => "hom-lie",
            Kind::HomLeibniz => "hom-leibniz",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "hom-associative" => Ok(Kind::HomAssociative),
            "hom-lie" => Ok(Kind::HomLie),
            "hom-leibniz" => Ok(Kind::HomLeibniz),
            other => Err(format!(
                "unknown kind {other:?} (expected hom-associative, hom-lie or hom-leibniz)"
            )),
        }
    }
}

/// `(V, μ, α)` with a declared kind and basis labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAlgebra {
    pub kind: Kind,
    pub labels: Vec<String>,
    pub product: BilinearMap,
    pub alpha: LinearMap,
}

pub fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

impl HomAlgebra {
    /// Dimensions must agree; a `hom-lie` product must be alternating. The
    /// defining identity is not required.
    pub fn new(kind: Kind, labels: Vec<String>, product: BilinearMap, alpha: LinearMap) -> Result<Self> {
        check_dim(product.dim(), alpha.dim())?;
        check_dim(product.dim(), labels.len())?;
        if kind == Kind::HomLie {
            if let Some((i, j)) = product.alternation_defect() {
                return Err(Error::NotAlternating(i, j));
            }
        }
        Ok(HomAlgebra {
            kind,
            labels,
            product,
            alpha,
        })
    }

    pub fn with_default_labels(kind: Kind, product: BilinearMap, alpha: LinearMap) -> Result<Self> {
        let labels = default_labels(product.dim());
        Self::new(kind, labels, product, alpha)
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub(crate) fn expect_kind(&self, kind: Kind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::KindMismatch {
                expected: kind.to_string(),
                found: self.kind.to_string(),
            });
        }
        Ok(())
    }
}

/// `(V, μ, {·,·}, α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomPoissonAlgebra {
    pub mu: BilinearMap,
    pub bracket: BilinearMap,
    pub alpha: LinearMap,
}

impl HomPoissonAlgebra {
    pub fn new(mu: BilinearMap, bracket: BilinearMap, alpha: LinearMap) -> Result<Self> {
        check_dim(mu.dim(), bracket.dim())?;
        check_dim(mu.dim(), alpha.dim())?;
        Ok(HomPoissonAlgebra { mu, bracket, alpha })
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }
}

/// `outer ∘_α inner`: `(x,y,z) ↦ outer(α(x), inner(y,z)) − outer(inner(x,y), α(z))`.
pub fn twisted_associator(outer: &BilinearMap, inner: &BilinearMap, alpha: &LinearMap) -> Result<TriTensor> {
    let n = outer.dim();
    check_dim(n, inner.dim())?;
    check_dim(n, alpha.dim())?;
    let cols: Vec<Vector> = (0..n).map(|i| alpha.column(i)).collect();
    Ok(TriTensor::from_fn(n, |i, j, k| {
        let left = outer.apply(&cols[i], inner.pair(j, k));
        let right = outer.apply(inner.pair(i, j), &cols[k]);
        left.iter().zip(&right).map(|(a, b)| a - b).collect()
    }))
}

/// `(x,y,z) ↦ outer(α(x), inner(y,z))` before the cyclic sum.
pub(crate) fn twisted_nest(outer: &BilinearMap, inner: &BilinearMap, alpha: &LinearMap) -> Result<TriTensor> {
    let n = outer.dim();
    check_dim(n, inner.dim())?;
    check_dim(n, alpha.dim())?;
    let cols: Vec<Vector> = (0..n).map(|i| alpha.column(i)).collect();
    Ok(TriTensor::from_fn(n, |i, j, k| outer.apply(&cols[i], inner.pair(j, k))))
}

/// `↻_{x,y,z} outer(α(x), inner(y,z))`.
pub fn twisted_jacobiator(outer: &BilinearMap, inner: &BilinearMap, alpha: &LinearMap) -> Result<TriTensor> {
    Ok(twisted_nest(outer, inner, alpha)?.cyclic_sum())
}

pub fn hom_associator(mu: &BilinearMap, alpha: &LinearMap, i: usize, j: usize, k: usize) -> Result<Vector> {
    check_dim(mu.dim(), alpha.dim())?;
    let left = mu.apply(&alpha.column(i), mu.pair(j, k));
    let right = mu.apply(mu.pair(i, j), &alpha.column(k));
    Ok(left.iter().zip(&right).map(|(a, b)| a - b).collect())
}

pub fn hom_jacobiator(bracket: &BilinearMap, alpha: &LinearMap, i: usize, j: usize, k: usize) -> Result<Vector> {
    check_dim(bracket.dim(), alpha.dim())?;
    if let Some((a, b)) = bracket.alternation_defect() {
        return Err(Error::NotAlternating(a, b));
    }
    let n = bracket.dim();
    let term = |a: usize, b: usize, c: usize| bracket.apply(&alpha.column(a), bracket.pair(b, c));
    let one = rational::one();
    Ok(combine(
        n,
        &[(&one, &term(i, j, k)), (&one, &term(j, k, i)), (&one, &term(k, i, j))],
    ))
}

/// Hom-associativity of raw parts.
pub fn hom_associativity_report(mu: &BilinearMap, alpha: &LinearMap) -> Result<Report> {
    let t = twisted_associator(mu, mu, alpha)?;
    Ok(Report::from_witness("hom-associativity", t.first_nonzero()))
}

fn alternation_witness(b: &BilinearMap) -> Option<Witness> {
    b.alternation_defect().map(|(i, j)| {
        let residual = if i == j {
            b.pair(i, i).to_vec()
        } else {
            b.pair(i, j).iter().zip(b.pair(j, i)).map(|(x, y)| x + y).collect()
        };
        Witness {
            order: None,
            indices: vec![i, j],
            residual,
        }
    })
}

pub fn skew_symmetry_report(b: &BilinearMap) -> Report {
    Report::from_witness("skew-symmetry", alternation_witness(b))
}

/// Skew-symmetry followed by the Hom-Jacobi identity, on raw parts.
pub fn hom_lie_report(bracket: &BilinearMap, alpha: &LinearMap) -> Result<Report> {
    check_dim(bracket.dim(), alpha.dim())?;
    if let Some(w) = alternation_witness(bracket) {
        return Ok(Report::fail("hom-lie", w).with_note("bracket is not skew-symmetric"));
    }
    let t = twisted_jacobiator(bracket, bracket, alpha)?;
    Ok(Report::from_witness("hom-lie", t.first_nonzero()))
}

/// `[[x,y],α(z)] − [[x,z],α(y)] − [α(x),[y,z]]`, on raw parts.
pub fn hom_leibniz_report(bracket: &BilinearMap, alpha: &LinearMap) -> Result<Report> {
    let n = bracket.dim();
    check_dim(n, alpha.dim())?;
    let cols: Vec<Vector> = (0..n).map(|i| alpha.column(i)).collect();
    let t = TriTensor::from_fn(n, |i, j, k| {
        let a = bracket.apply(bracket.pair(i, j), &cols[k]);
        let b = bracket.apply(bracket.pair(i, k), &cols[j]);
        let c = bracket.apply(&cols[i], bracket.pair(j, k));
        a.iter().zip(&b).zip(&c).map(|((a, b), c)| a - b - c).collect()
    });
    Ok(Report::from_witness("hom-leibniz", t.first_nonzero()))
}

pub fn check_hom_associative(a: &HomAlgebra) -> Result<Report> {
    a.expect_kind(Kind::HomAssociative)?;
    hom_associativity_report(&a.product, &a.alpha)
}

pub fn check_hom_lie(a: &HomAlgebra) -> Result<Report> {
    a.expect_kind(Kind::HomLie)?;
    hom_lie_report(&a.product, &a.alpha)
}

pub fn check_hom_leibniz(a: &HomAlgebra) -> Result<Report> {
    a.expect_kind(Kind::HomLeibniz)?;
    hom_leibniz_report(&a.product, &a.alpha)
}

/// Runs the identity check matching the declared kind.
pub fn check_identity(a: &HomAlgebra) -> Result<Report> {
    match a.kind {
        Kind::HomAssociative => check_hom_associative(a),
        Kind::HomLie => check_hom_lie(a),
        Kind::HomLeibniz => check_hom_leibniz(a),
    }
}

/// `(V₁⊗V₂, μ₁⊗μ₂, α₁⊗α₂)`; basis `(i, k)` sits at index `i·dim(b) + k`.
pub fn tensor_product(a: &HomAlgebra, b: &HomAlgebra) -> Result<HomAlgebra> {
    a.expect_kind(Kind::HomAssociative)?;
    b.expect_kind(Kind::HomAssociative)?;
    let labels = a
        .labels
        .iter()
        .flat_map(|x| b.labels.iter().map(move |y| format!("({x},{y})")))
        .collect();
    HomAlgebra::new(
        Kind::HomAssociative,
        labels,
        a.product.kronecker(&b.product),
        a.alpha.kronecker(&b.alpha),
    )
}

/// `μ′∘(φ⊗φ) = φ∘μ` and `φ∘α = α′∘φ`.
pub fn is_morphism(phi: &LinearMap, a: &HomAlgebra, b: &HomAlgebra) -> Result<bool> {
    check_dim(a.dim(), phi.dim())?;
    check_dim(b.dim(), phi.dim())?;
    let lhs = b.product.pre_compose(phi, phi)?;
    let rhs = a.product.post_compose(phi)?;
    if lhs != rhs {
        return Ok(false);
    }
    Ok(phi.compose(&a.alpha)? == b.alpha.compose(phi)?)
}

/// Two-sided unit `e` with `μ(x,e) = μ(e,x) = x`, if one exists.
pub fn find_unit(a: &HomAlgebra) -> Result<Option<Vector>> {
    a.expect_kind(Kind::HomAssociative)?;
    let n = a.dim();
    let mu = &a.product;
    let mut m = Matrix::zeros(2 * n * n, n);
    let mut rhs = vec![Rational::zero(); 2 * n * n];
    for i in 0..n {
        for k in 0..n {
            let r = i * n + k;
            for j in 0..n {
                m.set(r, j, mu.get(i, j, k).clone());
                m.set(n * n + r, j, mu.get(j, i, k).clone());
            }
            if i == k {
                rhs[r] = rational::one();
                rhs[n * n + r] = rational::one();
            }
        }
    }
    Ok(solve_affine(&m, &rhs)?.map(|(e, _)| e))
}

#[cfg(test)]
mod tests;
