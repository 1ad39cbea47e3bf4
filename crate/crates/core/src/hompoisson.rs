//! Hom-Poisson structures induced by first-order terms of deformations of
//! commutative Hom-associative algebras.

use num_traits::Zero;

use crate::cochain::{delta2_hom_raw, delta2_matrix, from_coords, Flavor};
use crate::deform::{verify, DeformationSeries};
use crate::error::{Error, Result};
use crate::exactlin::rational::{self, Rational};
use crate::exactlin::{kernel_basis, Matrix};
use crate::homcore::{
    check_dim, hom_associativity_report, hom_lie_report, twisted_associator, BilinearMap, HomAlgebra,
    HomPoissonAlgebra, Kind, LinearMap, TriTensor,
};
use crate::report::{Report, Witness};

/// `{x,y} = μ₁(x,y) − μ₁(y,x)`.
pub fn bracket_from_mu1(mu1: &BilinearMap) -> BilinearMap {
    mu1.sub(&mu1.transpose()).expect("same dimension")
}

fn commutativity_witness(mu: &BilinearMap) -> Option<Witness> {
    let n = mu.dim();
    for i in 0..n {
        for j in i + 1..n {
            if mu.pair(i, j) != mu.pair(j, i) {
                return Some(Witness {
                    order: None,
                    indices: vec![i, j],
                    residual: mu.pair(i, j).iter().zip(mu.pair(j, i)).map(|(a, b)| a - b).collect(),
                });
            }
        }
    }
    None
}

pub fn commutativity_report(mu: &BilinearMap) -> Report {
    Report::from_witness("commutativity", commutativity_witness(mu))
}

/// `{α(x), μ(y,z)} − μ(α(y), {x,z}) − μ(α(z), {x,y})`.
pub fn compatibility_tensor(mu: &BilinearMap, bracket: &BilinearMap, alpha: &LinearMap) -> Result<TriTensor> {
    let n = mu.dim();
    check_dim(n, bracket.dim())?;
    check_dim(n, alpha.dim())?;
    let cols: Vec<_> = (0..n).map(|i| alpha.column(i)).collect();
    Ok(TriTensor::from_fn(n, |i, j, k| {
        let a = bracket.apply(&cols[i], mu.pair(j, k));
        let b = mu.apply(&cols[j], bracket.pair(i, k));
        let c = mu.apply(&cols[k], bracket.pair(i, j));
        a.iter().zip(&b).zip(&c).map(|((a, b), c)| a - b - c).collect()
    }))
}

/// `{μ(x,y), α(z)} − μ({x,z}, α(y)) − μ(α(x), {y,z})`.
pub fn leibniz_compatibility_tensor(
    mu: &BilinearMap,
    bracket: &BilinearMap,
    alpha: &LinearMap,
) -> Result<TriTensor> {
    let n = mu.dim();
    check_dim(n, bracket.dim())?;
    check_dim(n, alpha.dim())?;
    let cols: Vec<_> = (0..n).map(|i| alpha.column(i)).collect();
    Ok(TriTensor::from_fn(n, |i, j, k| {
        let a = bracket.apply(mu.pair(i, j), &cols[k]);
        let b = mu.apply(bracket.pair(i, k), &cols[j]);
        let c = mu.apply(&cols[i], bracket.pair(j, k));
        a.iter().zip(&b).zip(&c).map(|((a, b), c)| a - b - c).collect()
    }))
}

/// One report per axiom, in a fixed order: commutativity, Hom-associativity,
/// Hom-Lie, compatibility, compatibility in Leibniz form.
pub fn hom_poisson_reports(p: &HomPoissonAlgebra) -> Result<Vec<Report>> {
    let compat = compatibility_tensor(&p.mu, &p.bracket, &p.alpha)?;
    let leib = leibniz_compatibility_tensor(&p.mu, &p.bracket, &p.alpha)?;
    Ok(vec![
        commutativity_report(&p.mu),
        hom_associativity_report(&p.mu, &p.alpha)?,
        hom_lie_report(&p.bracket, &p.alpha)?,
        Report::from_witness("compatibility", compat.first_nonzero()),
        Report::from_witness("compatibility-leibniz", leib.first_nonzero()),
    ])
}

/// Passes iff every axiom holds; the first failing axiom supplies the witness.
pub fn check_hom_poisson(p: &HomPoissonAlgebra) -> Result<Report> {
    let reports = hom_poisson_reports(p)?;
    let mut out = match reports.iter().find(|r| !r.passed) {
        None => Report::pass("hom-poisson"),
        Some(r) => Report::fail("hom-poisson", r.witness.clone().expect("failed report has a witness")),
    };
    for r in &reports {
        out = out.with_note(format!("{}: {}", r.name, if r.passed { "pass" } else { "FAIL" }));
    }
    Ok(out)
}

/// `(V, μ₀, μ₁ − μ₁ᵒᵖ, α₀)` from a verified deformation of order at least 2
/// with commutative base.
pub fn poisson_from_deformation(d: &DeformationSeries) -> Result<HomPoissonAlgebra> {
    if d.flavor != Flavor::Associative {
        return Err(Error::KindMismatch {
            expected: Flavor::Associative.as_str().into(),
            found: d.flavor.as_str().into(),
        });
    }
    if d.order() < 2 {
        return Err(Error::Precondition(format!(
            "the Hom-Jacobi identity of the bracket uses the order-2 equation; got order {}",
            d.order()
        )));
    }
    if let Some(w) = commutativity_witness(&d.products[0]) {
        return Err(Error::Precondition(format!("base product is not commutative at {w}")));
    }
    let r = verify(d)?;
    if !r.passed {
        return Err(Error::Precondition(format!("deformation does not verify: {r}")));
    }
    HomPoissonAlgebra::new(
        d.products[0].clone(),
        bracket_from_mu1(&d.products[1]),
        d.twists[0].clone(),
    )
}

/// `φ(α(x), μ(y,z)) = μ(α(y), φ(x,z)) + μ(α(z), φ(x,y))` for a skew
/// 2-cocycle φ of a commutative Hom-associative algebra.
pub fn cocycle_leibniz_property(a: &HomAlgebra, phi: &BilinearMap) -> Result<Report> {
    a.expect_kind(Kind::HomAssociative)?;
    check_dim(a.dim(), phi.dim())?;
    if let Some(w) = commutativity_witness(&a.product) {
        return Err(Error::Precondition(format!("product is not commutative at {w}")));
    }
    let base = hom_associativity_report(&a.product, &a.alpha)?;
    if !base.passed {
        return Err(Error::InvalidBase(base.to_string()));
    }
    if let Some((i, j)) = phi.alternation_defect() {
        return Err(Error::NotAlternating(i, j));
    }
    if let Some(w) = delta2_hom_raw(&a.product, &a.alpha, phi)?.first_nonzero() {
        return Err(Error::Precondition(format!("cochain is not a 2-cocycle: {w}")));
    }
    let t = compatibility_tensor(&a.product, phi, &a.alpha)?;
    Ok(Report::from_witness("cocycle-leibniz", t.first_nonzero()))
}

/// `(↻ δ²μ₂, ↻ μ₂ ∘_{α₀} μ₀)`; equal whenever μ₀ is commutative.
pub fn cyclic_delta2_pair(
    mu0: &BilinearMap,
    alpha0: &LinearMap,
    mu2: &BilinearMap,
) -> Result<(TriTensor, TriTensor)> {
    Ok((
        delta2_hom_raw(mu0, alpha0, mu2)?.cyclic_sum(),
        twisted_associator(mu2, mu0, alpha0)?.cyclic_sum(),
    ))
}

/// `↻_{x,y,z} δ²μ₂(x,y,z) − ↻_{x,z,y} δ²μ₂(x,z,y)`.
pub fn cyclic_delta2_difference(mu0: &BilinearMap, alpha0: &LinearMap, mu2: &BilinearMap) -> Result<TriTensor> {
    let d = delta2_hom_raw(mu0, alpha0, mu2)?;
    d.cyclic_sum().sub(&d.swap_last().cyclic_sum())
}

/// `↻_{x,y,z} μ₀ ∘_α μ₀`.
pub fn cyclic_self_associator(mu0: &BilinearMap, alpha: &LinearMap) -> Result<TriTensor> {
    Ok(twisted_associator(mu0, mu0, alpha)?.cyclic_sum())
}

/// Alternating 2-cocycles of an associative base: `{φ : δ²φ = 0, φ(x,y) = −φ(y,x)}`.
pub fn skew_cocycle_basis(a: &HomAlgebra) -> Result<Vec<BilinearMap>> {
    a.expect_kind(Kind::HomAssociative)?;
    let n = a.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let mut row = vec![Rational::zero(); n * n * n];
                row[(i * n + j) * n + k] += rational::one();
                row[(j * n + i) * n + k] += rational::one();
                rows.push(row);
            }
        }
    }
    let m = delta2_matrix(&a.product, &a.alpha, Flavor::Associative)?.vstack(&Matrix::from_rows(rows)?)?;
    kernel_basis(&m)
        .iter()
        .map(|c| from_coords(n, c, Flavor::Associative))
        .collect()
}
