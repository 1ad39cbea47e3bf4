//! Truncated formal deformations `μ_t = Σ μ_i tⁱ`, `α_t = Σ α_i tⁱ`, exact
//! through `t^N`, with the order-by-order deformation equations, formal
//! equivalences and the degree-by-degree extension problem.

use crate::cochain::{delta2_hl_raw, delta2_hom_raw, delta2_matrix, from_coords, Flavor};
use crate::error::{Error, Result};
use crate::homcore::{
    check_dim, hom_associativity_report, hom_lie_report, twisted_associator, twisted_jacobiator, BilinearMap,
    HomAlgebra, Kind, LinearMap, TriTensor,
};
use crate::exactlin::solve_affine;
use crate::report::{Report, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationSeries {
    pub flavor: Flavor,
    pub products: Vec<BilinearMap>,
    pub twists: Vec<LinearMap>,
}

impl DeformationSeries {
    /// Checks shapes only: equal list lengths, at least the base, and a
    /// common dimension. Use [`DeformationSeries::validate`] for the
    /// algebraic invariants.
    pub fn new(flavor: Flavor, products: Vec<BilinearMap>, twists: Vec<LinearMap>) -> Result<Self> {
        if products.is_empty() {
            return Err(Error::Precondition("a deformation needs at least the order-0 part".into()));
        }
        if products.len() != twists.len() {
            return Err(Error::OrderMismatch {
                left: products.len() - 1,
                right: twists.len().saturating_sub(1),
            });
        }
        let n = products[0].dim();
        for p in &products {
            check_dim(n, p.dim())?;
        }
        for a in &twists {
            check_dim(n, a.dim())?;
        }
        Ok(DeformationSeries { flavor, products, twists })
    }

    /// The order-`0` structure with every higher term zero.
    pub fn trivial(base: &HomAlgebra, order: usize) -> Result<Self> {
        let flavor = Flavor::for_kind(base.kind)
            .ok_or_else(|| Error::Precondition("hom-leibniz structures have no deformation flavor".into()))?;
        let n = base.dim();
        let mut products = vec![base.product.clone()];
        let mut twists = vec![base.alpha.clone()];
        products.resize(order + 1, BilinearMap::zero(n));
        twists.resize(order + 1, LinearMap::zero(n));
        DeformationSeries::new(flavor, products, twists)
    }

    pub fn order(&self) -> usize {
        self.products.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.products[0].dim()
    }

    pub fn base(&self) -> Result<HomAlgebra> {
        let kind = match self.flavor {
            Flavor::Associative => Kind::HomAssociative,
            Flavor::Lie => Kind::HomLie,
        };
        HomAlgebra::with_default_labels(kind, self.products[0].clone(), self.twists[0].clone())
    }

    /// Keeps orders `0..=n`.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n > self.order() {
            return Err(Error::OrderOutOfRange {
                requested: n,
                order: self.order(),
            });
        }
        DeformationSeries::new(self.flavor, self.products[..=n].to_vec(), self.twists[..=n].to_vec())
    }

    /// Skew-symmetry of every bracket (Lie flavor) and the base identity.
    pub fn validate(&self) -> Result<()> {
        if self.flavor == Flavor::Lie {
            for p in &self.products {
                if let Some((i, j)) = p.alternation_defect() {
                    return Err(Error::NotAlternating(i, j));
                }
            }
        }
        let report = match self.flavor {
            Flavor::Associative => hom_associativity_report(&self.products[0], &self.twists[0])?,
            Flavor::Lie => hom_lie_report(&self.products[0], &self.twists[0])?,
        };
        if !report.passed {
            return Err(Error::InvalidBase(report.to_string()));
        }
        Ok(())
    }

    fn expect(&self, flavor: Flavor) -> Result<()> {
        if self.flavor != flavor {
            return Err(Error::KindMismatch {
                expected: flavor.as_str().into(),
                found: self.flavor.as_str().into(),
            });
        }
        Ok(())
    }

    fn check_order(&self, s: usize) -> Result<()> {
        if s > self.order() {
            return Err(Error::OrderOutOfRange {
                requested: s,
                order: self.order(),
            });
        }
        Ok(())
    }
}

/// `Φ_t = Id + Φ₁t + Φ₂t² + …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalIso {
    pub maps: Vec<LinearMap>,
}

impl FormalIso {
    pub fn new(maps: Vec<LinearMap>) -> Result<Self> {
        let Some(first) = maps.first() else {
            return Err(Error::Precondition("a formal isomorphism needs its constant term".into()));
        };
        if *first != LinearMap::identity(first.dim()) {
            return Err(Error::Precondition("constant term of a formal isomorphism must be the identity".into()));
        }
        for m in &maps {
            check_dim(first.dim(), m.dim())?;
        }
        Ok(FormalIso { maps })
    }

    pub fn identity(dim: usize, order: usize) -> Self {
        let mut maps = vec![LinearMap::identity(dim)];
        maps.resize(order + 1, LinearMap::zero(dim));
        FormalIso { maps }
    }

    pub fn order(&self) -> usize {
        self.maps.len() - 1
    }

    /// `Ψ = Φ⁻¹` truncated: `Ψ₀ = Id`, `Ψ_k = −Σ_{j=1}^{k} Φ_j Ψ_{k−j}`.
    pub fn inverse(&self) -> Result<FormalIso> {
        let n = self.maps[0].dim();
        let mut psi = vec![LinearMap::identity(n)];
        for k in 1..=self.order() {
            let mut acc = LinearMap::zero(n);
            for j in 1..=k {
                acc = acc.sub(&self.maps[j].compose(&psi[k - j])?)?;
            }
            psi.push(acc);
        }
        Ok(FormalIso { maps: psi })
    }
}

fn flatten_sum(n: usize, terms: impl IntoIterator<Item = Result<TriTensor>>) -> Result<TriTensor> {
    let mut acc = TriTensor::zero(n);
    for t in terms {
        acc.add_assign(&t?);
    }
    Ok(acc)
}

/// Index triples `(i, j, k)` with `i + j + k = s`.
fn triples(s: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=s).flat_map(move |i| (0..=s - i).map(move |j| (i, j, s - i - j)))
}

/// Associative term with outer product `i`, inner product `j`, twist `k`.
fn assoc_term(d: &DeformationSeries, i: usize, j: usize, k: usize) -> Result<TriTensor> {
    twisted_associator(&d.products[i], &d.products[j], &d.twists[k])
}

/// Lie term `↻[α_j(x), [y,z]_k]_i`.
fn lie_term(d: &DeformationSeries, i: usize, j: usize, k: usize) -> Result<TriTensor> {
    twisted_jacobiator(&d.products[i], &d.products[k], &d.twists[j])
}

/// `Σ_{i+j+k=s} μ_i ∘_{α_k} μ_j`.
pub fn residual_assoc(d: &DeformationSeries, s: usize) -> Result<TriTensor> {
    d.expect(Flavor::Associative)?;
    d.check_order(s)?;
    flatten_sum(d.dim(), triples(s).map(|(i, j, k)| assoc_term(d, i, j, k)))
}

/// `Σ_{i+j+k=s} ↻_{x,y,z} [α_j(x), [y,z]_k]_i`.
pub fn residual_lie(d: &DeformationSeries, s: usize) -> Result<TriTensor> {
    d.expect(Flavor::Lie)?;
    d.check_order(s)?;
    flatten_sum(d.dim(), triples(s).map(|(i, j, k)| lie_term(d, i, j, k)))
}

pub fn residual(d: &DeformationSeries, s: usize) -> Result<TriTensor> {
    match d.flavor {
        Flavor::Associative => residual_assoc(d, s),
        Flavor::Lie => residual_lie(d, s),
    }
}

/// Per-order verdicts for the deformation equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderStatus {
    pub order: usize,
    pub witness: Option<Witness>,
}

pub fn order_statuses(d: &DeformationSeries) -> Result<Vec<OrderStatus>> {
    (0..=d.order())
        .map(|s| {
            let w = residual(d, s)?.first_nonzero().map(|mut w| {
                w.order = Some(s);
                w
            });
            Ok(OrderStatus { order: s, witness: w })
        })
        .collect()
}

/// Passes iff every residual through order `N` vanishes (and, for the Lie
/// flavor, every bracket is skew). Notes list the per-order status.
pub fn verify(d: &DeformationSeries) -> Result<Report> {
    const NAME: &str = "deformation-equation";
    if d.flavor == Flavor::Lie {
        for (s, p) in d.products.iter().enumerate() {
            if let Some((i, j)) = p.alternation_defect() {
                let w = Witness {
                    order: Some(s),
                    indices: vec![i, j],
                    residual: p.pair(i, j).iter().zip(p.pair(j, i)).map(|(a, b)| a + b).collect(),
                };
                return Ok(Report::fail(NAME, w).with_note(format!("bracket of order {s} is not skew-symmetric")));
            }
        }
    }
    let statuses = order_statuses(d)?;
    let first = statuses.iter().find_map(|st| st.witness.clone());
    let mut report = Report::from_witness(NAME, first);
    for st in &statuses {
        let verdict = if st.witness.is_none() { "pass" } else { "FAIL" };
        report = report.with_note(format!("order {}: {verdict}", st.order));
    }
    Ok(report)
}

pub fn skew_per_order(d: &DeformationSeries) -> bool {
    d.products.iter().all(BilinearMap::is_alternating)
}

/// `μ′_t = Φ_t∘μ_t∘(Φ_t⁻¹×Φ_t⁻¹)`, `α′_t = Φ_t∘α_t∘Φ_t⁻¹`, truncated at `N`.
pub fn apply_equivalence(d: &DeformationSeries, phi: &FormalIso) -> Result<DeformationSeries> {
    if d.order() != phi.order() {
        return Err(Error::OrderMismatch {
            left: d.order(),
            right: phi.order(),
        });
    }
    check_dim(d.dim(), phi.maps[0].dim())?;
    let n = d.dim();
    let big_n = d.order();
    let psi = phi.inverse()?;
    let f = &phi.maps;
    let g = &psi.maps;

    // ν_m = Σ_{b+c+e=m} μ_b(Ψ_c ·, Ψ_e ·) and β_m = Σ_{b+c=m} α_b Ψ_c.
    let mut nu = Vec::with_capacity(big_n + 1);
    let mut beta = Vec::with_capacity(big_n + 1);
    for m in 0..=big_n {
        let mut acc = BilinearMap::zero(n);
        for (b, c, e) in triples(m) {
            acc = acc.add(&d.products[b].pre_compose(&g[c], &g[e])?)?;
        }
        nu.push(acc);
        let mut acc = LinearMap::zero(n);
        for b in 0..=m {
            acc = acc.add(&d.twists[b].compose(&g[m - b])?)?;
        }
        beta.push(acc);
    }
    let mut products = Vec::with_capacity(big_n + 1);
    let mut twists = Vec::with_capacity(big_n + 1);
    for s in 0..=big_n {
        let mut p = BilinearMap::zero(n);
        let mut a = LinearMap::zero(n);
        for k in 0..=s {
            p = p.add(&nu[s - k].post_compose(&f[k])?)?;
            a = a.add(&f[k].compose(&beta[s - k])?)?;
        }
        products.push(p);
        twists.push(a);
    }
    DeformationSeries::new(d.flavor, products, twists)
}

/// Order-1 diagnostics: the hypothesis under which the first-order equation
/// says `(products[1], twists[1])` is a 2-cocycle, and the cocycle condition
/// `δ²(products[1]) = 0` itself, reported separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstOrderCheck {
    pub hypothesis: Report,
    pub cocycle: Report,
}

impl FirstOrderCheck {
    /// Passes unless the hypothesis holds and the cocycle condition fails.
    pub fn report(&self) -> Report {
        let name = "first-order-cocycle";
        let hyp = if self.hypothesis.passed { "holds" } else { "violated" };
        let coc = if self.cocycle.passed { "in Z2" } else { "not in Z2" };
        let mut r = if self.hypothesis.passed && !self.cocycle.passed {
            Report::fail(name, self.cocycle.witness.clone().expect("failed report has a witness"))
        } else {
            Report::pass(name)
        };
        r = r.with_note(format!("hypothesis {hyp}; first-order pair {coc}"));
        if !self.hypothesis.passed {
            r = r.with_note(format!("hypothesis witness: {}", self.hypothesis.witness.as_ref().expect("failed report has a witness")));
        }
        r
    }
}

pub fn first_order_cocycle_check(d: &DeformationSeries) -> Result<FirstOrderCheck> {
    d.check_order(1)?;
    let (mu0, a0) = (&d.products[0], &d.twists[0]);
    let (hypothesis, delta) = match d.flavor {
        Flavor::Associative => {
            let mut hyp = None;
            for i in 1..=d.order() {
                if let Some(mut w) = twisted_associator(mu0, mu0, &d.twists[i])?.first_nonzero() {
                    w.order = Some(i);
                    hyp = Some(w);
                    break;
                }
            }
            (hyp, delta2_hom_raw(mu0, a0, &d.products[1])?)
        }
        Flavor::Lie => {
            let hyp = twisted_jacobiator(mu0, mu0, &d.twists[1])?.first_nonzero().map(|mut w| {
                w.order = Some(1);
                w
            });
            if let Some((i, j)) = d.products[1].alternation_defect() {
                return Err(Error::NotAlternating(i, j));
            }
            (hyp, delta2_hl_raw(mu0, a0, &d.products[1])?)
        }
    };
    let cocycle = delta.first_nonzero().map(|mut w| {
        w.order = Some(1);
        w
    });
    Ok(FirstOrderCheck {
        hypothesis: Report::from_witness("first-order-hypothesis", hypothesis),
        cocycle: Report::from_witness("first-order-delta2", cocycle),
    })
}

/// Minus every term of the order-`s` residual other than the two that make up
/// `δ²` of the order-`s` product.
fn obstruction(d: &DeformationSeries, s: usize) -> Result<TriTensor> {
    let n = d.dim();
    let skip = |i: usize, j: usize, k: usize| k == 0 && ((i == s && j == 0) || (i == 0 && j == s));
    let terms = triples(s).filter(|&(i, j, k)| !skip(i, j, k)).map(|(i, j, k)| match d.flavor {
        Flavor::Associative => assoc_term(d, i, j, k),
        // Lie terms are indexed (bracket i, twist j, inner bracket k); relabel so the
        // skipped pair is (outer s, inner 0) and (outer 0, inner s) with twist 0.
        Flavor::Lie => lie_term(d, i, k, j),
    });
    Ok(flatten_sum(n, terms)?.scale(&-crate::exactlin::rational::one()))
}

/// `R_s` with `residual_assoc(d, s) = δ²μ_s − R_s`.
pub fn obstruction_assoc(d: &DeformationSeries, s: usize) -> Result<TriTensor> {
    d.expect(Flavor::Associative)?;
    if s < 2 {
        return Err(Error::Precondition(format!("obstructions start at order 2, got {s}")));
    }
    d.check_order(s)?;
    obstruction(d, s)
}

/// `R_s` with `residual_lie(d, s) = δ²_HL[·,·]_s − R_s`.
pub fn obstruction_lie(d: &DeformationSeries, s: usize) -> Result<TriTensor> {
    d.expect(Flavor::Lie)?;
    if s < 2 {
        return Err(Error::Precondition(format!("obstructions start at order 2, got {s}")));
    }
    d.check_order(s)?;
    obstruction(d, s)
}

/// Solves `δ²μ_s = R_s` for the next product, given `α_s`. `None` means the
/// obstruction is not in the image of δ². Free coordinates are set to zero.
pub fn extend_deformation(d: &DeformationSeries, alpha_s: &LinearMap) -> Result<Option<BilinearMap>> {
    let n = d.dim();
    check_dim(n, alpha_s.dim())?;
    let s = d.order() + 1;
    let mut products = d.products.clone();
    let mut twists = d.twists.clone();
    products.push(BilinearMap::zero(n));
    twists.push(alpha_s.clone());
    let ext = DeformationSeries::new(d.flavor, products, twists)?;
    let target = obstruction(&ext, s)?;
    let a = delta2_matrix(&d.products[0], &d.twists[0], d.flavor)?;
    Ok(match solve_affine(&a, target.flat())? {
        Some((x, _)) => Some(from_coords(n, &x, d.flavor)?),
        None => None,
    })
}

/// Appends `(μ_s, α_s)` when the extension exists.
pub fn extend(d: &DeformationSeries, alpha_s: &LinearMap) -> Result<Option<DeformationSeries>> {
    Ok(match extend_deformation(d, alpha_s)? {
        Some(mu) => {
            let mut e = d.clone();
            e.products.push(mu);
            e.twists.push(alpha_s.clone());
            Some(e)
        }
        None => None,
    })
}
