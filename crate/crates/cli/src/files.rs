//! Wire formats for structures: JSON with rationals as strings and sparse
//! structure constants.
//!
//! Serialization is canonical (basis-lexicographic, reduced rationals, fixed
//! key order), so export → parse → export is byte-identical.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use homdef::cochain::Flavor;
use homdef::deform::DeformationSeries;
use homdef::exactlin::rational::{self, Rational};
use homdef::homcore::{BilinearMap, HomAlgebra, Kind, LinearMap};
use num_traits::Zero;

/// Largest accepted dimension and truncation order. Keeps hostile inputs from
/// exhausting memory.
pub const MAX_DIM: usize = 32;
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileError(pub String);

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FileError {}

fn err(msg: impl Into<String>) -> FileError {
    FileError(msg.into())
}

/// Rational carried as a string on the wire.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational::format(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        rational::parse(&text)
            .map(Q)
            .map_err(|_| de::Error::custom(format!("invalid rational {text:?} (expected -?digits(/digits)?, nonzero denominator)")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub out: BTreeMap<usize, Q>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub kind: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub product: Vec<ProductEntry>,
    pub alpha: Vec<Vec<Q>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationFile {
    pub base: AlgebraFile,
    pub orders: usize,
    /// One sparse product per order; the order-0 entry may be `null`
    /// (meaning the base product) or left out entirely.
    pub products: Vec<Option<Vec<ProductEntry>>>,
    pub alphas: Vec<Option<Vec<Vec<Q>>>>,
}

/// `line L, column C: message` for syntax and type errors.
fn json_error(e: serde_json::Error) -> FileError {
    if e.line() == 0 {
        err(e.to_string())
    } else {
        let msg = e.to_string();
        let msg = msg.split(" at line ").next().unwrap_or(&msg).to_string();
        err(format!("line {}, column {}: {msg}", e.line(), e.column()))
    }
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, FileError> {
    serde_json::from_str(text).map_err(json_error)
}

pub fn parse_deformation_file(text: &str) -> Result<DeformationFile, FileError> {
    serde_json::from_str(text).map_err(json_error)
}

fn check_dim(dim: usize) -> Result<(), FileError> {
    if dim == 0 || dim > MAX_DIM {
        return Err(err(format!("dim must be between 1 and {MAX_DIM}, found {dim}")));
    }
    Ok(())
}

fn sparse_to_map(dim: usize, entries: &[ProductEntry], lie: bool, at: &str) -> Result<BilinearMap, FileError> {
    let mut given: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
    for (pos, e) in entries.iter().enumerate() {
        if e.i >= dim || e.j >= dim {
            return Err(err(format!("{at}[{pos}]: index ({}, {}) out of range for dim {dim}", e.i, e.j)));
        }
        let mut out = vec![Rational::zero(); dim];
        for (k, q) in &e.out {
            if *k >= dim {
                return Err(err(format!("{at}[{pos}]: output index {k} out of range for dim {dim}")));
            }
            out[*k] = q.0.clone();
        }
        if given.insert((e.i, e.j), out).is_some() {
            return Err(err(format!("{at}[{pos}]: duplicate entry for ({}, {})", e.i, e.j)));
        }
    }
    let mut b = BilinearMap::zero(dim);
    if lie {
        for (&(i, j), out) in &given {
            if i == j && out.iter().any(|c| !c.is_zero()) {
                return Err(err(format!("{at}: bracket of e{i} with itself must be 0")));
            }
            if let Some(back) = given.get(&(j, i)) {
                if i < j && out.iter().zip(back).any(|(a, c)| a != &-c) {
                    return Err(err(format!("{at}: entries ({i}, {j}) and ({j}, {i}) are not opposite")));
                }
            }
            b.set_pair(i, j, out.clone());
            if !given.contains_key(&(j, i)) {
                b.set_pair(j, i, out.iter().map(|c| -c).collect());
            }
        }
    } else {
        for ((i, j), out) in given {
            b.set_pair(i, j, out);
        }
    }
    Ok(b)
}

fn matrix_to_map(dim: usize, rows: &[Vec<Q>], at: &str) -> Result<LinearMap, FileError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(err(format!("{at}: expected a {dim}x{dim} matrix")));
    }
    LinearMap::from_rows(rows.iter().map(|r| r.iter().map(|q| q.0.clone()).collect()).collect())
        .map_err(|e| err(format!("{at}: {e}")))
}

fn map_to_sparse(b: &BilinearMap, lie: bool) -> Vec<ProductEntry> {
    let n = b.dim();
    let mut v = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lie && i >= j {
                continue;
            }
            let out: BTreeMap<usize, Q> = b
                .pair(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, Q(c.clone())))
                .collect();
            if !out.is_empty() {
                v.push(ProductEntry { i, j, out });
            }
        }
    }
    v
}

fn map_to_matrix(m: &LinearMap) -> Vec<Vec<Q>> {
    m.rows().into_iter().map(|r| r.into_iter().map(Q).collect()).collect()
}

impl AlgebraFile {
    pub fn kind(&self) -> Result<Kind, FileError> {
        self.kind.parse().map_err(|e: String| err(format!("kind: {e}")))
    }

    /// Builds the structure under `kind` (the declared one unless overridden).
    pub fn to_algebra_as(&self, kind: Kind) -> Result<HomAlgebra, FileError> {
        check_dim(self.dim)?;
        if self.basis.len() != self.dim {
            return Err(err(format!("basis: expected {} labels, found {}", self.dim, self.basis.len())));
        }
        let product = sparse_to_map(self.dim, &self.product, kind == Kind::HomLie, "product")?;
        let alpha = matrix_to_map(self.dim, &self.alpha, "alpha")?;
        HomAlgebra::new(kind, self.basis.clone(), product, alpha).map_err(|e| err(e.to_string()))
    }

    pub fn to_algebra(&self) -> Result<HomAlgebra, FileError> {
        self.to_algebra_as(self.kind()?)
    }

    pub fn from_algebra(a: &HomAlgebra) -> Self {
        AlgebraFile {
            kind: a.kind.to_string(),
            dim: a.dim(),
            basis: a.labels.clone(),
            product: map_to_sparse(&a.product, a.kind == Kind::HomLie),
            alpha: map_to_matrix(&a.alpha),
        }
    }
}

fn flavor_of(kind: Kind) -> Result<Flavor, FileError> {
    Flavor::for_kind(kind).ok_or_else(|| err(format!("deformations of {kind} structures are not supported")))
}

impl DeformationFile {
    pub fn to_series(&self) -> Result<(DeformationSeries, Vec<String>), FileError> {
        let base = self.base.to_algebra()?;
        let flavor = flavor_of(base.kind)?;
        let n = self.orders;
        if n > MAX_ORDER {
            return Err(err(format!("orders must be at most {MAX_ORDER}, found {n}")));
        }
        let lie = flavor == Flavor::Lie;
        let dim = base.dim();
        let offset = match self.products.len() {
            l if l == n + 1 => 0,
            l if l == n => 1,
            l => return Err(err(format!("products: expected {} or {} entries, found {l}", n + 1, n))),
        };
        if self.alphas.len() + offset != n + 1 {
            return Err(err(format!(
                "alphas: expected {} entries to match products, found {}",
                n + 1 - offset,
                self.alphas.len()
            )));
        }
        let mut products = Vec::with_capacity(n + 1);
        let mut twists = Vec::with_capacity(n + 1);
        for s in 0..=n {
            let at_p = format!("products[{}]", s - offset.min(s));
            let at_a = format!("alphas[{}]", s - offset.min(s));
            let (p, a) = if s < offset {
                (None, None)
            } else {
                (self.products[s - offset].as_ref(), self.alphas[s - offset].as_ref())
            };
            let product = match p {
                Some(entries) => sparse_to_map(dim, entries, lie, &at_p)?,
                None if s == 0 => base.product.clone(),
                None => return Err(err(format!("{at_p}: only the order-0 product may be omitted"))),
            };
            let twist = match a {
                Some(rows) => matrix_to_map(dim, rows, &at_a)?,
                None if s == 0 => base.alpha.clone(),
                None => return Err(err(format!("{at_a}: only the order-0 twist may be omitted"))),
            };
            if s == 0 && (product != base.product || twist != base.alpha) {
                return Err(err("order-0 data must agree with base"));
            }
            products.push(product);
            twists.push(twist);
        }
        let series = DeformationSeries::new(flavor, products, twists).map_err(|e| err(e.to_string()))?;
        Ok((series, base.labels))
    }

    pub fn from_series(d: &DeformationSeries, labels: &[String]) -> Result<Self, FileError> {
        let kind = match d.flavor {
            Flavor::Associative => Kind::HomAssociative,
            Flavor::Lie => Kind::HomLie,
        };
        let base = HomAlgebra::new(kind, labels.to_vec(), d.products[0].clone(), d.twists[0].clone())
            .map_err(|e| err(e.to_string()))?;
        let lie = d.flavor == Flavor::Lie;
        Ok(DeformationFile {
            base: AlgebraFile::from_algebra(&base),
            orders: d.order(),
            products: d.products.iter().map(|p| Some(map_to_sparse(p, lie))).collect(),
            alphas: d.twists.iter().map(|t| Some(map_to_matrix(t))).collect(),
        })
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_canonical<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}
