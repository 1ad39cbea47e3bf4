//! Structure-constant carriers: linear maps, bilinear maps and trilinear
//! tensors on a based finite-dimensional space.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::rational::{self, Rational};
use crate::exactlin::{Matrix, Vector};
use crate::report::Witness;

fn add_scaled(acc: &mut [Rational], v: &[Rational], c: &Rational) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += x * c;
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Square matrix acting on column vectors: entry `(i, j)` is the coefficient
/// of `e_i` in the image of `e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    dim: usize,
    m: Vec<Rational>,
}

impl LinearMap {
    pub fn zero(dim: usize) -> Self {
        LinearMap {
            dim,
            m: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut f = Self::zero(dim);
        for i in 0..dim {
            f.set(i, i, rational::one());
        }
        f
    }

    pub fn scalar(dim: usize, c: Rational) -> Self {
        Self::identity(dim).scale(&c)
    }

    pub fn diagonal(diag: Vec<Rational>) -> Self {
        let mut f = Self::zero(diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            f.set(i, i, d);
        }
        f
    }

    /// Rows as displayed in the usual matrix notation.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        let mut m = Vec::with_capacity(dim * dim);
        for row in rows {
            check_dim(dim, row.len())?;
            m.extend(row);
        }
        Ok(LinearMap { dim, m })
    }

    /// Row-major coordinates of length `dim²`.
    pub fn from_flat(dim: usize, m: Vec<Rational>) -> Result<Self> {
        check_dim(dim * dim, m.len())?;
        Ok(LinearMap { dim, m })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.m[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.m[i * self.dim + j] = v;
    }

    pub fn flat(&self) -> &[Rational] {
        &self.m
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.m.chunks(self.dim.max(1)).map(<[_]>::to_vec).collect()
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.rows()).expect("square rows")
    }

    /// Image of `e_j`.
    pub fn column(&self, j: usize) -> Vector {
        (0..self.dim).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn apply(&self, x: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.dim];
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += a * xj;
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        check_dim(self.dim, other.dim)?;
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.apply(&other.column(j))).collect();
        let mut out = LinearMap::zero(self.dim);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        check_dim(self.dim, other.dim)?;
        Ok(LinearMap {
            dim: self.dim,
            m: self.m.iter().zip(&other.m).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        check_dim(self.dim, other.dim)?;
        Ok(LinearMap {
            dim: self.dim,
            m: self.m.iter().zip(&other.m).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> LinearMap {
        LinearMap {
            dim: self.dim,
            m: self.m.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(Zero::is_zero)
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<LinearMap> {
        let n = self.dim;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, rational::one());
        }
        let e = crate::exactlin::rref(&aug);
        if e.pivots.len() < n || e.pivots[n - 1] >= n {
            return None;
        }
        let mut out = LinearMap::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, e.reduced.get(i, n + j).clone());
            }
        }
        Some(out)
    }

    /// Kronecker product; basis `(i, k)` maps to index `i * other.dim + k`.
    pub fn kronecker(&self, other: &LinearMap) -> LinearMap {
        let n = self.dim * other.dim;
        let mut out = LinearMap::zero(n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        out.set(i * other.dim + k, j * other.dim + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }
}

/// Bilinear map `V × V → V` given by structure constants:
/// `map(e_i, e_j) = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    dim: usize,
    c: Vec<Rational>,
}

impl BilinearMap {
    pub fn zero(dim: usize) -> Self {
        BilinearMap {
            dim,
            c: vec![Rational::zero(); dim * dim * dim],
        }
    }

    pub fn from_flat(dim: usize, c: Vec<Rational>) -> Result<Self> {
        check_dim(dim * dim * dim, c.len())?;
        Ok(BilinearMap { dim, c })
    }

    /// Builds from `(i, j, output vector)` entries; unspecified pairs are zero.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, Vector)]) -> Result<Self> {
        let mut b = Self::zero(dim);
        for (i, j, out) in entries {
            check_dim(dim, out.len())?;
            b.set_pair(*i, *j, out.clone());
        }
        Ok(b)
    }

    /// Builds an alternating map from entries with `i < j`, filling `(j, i)`
    /// with the negation.
    pub fn alternating_from(dim: usize, entries: &[(usize, usize, Vector)]) -> Result<Self> {
        let mut b = Self::zero(dim);
        for (i, j, out) in entries {
            check_dim(dim, out.len())?;
            if i == j {
                if out.iter().any(|x| !x.is_zero()) {
                    return Err(Error::NotAlternating(*i, *j));
                }
                continue;
            }
            b.set_pair(*i, *j, out.clone());
            b.set_pair(*j, *i, out.iter().map(|x| -x).collect());
        }
        Ok(b)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn flat(&self) -> &[Rational] {
        &self.c
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let n = self.dim;
        self.c[(i * n + j) * n + k] = v;
    }

    /// `map(e_i, e_j)`.
    pub fn pair(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim;
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn set_pair(&mut self, i: usize, j: usize, out: Vector) {
        for (k, v) in out.into_iter().enumerate() {
            self.set(i, j, k, v);
        }
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                add_scaled(&mut out, self.pair(i, j), &(xi * yj));
            }
        }
        out
    }

    pub fn add(&self, other: &BilinearMap) -> Result<BilinearMap> {
        check_dim(self.dim, other.dim)?;
        Ok(BilinearMap {
            dim: self.dim,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &BilinearMap) -> Result<BilinearMap> {
        check_dim(self.dim, other.dim)?;
        Ok(BilinearMap {
            dim: self.dim,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> BilinearMap {
        BilinearMap {
            dim: self.dim,
            c: self.c.iter().map(|a| a * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// `(x, y) ↦ map(y, x)`.
    pub fn transpose(&self) -> BilinearMap {
        let mut out = BilinearMap::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set_pair(j, i, self.pair(i, j).to_vec());
            }
        }
        out
    }

    /// First pair `(i, j)` with `i <= j` breaking alternation.
    pub fn alternation_defect(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in i..self.dim {
                let ok = if i == j {
                    self.pair(i, i).iter().all(Zero::is_zero)
                } else {
                    self.pair(i, j)
                        .iter()
                        .zip(self.pair(j, i))
                        .all(|(a, b)| (a + b).is_zero())
                };
                if !ok {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_alternating(&self) -> bool {
        self.alternation_defect().is_none()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.pair(i, j) == self.pair(j, i)))
    }

    /// `f ∘ map`.
    pub fn post_compose(&self, f: &LinearMap) -> Result<BilinearMap> {
        check_dim(self.dim, f.dim())?;
        let mut out = BilinearMap::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set_pair(i, j, f.apply(self.pair(i, j)));
            }
        }
        Ok(out)
    }

    /// `(x, y) ↦ map(f(x), g(y))`.
    pub fn pre_compose(&self, f: &LinearMap, g: &LinearMap) -> Result<BilinearMap> {
        check_dim(self.dim, f.dim())?;
        check_dim(self.dim, g.dim())?;
        let mut out = BilinearMap::zero(self.dim);
        for i in 0..self.dim {
            let fi = f.column(i);
            for j in 0..self.dim {
                out.set_pair(i, j, self.apply(&fi, &g.column(j)));
            }
        }
        Ok(out)
    }

    /// Kronecker-style product of structure constants on `V₁ ⊗ V₂`.
    pub fn kronecker(&self, other: &BilinearMap) -> BilinearMap {
        let (n1, n2) = (self.dim, other.dim);
        let mut out = BilinearMap::zero(n1 * n2);
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    let a = self.get(i, j, k);
                    if a.is_zero() {
                        continue;
                    }
                    for p in 0..n2 {
                        for q in 0..n2 {
                            for r in 0..n2 {
                                let b = other.get(p, q, r);
                                if !b.is_zero() {
                                    out.set(i * n2 + p, j * n2 + q, k * n2 + r, a * b);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Trilinear map `V × V × V → V` stored densely; residual of every checked
/// identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriTensor {
    dim: usize,
    t: Vec<Rational>,
}

impl TriTensor {
    pub fn zero(dim: usize) -> Self {
        TriTensor {
            dim,
            t: vec![Rational::zero(); dim.pow(4)],
        }
    }

    /// Fills each basis triple from `f(i, j, k)`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Vector) -> Self {
        let mut t = Vec::with_capacity(dim.pow(4));
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let v = f(i, j, k);
                    debug_assert_eq!(v.len(), dim);
                    t.extend(v);
                }
            }
        }
        TriTensor { dim, t }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn flat(&self) -> &[Rational] {
        &self.t
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> &[Rational] {
        let n = self.dim;
        let base = ((i * n + j) * n + k) * n;
        &self.t[base..base + n]
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &TriTensor) -> Result<TriTensor> {
        check_dim(self.dim, other.dim)?;
        Ok(TriTensor {
            dim: self.dim,
            t: self.t.iter().zip(&other.t).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &TriTensor) -> Result<TriTensor> {
        check_dim(self.dim, other.dim)?;
        Ok(TriTensor {
            dim: self.dim,
            t: self.t.iter().zip(&other.t).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> TriTensor {
        TriTensor {
            dim: self.dim,
            t: self.t.iter().map(|a| a * s).collect(),
        }
    }

    pub(crate) fn add_assign(&mut self, other: &TriTensor) {
        for (a, b) in self.t.iter_mut().zip(&other.t) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    /// `(x, y, z) ↦ T(x,y,z) + T(y,z,x) + T(z,x,y)`.
    pub fn cyclic_sum(&self) -> TriTensor {
        TriTensor::from_fn(self.dim, |i, j, k| {
            let mut v = self.at(i, j, k).to_vec();
            add_scaled(&mut v, self.at(j, k, i), &rational::one());
            add_scaled(&mut v, self.at(k, i, j), &rational::one());
            v
        })
    }

    /// `(x, y, z) ↦ T(x, z, y)`.
    pub fn swap_last(&self) -> TriTensor {
        TriTensor::from_fn(self.dim, |i, j, k| self.at(i, k, j).to_vec())
    }

    /// Lexicographically first nonzero triple.
    pub fn first_nonzero(&self) -> Option<Witness> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.at(i, j, k);
                    if v.iter().any(|x| !x.is_zero()) {
                        return Some(Witness {
                            order: None,
                            indices: vec![i, j, k],
                            residual: v.to_vec(),
                        });
                    }
                }
            }
        }
        None
    }
}

/// Sum of `c_p * v_p` over pairs, skipping zeros.
pub(crate) fn combine(dim: usize, terms: &[(&Rational, &[Rational])]) -> Vector {
    let mut out = vec![Rational::zero(); dim];
    for (c, v) in terms {
        add_scaled(&mut out, v, c);
    }
    out
}
