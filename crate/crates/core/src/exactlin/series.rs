//! Truncated power series in one variable `t` with rational coefficients.

use std::fmt;

use num_traits::Zero;

use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// `c_0 + c_1 t + ... + c_N t^N`, arithmetic taken modulo `t^(N+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(rational::one(), order)
    }

    /// The series `t` (zero when `order == 0`).
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = rational::one();
        }
        s
    }

    /// Builds a series of the given order, padding with zeros or dropping
    /// terms above `t^order`.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(TruncSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(TruncSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Multiplicative inverse modulo `t^(N+1)`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-acc * &inv0);
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let c = rational::format(c);
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rational::{frac, int};

    fn s(cs: &[i64]) -> TruncSeries {
        TruncSeries::from_coeffs(cs.iter().map(|&c| int(c)).collect(), cs.len() - 1)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, -1, 0])).unwrap(), s(&[1, 0, -1]));
    }

    #[test]
    fn truncation_drops_high_terms() {
        assert_eq!(s(&[0, 1]).mul(&s(&[0, 1])).unwrap(), s(&[0, 0]));
    }

    #[test]
    fn unit_is_neutral() {
        let a = s(&[1, 2, 3]);
        assert_eq!(a.mul(&TruncSeries::one(2)).unwrap(), a);
    }

    #[test]
    fn order_mismatch_is_an_error() {
        assert!(matches!(
            s(&[1, 2]).mul(&s(&[1, 2, 3])),
            Err(Error::OrderMismatch { .. })
        ));
        assert!(s(&[1, 2]).add(&s(&[1, 2, 3])).is_err());
    }

    #[test]
    fn geometric_series() {
        assert_eq!(s(&[1, 1, 0]).inverse().unwrap(), s(&[1, -1, 1]));
    }

    #[test]
    fn jackson_twist_coefficients() {
        // (2 + t) / (2 + 2t)
        let num = s(&[2, 1, 0, 0]);
        let den = s(&[2, 2, 0, 0]);
        let q = num.mul(&den.inverse().unwrap()).unwrap();
        let want = TruncSeries::from_coeffs(
            vec![int(1), frac(-1, 2), frac(1, 2), frac(-1, 2)],
            3,
        );
        assert_eq!(q, want);
    }

    #[test]
    fn constant_reciprocal() {
        let half = TruncSeries::constant(frac(1, 2), 1);
        assert_eq!(half.inverse().unwrap(), TruncSeries::constant(int(2), 1));
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        assert_eq!(s(&[0, 1]).inverse(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, 0, -3]).to_string(), "1 + (-3)t^2 + O(t^3)");
    }
}
