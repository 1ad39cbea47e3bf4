//! Exact rational scalars.
//!
//! The scalar type is [`num_rational::BigRational`], which keeps a positive
//! denominator and a reduced fraction after every operation. This module adds
//! the strict text form used by the file formats: `-?digits(/digits)?`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `-?digits(/digits)?`. Leading `+`, whitespace, signed denominators
/// and a zero denominator are all rejected.
pub fn parse(text: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical text form: `n` for integers, `n/d` otherwise, reduced with d > 0.
pub fn format(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Integer power, negative exponents allowed for nonzero bases.
pub fn pow(q: &Rational, n: i64) -> Result<Rational> {
    if n < 0 && q.is_zero() {
        return Err(Error::Pole(format!("0^{n}")));
    }
    let mut acc = one();
    let base = if n < 0 { q.recip() } else { q.clone() };
    for _ in 0..n.unsigned_abs() {
        acc *= &base;
    }
    Ok(acc)
}

pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

pub fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_forms() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("-4/6").unwrap(), frac(-2, 3));
        assert_eq!(format(&parse("-4/6").unwrap()), "-2/3");
        assert_eq!(format(&parse("10/5").unwrap()), "2");
        assert_eq!(format(&parse("-0").unwrap()), "0");
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "-", "1/0", "+1", "1/-2", " 1", "1.5", "1/", "/2", "a", "1//2"] {
            assert!(parse(s).is_err(), "{s:?} should be rejected");
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(3, 4), int(0));
        assert_eq!(binomial(0, 0), int(1));
    }

    #[test]
    fn powers() {
        assert_eq!(pow(&int(2), -3).unwrap(), frac(1, 8));
        assert!(pow(&int(0), -1).is_err());
        assert_eq!(pow(&int(0), 0).unwrap(), int(1));
    }
}
