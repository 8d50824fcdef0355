//! Exact rational scalars.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. The helpers here cover the integer-valued quantities
//! every family and identity needs (factorials, binomials, powers) plus the
//! `"p/q"` text form used by the serializers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always normalized.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("binomial coefficient requested with negative upper index {0}")]
    NegativeBinomial(i64),
    #[error("cannot parse rational literal {0:?}")]
    BadRational(String),
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` reduced to lowest terms. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient with the usual convention that it vanishes for `k < 0`
/// or `k > n`. Negative `n` is rejected.
pub fn binomial(n: i64, k: i64) -> Result<Rational, ExactError> {
    if n < 0 {
        return Err(ExactError::NegativeBinomial(n));
    }
    Ok(binom(n as u32, k))
}

/// Infallible binomial for a nonnegative upper index.
pub fn binom(n: u32, k: i64) -> Rational {
    if k < 0 || k > i64::from(n) {
        return Rational::zero();
    }
    let k = (k as u32).min(n - k as u32);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    Rational::from_integer(acc)
}

/// `base^e` for any integer exponent; `0^e` with `e < 0` panics.
pub fn pow_i(base: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(base.clone(), e as usize)
    } else {
        num_traits::pow(base.recip(), e.unsigned_abs() as usize)
    }
}

/// `2^e` for any integer `e`.
pub fn two_pow(e: i64) -> Rational {
    pow_i(&int(2), e)
}

/// Integer exponent if `r` has denominator one and fits an `i64`.
pub fn as_integer(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

/// Exact `base^alpha` when it is rational, `None` otherwise.
///
/// With `alpha = p/q` in lowest terms, the result exists iff both the
/// numerator and denominator of `base` are perfect `q`-th powers (and `base`
/// is nonnegative when `q` is even).
pub fn rational_power(base: &Rational, alpha: &Rational) -> Option<Rational> {
    if let Some(e) = as_integer(alpha) {
        if base.is_zero() && e < 0 {
            return None;
        }
        return Some(pow_i(base, e));
    }
    if base.is_zero() {
        return alpha.is_positive().then(Rational::zero);
    }
    let q = alpha.denom().to_u32()?;
    let p = alpha.numer().to_i64()?;
    if base.is_negative() && q.is_even() {
        return None;
    }
    let root = |n: &BigInt| -> Option<BigInt> {
        let r = n.nth_root(q);
        (num_traits::pow(r.clone(), q as usize) == *n).then_some(r)
    };
    let num = root(base.numer())?;
    let den = root(base.denom())?;
    Some(pow_i(&Rational::new(num, den), p))
}

/// Parses `"p/q"`, `"p"`, or a leading-sign variant of either.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::BadRational(s.to_string());
    let trimmed = s.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(4, 2).unwrap(), int(6));
        assert_eq!(binomial(3, 5).unwrap(), int(0));
        assert_eq!(binomial(3, -1).unwrap(), int(0));
        assert_eq!(factorial(5), int(120));
        assert_eq!(factorial(0), int(1));
        assert_eq!(binom(20, 10), int(184_756));
    }

    #[test]
    fn negative_binomial_rejected() {
        assert_eq!(binomial(-1, 0), Err(ExactError::NegativeBinomial(-1)));
    }

    #[test]
    fn lowest_terms_positive_denominator() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(format_rational(&int(3)), "3");
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(two_pow(-3), rat(1, 8));
        assert_eq!(pow_i(&rat(-2, 3), 3), rat(-8, 27));
        assert_eq!(rational_power(&rat(4, 9), &rat(1, 2)), Some(rat(2, 3)));
        assert_eq!(rational_power(&rat(4, 9), &rat(-3, 2)), Some(rat(27, 8)));
        assert_eq!(rational_power(&rat(-8, 1), &rat(1, 3)), Some(int(-2)));
        assert_eq!(rational_power(&int(2), &rat(1, 2)), None);
        assert_eq!(rational_power(&int(-4), &rat(1, 2)), None);
        assert_eq!(rational_power(&int(1), &rat(7, 5)), Some(int(1)));
    }
}
