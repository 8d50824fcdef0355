//! Truncated power series in `t` with [`BiPoly`] coefficients.
//!
//! A series carries its truncation order explicitly: `coeffs[n]` is the
//! coefficient of `t^n` for `0 ≤ n ≤ trunc_order`. Binary operations truncate
//! to the smaller order of their operands. Family values follow the
//! exponential convention, so the value at index `n` is `n! · coeffs[n]`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::BiPoly;
use crate::rational::{as_integer, factorial, int, rational_power, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("divisor constant term {0} is not a nonzero rational")]
    DivisionByNonUnit(String),
    #[error("cannot divide by t^{m}: coefficient of t^{index} is nonzero")]
    NonzeroLowOrder { m: usize, index: usize },
    #[error("inner series of a composition must have zero constant term")]
    NonzeroConstantInner,
    #[error("constant term {found} not allowed here ({expected})")]
    BadConstantTerm {
        found: String,
        expected: &'static str,
    },
    #[error("index {index} is beyond truncation order {trunc}")]
    IndexBeyondTruncation { index: usize, trunc: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<BiPoly>,
}

impl EgfSeries {
    /// Series from ordinary coefficients `a_0..a_N`; `coeffs` must be nonempty.
    pub fn from_coeffs(coeffs: Vec<BiPoly>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the constant coefficient"
        );
        EgfSeries { coeffs }
    }

    /// Series whose value sequence (`n! · a_n`) is `values`.
    pub fn from_values(values: Vec<BiPoly>) -> Self {
        let coeffs = values
            .into_iter()
            .enumerate()
            .map(|(n, v)| v.scale(&factorial(n as u32).recip()))
            .collect();
        EgfSeries::from_coeffs(coeffs)
    }

    pub fn from_rationals<I: IntoIterator<Item = Rational>>(coeffs: I) -> Self {
        EgfSeries::from_coeffs(coeffs.into_iter().map(BiPoly::constant).collect())
    }

    pub fn zero(trunc: usize) -> Self {
        EgfSeries::from_coeffs(vec![BiPoly::zero(); trunc + 1])
    }

    pub fn constant(c: BiPoly, trunc: usize) -> Self {
        let mut s = EgfSeries::zero(trunc);
        s.coeffs[0] = c;
        s
    }

    pub fn one(trunc: usize) -> Self {
        EgfSeries::constant(BiPoly::one(), trunc)
    }

    /// The series `t`.
    pub fn t(trunc: usize) -> Self {
        let mut s = EgfSeries::zero(trunc);
        if trunc >= 1 {
            s.coeffs[1] = BiPoly::one();
        }
        s
    }

    pub fn trunc_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BiPoly] {
        &self.coeffs
    }

    /// Coefficient of `t^n`, zero past the truncation order.
    pub fn coeff(&self, n: usize) -> BiPoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.trunc_order());
        EgfSeries::from_coeffs(self.coeffs[..=order].to_vec())
    }

    pub fn map_coeffs(&self, f: impl Fn(&BiPoly) -> BiPoly) -> Self {
        EgfSeries::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &BiPoly) -> Self {
        self.map_coeffs(|a| a * c)
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.map_coeffs(|a| a.scale(c))
    }

    pub fn add(&self, other: &EgfSeries) -> Self {
        let n = self.trunc_order().min(other.trunc_order());
        EgfSeries::from_coeffs(
            (0..=n)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        )
    }

    pub fn sub(&self, other: &EgfSeries) -> Self {
        let n = self.trunc_order().min(other.trunc_order());
        EgfSeries::from_coeffs(
            (0..=n)
                .map(|i| &self.coeffs[i] - &other.coeffs[i])
                .collect(),
        )
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &EgfSeries) -> Self {
        let n = self.trunc_order().min(other.trunc_order());
        let mut out = vec![BiPoly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        EgfSeries::from_coeffs(out)
    }

    fn unit_constant(&self) -> Result<Rational, SeriesError> {
        match self.coeffs[0].as_constant() {
            Some(c) if !c.is_zero() => Ok(c),
            _ => Err(SeriesError::DivisionByNonUnit(self.coeffs[0].to_string())),
        }
    }

    /// `self / divisor`; the divisor's constant term must be a nonzero
    /// rational with no `λ` or `x` dependence.
    pub fn div(&self, divisor: &EgfSeries) -> Result<Self, SeriesError> {
        let inv_c0 = divisor.unit_constant()?.recip();
        let n = self.trunc_order().min(divisor.trunc_order());
        let mut out: Vec<BiPoly> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = self.coeffs[i].clone();
            for j in 1..=i {
                let g = &divisor.coeffs[j];
                if !g.is_zero() && !out[i - j].is_zero() {
                    acc -= &(g * &out[i - j]);
                }
            }
            out.push(acc.scale(&inv_c0));
        }
        Ok(EgfSeries::from_coeffs(out))
    }

    /// `1 / self`.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        EgfSeries::one(self.trunc_order()).div(self)
    }

    /// Divides by `t^m`, lowering the truncation order by `m`.
    pub fn shift_div_t(&self, m: usize) -> Result<Self, SeriesError> {
        if let Some(index) = (0..m.min(self.coeffs.len())).find(|&i| !self.coeffs[i].is_zero()) {
            return Err(SeriesError::NonzeroLowOrder { m, index });
        }
        if m > self.trunc_order() {
            // nothing is known about the quotient
            return Err(SeriesError::IndexBeyondTruncation {
                index: m,
                trunc: self.trunc_order(),
            });
        }
        Ok(EgfSeries::from_coeffs(self.coeffs[m..].to_vec()))
    }

    /// `self ∘ inner` by Horner's scheme; `inner` must have zero constant term.
    pub fn compose(&self, inner: &EgfSeries) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantInner);
        }
        let n = self.trunc_order().min(inner.trunc_order());
        let inner = inner.truncate(n);
        let mut acc = EgfSeries::constant(self.coeffs[n].clone(), n);
        for i in (0..n).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[i];
        }
        Ok(acc)
    }

    /// Formal derivative, one order lower (order 0 stays at order 0).
    pub fn derivative(&self) -> Self {
        if self.trunc_order() == 0 {
            return EgfSeries::zero(0);
        }
        EgfSeries::from_coeffs(
            (1..self.coeffs.len())
                .map(|i| self.coeffs[i].scale(&int(i as i64)))
                .collect(),
        )
    }

    /// `exp(self)` for a series with zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::BadConstantTerm {
                found: self.coeffs[0].to_string(),
                expected: "exp needs 0",
            });
        }
        // g' = f' g  ⇒  n g_n = Σ_{k=1}^{n} k f_k g_{n-k}
        let n = self.trunc_order();
        let mut g: Vec<BiPoly> = Vec::with_capacity(n + 1);
        g.push(BiPoly::one());
        for i in 1..=n {
            let mut acc = BiPoly::zero();
            for k in 1..=i {
                let f = &self.coeffs[k];
                if !f.is_zero() && !g[i - k].is_zero() {
                    acc += &(f * &g[i - k]).scale(&int(k as i64));
                }
            }
            g.push(acc.scale(&int(i as i64).recip()));
        }
        Ok(EgfSeries::from_coeffs(g))
    }

    /// `log(self)` for a series with constant term one.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm {
                found: self.coeffs[0].to_string(),
                expected: "log needs 1",
            });
        }
        // f' = g' f  ⇒  n g_n = n f_n − Σ_{k=1}^{n-1} k g_k f_{n-k}
        let n = self.trunc_order();
        let mut g: Vec<BiPoly> = Vec::with_capacity(n + 1);
        g.push(BiPoly::zero());
        for i in 1..=n {
            let mut acc = self.coeffs[i].scale(&int(i as i64));
            for k in 1..i {
                let f = &self.coeffs[i - k];
                if !f.is_zero() && !g[k].is_zero() {
                    acc -= &(&g[k] * f).scale(&int(k as i64));
                }
            }
            g.push(acc.scale(&int(i as i64).recip()));
        }
        Ok(EgfSeries::from_coeffs(g))
    }

    /// `self^alpha` for rational `alpha`.
    ///
    /// Integer exponents use repeated squaring, with a final reciprocal for
    /// negative ones. Other exponents go through `exp(alpha · log)`, which
    /// needs a rational constant term `c` whose `alpha`-th power is rational
    /// (in particular `c = 1`).
    pub fn pow_rational(&self, alpha: &Rational) -> Result<Self, SeriesError> {
        if let Some(k) = as_integer(alpha) {
            let positive = self.pow_u(k.unsigned_abs());
            return if k >= 0 {
                Ok(positive)
            } else {
                positive.recip()
            };
        }
        let bad = || SeriesError::BadConstantTerm {
            found: self.coeffs[0].to_string(),
            expected: "fractional power needs a constant term with a rational root",
        };
        let c0 = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(bad)?;
        let root = rational_power(&c0, alpha).ok_or_else(bad)?;
        let normalized = if c0.is_one() {
            self.clone()
        } else {
            self.scale_rational(&c0.recip())
        };
        Ok(normalized
            .log()?
            .scale_rational(alpha)
            .exp()?
            .scale_rational(&root))
    }

    fn pow_u(&self, mut e: u64) -> Self {
        let mut acc = EgfSeries::one(self.trunc_order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Family value at index `n`: `n! · a_n`.
    pub fn value(&self, n: usize) -> Result<BiPoly, SeriesError> {
        let a = self
            .coeffs
            .get(n)
            .ok_or(SeriesError::IndexBeyondTruncation {
                index: n,
                trunc: self.trunc_order(),
            })?;
        Ok(a.scale(&factorial(n as u32)))
    }

    /// All values `0..=trunc_order`.
    pub fn values(&self) -> Vec<BiPoly> {
        (0..self.coeffs.len())
            .map(|n| self.value(n).expect("in range"))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BiPoly::is_zero)
    }
}

impl Default for EgfSeries {
    fn default() -> Self {
        EgfSeries::one(0)
    }
}

/// `e^{c t}` for a polynomial `c`.
pub fn exp_linear(c: &BiPoly, trunc: usize) -> EgfSeries {
    let mut coeffs = Vec::with_capacity(trunc + 1);
    let mut power = BiPoly::one();
    for n in 0..=trunc {
        coeffs.push(power.scale(&factorial(n as u32).recip()));
        power = &power * c;
    }
    EgfSeries::from_coeffs(coeffs)
}

/// `log(1 + t) = Σ_{n≥1} (-1)^{n+1} t^n / n`.
pub fn log1p(trunc: usize) -> EgfSeries {
    EgfSeries::from_rationals((0..=trunc).map(|n| match n {
        0 => Rational::zero(),
        _ => {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            Rational::new(sign.into(), (n as i64).into())
        }
    }))
}

/// `(1 + t)^{-1}`.
pub fn geometric_alternating(trunc: usize) -> EgfSeries {
    EgfSeries::from_rationals((0..=trunc).map(|n| if n % 2 == 0 { int(1) } else { int(-1) }))
}

/// `(1 + t)^c = exp(c · log(1 + t))` for a polynomial exponent `c`.
pub fn one_plus_t_pow(c: &BiPoly, trunc: usize) -> EgfSeries {
    log1p(trunc)
        .scale(c)
        .exp()
        .expect("log(1+t) has zero constant term")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Substitution, Var};
    use crate::rational::rat;

    fn ser(v: &[i64]) -> EgfSeries {
        EgfSeries::from_rationals(v.iter().map(|&c| int(c)))
    }

    #[test]
    fn product_and_identity() {
        let p = ser(&[1, 1, 0, 0, 0]).mul(&ser(&[1, -1, 0, 0, 0]));
        assert_eq!(p, ser(&[1, 0, -1, 0, 0]));
        let f = ser(&[3, 1, 4, 1, 5]);
        assert_eq!(f.add(&EgfSeries::zero(4)), f);
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let s = ser(&[1, 2, 3]).add(&ser(&[1, 1, 1, 1, 1]));
        assert_eq!(s.trunc_order(), 2);
        assert_eq!(ser(&[1, 2]).mul(&ser(&[1, 1, 1])).trunc_order(), 1);
    }

    #[test]
    fn geometric_division() {
        let q = EgfSeries::one(6).div(&ser(&[1, 1, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(q, geometric_alternating(6));
    }

    #[test]
    fn division_rejects_symbolic_or_zero_constant() {
        let f = EgfSeries::one(3);
        let sym = EgfSeries::constant(BiPoly::lambda(), 3);
        assert!(matches!(
            f.div(&sym),
            Err(SeriesError::DivisionByNonUnit(_))
        ));
        assert!(matches!(
            f.div(&EgfSeries::t(3)),
            Err(SeriesError::DivisionByNonUnit(_))
        ));
    }

    #[test]
    fn t_over_log_gives_second_kind_numbers() {
        let q = EgfSeries::t(8).div(&log1p(8)).unwrap_err();
        assert!(matches!(q, SeriesError::DivisionByNonUnit(_)));
        let k = log1p(8).shift_div_t(1).unwrap().recip().unwrap();
        assert_eq!(k.coeff(0), BiPoly::one());
        assert_eq!(k.coeff(1), BiPoly::constant(rat(1, 2)));
        assert_eq!(k.coeff(2), BiPoly::constant(rat(-1, 12)));
        assert_eq!(k.value(2).unwrap(), BiPoly::constant(rat(-1, 6)));
    }

    #[test]
    fn shift_div() {
        assert_eq!(ser(&[0, 1, 1]).shift_div_t(1).unwrap(), ser(&[1, 1]));
        assert_eq!(ser(&[0, 0, 1]).shift_div_t(2).unwrap(), ser(&[1]));
        let l = log1p(5).shift_div_t(1).unwrap();
        assert_eq!(
            l,
            EgfSeries::from_rationals([int(1), rat(-1, 2), rat(1, 3), rat(-1, 4), rat(1, 5)])
        );
        assert_eq!(
            ser(&[0, 1, 1]).shift_div_t(2),
            Err(SeriesError::NonzeroLowOrder { m: 2, index: 1 })
        );
    }

    #[test]
    fn log_of_exp_minus_one_composes_to_t() {
        let inner = exp_linear(&BiPoly::one(), 10).sub(&EgfSeries::one(10));
        assert_eq!(log1p(10).compose(&inner).unwrap(), EgfSeries::t(10));
        let f = ser(&[2, 7, 1, 8]);
        assert_eq!(f.compose(&EgfSeries::t(3)).unwrap(), f);
        assert_eq!(
            f.compose(&ser(&[1, 1, 0, 0])),
            Err(SeriesError::NonzeroConstantInner)
        );
    }

    #[test]
    fn exp_values() {
        let e = EgfSeries::t(8).exp().unwrap();
        assert!(e.values().iter().all(BiPoly::is_one));
        let e2 = EgfSeries::t(8).scale_rational(&int(2)).exp().unwrap();
        for (n, v) in e2.values().into_iter().enumerate() {
            assert_eq!(v, BiPoly::from(1i64 << n));
        }
        assert!(EgfSeries::one(3).exp().is_err());
        assert!(EgfSeries::t(3).log().is_err());
    }

    #[test]
    fn powers() {
        let one_t = ser(&[1, 1, 0, 0, 0]);
        assert_eq!(one_t.pow_rational(&int(2)).unwrap(), ser(&[1, 2, 1, 0, 0]));
        let root = one_t.pow_rational(&rat(1, 2)).unwrap();
        assert_eq!(root.pow_rational(&int(2)).unwrap(), one_t);
        assert_eq!(root.coeff(2), BiPoly::constant(rat(-1, 8)));
        let four = ser(&[4, 4, 1]);
        assert_eq!(four.pow_rational(&rat(1, 2)).unwrap(), ser(&[2, 1, 0]));
        assert!(ser(&[2, 1]).pow_rational(&rat(1, 2)).is_err());
        assert!(ser(&[0, 1]).pow_rational(&int(-1)).is_err());
    }

    #[test]
    fn extraction() {
        let e = EgfSeries::t(5).exp().unwrap();
        assert_eq!(e.value(5).unwrap(), BiPoly::one());
        assert_eq!(
            e.value(6),
            Err(SeriesError::IndexBeyondTruncation { index: 6, trunc: 5 })
        );
        let f = ser(&[9, 1]);
        assert_eq!(f.value(0).unwrap(), BiPoly::from(9));
    }

    #[test]
    fn bernoulli_two_from_t_over_exp_minus_one() {
        let e = exp_linear(&BiPoly::one(), 6).sub(&EgfSeries::one(6));
        let b = e.shift_div_t(1).unwrap().recip().unwrap();
        assert_eq!(b.value(2).unwrap(), BiPoly::constant(rat(1, 6)));
    }

    #[test]
    fn one_plus_t_to_symbolic_power_is_falling_factorial() {
        let s = one_plus_t_pow(&BiPoly::x(), 6);
        let x = BiPoly::x();
        let mut ff = BiPoly::one();
        for n in 0..=6 {
            assert_eq!(s.value(n).unwrap(), ff);
            ff = &ff * &(&x - &BiPoly::from(n as i64));
        }
        let at_two = s.map_coeffs(|c| c.substitute(Var::X, &Substitution::Value(int(2))));
        assert_eq!(at_two, ser(&[1, 2, 1, 0, 0, 0, 0]));
    }
}
