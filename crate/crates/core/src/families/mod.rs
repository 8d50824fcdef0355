//! Builders for the classical and degenerate polynomial families.
//!
//! Every family is a generating function in `t` whose coefficients live in
//! ℚ[λ, x]. Families with an order parameter raise a kernel to that power
//! and multiply by a base depending on the argument:
//!
//! | base            | built from                                       |
//! |-----------------|--------------------------------------------------|
//! | `e^{c t}`       | `Σ c^n t^n / n!`                                 |
//! | `(1+t)^c`       | `exp(c · log(1+t))`                              |
//! | `e_λ^c(t)`      | degenerate falling factorials `(c)_{n,λ} / n!`   |
//!
//! `c` is the argument: `x`, `x + s`, or a rational. Everything is built with
//! symbolic `λ`; a numeric or scaled `λ` is substituted at the end, which is
//! exact because no coefficient ever holds a negative power of `λ`.

mod catalog;
mod triangles;

use thiserror::Error;

use crate::poly::{BiPoly, Substitution, Var};
use crate::rational::{as_integer, factorial, format_rational, int, rat, Rational};
use crate::series::{
    exp_linear, geometric_alternating, log1p, one_plus_t_pow, EgfSeries, SeriesError,
};

pub use catalog::FamilyId;
pub use triangles::{triangle_value, triangular_numbers, Triangle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("family {family} does not accept order {order}")]
    UnsupportedOrder { family: &'static str, order: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Polynomial argument of a family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum Argument {
    #[default]
    Symbolic,
    Value(Rational),
    /// `x + s`
    Shifted(Rational),
}

impl Argument {
    /// The argument as a polynomial in `x`.
    pub fn as_poly(&self) -> BiPoly {
        match self {
            Argument::Symbolic => BiPoly::x(),
            Argument::Value(v) => BiPoly::constant(v.clone()),
            Argument::Shifted(s) => &BiPoly::x() + &BiPoly::constant(s.clone()),
        }
    }
}

/// How `λ` appears in the output.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum LambdaMode {
    #[default]
    Symbolic,
    Value(Rational),
    /// `λ → c·λ`
    Scaled(Rational),
}

impl LambdaMode {
    pub fn apply(&self, p: &BiPoly) -> BiPoly {
        match self {
            LambdaMode::Symbolic => p.clone(),
            LambdaMode::Value(c) => p.substitute(Var::Lambda, &Substitution::Value(c.clone())),
            LambdaMode::Scaled(c) => p.substitute(Var::Lambda, &Substitution::Scaled(c.clone())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub id: FamilyId,
    /// Kernel exponent for ordered families, column index `k` for triangles.
    pub order: Rational,
    pub argument: Argument,
    pub lambda: LambdaMode,
}

impl FamilySpec {
    pub fn new(id: FamilyId) -> Self {
        FamilySpec {
            id,
            order: int(1),
            argument: Argument::Symbolic,
            lambda: LambdaMode::Symbolic,
        }
    }

    pub fn order(mut self, order: Rational) -> Self {
        self.order = order;
        self
    }

    pub fn order_int(self, order: i64) -> Self {
        self.order(int(order))
    }

    pub fn argument(mut self, argument: Argument) -> Self {
        self.argument = argument;
        self
    }

    pub fn at(self, value: i64) -> Self {
        self.argument(Argument::Value(int(value)))
    }

    pub fn shifted(self, by: i64) -> Self {
        self.argument(Argument::Shifted(int(by)))
    }

    pub fn lambda(mut self, lambda: LambdaMode) -> Self {
        self.lambda = lambda;
        self
    }

    pub(crate) fn unsupported(&self) -> FamilyError {
        FamilyError::UnsupportedOrder {
            family: self.id.name(),
            order: format_rational(&self.order),
        }
    }
}

/// Falling factorial flavour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Falling {
    /// `(a)_n = a(a-1)⋯(a-n+1)`
    Classical,
    /// `(a)_{n,λ} = a(a-λ)⋯(a-(n-1)λ)`
    Degenerate,
}

/// `(a)_n` or `(a)_{n,λ}`; the empty product is one.
pub fn falling_factorial(n: u32, mode: Falling, a: &BiPoly) -> BiPoly {
    let step = match mode {
        Falling::Classical => BiPoly::one(),
        Falling::Degenerate => BiPoly::lambda(),
    };
    let mut acc = BiPoly::one();
    for j in 0..n {
        acc = &acc * &(a - &step.scale(&int(i64::from(j))));
    }
    acc
}

/// Central factorial `x^[n] = x (x + n/2 - 1)(x + n/2 - 2)⋯(x - n/2 + 1)`.
pub fn central_factorial_power(n: u32) -> BiPoly {
    central_factorial_power_at(n, &BiPoly::x())
}

fn central_factorial_power_at(n: u32, a: &BiPoly) -> BiPoly {
    if n == 0 {
        return BiPoly::one();
    }
    let half_n = rat(i64::from(n), 2);
    (1..n).fold(a.clone(), |acc, j| {
        &acc * &(a + &BiPoly::constant(&half_n - int(i64::from(j))))
    })
}

/// `e_λ^c(t) = (1 + λt)^{c/λ}`, coefficient by coefficient through
/// `(c)_{n,λ} = (c)_{n-1,λ} · (c - (n-1)λ)`.
pub fn deg_exp(c: &BiPoly, trunc: usize) -> EgfSeries {
    let mut coeffs = Vec::with_capacity(trunc + 1);
    let mut a = BiPoly::one();
    for n in 0..=trunc {
        if n > 0 {
            let step = c - &BiPoly::lambda().scale(&int(n as i64 - 1));
            a = (&a * &step).scale(&int(n as i64).recip());
        }
        coeffs.push(a.clone());
    }
    EgfSeries::from_coeffs(coeffs)
}

/// `log_λ(1 + t) = ((1+t)^λ - 1)/λ`, from the closed form of its
/// coefficients `(1/n!) ∏_{j=1}^{n-1} (λ - j)`.
pub fn deg_log1p(trunc: usize) -> EgfSeries {
    let mut coeffs = vec![BiPoly::zero()];
    let mut prod = BiPoly::one();
    for n in 1..=trunc {
        if n > 1 {
            prod = &prod * &(&BiPoly::lambda() - &BiPoly::from(n as i64 - 1));
        }
        coeffs.push(prod.scale(&factorial(n as u32).recip()));
    }
    EgfSeries::from_coeffs(coeffs)
}

/// `(1+t) - (1+t)^{-1}`.
fn type2_numerator(trunc: usize) -> EgfSeries {
    let one_t = EgfSeries::one(trunc).add(&EgfSeries::t(trunc));
    one_t.sub(&geometric_alternating(trunc))
}

/// `f / t` where `f` has zero constant term, built one order higher so the
/// result keeps `trunc`.
fn over_t(build: impl Fn(usize) -> EgfSeries, trunc: usize) -> Result<EgfSeries, SeriesError> {
    build(trunc + 1).shift_div_t(1)
}

/// The kernel raised to the family's order, before the argument-dependent base.
fn kernel(id: FamilyId, trunc: usize) -> Result<EgfSeries, SeriesError> {
    use FamilyId::*;
    let e = |c: i64, m| exp_linear(&BiPoly::from(c), m);
    let one = |m| EgfSeries::one(m);
    let lam = |c: i64, m| deg_exp(&BiPoly::from(c), m);
    Ok(match id {
        // t / (e^t - 1)
        Bernoulli => over_t(|m| e(1, m).sub(&one(m)), trunc)?.recip()?,
        // 2 / (e^t + 1)
        Euler => e(1, trunc)
            .add(&one(trunc))
            .recip()?
            .scale_rational(&int(2)),
        // t / (e^t - e^{-t})
        Type2Bernoulli => over_t(|m| e(1, m).sub(&e(-1, m)), trunc)?.recip()?,
        // 2 / (e^t + e^{-t})
        Type2Euler => e(1, trunc)
            .add(&e(-1, trunc))
            .recip()?
            .scale_rational(&int(2)),
        // log(1+t) / t
        Daehee => over_t(log1p, trunc)?,
        // t / log(1+t)
        Bernoulli2ndKind => over_t(log1p, trunc)?.recip()?,
        // ((1+t) - (1+t)^{-1}) / log(1+t)
        Type2Bernoulli2ndKind => over_t(type2_numerator, trunc)?.div(&over_t(log1p, trunc)?)?,
        // t / (e_λ(t) - 1)
        DegBernoulli => over_t(|m| lam(1, m).sub(&one(m)), trunc)?.recip()?,
        // 2 / (e_λ(t) + 1)
        DegEuler => lam(1, trunc)
            .add(&one(trunc))
            .recip()?
            .scale_rational(&int(2)),
        // t / (e_λ(t) - e_λ^{-1}(t))
        Type2DegBernoulli => over_t(|m| lam(1, m).sub(&lam(-1, m)), trunc)?.recip()?,
        // log_λ(1+t) / t
        DegDaehee => over_t(deg_log1p, trunc)?,
        // t / log_λ(1+t)
        DegBernoulli2ndKind => over_t(deg_log1p, trunc)?.recip()?,
        // ((1+t) - (1+t)^{-1}) / log_λ(1+t)
        Type2DegBernoulli2ndKind => {
            over_t(type2_numerator, trunc)?.div(&over_t(deg_log1p, trunc)?)?
        }
        _ => unreachable!("{id:?} has no kernel"),
    })
}

/// Column generator of a number triangle: the series whose `k`-th power
/// divided by `k!` generates column `k`.
pub(crate) fn triangle_kernel(tri: Triangle, trunc: usize) -> EgfSeries {
    let half = BiPoly::constant(rat(1, 2));
    let neg_half = BiPoly::constant(rat(-1, 2));
    match tri {
        Triangle::Stirling1 => log1p(trunc),
        Triangle::Stirling2 => exp_linear(&BiPoly::one(), trunc).sub(&EgfSeries::one(trunc)),
        Triangle::CentralFactorialT => exp_linear(&half, trunc).sub(&exp_linear(&neg_half, trunc)),
        Triangle::DegStirling1 => deg_log1p(trunc),
        Triangle::DegStirling2 => deg_exp(&BiPoly::one(), trunc).sub(&EgfSeries::one(trunc)),
        Triangle::DegCentralFactorial => deg_exp(&half, trunc).sub(&deg_exp(&neg_half, trunc)),
    }
}

/// Generating function of a family, truncated at `trunc`.
///
/// For number triangles the order selects the column `k` and the result is
/// `kernel^k / k!`.
pub fn build_egf(spec: &FamilySpec, trunc: usize) -> Result<EgfSeries, FamilyError> {
    use FamilyId::*;
    let c = spec.argument.as_poly();
    let raw = if let Some(tri) = spec.id.triangle() {
        let k = as_integer(&spec.order)
            .filter(|k| *k >= 0)
            .ok_or_else(|| spec.unsupported())?;
        triangle_kernel(tri, trunc)
            .pow_rational(&int(k))?
            .scale_rational(&factorial(k as u32).recip())
    } else if spec.id.has_order() {
        let powered = kernel(spec.id, trunc)?
            .pow_rational(&spec.order)
            .map_err(|e| match e {
                SeriesError::BadConstantTerm { .. } => spec.unsupported(),
                other => other.into(),
            })?;
        let base = match spec.id {
            Bernoulli | Euler | Type2Bernoulli | Type2Euler => exp_linear(&c, trunc),
            Daehee | Bernoulli2ndKind | Type2Bernoulli2ndKind => one_plus_t_pow(&c, trunc),
            DegBernoulli | DegEuler | Type2DegBernoulli => deg_exp(&c, trunc),
            DegDaehee | DegBernoulli2ndKind | Type2DegBernoulli2ndKind => one_plus_t_pow(&c, trunc),
            _ => unreachable!(),
        };
        powered.mul(&base)
    } else {
        if spec.order != int(1) {
            return Err(spec.unsupported());
        }
        let values =
            |f: &dyn Fn(u32) -> BiPoly| EgfSeries::from_values((0..=trunc as u32).map(f).collect());
        match spec.id {
            Exp => exp_linear(&c, trunc),
            Log => log1p(trunc),
            FallingFactorial => values(&|n| falling_factorial(n, Falling::Classical, &c)),
            DegFallingFactorial => values(&|n| falling_factorial(n, Falling::Degenerate, &c)),
            DegExp => deg_exp(&c, trunc),
            DegLog => deg_log1p(trunc),
            CentralFactorialPower => values(&|n| central_factorial_power_at(n, &c)),
            _ => unreachable!(),
        }
    };
    Ok(match spec.lambda {
        LambdaMode::Symbolic => raw,
        ref mode => raw.map_coeffs(|p| mode.apply(p)),
    })
}

/// Family values at indices `0..=max_n` (column `order` for triangles).
pub fn values(spec: &FamilySpec, max_n: usize) -> Result<Vec<BiPoly>, FamilyError> {
    Ok(build_egf(spec, max_n)?.values())
}

/// Single family value at index `n`.
pub fn value(spec: &FamilySpec, n: usize) -> Result<BiPoly, FamilyError> {
    Ok(build_egf(spec, n)?.value(n)?)
}

/// Value of the non-degenerate family; a degenerate id is evaluated at `λ = 0`.
pub fn classical_value(id: FamilyId, n: usize, argument: &Argument) -> Result<BiPoly, FamilyError> {
    let mut spec = FamilySpec::new(id).argument(argument.clone());
    if id.is_degenerate() {
        spec = spec.lambda(LambdaMode::Value(int(0)));
    }
    value(&spec, n)
}

/// `b_{n,λ}^{(α)}(x)` through the symmetric kernel
/// `(λt / ((1+t)^{λ/2} - (1+t)^{-λ/2}))^α (1+t)^{x - λα/2}`.
///
/// Same family as [`FamilyId::DegBernoulli2ndKind`], assembled along an
/// unrelated route so the two can be checked against each other.
pub fn deg_bernoulli_2nd_kind_symmetric(
    alpha: &Rational,
    argument: &Argument,
    trunc: usize,
) -> Result<EgfSeries, FamilyError> {
    let m = trunc + 1;
    let half_l = BiPoly::monomial(rat(1, 2), 1, 0);
    let diff = one_plus_t_pow(&half_l, m).sub(&one_plus_t_pow(&-&half_l, m));
    // every coefficient of (1+t)^{c} - (1+t)^{-c} carries a factor c
    let reduced = EgfSeries::from_coeffs(
        diff.coeffs()
            .iter()
            .map(|p| p.div_lambda().expect("coefficients divisible by λ"))
            .collect(),
    );
    let kernel = reduced.shift_div_t(1)?.recip()?;
    let powered = kernel
        .pow_rational(alpha)
        .map_err(|_| FamilyError::UnsupportedOrder {
            family: FamilyId::DegBernoulli2ndKind.name(),
            order: format_rational(alpha),
        })?;
    let exponent = &argument.as_poly() - &half_l.scale(alpha);
    Ok(powered.mul(&one_plus_t_pow(&exponent, trunc)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn l() -> BiPoly {
        BiPoly::lambda()
    }
    fn x() -> BiPoly {
        BiPoly::x()
    }
    fn k(c: Rational) -> BiPoly {
        BiPoly::constant(c)
    }

    #[test]
    fn deg_log_values_are_shifted_products() {
        let v = values(&FamilySpec::new(FamilyId::DegLog), 3).unwrap();
        assert_eq!(v[0], BiPoly::zero());
        assert_eq!(v[1], BiPoly::one());
        assert_eq!(v[2], &l() - &BiPoly::one());
        assert_eq!(v[3], &(&l() - &BiPoly::one()) * &(&l() - &BiPoly::from(2)));
    }

    #[test]
    fn deg_exp_values() {
        let v = values(&FamilySpec::new(FamilyId::DegExp), 4).unwrap();
        assert_eq!(v[2], &x().pow(2) - &(&l() * &x()));
        for (n, p) in v.iter().enumerate() {
            assert_eq!(*p, falling_factorial(n as u32, Falling::Degenerate, &x()));
        }
    }

    #[test]
    fn spot_values() {
        let b_star = FamilySpec::new(FamilyId::Type2DegBernoulli2ndKind).at(0);
        assert_eq!(value(&b_star, 0).unwrap(), BiPoly::from(2));

        let b1 = FamilySpec::new(FamilyId::DegBernoulli2ndKind).at(0);
        assert_eq!(
            value(&b1, 1).unwrap(),
            (&BiPoly::one() - &l()).scale(&rat(1, 2))
        );

        for order in 1..=4 {
            let beta = FamilySpec::new(FamilyId::Type2DegBernoulli).order_int(order);
            assert_eq!(
                value(&beta, 0).unwrap(),
                k(crate::rational::two_pow(-order))
            );
        }
    }

    #[test]
    fn classical_values() {
        let none = Argument::Value(int(0));
        assert_eq!(
            classical_value(FamilyId::Bernoulli, 2, &none).unwrap(),
            k(rat(1, 6))
        );
        assert_eq!(
            classical_value(FamilyId::Daehee, 1, &none).unwrap(),
            k(rat(-1, 2))
        );
        for n in 0..8u32 {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let expect = factorial(n) * rat(sign, i64::from(n) + 1);
            assert_eq!(
                classical_value(FamilyId::Daehee, n as usize, &none).unwrap(),
                k(expect)
            );
        }
        assert_eq!(
            classical_value(FamilyId::Type2Bernoulli, 0, &none).unwrap(),
            k(rat(1, 2))
        );
        assert_eq!(
            classical_value(FamilyId::Type2Euler, 0, &none).unwrap(),
            BiPoly::one()
        );
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(
            falling_factorial(3, Falling::Classical, &x()),
            &(&x().pow(3) - &x().pow(2).scale(&int(3))) + &x().scale(&int(2))
        );
        let deg2 = falling_factorial(2, Falling::Degenerate, &x());
        assert_eq!(
            deg2.substitute(Var::Lambda, &Substitution::Value(int(0))),
            x().pow(2)
        );
        assert_eq!(
            falling_factorial(2, Falling::Classical, &k(rat(3, 2))),
            k(rat(3, 4))
        );
        assert_eq!(
            falling_factorial(0, Falling::Degenerate, &x()),
            BiPoly::one()
        );
    }

    #[test]
    fn central_factorial_powers() {
        assert_eq!(central_factorial_power(0), BiPoly::one());
        assert_eq!(central_factorial_power(1), x());
        assert_eq!(central_factorial_power(2), x().pow(2));
        assert_eq!(
            central_factorial_power(3),
            &x().pow(3) - &x().scale(&rat(1, 4))
        );
    }

    #[test]
    fn order_validation() {
        let err = build_egf(&FamilySpec::new(FamilyId::DegStirling2).order(rat(1, 2)), 4);
        assert!(matches!(err, Err(FamilyError::UnsupportedOrder { .. })));
        let err = build_egf(&FamilySpec::new(FamilyId::DegLog).order_int(2), 4);
        assert!(matches!(err, Err(FamilyError::UnsupportedOrder { .. })));
        // constant 1/2 has no rational square root
        let err = build_egf(
            &FamilySpec::new(FamilyId::Type2DegBernoulli).order(rat(1, 2)),
            4,
        );
        assert!(matches!(err, Err(FamilyError::UnsupportedOrder { .. })));
        assert!(build_egf(
            &FamilySpec::new(FamilyId::DegBernoulli2ndKind).order(rat(1, 2)),
            4
        )
        .is_ok());
    }

    #[test]
    fn exponent_additivity_of_deg_exp() {
        let e1 = deg_exp(&BiPoly::one(), 10);
        assert_eq!(deg_exp(&BiPoly::from(2), 10), e1.mul(&e1));
        let ex = deg_exp(&x(), 8);
        let e3 = deg_exp(&BiPoly::from(3), 8);
        let shifted = deg_exp(&(&x() + &BiPoly::from(3)), 8);
        assert_eq!(ex.mul(&e3), shifted);
    }

    #[test]
    fn truncation_consistency() {
        let spec = FamilySpec::new(FamilyId::Type2DegBernoulli2ndKind).order_int(2);
        let big = build_egf(&spec, 10).unwrap();
        assert_eq!(big.truncate(6), build_egf(&spec, 6).unwrap());
        let spec = FamilySpec::new(FamilyId::DegCentralFactorial).order_int(3);
        assert_eq!(
            build_egf(&spec, 9).unwrap().truncate(5),
            build_egf(&spec, 5).unwrap()
        );
    }

    #[test]
    fn lambda_modes() {
        let base = FamilySpec::new(FamilyId::DegStirling2);
        let sym = value(&base, 3).unwrap();
        let scaled = value(&base.clone().lambda(LambdaMode::Scaled(rat(1, 2))), 3).unwrap();
        assert_eq!(
            scaled,
            sym.substitute(Var::Lambda, &Substitution::Scaled(rat(1, 2)))
        );
        let zero = value(&base.lambda(LambdaMode::Value(int(0))), 3).unwrap();
        assert_eq!(zero, BiPoly::one());
    }

    #[test]
    fn symmetric_form_order_one() {
        let direct = build_egf(&FamilySpec::new(FamilyId::DegBernoulli2ndKind), 8).unwrap();
        let sym = deg_bernoulli_2nd_kind_symmetric(&int(1), &Argument::Symbolic, 8).unwrap();
        assert_eq!(direct, sym);
    }
}
