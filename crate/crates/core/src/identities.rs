//! Catalog of identities between the families, each checked as an exact
//! polynomial equality in ℚ[λ, x].
//!
//! Both sides of every identity are assembled from the public [`families`]
//! API. A case passes iff its residual `lhs - rhs` is the zero polynomial.
//!
//! [`families`]: crate::families

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::families::{
    self, build_egf, deg_bernoulli_2nd_kind_symmetric, falling_factorial, triangle_value,
    triangular_numbers, Argument, Falling, FamilyError, FamilyId, FamilySpec, LambdaMode, Triangle,
};
use crate::poly::{BiPoly, Substitution, Var};
use crate::rational::{binom, format_rational, int, rat, two_pow, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("invalid range: {0}")]
    Range(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

impl From<crate::series::SeriesError> for VerifyError {
    fn from(e: crate::series::SeriesError) -> Self {
        VerifyError::Family(e.into())
    }
}

macro_rules! identities {
    ($( $variant:ident => $name:literal, $statement:literal; )*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityId { $( $variant, )* }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[ $( IdentityId::$variant, )* ];

            /// Stable identifier used in reports and on the command line.
            pub fn name(self) -> &'static str {
                match self { $( IdentityId::$variant => $name, )* }
            }

            /// The identity in plain text.
            pub fn statement(self) -> &'static str {
                match self { $( IdentityId::$variant => $statement, )* }
            }
        }
    };
}

identities! {
    Type2BernoulliHalfArgument => "eq2",
        "B*_n(x) = 2^(n-1) B_n((x+1)/2)";
    Type2EulerHalfArgument => "eq4",
        "E*_n(x) = 2^n E_n((x+1)/2)";
    CentralFactorialExpansion => "eq5-recon",
        "x^n = sum_k T(n,k) x^[k]";
    SymmetricKernelForm => "eq18-equiv",
        "(t/log_l(1+t))^a (1+t)^x = (l t/((1+t)^(l/2)-(1+t)^(-l/2)))^a (1+t)^(x-l a/2)";
    SecondKindStirlingSum => "eq21",
        "sum_m b^(r)_{m,l}(x) S2(n,m) = sum_m C(n,m) B*_{n-m}(2x/l - r) l^(n-m) S2(m+r,r)/C(m+r,r) 2^(m+r-n)";
    Type2SecondKindSplit => "eq23",
        "b*_{n,l}(x) = b^(1)_{n,l}(x) + b^(1)_{n,l}(x-1)";
    Type2SecondKindBinomial => "eq25",
        "b*_{n,l}(x) = sum_l C(n,l) b*_{l,l} (x)_{n-l}";
    DegStirling2Convolution => "thm2",
        "sum_l b*^(k)_{l,l}(x) S2_l(n,l) = sum_l C(n,l) 2^(l+k)/C(l+k,k) S2_{l/2}(l+k,k) (x-k)_{n-l,l}";
    DegStirling2Diagonal => "thm2-corollary",
        "2^(n+k) S2_{l/2}(n+k,k) = C(n+k,k) sum_l b*^(k)_{l,l}(k) S2_l(n,l)";
    Type2OrderExpansion => "thm3",
        "b*^(k)_{n,l}(x) = sum_l beta*^(-k)_{l,l}(x) S1_l(n,l)";
    CentralFactorialStirling1 => "thm4",
        "sum_{m,l} T_l(l,k) S1_l(m,l) C(n,m) (k/2)_{n-m} = sum_m S1_l(m,k) b^(k)_{n-m,l} C(n,m)";
    SecondKindOrderShift => "b-second-kind-relation",
        "b^(r)_n(x) = B^(n-r+1)_n(x+1)";
    ClassicalLimits => "limits-lambda0",
        "every degenerate family at l = 0 equals its classical counterpart";
    StirlingInversion => "stirling-inversion",
        "sum_l S2_l(n,l) S1_l(l,m) = delta(n,m)";
    CompositionalInverse => "compositional-inverse",
        "e_l(log_l(1+t)) = 1+t and log_l(1+(e_l(t)-1)) = t";
}

impl IdentityId {
    /// Whether the order range must start at one.
    fn needs_positive_order(self) -> bool {
        matches!(
            self,
            IdentityId::SecondKindStirlingSum
                | IdentityId::DegStirling2Convolution
                | IdentityId::DegStirling2Diagonal
                | IdentityId::Type2OrderExpansion
                | IdentityId::SecondKindOrderShift
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        if s == "thm1" {
            return Ok(IdentityId::Type2SecondKindSplit);
        }
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or(VerifyError::UnknownIdentity(s))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(format!("unknown profile {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ranges {
    pub max_n: usize,
    pub max_order: usize,
    pub trunc: usize,
}

impl Profile {
    /// Ranges the profile uses for `id`.
    pub fn ranges(self, id: IdentityId) -> Ranges {
        let (max_n, max_order, trunc) = match self {
            Profile::Quick => (8, 3, 12),
            Profile::Full => (12, 4, 16),
        };
        match id {
            IdentityId::CentralFactorialStirling1 if self == Profile::Full => Ranges {
                max_n,
                max_order: 6,
                trunc,
            },
            IdentityId::CompositionalInverse => Ranges {
                max_n: trunc,
                max_order,
                trunc,
            },
            _ => Ranges {
                max_n,
                max_order,
                trunc,
            },
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Indices {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    /// Rational order, as `"p/q"`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
}

impl Indices {
    fn n(n: usize) -> Self {
        Indices {
            n,
            ..Default::default()
        }
    }
    fn k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }
    fn r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }
    fn m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }
    fn alpha(mut self, a: &Rational) -> Self {
        self.alpha = Some(format_rational(a));
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case {
    pub indices: Indices,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub status: Status,
    /// `lhs - rhs`, exactly.
    pub residual: BiPoly,
}

impl Case {
    fn new(indices: Indices, lhs: &BiPoly, rhs: &BiPoly) -> Case {
        let residual = lhs - rhs;
        let status = if residual.is_zero() {
            Status::Pass
        } else {
            Status::Fail
        };
        Case {
            indices,
            label: None,
            status,
            residual,
        }
    }

    fn labeled(mut self, label: impl Into<String>) -> Case {
        self.label = Some(label.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub ranges: Ranges,
    pub profile: Option<Profile>,
    pub cases: Vec<Case>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(Case::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed())
    }
}

/// Checks `id` for indices up to `max_n` and orders up to `max_order`, with
/// series truncated at `trunc`.
pub fn verify(
    id: IdentityId,
    max_n: usize,
    max_order: usize,
    trunc: usize,
) -> Result<VerificationReport, VerifyError> {
    if max_n > trunc {
        return Err(VerifyError::Range(format!(
            "max_n {max_n} exceeds truncation order {trunc}"
        )));
    }
    if id.needs_positive_order() && max_order == 0 {
        return Err(VerifyError::Range(format!(
            "{id} needs orders starting at 1"
        )));
    }
    let ranges = Ranges {
        max_n,
        max_order,
        trunc,
    };
    let (cases, wall_time_ms) = timed(|| -> Result<Vec<Case>, VerifyError> {
        Ok(match id {
            IdentityId::Type2BernoulliHalfArgument => {
                half_argument(FamilyId::Type2Bernoulli, FamilyId::Bernoulli, -1, ranges)?
            }
            IdentityId::Type2EulerHalfArgument => {
                half_argument(FamilyId::Type2Euler, FamilyId::Euler, 0, ranges)?
            }
            IdentityId::CentralFactorialExpansion => central_factorial_expansion(ranges),
            IdentityId::SymmetricKernelForm => symmetric_kernel_form(ranges)?,
            IdentityId::SecondKindStirlingSum => second_kind_stirling_sum(ranges)?,
            IdentityId::Type2SecondKindSplit => type2_second_kind_split(ranges)?,
            IdentityId::Type2SecondKindBinomial => type2_second_kind_binomial(ranges)?,
            IdentityId::DegStirling2Convolution => deg_stirling2_convolution(ranges)?,
            IdentityId::DegStirling2Diagonal => deg_stirling2_diagonal(ranges)?,
            IdentityId::Type2OrderExpansion => type2_order_expansion(ranges)?,
            IdentityId::CentralFactorialStirling1 => central_factorial_stirling1(ranges)?,
            IdentityId::SecondKindOrderShift => second_kind_order_shift(ranges)?,
            IdentityId::ClassicalLimits => classical_limits(ranges)?,
            IdentityId::StirlingInversion => stirling_inversion(ranges),
            IdentityId::CompositionalInverse => compositional_inverse(ranges)?,
        })
    });
    Ok(VerificationReport {
        identity: id,
        ranges,
        profile: None,
        cases: cases?,
        wall_time_ms,
    })
}

/// Runs `f` and reports its wall time, where the platform has a clock.
#[cfg(not(all(target_arch = "wasm32", target_os = "unknown")))]
fn timed<T>(f: impl FnOnce() -> T) -> (T, Option<u64>) {
    let start = std::time::Instant::now();
    let value = f();
    (value, Some(start.elapsed().as_millis() as u64))
}

#[cfg(all(target_arch = "wasm32", target_os = "unknown"))]
fn timed<T>(f: impl FnOnce() -> T) -> (T, Option<u64>) {
    (f(), None)
}

/// Runs the whole catalog with the profile's ranges.
pub fn verify_all(profile: Profile) -> Vec<VerificationReport> {
    IdentityId::ALL
        .iter()
        .map(|&id| {
            let r = profile.ranges(id);
            let mut report = verify(id, r.max_n, r.max_order, r.trunc)
                .expect("profile ranges are valid for every identity");
            report.profile = Some(profile);
            report
        })
        .collect()
}

fn seq(spec: FamilySpec, ranges: Ranges) -> Result<Vec<BiPoly>, VerifyError> {
    Ok(families::values(&spec, ranges.trunc)?)
}

fn s2(n: usize, k: usize) -> BiPoly {
    triangular_numbers(Triangle::Stirling2, n, k)
}

fn deg_s1(n: usize, k: usize) -> BiPoly {
    triangular_numbers(Triangle::DegStirling1, n, k)
}

fn deg_s2(n: usize, k: usize) -> BiPoly {
    triangular_numbers(Triangle::DegStirling2, n, k)
}

fn sum<I: IntoIterator<Item = BiPoly>>(terms: I) -> BiPoly {
    terms.into_iter().fold(BiPoly::zero(), |mut acc, t| {
        acc += &t;
        acc
    })
}

fn binom_u(n: usize, k: usize) -> Rational {
    binom(n as u32, k as i64)
}

/// `F*_n(x) = 2^(n + shift) F_n((x+1)/2)`.
fn half_argument(
    type2: FamilyId,
    plain: FamilyId,
    shift: i64,
    ranges: Ranges,
) -> Result<Vec<Case>, VerifyError> {
    let lhs = seq(FamilySpec::new(type2), ranges)?;
    let plain = seq(FamilySpec::new(plain), ranges)?;
    Ok((0..=ranges.max_n)
        .map(|n| {
            let rhs = plain[n]
                .substitute(Var::X, &Substitution::Scaled(rat(1, 2)))
                .substitute(Var::X, &Substitution::Shifted(int(1)))
                .scale(&two_pow(n as i64 + shift));
            Case::new(Indices::n(n), &lhs[n], &rhs)
        })
        .collect())
}

fn central_factorial_expansion(ranges: Ranges) -> Vec<Case> {
    (0..=ranges.max_n)
        .map(|n| {
            let rhs = sum((0..=n).map(|k| {
                &triangular_numbers(Triangle::CentralFactorialT, n, k)
                    * &families::central_factorial_power(k as u32)
            }));
            Case::new(Indices::n(n), &BiPoly::x().pow(n as u32), &rhs)
        })
        .collect()
}

fn symmetric_kernel_form(ranges: Ranges) -> Result<Vec<Case>, VerifyError> {
    let mut alphas = vec![rat(1, 2)];
    alphas.extend((1..=ranges.max_order.max(2) as i64).map(int));
    let mut cases = Vec::new();
    for alpha in &alphas {
        let direct = seq(
            FamilySpec::new(FamilyId::DegBernoulli2ndKind).order(alpha.clone()),
            ranges,
        )?;
        let symmetric =
            deg_bernoulli_2nd_kind_symmetric(alpha, &Argument::Symbolic, ranges.trunc)?.values();
        for n in 0..=ranges.max_n {
            cases.push(Case::new(
                Indices::n(n).alpha(alpha),
                &direct[n],
                &symmetric[n],
            ));
        }
    }
    Ok(cases)
}

/// `λ^j · B*_j(2x/λ - r)` as a polynomial: with `B*_j(y) = Σ_i c_i y^i` this
/// is `Σ_i c_i (2x - rλ)^i λ^(j-i)`, and `i ≤ j` keeps every power of `λ`
/// nonnegative.
pub fn eq21_rhs_term(type2_bernoulli_j: &BiPoly, j: usize, r: usize) -> BiPoly {
    let y = &BiPoly::x().scale(&int(2)) - &BiPoly::lambda().scale(&int(r as i64));
    sum(type2_bernoulli_j.terms().map(|(mono, c)| {
        debug_assert_eq!(mono.dl, 0, "classical polynomial has no λ");
        let i = mono.dx as usize;
        assert!(i <= j, "degree of B*_j exceeds j");
        y.pow(mono.dx).shift((j - i) as u32, 0).scale(c)
    }))
}

fn second_kind_stirling_sum(ranges: Ranges) -> Result<Vec<Case>, VerifyError> {
    let type2 = seq(FamilySpec::new(FamilyId::Type2Bernoulli), ranges)?;
    let mut cases = Vec::new();
    for r in 1..=ranges.max_order {
        let b = seq(
            FamilySpec::new(FamilyId::DegBernoulli2ndKind).order_int(r as i64),
            ranges,
        )?;
        for n in 0..=ranges.max_n {
            let lhs = sum((0..=n).map(|m| &b[m] * &s2(n, m)));
            let rhs = sum((0..=n).map(|m| {
                let w = binom_u(n, m) * two_pow(m as i64 + r as i64 - n as i64) / binom_u(m + r, r);
                (&eq21_rhs_term(&type2[n - m], n - m, r) * &s2(m + r, r)).scale(&w)
            }));
            cases.push(Case::new(Indices::n(n).r(r), &lhs, &rhs));
        }
    }
    Ok(cases)
}

fn type2_second_kind_split(ranges: Ranges) -> Result<Vec<Case>, VerifyError> {
    let b_star = seq(FamilySpec::new(FamilyId::Type2DegBernoulli2ndKind), ranges)?;
    let b = seq(FamilySpec::new(FamilyId::DegBernoulli2ndKind), ranges)?;
    let b_shift = seq(
        FamilySpec::new(FamilyId::DegBernoulli2ndKind).shifted(-1),
        ranges,
    )?;
    Ok((0..=ranges.max_n)
        .map(|n| Case::new(Indices::n(n), &b_star[n], &(&b[n] + &b_shift[n])))
        .collect())
}

fn type2_second_kind_binomial(ranges: Ranges) -> Result<Vec<Case>, VerifyError> {
    let poly = seq(FamilySpec::new(FamilyId::Type2DegBernoulli2ndKind), ranges)?;
    let numbers = seq(
        FamilySpec::new(FamilyId::Type2DegBernoulli2ndKind).at(0),
        ranges,
    )?;
    Ok((0..=ranges.max_n)
        .map(|n| {
            let rhs = sum((0..=n).map(|l| {
                (&numbers[l] * &falling_factorial((n - l) as u32, Falling::Classical, &BiPoly::x()))
                    .scale(&binom_u(n, l))
            }));
            Case::new(Indices::n(n), &poly[n], &rhs)
        })
        .collect())
}

fn deg_stirling2_convolution(ranges: Ranges) -> Result<Vec<Case>, VerifyError> {
    let half = LambdaMode::Scaled(rat(1, 2));
    let mut cases = Vec::new();
    for k in 1..=ranges.max_order {
        let b = seq(
            FamilySpec::new(FamilyId::Type2DegBernoulli2ndKind).order_int(k as i64),
            ranges,
        )?;
        let x_minus_k = &BiPoly::x() - &BiPoly::from(k as i64);
        for n in 0..=ranges.max_n {
            let lhs = sum((0..=n).map(|l| &b[l] * &deg_s2(n, l)));
            let rhs = sum((0..=n).map(|l| {
                let w = binom_u(n, l) * two_pow((l + k) as i64) / binom_u(l + k, k);
                let s = triangle_value(Triangle::DegStirling2, l + k, k, &half);
                (&s * &falling_factorial((n - l) as u32, Falling::Degenerate, &x_minus_k)).scale(&w)
            }));
            cases.push(Case::new(Indices::n(n).k(k), &lhs, &rhs));
        }
    }
    Ok(cases)
}

fn deg_stirling2_diagonal(ranges: Ranges) -> Result<Vec<Case>, VerifyError> {
    let half = LambdaMode::Scaled(rat(1, 2));
    let mut cases = Vec::new();
    for k in 1..=ranges.max_order {
        let b = seq(
            FamilySpec::new(FamilyId::Type2DegBernoulli2ndKind)
                .order_int(k as i64)
                .at(k as i64),
            ranges,
        )?;
        for n in 0..=ranges.max_n {
            let lhs = triangle_value(Triangle::DegStirling2, n + k, k, &half)
                .scale(&two_pow((n + k) as i64));
            let rhs = sum((0..=n).map(|l| &b[l] * &deg_s2(n, l))).scale(&binom_u(n + k, k));
            cases.push(Case::new(Indices::n(n).k(k), &lhs, &rhs));
        }
    }
    Ok(cases)
}

fn type2_order_expansion(ranges: Ranges) -> Result<Vec<Case>, VerifyError> {
    let mut cases = Vec::new();
    for k in 1..=ranges.max_order {
        let b = seq(
            FamilySpec::new(FamilyId::Type2DegBernoulli2ndKind).order_int(k as i64),
            ranges,
        )?;
        let beta = seq(
            FamilySpec::new(FamilyId::Type2DegBernoulli).order_int(-(k as i64)),
            ranges,
        )?;
        for n in 0..=ranges.max_n {
            let rhs = sum((0..=n).map(|l| &beta[l] * &deg_s1(n, l)));
            cases.push(Case::new(Indices::n(n).k(k), &b[n], &rhs));
        }
    }
    Ok(cases)
}

fn central_factorial_stirling1(ranges: Ranges) -> Result<Vec<Case>, VerifyError> {
    let mut cases = Vec::new();
    for k in 0..=ranges.max_order.min(ranges.max_n) {
        let b = seq(
            FamilySpec::new(FamilyId::DegBernoulli2ndKind)
                .order_int(k as i64)
                .at(0),
            ranges,
        )?;
        let half_k = BiPoly::constant(rat(k as i64, 2));
        for n in k..=ranges.max_n {
            let lhs = sum((k..=n).map(|m| {
                let inner = sum((k..=m).map(|l| {
                    &triangular_numbers(Triangle::DegCentralFactorial, l, k) * &deg_s1(m, l)
                }));
                (&inner * &falling_factorial((n - m) as u32, Falling::Classical, &half_k))
                    .scale(&binom_u(n, m))
            }));
            let rhs = sum((k..=n).map(|m| (&deg_s1(m, k) * &b[n - m]).scale(&binom_u(n, m))));
            cases.push(Case::new(Indices::n(n).k(k), &lhs, &rhs));
        }
    }
    Ok(cases)
}

fn second_kind_order_shift(ranges: Ranges) -> Result<Vec<Case>, VerifyError> {
    let mut cases = Vec::new();
    for r in 1..=ranges.max_order {
        let b = seq(
            FamilySpec::new(FamilyId::Bernoulli2ndKind).order_int(r as i64),
            ranges,
        )?;
        for n in 0..=ranges.max_n {
            let order = n as i64 - r as i64 + 1;
            let spec = FamilySpec::new(FamilyId::Bernoulli)
                .order_int(order)
                .shifted(1);
            let rhs = build_egf(&spec, ranges.trunc)?.value(n)?;
            cases.push(Case::new(Indices::n(n).r(r), &b[n], &rhs));
        }
    }
    Ok(cases)
}

fn classical_limits(ranges: Ranges) -> Result<Vec<Case>, VerifyError> {
    let at_zero = LambdaMode::Value(int(0));
    let mut cases = Vec::new();
    for &id in FamilyId::ALL {
        let Some(classical) = id.classical_counterpart() else {
            continue;
        };
        if let Some(tri) = id.triangle() {
            let plain = classical.triangle().expect("triangle counterpart");
            for n in 0..=ranges.max_n {
                for k in 0..=n {
                    let lhs = triangle_value(tri, n, k, &at_zero);
                    let rhs = triangular_numbers(plain, n, k);
                    cases.push(Case::new(Indices::n(n).k(k), &lhs, &rhs).labeled(id.name()));
                }
            }
            continue;
        }
        let mut orders = vec![int(1)];
        if id.has_order() {
            orders = vec![int(-1)];
            if matches!(
                id,
                FamilyId::DegBernoulli
                    | FamilyId::DegEuler
                    | FamilyId::DegDaehee
                    | FamilyId::DegBernoulli2ndKind
            ) {
                orders.push(rat(1, 2));
            }
            orders.extend((1..=ranges.max_order.max(1) as i64).map(int));
        }
        for alpha in orders {
            let deg = seq(
                FamilySpec::new(id)
                    .order(alpha.clone())
                    .lambda(at_zero.clone()),
                ranges,
            )?;
            let plain = seq(FamilySpec::new(classical).order(alpha.clone()), ranges)?;
            for n in 0..=ranges.max_n {
                let mut indices = Indices::n(n);
                if id.has_order() {
                    indices = indices.alpha(&alpha);
                }
                cases.push(Case::new(indices, &deg[n], &plain[n]).labeled(id.name()));
            }
        }
    }
    Ok(cases)
}

fn stirling_inversion(ranges: Ranges) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 0..=ranges.max_n {
        for m in 0..=ranges.max_n {
            let lhs = sum((0..=n).map(|l| &deg_s2(n, l) * &deg_s1(l, m)));
            let delta = if n == m {
                BiPoly::one()
            } else {
                BiPoly::zero()
            };
            cases.push(Case::new(Indices::n(n).m(m), &lhs, &delta));
        }
    }
    cases
}

fn compositional_inverse(ranges: Ranges) -> Result<Vec<Case>, VerifyError> {
    let trunc = ranges.trunc;
    let e_lambda = build_egf(&FamilySpec::new(FamilyId::DegExp).at(1), trunc)?;
    let log_lambda = build_egf(&FamilySpec::new(FamilyId::DegLog), trunc)?;
    let one_t = crate::series::EgfSeries::one(trunc).add(&crate::series::EgfSeries::t(trunc));
    let t = crate::series::EgfSeries::t(trunc);

    let exp_of_log = e_lambda.compose(&log_lambda)?;
    let log_of_exp = log_lambda.compose(&e_lambda.sub(&crate::series::EgfSeries::one(trunc)))?;
    let mut cases = Vec::new();
    for (label, composed, expected) in [
        ("e_l(log_l(1+t)) = 1+t", &exp_of_log, &one_t),
        ("log_l(1+(e_l(t)-1)) = t", &log_of_exp, &t),
    ] {
        for n in 0..=ranges.max_n {
            cases.push(
                Case::new(Indices::n(n), &composed.value(n)?, &expected.value(n)?).labeled(label),
            );
        }
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse() {
        for &id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert_eq!(
            "thm1".parse::<IdentityId>().unwrap(),
            IdentityId::Type2SecondKindSplit
        );
        assert_eq!(
            "THM3".parse::<IdentityId>().unwrap(),
            IdentityId::Type2OrderExpansion
        );
        assert!(matches!(
            "thm9".parse::<IdentityId>(),
            Err(VerifyError::UnknownIdentity(_))
        ));
        assert_eq!(IdentityId::ALL.len(), 15);
    }

    #[test]
    fn range_errors() {
        assert!(matches!(
            verify(IdentityId::Type2SecondKindSplit, 10, 1, 8),
            Err(VerifyError::Range(_))
        ));
        assert!(matches!(
            verify(IdentityId::Type2OrderExpansion, 4, 0, 8),
            Err(VerifyError::Range(_))
        ));
        assert!(verify(IdentityId::CentralFactorialStirling1, 4, 0, 8).is_ok());
    }

    #[test]
    fn split_spot_value() {
        let report = verify(IdentityId::Type2SecondKindSplit, 8, 1, 16).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.cases.len(), 9);
        let b0 = families::value(
            &FamilySpec::new(FamilyId::Type2DegBernoulli2ndKind).at(0),
            0,
        )
        .unwrap();
        assert_eq!(b0, BiPoly::from(2));
    }

    #[test]
    fn minimal_range_has_only_n_zero() {
        for &id in IdentityId::ALL {
            let report = verify(id, 0, 1, 0).unwrap();
            assert!(report.all_passed(), "{id}");
            assert!(report.cases.iter().all(|c| c.indices.n == 0), "{id}");
            assert!(!report.cases.is_empty(), "{id}");
        }
    }

    #[test]
    fn eq21_term_basics() {
        // B*_0 = 1/2
        assert_eq!(
            eq21_rhs_term(&BiPoly::constant(rat(1, 2)), 0, 3),
            BiPoly::constant(rat(1, 2))
        );
        // B*_1(y) = y/2, so λ·B*_1(2x/λ - 2) = x - λ
        let b1 = families::value(&FamilySpec::new(FamilyId::Type2Bernoulli), 1).unwrap();
        assert_eq!(b1, BiPoly::x().scale(&rat(1, 2)));
        let term = eq21_rhs_term(&b1, 1, 2);
        let expect = &BiPoly::x() - &BiPoly::lambda();
        assert_eq!(term, expect);
    }

    #[test]
    fn second_kind_stirling_sum_as_printed_fails_beyond_order_one() {
        let report = verify(IdentityId::SecondKindStirlingSum, 6, 2, 8).unwrap();
        assert!(report
            .cases
            .iter()
            .filter(|c| c.indices.r == Some(1))
            .all(Case::passed));
        // n = 0, r = 2: lhs = b^(2)_0 = 1, rhs = B*_0 · S2(2,2) · 2^2 = 2
        let first_r2 = report
            .cases
            .iter()
            .find(|c| c.indices.r == Some(2))
            .unwrap();
        assert_eq!(first_r2.indices.n, 0);
        assert_eq!(first_r2.residual, BiPoly::from(-1));
    }

    /// With the order-r type 2 Bernoulli polynomial in place of B*, the same
    /// right-hand side matches for every r.
    #[test]
    fn second_kind_stirling_sum_holds_with_order_r_kernel() {
        let ranges = Ranges {
            max_n: 8,
            max_order: 4,
            trunc: 8,
        };
        for r in 1..=4 {
            let b = seq(
                FamilySpec::new(FamilyId::DegBernoulli2ndKind).order_int(r as i64),
                ranges,
            )
            .unwrap();
            let b_star_r = seq(
                FamilySpec::new(FamilyId::Type2Bernoulli).order_int(r as i64),
                ranges,
            )
            .unwrap();
            for n in 0..=8 {
                let lhs = sum((0..=n).map(|m| &b[m] * &s2(n, m)));
                let rhs = sum((0..=n).map(|m| {
                    let w =
                        binom_u(n, m) * two_pow(m as i64 + r as i64 - n as i64) / binom_u(m + r, r);
                    (&eq21_rhs_term(&b_star_r[n - m], n - m, r) * &s2(m + r, r)).scale(&w)
                }));
                assert_eq!(lhs, rhs, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn corollary_is_convolution_at_x_equal_k() {
        let conv = verify(IdentityId::DegStirling2Convolution, 6, 3, 8).unwrap();
        let diag = verify(IdentityId::DegStirling2Diagonal, 6, 3, 8).unwrap();
        for c in &diag.cases {
            let (n, k) = (c.indices.n, c.indices.k.unwrap());
            let general = conv.cases.iter().find(|g| g.indices == c.indices).unwrap();
            let specialized = general
                .residual
                .substitute(Var::X, &Substitution::Value(int(k as i64)))
                .scale(&-binom_u(n + k, k));
            assert_eq!(specialized, c.residual);
        }
    }

    #[test]
    fn truncation_does_not_change_residuals() {
        for &id in IdentityId::ALL {
            let a = verify(id, 8, 2, 12).unwrap();
            let b = verify(id, 8, 2, 16).unwrap();
            let strip = |r: VerificationReport| {
                r.cases
                    .into_iter()
                    .map(|c| (c.indices, c.residual))
                    .collect::<Vec<_>>()
            };
            assert_eq!(strip(a), strip(b), "{id}");
        }
    }
}
