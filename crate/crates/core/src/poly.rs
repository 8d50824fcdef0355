//! Polynomials in the two formal variables `λ` and `x` over ℚ.
//!
//! Terms live in a map keyed by [`Monomial`], whose ordering is graded
//! lexicographic: total degree first, then degree in `λ`. Zero coefficients
//! are never stored, so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{binom, format_rational, parse_rational, pow_i, Rational};

/// Exponent pair `λ^dl · x^dx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub dl: u32,
    pub dx: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { dl: 0, dx: 0 };

    pub fn new(dl: u32, dx: u32) -> Self {
        Monomial { dl, dx }
    }

    pub fn total_degree(self) -> u32 {
        self.dl + self.dx
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.dl + other.dl, self.dx + other.dx)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.total_degree(), self.dl).cmp(&(other.total_degree(), other.dl))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// One of the two polynomial variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Lambda,
    X,
}

/// What a variable is replaced by in [`BiPoly::substitute`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Substitution {
    /// `var → c`
    Value(Rational),
    /// `var → c·var`
    Scaled(Rational),
    /// `var → var + c`
    Shifted(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn lambda() -> Self {
        BiPoly::monomial(Rational::one(), 1, 0)
    }

    pub fn x() -> Self {
        BiPoly::monomial(Rational::one(), 0, 1)
    }

    /// `c · λ^dl · x^dx`
    pub fn monomial(c: Rational, dl: u32, dx: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(Monomial::new(dl, dx), c);
        p
    }

    /// Builds a canonical polynomial from arbitrary terms; duplicates are
    /// summed and zeros dropped.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = BiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Rebuilds the term map from scratch; a no-op on any value produced by
    /// this module.
    pub fn normalized(&self) -> Self {
        BiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, c.clone())))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &Rational)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dl: u32, dx: u32) -> Rational {
        self.terms
            .get(&Monomial::new(dl, dx))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The value if this polynomial has no `λ` or `x` dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self, var: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| match var {
                Var::Lambda => m.dl,
                Var::X => m.dx,
            })
            .max()
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Multiplies by `λ^dl · x^dx`.
    pub fn shift(&self, dl: u32, dx: u32) -> BiPoly {
        let by = Monomial::new(dl, dx);
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.times(by), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient by `λ`, or `None` if some term has no factor of `λ`.
    pub fn div_lambda(&self) -> Option<BiPoly> {
        if self.terms.keys().any(|m| m.dl == 0) {
            return None;
        }
        Some(BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (Monomial::new(m.dl - 1, m.dx), v.clone()))
                .collect(),
        })
    }

    pub fn substitute(&self, var: Var, sub: &Substitution) -> BiPoly {
        let split = |m: Monomial| match var {
            Var::Lambda => (m.dl, Monomial::new(0, m.dx)),
            Var::X => (m.dx, Monomial::new(m.dl, 0)),
        };
        let join = |d: u32, rest: Monomial| match var {
            Var::Lambda => Monomial::new(d, rest.dx),
            Var::X => Monomial::new(rest.dl, d),
        };
        let mut out = BiPoly::zero();
        for (&m, c) in &self.terms {
            let (d, rest) = split(m);
            match sub {
                Substitution::Value(v) => out.add_term(rest, c * pow_i(v, i64::from(d))),
                Substitution::Scaled(s) => out.add_term(join(d, rest), c * pow_i(s, i64::from(d))),
                Substitution::Shifted(s) => {
                    // (var + s)^d = Σ_j binom(d, j) var^j s^(d-j)
                    for j in 0..=d {
                        let w = binom(d, i64::from(j)) * pow_i(s, i64::from(d - j));
                        out.add_term(join(j, rest), c * w);
                    }
                }
            }
        }
        out
    }

    /// Replaces `var` by an arbitrary polynomial.
    pub fn compose(&self, var: Var, replacement: &BiPoly) -> BiPoly {
        let max_d = self.degree(var).unwrap_or(0);
        let mut powers = Vec::with_capacity(max_d as usize + 1);
        powers.push(BiPoly::one());
        for i in 1..=max_d as usize {
            let next = &powers[i - 1] * replacement;
            powers.push(next);
        }
        let mut out = BiPoly::zero();
        for (&m, c) in &self.terms {
            let (d, rest) = match var {
                Var::Lambda => (m.dl, Monomial::new(0, m.dx)),
                Var::X => (m.dx, Monomial::new(m.dl, 0)),
            };
            out += &powers[d as usize].shift(rest.dl, rest.dx).scale(c);
        }
        out
    }

    pub fn eval(&self, lambda: &Rational, x: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            acc + c * pow_i(lambda, i64::from(m.dl)) * pow_i(x, i64::from(m.dx))
        })
    }
}

impl From<Rational> for BiPoly {
    fn from(c: Rational) -> Self {
        BiPoly::constant(c)
    }
}

impl From<i64> for BiPoly {
    fn from(c: i64) -> Self {
        BiPoly::constant(crate::rational::int(c))
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &BiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(*mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $f(self, rhs: BiPoly) -> BiPoly { (&self).$f(&rhs) }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $f(self, rhs: &BiPoly) -> BiPoly { (&self).$f(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl fmt::Display for BiPoly {
    /// Plain-text form: `λ` prints as `l`, terms in graded-lex order,
    /// e.g. `x^2 - l*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                (_, s) => write!(f, " {s} ")?,
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            if *m == Monomial::ONE || !mag.is_one() {
                factors.push(format_rational(&mag));
            }
            for (name, d) in [("l", m.dl), ("x", m.dx)] {
                match d {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{d}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    dl: u32,
    dx: u32,
    c: String,
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms.iter().map(|(m, c)| TermRecord {
            dl: m.dl,
            dx: m.dx,
            c: format_rational(c),
        }))
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(records.len());
        for r in records {
            let c = parse_rational(&r.c).map_err(D::Error::custom)?;
            terms.push((Monomial::new(r.dl, r.dx), c));
        }
        Ok(BiPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn l() -> BiPoly {
        BiPoly::lambda()
    }
    fn x() -> BiPoly {
        BiPoly::x()
    }

    #[test]
    fn cancellation_and_products() {
        assert_eq!(&l() + &x() + (&l() - &x()), l().scale(&int(2)));
        assert_eq!(&x() * &(&x() - &l()), &x().pow(2) - &(&l() * &x()));
        let a = BiPoly::monomial(rat(1, 2), 1, 0);
        let b = BiPoly::monomial(rat(2, 3), 1, 0);
        assert_eq!(&a * &b, BiPoly::monomial(rat(1, 3), 2, 0));
        assert!((&x() - &x()).is_zero());
    }

    #[test]
    fn substitutions() {
        let lx = &l() * &x();
        assert_eq!(
            lx.substitute(Var::Lambda, &Substitution::Scaled(rat(1, 2))),
            BiPoly::monomial(rat(1, 2), 1, 1)
        );
        let ff2 = &x().pow(2) - &lx;
        assert_eq!(
            ff2.substitute(Var::Lambda, &Substitution::Value(int(0))),
            x().pow(2)
        );
        let shifted = x()
            .pow(2)
            .substitute(Var::X, &Substitution::Shifted(int(-1)));
        assert_eq!(
            shifted,
            &(&x().pow(2) - &x().scale(&int(2))) + &BiPoly::one()
        );
    }

    #[test]
    fn compose_matches_shift() {
        let p = &(&x().pow(3) * &l()) + &x().scale(&rat(-5, 2));
        let via_shift = p.substitute(Var::X, &Substitution::Shifted(rat(3, 4)));
        let via_compose = p.compose(Var::X, &(&x() + &BiPoly::constant(rat(3, 4))));
        assert_eq!(via_shift, via_compose);
    }

    #[test]
    fn div_lambda_exact_only() {
        let p = &(&l() * &x()) + &l().pow(3);
        assert_eq!(p.div_lambda(), Some(&x() + &l().pow(2)));
        assert_eq!((&p + &x()).div_lambda(), None);
    }

    #[test]
    fn printing() {
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!((&x().pow(2) - &(&l() * &x())).to_string(), "x^2 - l*x");
        assert_eq!(BiPoly::constant(rat(-1, 2)).to_string(), "-1/2");
        assert_eq!((&BiPoly::one() - &l()).to_string(), "1 - l");
        assert_eq!(
            (&BiPoly::monomial(rat(-1, 2), 2, 1) + &x()).to_string(),
            "x - 1/2*l^2*x"
        );
    }

    #[test]
    fn json_records_graded_lex() {
        let p = &(&x().pow(2) - &(&l() * &x())) + &BiPoly::constant(int(3));
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"[{"dl":0,"dx":0,"c":"3"},{"dl":0,"dx":2,"c":"1"},{"dl":1,"dx":1,"c":"-1"}]"#
        );
        let back: BiPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn deserialize_canonicalizes() {
        let p: BiPoly = serde_json::from_str(
            r#"[{"dl":1,"dx":0,"c":"1/2"},{"dl":1,"dx":0,"c":"-1/2"},{"dl":0,"dx":0,"c":"0"},{"dl":0,"dx":1,"c":"2/4"}]"#,
        )
        .unwrap();
        assert_eq!(p, BiPoly::monomial(rat(1, 2), 0, 1));
    }
}
