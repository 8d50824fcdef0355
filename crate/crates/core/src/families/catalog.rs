use std::fmt;
use std::str::FromStr;

use super::Triangle;

macro_rules! families {
    ($( $variant:ident => $name:literal, $recipe:literal, $about:literal; )*) => {
        /// Every family this crate can build.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum FamilyId { $( $variant, )* }

        impl FamilyId {
            pub const ALL: &'static [FamilyId] = &[ $( FamilyId::$variant, )* ];

            /// Kebab-case name used on the command line.
            pub fn name(self) -> &'static str {
                match self { $( FamilyId::$variant => $name, )* }
            }

            /// Generating function, with `α` the order and `c` the argument.
            pub fn recipe(self) -> &'static str {
                match self { $( FamilyId::$variant => $recipe, )* }
            }

            pub fn about(self) -> &'static str {
                match self { $( FamilyId::$variant => $about, )* }
            }
        }
    };
}

families! {
    Exp => "exp", "e^{ct}", "powers c^n";
    Log => "log", "log(1+t)", "logarithm coefficients";
    Bernoulli => "bernoulli", "(t/(e^t-1))^α e^{ct}", "Bernoulli polynomials of order α";
    Euler => "euler", "(2/(e^t+1))^α e^{ct}", "Euler polynomials (order α)";
    Type2Bernoulli => "type2-bernoulli", "(t/(e^t-e^{-t}))^α e^{ct}", "type 2 Bernoulli polynomials of order α";
    Type2Euler => "type2-euler", "(2/(e^t+e^{-t}))^α e^{ct}", "type 2 Euler polynomials (order α)";
    Stirling1 => "stirling1", "log^k(1+t)/k!", "signed Stirling numbers of the first kind";
    Stirling2 => "stirling2", "(e^t-1)^k/k!", "Stirling numbers of the second kind";
    CentralFactorialT => "central-factorial", "(e^{t/2}-e^{-t/2})^k/k!", "central factorial numbers of the second kind";
    CentralFactorialPower => "central-factorial-power", "values c(c+n/2-1)(c+n/2-2)...(c-n/2+1)", "central factorials x^[n]";
    Daehee => "daehee", "(log(1+t)/t)^α (1+t)^c", "Daehee polynomials";
    Bernoulli2ndKind => "bernoulli-2nd-kind", "(t/log(1+t))^α (1+t)^c", "Bernoulli polynomials of the second kind of order α";
    Type2Bernoulli2ndKind => "type2-bernoulli-2nd-kind", "(((1+t)-(1+t)^{-1})/log(1+t))^α (1+t)^c", "type 2 Bernoulli polynomials of the second kind of order α";
    FallingFactorial => "falling-factorial", "(1+t)^c", "falling factorials (c)_n";
    DegFallingFactorial => "deg-falling-factorial", "values c(c-λ)...(c-(n-1)λ)", "degenerate falling factorials (c)_{n,λ}";
    DegExp => "deg-exp", "e_λ^c(t) = (1+λt)^{c/λ}", "degenerate exponential";
    DegLog => "deg-log", "log_λ(1+t) = ((1+t)^λ-1)/λ", "degenerate logarithm";
    DegBernoulli => "deg-bernoulli", "(t/(e_λ(t)-1))^α e_λ^c(t)", "Carlitz degenerate Bernoulli polynomials";
    DegEuler => "deg-euler", "(2/(e_λ(t)+1))^α e_λ^c(t)", "Carlitz degenerate Euler polynomials";
    DegCentralFactorial => "deg-central-factorial", "(e_λ^{1/2}(t)-e_λ^{-1/2}(t))^k/k!", "degenerate central factorial numbers of the second kind";
    DegDaehee => "deg-daehee", "(log_λ(1+t)/t)^α (1+t)^c", "degenerate Daehee polynomials";
    DegBernoulli2ndKind => "deg-bernoulli-2nd-kind", "(t/log_λ(1+t))^α (1+t)^c", "degenerate Bernoulli polynomials of the second kind of order α";
    Type2DegBernoulli2ndKind => "type2-deg-bernoulli-2nd-kind", "(((1+t)-(1+t)^{-1})/log_λ(1+t))^α (1+t)^c", "type 2 degenerate Bernoulli polynomials of the second kind of order α";
    Type2DegBernoulli => "type2-deg-bernoulli", "(t/(e_λ(t)-e_λ^{-1}(t)))^α e_λ^c(t)", "type 2 degenerate Bernoulli polynomials of order α";
    DegStirling1 => "deg-stirling1", "log_λ^k(1+t)/k!", "degenerate Stirling numbers of the first kind";
    DegStirling2 => "deg-stirling2", "(e_λ(t)-1)^k/k!", "degenerate Stirling numbers of the second kind";
}

impl FamilyId {
    /// The number triangle this family indexes, if any.
    pub fn triangle(self) -> Option<Triangle> {
        Some(match self {
            FamilyId::Stirling1 => Triangle::Stirling1,
            FamilyId::Stirling2 => Triangle::Stirling2,
            FamilyId::CentralFactorialT => Triangle::CentralFactorialT,
            FamilyId::DegStirling1 => Triangle::DegStirling1,
            FamilyId::DegStirling2 => Triangle::DegStirling2,
            FamilyId::DegCentralFactorial => Triangle::DegCentralFactorial,
            _ => return None,
        })
    }

    /// Families built as `kernel^α · base`.
    pub fn has_order(self) -> bool {
        use FamilyId::*;
        matches!(
            self,
            Bernoulli
                | Euler
                | Type2Bernoulli
                | Type2Euler
                | Daehee
                | Bernoulli2ndKind
                | Type2Bernoulli2ndKind
                | DegBernoulli
                | DegEuler
                | Type2DegBernoulli
                | DegDaehee
                | DegBernoulli2ndKind
                | Type2DegBernoulli2ndKind
        )
    }

    /// Whether the generating function involves `λ`.
    pub fn is_degenerate(self) -> bool {
        self.classical_counterpart().is_some()
    }

    /// The family a degenerate one reduces to as `λ → 0`.
    pub fn classical_counterpart(self) -> Option<FamilyId> {
        use FamilyId::*;
        Some(match self {
            DegFallingFactorial | DegExp => Exp,
            DegLog => Log,
            DegBernoulli => Bernoulli,
            DegEuler => Euler,
            DegCentralFactorial => CentralFactorialT,
            DegDaehee => Daehee,
            DegBernoulli2ndKind => Bernoulli2ndKind,
            Type2DegBernoulli2ndKind => Type2Bernoulli2ndKind,
            Type2DegBernoulli => Type2Bernoulli,
            DegStirling1 => Stirling1,
            DegStirling2 => Stirling2,
            _ => return None,
        })
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}; see list-families"))
    }
}
