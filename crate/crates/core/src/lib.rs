//! Exact construction of classical and degenerate Bernoulli-type polynomial
//! families as truncated exponential generating functions over ℚ[λ, x], and
//! symbolic verification of the identities relating them.

pub mod cli;
pub mod families;
pub mod identities;
pub mod poly;
pub mod rational;
pub mod series;

pub use families::{Argument, FamilyId, FamilySpec, LambdaMode};
pub use identities::{verify, verify_all, IdentityId, Profile, VerificationReport};
pub use poly::{BiPoly, Monomial, Substitution, Var};
pub use rational::{ExactError, Rational};
pub use series::{EgfSeries, SeriesError};
