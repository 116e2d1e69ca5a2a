//! Exact rational arithmetic and truncated graded polynomial rings.

pub mod generators;
pub mod poly;
pub mod rational;
pub mod univariate;

pub use generators::{Generator, GeneratorKind, GeneratorSet, Monomial};
pub use poly::GradedPoly;
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use univariate::UniPoly;
