//! Comparing two algorithms' combined time and space efficiency with the
//! A1-Score metric.
//!
//! The pipeline: parse asymptotic complexity expressions over `n` into an
//! exact AST ([`parse`]), reduce them to a canonical sum of monomials so
//! product equality is decidable symbolically ([`canonical`]), evaluate
//! numerically at concrete points ([`eval`]), compute the A1-Score
//! ξ(θ+φ)/(θφ) per algorithm ([`metric`]), and run the two-branch
//! decision rule with crossover scanning and an independent asymptotic
//! oracle ([`compare`]).
//!
//! The crate is `no_std` (with `alloc`); IO, the CLI and file formats
//! live in the companion `a1score-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod canonical;
pub mod compare;
pub mod eval;
pub mod expr;
pub mod metric;
pub mod parse;
pub mod rational;

pub use canonical::{canonical_equal, canonicalize, growth_order, CanonicalForm, CanonicalTerm};
pub use compare::{
    compare, decide_winner, oracle_verdict, scan_crossovers, Branch, ComparisonVerdict,
    Crossover, InvalidScanRange, ProductEquality, ScanRange, Winner, A1_TIE_RELATIVE_TOLERANCE,
};
pub use eval::{evaluate, EvalConfig, EvalError};
pub use expr::{ComplexityExpr, Exponent};
pub use metric::{a1_components, a1_score, A1Breakdown, A1Config, AlgorithmProfile};
pub use parse::{parse, ParseError};
pub use rational::Rational;
