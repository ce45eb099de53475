//! The complexity-expression AST.
//!
//! An expression is a positive function of the input size `n` built from
//! positive rational constants, `n` itself, `log n`, rational powers, the
//! exponential form `c^n` (constant `c > 1`), and sums/products of those.
//! [`crate::parse::parse`] is the validating constructor; trees built by
//! hand must uphold the same invariants or downstream operations panic.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::rational::Rational;

/// Exponent of a [`ComplexityExpr::Power`] node: a rational constant, or
/// the variable `n` (legal only on a constant base greater than 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exponent {
    Num(Rational),
    N,
}

/// Parsed asymptotic complexity function of `n`.
///
/// Invariants on well-formed trees:
/// - constants are strictly positive rationals
/// - `Power` exponents are rational, except `c^n` with constant `c > 1`
/// - `Log` arguments are `n` or `n^k` with positive rational `k`
/// - fractional/negative exponents only where the base stays expressible
///   as a sum of monomials with positive rational coefficients
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexityExpr {
    Constant(Rational),
    Variable,
    Log(Box<ComplexityExpr>),
    Power {
        base: Box<ComplexityExpr>,
        exp: Exponent,
    },
    Product(Vec<ComplexityExpr>),
    Sum(Vec<ComplexityExpr>),
}

impl ComplexityExpr {
    pub fn constant(value: Rational) -> ComplexityExpr {
        ComplexityExpr::Constant(value)
    }

    pub fn integer(value: i128) -> ComplexityExpr {
        ComplexityExpr::Constant(Rational::from_integer(value))
    }

    pub fn var() -> ComplexityExpr {
        ComplexityExpr::Variable
    }

    /// `log n`
    pub fn log_n() -> ComplexityExpr {
        ComplexityExpr::Log(Box::new(ComplexityExpr::Variable))
    }

    /// `log(n^k)`
    pub fn log_pow(k: Rational) -> ComplexityExpr {
        ComplexityExpr::Log(Box::new(ComplexityExpr::power(
            ComplexityExpr::Variable,
            k,
        )))
    }

    /// `base^q` for a rational exponent.
    pub fn power(base: ComplexityExpr, q: Rational) -> ComplexityExpr {
        ComplexityExpr::Power {
            base: Box::new(base),
            exp: Exponent::Num(q),
        }
    }

    /// `c^n` for a constant base.
    pub fn exponential(base: Rational) -> ComplexityExpr {
        ComplexityExpr::Power {
            base: Box::new(ComplexityExpr::Constant(base)),
            exp: Exponent::N,
        }
    }

    /// Product of factors; a single factor collapses to itself.
    pub fn product(mut factors: Vec<ComplexityExpr>) -> ComplexityExpr {
        if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            ComplexityExpr::Product(factors)
        }
    }

    /// Sum of terms; a single term collapses to itself.
    pub fn sum(mut terms: Vec<ComplexityExpr>) -> ComplexityExpr {
        if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            ComplexityExpr::Sum(terms)
        }
    }

    /// Serializes to text that re-parses to a canonically equal expression.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Sums need parentheses inside a product.
        if matches!(self, ComplexityExpr::Sum(_)) {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }

    fn fmt_power_base(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // `log(n)^2` parses back as (log n)^2, so logs need no parens.
            ComplexityExpr::Constant(_)
            | ComplexityExpr::Variable
            | ComplexityExpr::Log(_) => write!(f, "{self}"),
            _ => write!(f, "({self})"),
        }
    }
}

impl fmt::Display for ComplexityExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexityExpr::Constant(c) => write!(f, "{c}"),
            ComplexityExpr::Variable => write!(f, "n"),
            ComplexityExpr::Log(arg) => write!(f, "log({arg})"),
            ComplexityExpr::Power { base, exp } => {
                base.fmt_power_base(f)?;
                match exp {
                    Exponent::Num(q) => write!(f, "^{q}"),
                    Exponent::N => write!(f, "^n"),
                }
            }
            ComplexityExpr::Product(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    factor.fmt_factor(f)?;
                }
                Ok(())
            }
            ComplexityExpr::Sum(terms) => {
                for (i, term) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{term}")?;
                }
                Ok(())
            }
        }
    }
}
