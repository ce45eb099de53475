//! Numeric evaluation of complexity expressions at a concrete `n`.
//!
//! Evaluation uses IEEE 754 double precision throughout. `n` is a real
//! strictly greater than 1 (at `n = 1` every `log n` factor vanishes and
//! the A1 denominator with it), and all logarithms use the configured
//! base, 2 by default.

use core::fmt;

use crate::expr::{ComplexityExpr, Exponent};

/// Evaluation parameters: the logarithm base (must exceed 1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalConfig {
    log_base: f64,
}

impl EvalConfig {
    /// Panics unless `log_base` is finite and greater than 1.
    pub fn new(log_base: f64) -> EvalConfig {
        assert!(
            log_base.is_finite() && log_base > 1.0,
            "log base must be a finite real greater than 1"
        );
        EvalConfig { log_base }
    }

    pub fn log_base(&self) -> f64 {
        self.log_base
    }

    /// Logarithm of `x` in the configured base.
    pub fn log(&self, x: f64) -> f64 {
        libm::log(x) / libm::log(self.log_base)
    }
}

impl Default for EvalConfig {
    fn default() -> EvalConfig {
        EvalConfig { log_base: 2.0 }
    }
}

/// Evaluation failure.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EvalError {
    /// `n` outside the domain (must be a finite real strictly greater than 1).
    Domain { n: f64 },
    /// The value left the representable double-precision range.
    Overflow,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Domain { n } => {
                write!(f, "n must be a finite real greater than 1 (got {n})")
            }
            EvalError::Overflow => {
                write!(f, "value not representable in double precision")
            }
        }
    }
}

impl core::error::Error for EvalError {}

fn eval_node(expr: &ComplexityExpr, n: f64, config: &EvalConfig) -> f64 {
    match expr {
        ComplexityExpr::Constant(c) => c.to_f64(),
        ComplexityExpr::Variable => n,
        ComplexityExpr::Log(arg) => config.log(eval_node(arg, n, config)),
        ComplexityExpr::Power { base, exp } => {
            let b = eval_node(base, n, config);
            match exp {
                Exponent::Num(q) => libm::pow(b, q.to_f64()),
                Exponent::N => libm::pow(b, n),
            }
        }
        ComplexityExpr::Product(factors) => factors
            .iter()
            .map(|factor| eval_node(factor, n, config))
            .product(),
        ComplexityExpr::Sum(terms) => terms.iter().map(|term| eval_node(term, n, config)).sum(),
    }
}

/// Evaluates a well-formed expression at `n > 1`.
///
/// The result is strictly positive and finite; values that overflow (or
/// underflow to zero) report [`EvalError::Overflow`].
pub fn evaluate(expr: &ComplexityExpr, n: f64, config: &EvalConfig) -> Result<f64, EvalError> {
    if !n.is_finite() || n <= 1.0 {
        return Err(EvalError::Domain { n });
    }
    let v = eval_node(expr, n, config);
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(EvalError::Overflow)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn eval(text: &str, n: f64) -> Result<f64, EvalError> {
        evaluate(&parse(text).unwrap(), n, &EvalConfig::default())
    }

    #[test]
    fn identity_function() {
        assert_eq!(eval("n", 5.0).unwrap(), 5.0);
    }

    #[test]
    fn n_log_n_at_three_base_two() {
        // 3 * log2(3), frozen from an arbitrary-precision side computation.
        let expected = 4.754887502163469;
        let got = eval("n log n", 3.0).unwrap();
        assert!((got - expected).abs() / expected < 1e-12, "got {got}");
    }

    #[test]
    fn exact_power_of_two() {
        assert_eq!(eval("2^n", 10.0).unwrap(), 1024.0);
    }

    #[test]
    fn domain_errors_below_and_at_one() {
        assert_eq!(eval("n", 1.0), Err(EvalError::Domain { n: 1.0 }));
        assert_eq!(eval("n", 0.5), Err(EvalError::Domain { n: 0.5 }));
        assert!(matches!(eval("n", f64::NAN), Err(EvalError::Domain { .. })));
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(eval("2^n", 5000.0), Err(EvalError::Overflow));
    }

    #[test]
    fn log_base_is_configurable() {
        let e = parse("log n").unwrap();
        let got = evaluate(&e, 100.0, &EvalConfig::new(10.0)).unwrap();
        assert!((got - 2.0).abs() < 1e-12);
    }

    #[test]
    fn integer_inputs_widen_to_reals() {
        let got = eval("n^1/2", 2.25).unwrap();
        assert!((got - 1.5).abs() < 1e-12);
    }
}
