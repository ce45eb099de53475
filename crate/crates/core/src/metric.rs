//! The A1-Score of a single algorithm.
//!
//! For time complexity θ(n) and space complexity φ(n),
//!
//! ```text
//! A1(θ(n), φ(n)) = ξ * (θ(n) + φ(n)) / (θ(n) * φ(n))
//! ```
//!
//! with ξ a positive scaling factor (default 1). Algebraically this is
//! ξ * (1/θ(n) + 1/φ(n)), so equal complexities collapse to 2ξ/θ(n).

use alloc::string::String;

use crate::eval::{evaluate, EvalConfig, EvalError};
use crate::expr::ComplexityExpr;

/// An algorithm under comparison: a name plus its time and space
/// complexity expressions.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgorithmProfile {
    pub name: String,
    pub time: ComplexityExpr,
    pub space: ComplexityExpr,
}

impl AlgorithmProfile {
    pub fn new(
        name: impl Into<String>,
        time: ComplexityExpr,
        space: ComplexityExpr,
    ) -> AlgorithmProfile {
        AlgorithmProfile {
            name: name.into(),
            time,
            space,
        }
    }
}

/// A1 evaluation parameters: the scaling factor ξ and the evaluator
/// configuration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct A1Config {
    xi: f64,
    pub eval: EvalConfig,
}

impl A1Config {
    /// Panics unless `xi` is finite and strictly positive.
    pub fn new(xi: f64, eval: EvalConfig) -> A1Config {
        assert!(
            xi.is_finite() && xi > 0.0,
            "scaling factor must be a finite real greater than 0"
        );
        A1Config { xi, eval }
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }
}

impl Default for A1Config {
    fn default() -> A1Config {
        A1Config {
            xi: 1.0,
            eval: EvalConfig::default(),
        }
    }
}

/// The pieces the A1-Score is built from at a fixed `n`: the sum
/// θ(n) + φ(n), the product θ(n) * φ(n), and the score itself.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct A1Breakdown {
    pub sum: f64,
    pub product: f64,
    pub score: f64,
}

/// Evaluates θ(n) and φ(n) and returns their sum, product and A1-Score.
pub fn a1_components(
    profile: &AlgorithmProfile,
    n: f64,
    config: &A1Config,
) -> Result<A1Breakdown, EvalError> {
    let time = evaluate(&profile.time, n, &config.eval)?;
    let space = evaluate(&profile.space, n, &config.eval)?;
    let sum = time + space;
    let product = time * space;
    let score = config.xi * sum / product;
    if !(sum.is_finite() && product.is_finite() && score.is_finite() && score > 0.0) {
        return Err(EvalError::Overflow);
    }
    Ok(A1Breakdown {
        sum,
        product,
        score,
    })
}

/// The A1-Score ξ * (θ(n) + φ(n)) / (θ(n) * φ(n)) at `n > 1`.
pub fn a1_score(
    profile: &AlgorithmProfile,
    n: f64,
    config: &A1Config,
) -> Result<f64, EvalError> {
    a1_components(profile, n, config).map(|c| c.score)
}
