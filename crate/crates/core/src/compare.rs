//! Pairwise comparison of two algorithms by A1-Score.
//!
//! Decision rule: when the time-space products θ·φ of the two algorithms
//! are *symbolically* different functions, the algorithm with the higher
//! A1-Score at the decision point wins; when the products are the same
//! function, the rule flips and the lower A1-Score wins. Product equality
//! is decided on exact canonical forms, never by comparing floats at a
//! sample point, because the branch flip is discontinuous.
//!
//! Two cross-checks ship with every verdict: a crossover scan that probes
//! whether the A1 ordering is stable over a range of `n` (the decision
//! rule itself is pointwise), and an independent symbolic oracle that
//! ranks by asymptotic product growth with the sum as tie-break. The
//! verdict reports whether the oracle agrees instead of silently
//! substituting its answer.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::canonical::{canonical_equal, canonicalize, growth_order, CanonicalForm};
use crate::eval::EvalError;
use crate::metric::{a1_score, A1Config, AlgorithmProfile};

/// Relative tolerance under which two A1-Scores count as a tie.
pub const A1_TIE_RELATIVE_TOLERANCE: f64 = 1e-12;

/// Which algorithm a comparison names as more efficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Winner {
    X,
    Y,
    Indistinguishable,
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Winner::X => write!(f, "X"),
            Winner::Y => write!(f, "Y"),
            Winner::Indistinguishable => write!(f, "indistinguishable"),
        }
    }
}

/// Which branch of the decision rule applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// Products differ symbolically: higher A1-Score wins.
    UnequalProduct,
    /// Products are the same function: lower A1-Score wins.
    EqualProduct,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::UnequalProduct => write!(f, "unequal-product"),
            Branch::EqualProduct => write!(f, "equal-product"),
        }
    }
}

/// Whether the canonical products matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductEquality {
    Symbolic,
    Unequal,
}

/// A maximal sampled interval of `n` over which the A1 ordering differs
/// from the ordering at the start of the scan.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Crossover {
    pub lo: f64,
    pub hi: f64,
}

/// Geometrically spaced sample range for scans; complexity functions vary
/// over orders of magnitude, so linear spacing would waste samples.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanRange {
    lo: f64,
    hi: f64,
    samples: usize,
}

/// Rejected scan-range parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvalidScanRange;

impl fmt::Display for InvalidScanRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "scan range requires 1 < lo < hi and at least 2 samples")
    }
}

impl core::error::Error for InvalidScanRange {}

impl ScanRange {
    pub fn new(lo: f64, hi: f64, samples: usize) -> Result<ScanRange, InvalidScanRange> {
        if lo.is_finite() && hi.is_finite() && lo > 1.0 && hi > lo && samples >= 2 {
            Ok(ScanRange { lo, hi, samples })
        } else {
            Err(InvalidScanRange)
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    /// The sample points: `lo * (hi/lo)^(i/(samples-1))`, endpoints exact.
    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let ratio = self.hi / self.lo;
        let last = self.samples - 1;
        (0..self.samples).map(move |i| {
            if i == 0 {
                self.lo
            } else if i == last {
                self.hi
            } else {
                self.lo * libm::pow(ratio, i as f64 / last as f64)
            }
        })
    }
}

impl Default for ScanRange {
    fn default() -> ScanRange {
        ScanRange {
            lo: 2.0,
            hi: 1000.0,
            samples: 512,
        }
    }
}

/// Outcome of a pairwise comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonVerdict {
    pub winner: Winner,
    pub branch: Branch,
    pub a1_x: f64,
    pub a1_y: f64,
    pub product_equality: ProductEquality,
    pub crossovers: Vec<Crossover>,
    pub oracle_winner: Winner,
    pub oracle_agrees: bool,
}

fn relative_tie(a: f64, b: f64) -> bool {
    (a - b).abs() <= A1_TIE_RELATIVE_TOLERANCE * a.abs().max(b.abs())
}

/// The decision rule as a function of the verdict fields alone, so a
/// winner can always be re-derived from a printed report.
pub fn decide_winner(branch: Branch, a1_x: f64, a1_y: f64) -> Winner {
    if relative_tie(a1_x, a1_y) {
        return Winner::Indistinguishable;
    }
    let x_higher = a1_x > a1_y;
    match branch {
        Branch::UnequalProduct => {
            if x_higher {
                Winner::X
            } else {
                Winner::Y
            }
        }
        Branch::EqualProduct => {
            if x_higher {
                Winner::Y
            } else {
                Winner::X
            }
        }
    }
}

fn product_form(profile: &AlgorithmProfile) -> CanonicalForm {
    canonicalize(&profile.time).mul(&canonicalize(&profile.space))
}

fn sum_form(profile: &AlgorithmProfile) -> CanonicalForm {
    canonicalize(&profile.time).add(&canonicalize(&profile.space))
}

/// Symbolic cross-check, independent of `n`, ξ and the log base: the
/// asymptotically smaller time-space product wins; on an exact tie the
/// asymptotically smaller sum wins; on a second tie the algorithms are
/// indistinguishable.
pub fn oracle_verdict(x: &AlgorithmProfile, y: &AlgorithmProfile) -> Winner {
    match growth_order(&product_form(x), &product_form(y)) {
        Ordering::Less => Winner::X,
        Ordering::Greater => Winner::Y,
        Ordering::Equal => match growth_order(&sum_form(x), &sum_form(y)) {
            Ordering::Less => Winner::X,
            Ordering::Greater => Winner::Y,
            Ordering::Equal => Winner::Indistinguishable,
        },
    }
}

fn diff_sign(a1_x: f64, a1_y: f64) -> i8 {
    if relative_tie(a1_x, a1_y) {
        0
    } else if a1_x > a1_y {
        1
    } else {
        -1
    }
}

/// Scans the A1 difference over the range and reports maximal sampled
/// intervals whose sign differs from the sign at the start of the scan.
/// Samples that fail to evaluate (overflow) are skipped as gaps.
pub fn scan_crossovers(
    x: &AlgorithmProfile,
    y: &AlgorithmProfile,
    config: &A1Config,
    scan: &ScanRange,
) -> Vec<Crossover> {
    let mut baseline: Option<i8> = None;
    let mut crossovers: Vec<Crossover> = Vec::new();
    let mut open: Option<Crossover> = None;
    for n in scan.points() {
        let (ax, ay) = match (a1_score(x, n, config), a1_score(y, n, config)) {
            (Ok(ax), Ok(ay)) => (ax, ay),
            _ => continue, // gap
        };
        let sign = diff_sign(ax, ay);
        let base = *baseline.get_or_insert(sign);
        if sign != base {
            open = Some(match open {
                Some(c) => Crossover { lo: c.lo, hi: n },
                None => Crossover { lo: n, hi: n },
            });
        } else if let Some(c) = open.take() {
            crossovers.push(c);
        }
    }
    if let Some(c) = open {
        crossovers.push(c);
    }
    crossovers
}

/// Runs the full decision procedure for a pair of algorithms at decision
/// point `n_star`, including the crossover scan and the oracle cross-check.
pub fn compare(
    x: &AlgorithmProfile,
    y: &AlgorithmProfile,
    n_star: f64,
    config: &A1Config,
    scan: &ScanRange,
) -> Result<ComparisonVerdict, EvalError> {
    let product_equality = if canonical_equal(&product_form(x), &product_form(y)) {
        ProductEquality::Symbolic
    } else {
        ProductEquality::Unequal
    };
    let branch = match product_equality {
        ProductEquality::Symbolic => Branch::EqualProduct,
        ProductEquality::Unequal => Branch::UnequalProduct,
    };
    let a1_x = a1_score(x, n_star, config)?;
    let a1_y = a1_score(y, n_star, config)?;
    let winner = decide_winner(branch, a1_x, a1_y);
    let crossovers = scan_crossovers(x, y, config, scan);
    let oracle_winner = oracle_verdict(x, y);
    Ok(ComparisonVerdict {
        winner,
        branch,
        a1_x,
        a1_y,
        product_equality,
        crossovers,
        oracle_winner,
        oracle_agrees: winner == oracle_winner,
    })
}
