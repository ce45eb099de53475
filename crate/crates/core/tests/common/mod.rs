//! Shared generators for the property suites.

#![allow(dead_code)]

use a1score::{ComplexityExpr, Exponent, Rational};
use proptest::prelude::*;
use proptest::sample::select;

/// Deterministic 64-bit generator for hand-rolled corpora.
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len())]
    }
}

pub fn coefficient() -> impl Strategy<Value = Rational> {
    (1i128..=12, 1i128..=4).prop_map(|(num, den)| Rational::new(num, den))
}

fn ratios(pairs: &[(i128, i128)]) -> Vec<Rational> {
    pairs.iter().map(|&(n, d)| Rational::new(n, d)).collect()
}

/// Exponents legal on `n`: any small rational, including negatives.
pub fn n_exponent() -> impl Strategy<Value = Rational> {
    select(ratios(&[
        (-2, 1),
        (-1, 1),
        (-1, 2),
        (1, 2),
        (1, 1),
        (3, 2),
        (2, 1),
        (3, 1),
        (4, 1),
    ]))
}

/// Exponents legal on `log n`.
pub fn log_exponent() -> impl Strategy<Value = Rational> {
    select(ratios(&[(-1, 1), (1, 2), (1, 1), (2, 1), (3, 1)]))
}

/// Positive `k` for `log(n^k)`.
pub fn log_arg_power() -> impl Strategy<Value = Rational> {
    select(ratios(&[(1, 2), (1, 1), (2, 1), (3, 1)]))
}

/// Bases for the exponential form `c^n` (all greater than 1).
pub fn exp_base() -> impl Strategy<Value = Rational> {
    select(ratios(&[(3, 2), (2, 1), (3, 1), (5, 2)]))
}

/// A random well-formed complexity expression. Fractional and negative
/// exponents only appear on `n` and `log n` bases, integer powers on
/// anything, mirroring what the parser admits.
pub fn expr_strategy() -> impl Strategy<Value = ComplexityExpr> {
    let leaf = prop_oneof![
        coefficient().prop_map(ComplexityExpr::Constant),
        Just(ComplexityExpr::Variable),
        Just(ComplexityExpr::log_n()),
        log_arg_power().prop_map(ComplexityExpr::log_pow),
        n_exponent().prop_map(|q| ComplexityExpr::power(ComplexityExpr::var(), q)),
        log_exponent().prop_map(|q| ComplexityExpr::power(ComplexityExpr::log_n(), q)),
        exp_base().prop_map(ComplexityExpr::exponential),
    ];
    leaf.prop_recursive(3, 16, 3, |inner| {
        prop_oneof![
            4 => prop::collection::vec(inner.clone(), 2..=3).prop_map(ComplexityExpr::Product),
            4 => prop::collection::vec(inner.clone(), 2..=3).prop_map(ComplexityExpr::Sum),
            1 => (inner, 2i128..=3).prop_map(|(e, k)| {
                ComplexityExpr::power(e, Rational::from_integer(k))
            }),
        ]
    })
}

/// Expressions guaranteed free of negative exponents (monotone in `n`).
pub fn monotone_expr_strategy() -> impl Strategy<Value = ComplexityExpr> {
    expr_strategy().prop_filter("no negative exponents", |e| !has_negative_exponent(e))
}

pub fn has_negative_exponent(expr: &ComplexityExpr) -> bool {
    match expr {
        ComplexityExpr::Constant(_) | ComplexityExpr::Variable => false,
        ComplexityExpr::Log(arg) => has_negative_exponent(arg),
        ComplexityExpr::Power { base, exp } => {
            let neg = matches!(exp, Exponent::Num(q) if q.is_negative());
            neg || has_negative_exponent(base)
        }
        ComplexityExpr::Product(children) | ComplexityExpr::Sum(children) => {
            children.iter().any(has_negative_exponent)
        }
    }
}

/// Builds `coeff * n^poly * (log n)^logx * base^n`, omitting unit factors.
pub fn monomial(
    coeff: Rational,
    poly: Rational,
    logx: Rational,
    base: Rational,
) -> ComplexityExpr {
    let mut factors = Vec::new();
    if !coeff.is_one() {
        factors.push(ComplexityExpr::Constant(coeff));
    }
    if poly == Rational::ONE {
        factors.push(ComplexityExpr::var());
    } else if !poly.is_zero() {
        factors.push(ComplexityExpr::power(ComplexityExpr::var(), poly));
    }
    if logx == Rational::ONE {
        factors.push(ComplexityExpr::log_n());
    } else if !logx.is_zero() {
        factors.push(ComplexityExpr::power(ComplexityExpr::log_n(), logx));
    }
    if !base.is_one() {
        factors.push(ComplexityExpr::exponential(base));
    }
    if factors.is_empty() {
        ComplexityExpr::Constant(coeff)
    } else {
        ComplexityExpr::product(factors)
    }
}

/// A single-term complexity expression with small positive exponents.
pub fn monomial_strategy() -> impl Strategy<Value = ComplexityExpr> {
    (
        coefficient(),
        select(ratios(&[(0, 1), (1, 2), (1, 1), (3, 2), (2, 1), (3, 1)])),
        select(ratios(&[(0, 1), (1, 1), (2, 1)])),
        select(ratios(&[(1, 1), (1, 1), (1, 1), (2, 1)])),
    )
        .prop_map(|(c, p, l, b)| monomial(c, p, l, b))
}

/// Restructures an expression without changing the function it denotes:
/// shuffles sum/product operand order and occasionally re-nests a pair.
pub fn scramble(expr: &ComplexityExpr, rng: &mut SplitMix) -> ComplexityExpr {
    match expr {
        ComplexityExpr::Constant(_) | ComplexityExpr::Variable => expr.clone(),
        ComplexityExpr::Log(arg) => ComplexityExpr::Log(Box::new(scramble(arg, rng))),
        ComplexityExpr::Power { base, exp } => ComplexityExpr::Power {
            base: Box::new(scramble(base, rng)),
            exp: *exp,
        },
        ComplexityExpr::Product(children) => {
            ComplexityExpr::Product(scramble_children(children, rng, true))
        }
        ComplexityExpr::Sum(children) => {
            ComplexityExpr::Sum(scramble_children(children, rng, false))
        }
    }
}

fn scramble_children(
    children: &[ComplexityExpr],
    rng: &mut SplitMix,
    product: bool,
) -> Vec<ComplexityExpr> {
    let mut out: Vec<ComplexityExpr> = children.iter().map(|c| scramble(c, rng)).collect();
    // Fisher-Yates.
    for i in (1..out.len()).rev() {
        out.swap(i, rng.below(i + 1));
    }
    if out.len() >= 3 && rng.below(2) == 0 {
        let tail = out.split_off(2);
        let pair = if product {
            ComplexityExpr::Product(out)
        } else {
            ComplexityExpr::Sum(out)
        };
        let mut nested = vec![pair];
        nested.extend(tail);
        return nested;
    }
    out
}
