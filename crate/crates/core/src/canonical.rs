//! Exact canonical normal form: a sum of monomial terms
//! `coeff * n^polyExp * (log n)^logExp * expBase^n`.
//!
//! Products distribute over sums, like terms merge by summing coefficients,
//! `log(n^k)` rewrites to `k * log n`, and exponential bases multiply
//! (`2^n * 3^n = 6^n`). All arithmetic is exact rational, so equality of
//! two forms is a decidable field-wise comparison, never a float judgment.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::eval::EvalConfig;
use crate::expr::{ComplexityExpr, Exponent};
use crate::rational::Rational;

/// One canonical monomial. `exp_base == 1` means no exponential factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonicalTerm {
    pub coeff: Rational,
    pub poly_exp: Rational,
    pub log_exp: Rational,
    pub exp_base: Rational,
}

impl CanonicalTerm {
    /// Growth key: exponential base dominates, then polynomial degree,
    /// then logarithmic degree.
    fn key(&self) -> (Rational, Rational, Rational) {
        (self.exp_base, self.poly_exp, self.log_exp)
    }

    pub fn constant(coeff: Rational) -> CanonicalTerm {
        CanonicalTerm {
            coeff,
            poly_exp: Rational::ZERO,
            log_exp: Rational::ZERO,
            exp_base: Rational::ONE,
        }
    }

    fn mul(&self, other: &CanonicalTerm) -> CanonicalTerm {
        CanonicalTerm {
            coeff: self.coeff * other.coeff,
            poly_exp: self.poly_exp + other.poly_exp,
            log_exp: self.log_exp + other.log_exp,
            exp_base: self.exp_base * other.exp_base,
        }
    }

    /// Evaluates `coeff * n^a * (log n)^b * e^n` at a concrete point.
    pub fn evaluate(&self, n: f64, config: &EvalConfig) -> f64 {
        let mut v = self.coeff.to_f64();
        if !self.poly_exp.is_zero() {
            v *= libm::pow(n, self.poly_exp.to_f64());
        }
        if !self.log_exp.is_zero() {
            v *= libm::pow(config.log(n), self.log_exp.to_f64());
        }
        if !self.exp_base.is_one() {
            v *= libm::pow(self.exp_base.to_f64(), n);
        }
        v
    }
}

impl fmt::Display for CanonicalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} * n^{} * log(n)^{} * {}^n",
            self.coeff, self.poly_exp, self.log_exp, self.exp_base
        )
    }
}

/// Normal form of a complexity expression: merged terms sorted by growth
/// key. No two terms share a `(poly_exp, log_exp, exp_base)` triple and
/// every coefficient is strictly positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    terms: Vec<CanonicalTerm>,
}

impl CanonicalForm {
    fn from_map(map: BTreeMap<(Rational, Rational, Rational), Rational>) -> CanonicalForm {
        let terms = map
            .into_iter()
            .map(|((exp_base, poly_exp, log_exp), coeff)| CanonicalTerm {
                coeff,
                poly_exp,
                log_exp,
                exp_base,
            })
            .collect();
        CanonicalForm { terms }
    }

    fn single(term: CanonicalTerm) -> CanonicalForm {
        CanonicalForm {
            terms: alloc::vec![term],
        }
    }

    /// Terms in ascending growth order; the last one dominates.
    pub fn terms(&self) -> &[CanonicalTerm] {
        &self.terms
    }

    /// The asymptotically dominant term.
    pub fn leading_term(&self) -> &CanonicalTerm {
        self.terms.last().expect("canonical form is never empty")
    }

    pub fn add(&self, other: &CanonicalForm) -> CanonicalForm {
        let mut map = BTreeMap::new();
        for term in self.terms.iter().chain(other.terms.iter()) {
            let entry = map.entry(term.key()).or_insert(Rational::ZERO);
            *entry = *entry + term.coeff;
        }
        CanonicalForm::from_map(map)
    }

    pub fn mul(&self, other: &CanonicalForm) -> CanonicalForm {
        let mut map = BTreeMap::new();
        for a in &self.terms {
            for b in &other.terms {
                let prod = a.mul(b);
                let entry = map.entry(prod.key()).or_insert(Rational::ZERO);
                *entry = *entry + prod.coeff;
            }
        }
        CanonicalForm::from_map(map)
    }

    fn pow(&self, q: Rational) -> CanonicalForm {
        if q.is_integer() && !q.is_negative() {
            let mut exp = q.numerator();
            let mut acc = CanonicalForm::single(CanonicalTerm::constant(Rational::ONE));
            let mut base = self.clone();
            while exp > 0 {
                if exp & 1 == 1 {
                    acc = acc.mul(&base);
                }
                exp >>= 1;
                if exp > 0 {
                    base = base.mul(&base);
                }
            }
            acc
        } else {
            // Non-integer or negative exponents reach here only on single
            // terms; the parser rejects everything else.
            assert!(
                self.terms.len() == 1,
                "power {q} of a multi-term form is not canonicalizable"
            );
            let t = self.terms[0];
            let coeff = if q.is_integer() {
                t.coeff.pow_i32(q.numerator() as i32)
            } else {
                assert!(
                    t.coeff.is_one() && t.exp_base.is_one(),
                    "fractional power of a non-monomial term"
                );
                Rational::ONE
            };
            let exp_base = if q.is_integer() {
                t.exp_base.pow_i32(q.numerator() as i32)
            } else {
                Rational::ONE
            };
            CanonicalForm::single(CanonicalTerm {
                coeff,
                poly_exp: t.poly_exp * q,
                log_exp: t.log_exp * q,
                exp_base,
            })
        }
    }

    /// Term-wise numeric evaluation, used to cross-check the AST evaluator.
    pub fn evaluate(&self, n: f64, config: &EvalConfig) -> f64 {
        self.terms.iter().map(|t| t.evaluate(n, config)).sum()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{term}")?;
        }
        Ok(())
    }
}

/// Reduces a well-formed expression to its canonical form.
///
/// The result is unique for a given mathematical function within the
/// grammar fragment. Panics on trees that violate the AST invariants
/// (anything produced by [`crate::parse::parse`] is safe).
pub fn canonicalize(expr: &ComplexityExpr) -> CanonicalForm {
    match expr {
        ComplexityExpr::Constant(c) => {
            assert!(c.is_positive(), "non-positive constant in expression");
            CanonicalForm::single(CanonicalTerm::constant(*c))
        }
        ComplexityExpr::Variable => CanonicalForm::single(CanonicalTerm {
            coeff: Rational::ONE,
            poly_exp: Rational::ONE,
            log_exp: Rational::ZERO,
            exp_base: Rational::ONE,
        }),
        ComplexityExpr::Log(arg) => {
            // log(n^k) = k * log n
            let k = match arg.as_ref() {
                ComplexityExpr::Variable => Rational::ONE,
                ComplexityExpr::Power {
                    base,
                    exp: Exponent::Num(k),
                } if matches!(base.as_ref(), ComplexityExpr::Variable) => *k,
                other => panic!("unsupported log argument {other:?}"),
            };
            CanonicalForm::single(CanonicalTerm {
                coeff: k,
                poly_exp: Rational::ZERO,
                log_exp: Rational::ONE,
                exp_base: Rational::ONE,
            })
        }
        ComplexityExpr::Power { base, exp } => match exp {
            Exponent::Num(q) => canonicalize(base).pow(*q),
            Exponent::N => match base.as_ref() {
                ComplexityExpr::Constant(c) => {
                    assert!(
                        *c > Rational::ONE,
                        "exponential base must be greater than 1"
                    );
                    CanonicalForm::single(CanonicalTerm {
                        coeff: Rational::ONE,
                        poly_exp: Rational::ZERO,
                        log_exp: Rational::ZERO,
                        exp_base: *c,
                    })
                }
                other => panic!("unsupported exponent n on base {other:?}"),
            },
        },
        ComplexityExpr::Product(factors) => factors
            .iter()
            .map(canonicalize)
            .reduce(|a, b| a.mul(&b))
            .unwrap_or_else(|| CanonicalForm::single(CanonicalTerm::constant(Rational::ONE))),
        ComplexityExpr::Sum(terms) => terms
            .iter()
            .map(canonicalize)
            .reduce(|a, b| a.add(&b))
            .unwrap_or_else(|| panic!("empty sum has no canonical form")),
    }
}

/// Exact symbolic equality: identical sorted term lists with identical
/// rational coefficients.
pub fn canonical_equal(a: &CanonicalForm, b: &CanonicalForm) -> bool {
    a == b
}

/// Asymptotic ordering of two forms by their leading terms, compared
/// lexicographically on `(exp_base, poly_exp, log_exp)` and then on the
/// coefficient. `Equal` only when the leading terms match exactly.
pub fn growth_order(a: &CanonicalForm, b: &CanonicalForm) -> Ordering {
    let la = a.leading_term();
    let lb = b.leading_term();
    la.key()
        .cmp(&lb.key())
        .then(la.coeff.cmp(&lb.coeff))
}
