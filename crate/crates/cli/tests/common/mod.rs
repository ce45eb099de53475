//! Shared helpers for the CLI integration and acceptance suites.

#![allow(dead_code)]

use a1score::{ComplexityExpr, Rational};

/// Deterministic 64-bit generator so corpora are reproducible.
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

fn ratio(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

/// Random well-formed complexity expression, depth-bounded. Mirrors the
/// fragment the parser admits: fractional and negative exponents only on
/// `n` and `log n`, integer powers anywhere, exponential bases > 1.
pub fn gen_expr(rng: &mut SplitMix, depth: usize) -> ComplexityExpr {
    let leaf = depth == 0 || rng.below(3) == 0;
    if leaf {
        match rng.below(7) {
            0 => ComplexityExpr::Constant(ratio(1 + rng.below(9) as i128, 1 + rng.below(3) as i128)),
            1 => ComplexityExpr::var(),
            2 => ComplexityExpr::log_n(),
            3 => {
                let ks = [ratio(1, 2), ratio(2, 1), ratio(3, 1)];
                ComplexityExpr::log_pow(*rng.pick(&ks))
            }
            4 => {
                let qs = [
                    ratio(-2, 1),
                    ratio(-1, 1),
                    ratio(-1, 2),
                    ratio(1, 2),
                    ratio(3, 2),
                    ratio(2, 1),
                    ratio(3, 1),
                ];
                ComplexityExpr::power(ComplexityExpr::var(), *rng.pick(&qs))
            }
            5 => {
                let qs = [ratio(-1, 1), ratio(1, 2), ratio(2, 1), ratio(3, 1)];
                ComplexityExpr::power(ComplexityExpr::log_n(), *rng.pick(&qs))
            }
            _ => {
                let bases = [ratio(3, 2), ratio(2, 1), ratio(3, 1)];
                ComplexityExpr::exponential(*rng.pick(&bases))
            }
        }
    } else {
        match rng.below(5) {
            0 | 1 => {
                let len = 2 + rng.below(2);
                ComplexityExpr::Product((0..len).map(|_| gen_expr(rng, depth - 1)).collect())
            }
            2 | 3 => {
                let len = 2 + rng.below(2);
                ComplexityExpr::Sum((0..len).map(|_| gen_expr(rng, depth - 1)).collect())
            }
            _ => ComplexityExpr::power(
                gen_expr(rng, depth - 1),
                ratio(2 + rng.below(2) as i128, 1),
            ),
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

/// Restructures an expression without changing the function: shuffles
/// operand order and occasionally re-nests a pair.
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

/// Minimal XML well-formedness check: matching tag nesting, quoted
/// attribute values, no stray angle brackets.
pub fn xml_well_formed(text: &str) -> Result<(), String> {
    let chars: Vec<char> = text.chars().collect();
    let mut stack: Vec<String> = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        match chars[i] {
            '<' => {
                let start = i + 1;
                let mut j = start;
                let mut in_quote = false;
                while j < chars.len() {
                    match chars[j] {
                        '"' => in_quote = !in_quote,
                        '<' if !in_quote => {
                            return Err(format!("nested '<' inside tag at char {j}"))
                        }
                        '>' if !in_quote => break,
                        _ => {}
                    }
                    j += 1;
                }
                if j == chars.len() {
                    return Err("unterminated tag".to_string());
                }
                if in_quote {
                    return Err(format!("unterminated attribute quote before char {j}"));
                }
                let body: String = chars[start..j].iter().collect();
                if body.is_empty() {
                    return Err(format!("empty tag at char {start}"));
                }
                if body.starts_with('?') || body.starts_with('!') {
                    // Declaration or comment; not produced here but legal.
                } else if let Some(name) = body.strip_prefix('/') {
                    match stack.pop() {
                        Some(open) if open == name.trim() => {}
                        Some(open) => {
                            return Err(format!("mismatched </{}> against <{open}>", name.trim()))
                        }
                        None => return Err(format!("closing </{}> with nothing open", name.trim())),
                    }
                } else {
                    let self_closing = body.ends_with('/');
                    let body = body.trim_end_matches('/');
                    let name: String = body
                        .chars()
                        .take_while(|c| !c.is_whitespace())
                        .collect();
                    if name.is_empty()
                        || !name
                            .chars()
                            .all(|c| c.is_ascii_alphanumeric() || c == '-' || c == ':')
                    {
                        return Err(format!("bad tag name '{name}'"));
                    }
                    let quotes = body.chars().filter(|&c| c == '"').count();
                    if quotes % 2 != 0 {
                        return Err(format!("odd number of quotes in tag <{name}>"));
                    }
                    if !self_closing {
                        stack.push(name);
                    }
                }
                i = j + 1;
            }
            '>' => return Err(format!("stray '>' at char {i}")),
            _ => i += 1,
        }
    }
    if stack.is_empty() {
        Ok(())
    } else {
        Err(format!("unclosed tags: {stack:?}"))
    }
}
