//! Text grammar and parser for complexity expressions.
//!
//! ```text
//! expr     = term, { "+", term } ;
//! term     = factor, { ( "*" | gap ), factor } ;      (* gap = juxtaposition *)
//! factor   = primary, [ "^", exponent ] ;
//! primary  = number | "n" | logform | "sqrt" "(" "n" ")" | "(" expr ")" | "O" "(" expr ")" ;
//! logform  = "log", ( "n" | "(", "n", [ "^", number ], ")" ) ;
//! exponent = [ "-" ], number | "n" ;
//! number   = decimal or ratio "p/q", strictly positive ;
//! ```
//!
//! Juxtaposition (`n log n`) multiplies, `log n` is sugar for `log(n)`,
//! `sqrt(n)` is an alias for `n^1/2`, and `O(...)` is a cosmetic wrapper
//! that is stripped. Constants are preserved: `2n` and `n` are different
//! functions here. Forms outside the grammar (`n^n`, nested logs, logs of
//! sums, non-positive constants, powers that leave the monomial fragment)
//! are rejected with an error naming the construct.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::expr::{ComplexityExpr, Exponent};
use crate::rational::Rational;

/// Parse failure. Positions are 1-based character offsets into the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    /// Input does not match the grammar.
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },
    /// Grammatically shaped but unsupported; `construct` names the offender.
    Semantic { pos: usize, construct: String },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax {
                pos,
                expected,
                found,
            } => write!(
                f,
                "syntax error at position {pos}: expected {expected}, found {found}"
            ),
            ParseError::Semantic { pos, construct } => {
                write!(f, "unsupported construct at position {pos}: {construct}")
            }
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number(Rational),
    N,
    Log,
    Sqrt,
    BigO,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(r) => format!("number {r}"),
            Tok::N => "'n'".to_string(),
            Tok::Log => "'log'".to_string(),
            Tok::Sqrt => "'sqrt'".to_string(),
            Tok::BigO => "'O'".to_string(),
            Tok::Plus => "'+'".to_string(),
            Tok::Minus => "'-'".to_string(),
            Tok::Star => "'*'".to_string(),
            Tok::Caret => "'^'".to_string(),
            Tok::LParen => "'('".to_string(),
            Tok::RParen => "')'".to_string(),
        }
    }

    fn starts_primary(&self) -> bool {
        matches!(
            self,
            Tok::Number(_) | Tok::N | Tok::Log | Tok::Sqrt | Tok::BigO | Tok::LParen
        )
    }
}

struct Spanned {
    tok: Tok,
    pos: usize,
}

fn syntax(pos: usize, expected: &str, found: &str) -> ParseError {
    ParseError::Syntax {
        pos,
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

fn semantic(pos: usize, construct: impl Into<String>) -> ParseError {
    ParseError::Semantic {
        pos,
        construct: construct.into(),
    }
}

fn lex(input: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let pos = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                i += 1;
            }
            '+' => {
                out.push(Spanned { tok: Tok::Plus, pos });
                i += 1;
            }
            '-' => {
                out.push(Spanned { tok: Tok::Minus, pos });
                i += 1;
            }
            '*' => {
                out.push(Spanned { tok: Tok::Star, pos });
                i += 1;
            }
            '^' => {
                out.push(Spanned { tok: Tok::Caret, pos });
                i += 1;
            }
            '(' => {
                out.push(Spanned { tok: Tok::LParen, pos });
                i += 1;
            }
            ')' => {
                out.push(Spanned { tok: Tok::RParen, pos });
                i += 1;
            }
            '0'..='9' => {
                let (value, next) = lex_number(&chars, i)?;
                out.push(Spanned {
                    tok: Tok::Number(value),
                    pos,
                });
                i = next;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let tok = match word.as_str() {
                    "n" => Tok::N,
                    "log" => Tok::Log,
                    "sqrt" => Tok::Sqrt,
                    "O" => Tok::BigO,
                    _ => {
                        return Err(syntax(
                            pos,
                            "'n', 'log', 'sqrt' or 'O'",
                            &format!("unknown symbol '{word}'"),
                        ))
                    }
                };
                out.push(Spanned { tok, pos });
            }
            other => {
                return Err(syntax(
                    pos,
                    "a number, 'n', 'log', 'sqrt', 'O', '+', '*', '^' or parentheses",
                    &format!("character '{other}'"),
                ))
            }
        }
    }
    Ok(out)
}

/// Lexes `digits`, `digits.digits` or `digits/digits` starting at `i`.
fn lex_number(chars: &[char], i: usize) -> Result<(Rational, usize), ParseError> {
    let pos = i + 1;
    let mut j = i;
    let mut int_part: i128 = 0;
    while j < chars.len() && chars[j].is_ascii_digit() {
        int_part = int_part
            .checked_mul(10)
            .and_then(|v| v.checked_add((chars[j] as u8 - b'0') as i128))
            .ok_or_else(|| semantic(pos, "number literal too large"))?;
        j += 1;
    }
    let value = if j < chars.len() && chars[j] == '.' {
        j += 1;
        let frac_start = j;
        let mut frac: i128 = 0;
        let mut scale: i128 = 1;
        while j < chars.len() && chars[j].is_ascii_digit() {
            frac = frac
                .checked_mul(10)
                .and_then(|v| v.checked_add((chars[j] as u8 - b'0') as i128))
                .ok_or_else(|| semantic(pos, "number literal too large"))?;
            scale = scale
                .checked_mul(10)
                .ok_or_else(|| semantic(pos, "number literal too large"))?;
            j += 1;
        }
        if j == frac_start {
            return Err(syntax(j + 1, "digits after '.'", "end of number"));
        }
        Rational::new(int_part * scale + frac, scale)
    } else if j < chars.len() && chars[j] == '/' && j + 1 < chars.len() && chars[j + 1].is_ascii_digit()
    {
        j += 1;
        let mut den: i128 = 0;
        while j < chars.len() && chars[j].is_ascii_digit() {
            den = den
                .checked_mul(10)
                .and_then(|v| v.checked_add((chars[j] as u8 - b'0') as i128))
                .ok_or_else(|| semantic(pos, "number literal too large"))?;
            j += 1;
        }
        if den == 0 {
            return Err(semantic(pos, "ratio with zero denominator"));
        }
        Rational::new(int_part, den)
    } else {
        Rational::from_integer(int_part)
    };
    if !value.is_positive() {
        return Err(semantic(pos, format!("non-positive constant {value}")));
    }
    Ok((value, j))
}

struct Parser {
    toks: Vec<Spanned>,
    idx: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|s| &s.tok)
    }

    fn peek_pos(&self) -> usize {
        self.toks
            .get(self.idx)
            .map(|s| s.pos)
            .unwrap_or(self.len + 1)
    }

    fn advance(&mut self) -> Option<&Spanned> {
        let s = self.toks.get(self.idx);
        if s.is_some() {
            self.idx += 1;
        }
        s
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(tok) => tok.describe(),
            None => "end of input".to_string(),
        }
    }

    fn expect(&mut self, want: &Tok, expected: &str) -> Result<usize, ParseError> {
        let pos = self.peek_pos();
        match self.peek() {
            Some(tok) if tok == want => {
                self.idx += 1;
                Ok(pos)
            }
            _ => Err(syntax(pos, expected, &self.found())),
        }
    }

    fn parse_expr(&mut self) -> Result<ComplexityExpr, ParseError> {
        let mut terms = alloc::vec![self.parse_term()?];
        while matches!(self.peek(), Some(Tok::Plus)) {
            self.advance();
            terms.push(self.parse_term()?);
        }
        Ok(ComplexityExpr::sum(terms))
    }

    fn parse_term(&mut self) -> Result<ComplexityExpr, ParseError> {
        let mut factors = alloc::vec![self.parse_factor()?];
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.advance();
                    factors.push(self.parse_factor()?);
                }
                // Juxtaposition: any token that can begin a primary multiplies.
                Some(tok) if tok.starts_primary() => {
                    factors.push(self.parse_factor()?);
                }
                _ => break,
            }
        }
        Ok(ComplexityExpr::product(factors))
    }

    fn parse_factor(&mut self) -> Result<ComplexityExpr, ParseError> {
        let base = self.parse_primary()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            let caret_pos = self.peek_pos();
            self.advance();
            self.parse_exponent(base, caret_pos)
        } else {
            Ok(base)
        }
    }

    fn parse_primary(&mut self) -> Result<ComplexityExpr, ParseError> {
        let pos = self.peek_pos();
        match self.peek().cloned() {
            Some(Tok::Number(value)) => {
                self.advance();
                Ok(ComplexityExpr::Constant(value))
            }
            Some(Tok::N) => {
                self.advance();
                Ok(ComplexityExpr::Variable)
            }
            Some(Tok::Log) => {
                self.advance();
                self.parse_log(pos)
            }
            Some(Tok::Sqrt) => {
                self.advance();
                self.expect(&Tok::LParen, "'(' after sqrt")?;
                self.expect(&Tok::N, "'n' inside sqrt(...)")?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(ComplexityExpr::power(
                    ComplexityExpr::Variable,
                    Rational::new(1, 2),
                ))
            }
            Some(Tok::BigO) => {
                self.advance();
                self.expect(&Tok::LParen, "'(' after O")?;
                let inner = self.parse_expr()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(Tok::LParen) => {
                self.advance();
                let inner = self.parse_expr()?;
                self.expect(&Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(syntax(
                pos,
                "a number, 'n', 'log', 'sqrt', 'O' or '('",
                &self.found(),
            )),
        }
    }

    fn parse_log(&mut self, log_pos: usize) -> Result<ComplexityExpr, ParseError> {
        match self.peek() {
            // `log n` sugar.
            Some(Tok::N) => {
                self.advance();
                Ok(ComplexityExpr::log_n())
            }
            Some(Tok::LParen) => {
                self.advance();
                let arg_pos = self.peek_pos();
                let arg = self.parse_expr()?;
                self.expect(&Tok::RParen, "')'")?;
                validate_log_argument(&arg, arg_pos)?;
                Ok(ComplexityExpr::Log(alloc::boxed::Box::new(arg)))
            }
            _ => Err(syntax(
                log_pos,
                "'n' or '(' after 'log'",
                &self.found(),
            )),
        }
    }

    fn parse_exponent(
        &mut self,
        base: ComplexityExpr,
        caret_pos: usize,
    ) -> Result<ComplexityExpr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Minus) => {
                self.advance();
                match self.peek().cloned() {
                    Some(Tok::Number(value)) => {
                        self.advance();
                        build_power(base, -value, caret_pos)
                    }
                    _ => Err(syntax(self.peek_pos(), "a number after '-'", &self.found())),
                }
            }
            Some(Tok::Number(value)) => {
                self.advance();
                build_power(base, value, caret_pos)
            }
            Some(Tok::N) => {
                self.advance();
                build_exponential(base, caret_pos)
            }
            _ => Err(syntax(
                self.peek_pos(),
                "a number or 'n' after '^'",
                &self.found(),
            )),
        }
    }
}

/// What a power base contains, for deciding which exponents keep the
/// expression inside the sum-of-monomials fragment.
#[derive(Clone, Copy, Default)]
struct BaseShape {
    has_sum: bool,
    has_const: bool,
    has_exp: bool,
}

fn shape_of(expr: &ComplexityExpr) -> BaseShape {
    let mut shape = BaseShape::default();
    collect_shape(expr, &mut shape);
    shape
}

fn collect_shape(expr: &ComplexityExpr, shape: &mut BaseShape) {
    match expr {
        ComplexityExpr::Constant(_) => shape.has_const = true,
        ComplexityExpr::Variable => {}
        ComplexityExpr::Log(arg) => {
            // log(n^k) rewrites to k*log n, a constant coefficient.
            if let ComplexityExpr::Power {
                exp: Exponent::Num(k),
                ..
            } = arg.as_ref()
            {
                if !k.is_one() {
                    shape.has_const = true;
                }
            }
        }
        ComplexityExpr::Power { base, exp } => match exp {
            Exponent::Num(_) => collect_shape(base, shape),
            Exponent::N => shape.has_exp = true,
        },
        ComplexityExpr::Product(factors) => {
            for factor in factors {
                collect_shape(factor, shape);
            }
        }
        ComplexityExpr::Sum(terms) => {
            shape.has_sum = true;
            for term in terms {
                collect_shape(term, shape);
            }
        }
    }
}

fn build_power(
    base: ComplexityExpr,
    q: Rational,
    pos: usize,
) -> Result<ComplexityExpr, ParseError> {
    if q.is_zero() {
        return Err(semantic(pos, "zero exponent"));
    }
    let shape = shape_of(&base);
    if !q.is_integer() {
        if shape.has_sum {
            return Err(semantic(pos, "fractional power of a sum"));
        }
        if shape.has_exp {
            return Err(semantic(pos, "fractional power of an exponential"));
        }
        if shape.has_const {
            return Err(semantic(pos, "fractional power of a constant"));
        }
    } else if q.is_negative() {
        if shape.has_sum {
            return Err(semantic(pos, "negative power of a sum"));
        }
        if shape.has_exp {
            return Err(semantic(pos, "negative power of an exponential"));
        }
    }
    Ok(ComplexityExpr::power(base, q))
}

fn build_exponential(
    base: ComplexityExpr,
    pos: usize,
) -> Result<ComplexityExpr, ParseError> {
    match base {
        ComplexityExpr::Constant(c) => {
            if c <= Rational::ONE {
                Err(semantic(
                    pos,
                    format!("exponential base {c} must be greater than 1"),
                ))
            } else {
                Ok(ComplexityExpr::exponential(c))
            }
        }
        // n^n and friends.
        _ => Err(semantic(pos, "unsupported exponent")),
    }
}

fn validate_log_argument(arg: &ComplexityExpr, pos: usize) -> Result<(), ParseError> {
    match arg {
        ComplexityExpr::Variable => Ok(()),
        ComplexityExpr::Power {
            base,
            exp: Exponent::Num(k),
        } if matches!(base.as_ref(), ComplexityExpr::Variable) => {
            if k.is_positive() {
                Ok(())
            } else {
                Err(semantic(
                    pos,
                    "log argument must be n or n^k with positive k",
                ))
            }
        }
        ComplexityExpr::Sum(_) => Err(semantic(pos, "log of a sum")),
        ComplexityExpr::Log(_) => Err(semantic(pos, "nested log")),
        _ => Err(semantic(
            pos,
            "log argument must be n or n^k with positive k",
        )),
    }
}

/// Parses complexity-expression text into a validated AST.
pub fn parse(text: &str) -> Result<ComplexityExpr, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(syntax(1, "an expression", "end of input"));
    }
    let len = text.chars().count();
    let mut parser = Parser { toks, idx: 0, len };
    let expr = parser.parse_expr()?;
    if parser.peek().is_some() {
        return Err(syntax(
            parser.peek_pos(),
            "end of input",
            &parser.found(),
        ));
    }
    Ok(expr)
}
