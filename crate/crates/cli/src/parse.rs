//! Recursive-descent parser for rational functions in one variable.
//!
//! ```text
//! input  := expr (';' expr)?
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/')? factor)*
//! factor := ('+' | '-') factor | atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Juxtaposition (`3x`, `2(x+1)`, `(x-1)(x+1)`) is multiplication. The pair
//! form `a ; b` denotes `a / b`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use pcurv::arith::RatPoly;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {col}: {msg}")]
    Syntax { col: usize, msg: String },
    #[error("denominator is zero")]
    ZeroDenominator,
}

impl ParseError {
    fn at(pos: usize, msg: impl Into<String>) -> Self {
        ParseError::Syntax { col: pos + 1, msg: msg.into() }
    }
}

/// A parsed input `a_raw / b_raw`, not reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedInput {
    pub a_raw: RatPoly,
    pub b_raw: RatPoly,
    pub source_text: String,
}

impl ParsedInput {
    /// Whether both inputs denote the same rational function.
    pub fn same_function(&self, other: &ParsedInput) -> bool {
        self.a_raw.mul(&other.b_raw) == other.a_raw.mul(&self.b_raw)
    }
}

impl fmt::Display for ParsedInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b_raw == RatPoly::one() {
            write!(f, "{}", self.a_raw)
        } else {
            write!(f, "({})/({})", self.a_raw, self.b_raw)
        }
    }
}

/// Parse a rational function in `x`.
pub fn parse_ratfun(text: &str) -> Result<ParsedInput, ParseError> {
    let (a_raw, b_raw) = parse_with(text, &["x"])?;
    Ok(ParsedInput { a_raw, b_raw, source_text: text.to_string() })
}

/// Parse a polynomial in `w` or `x` (one of them throughout).
pub fn parse_poly(text: &str) -> Result<RatPoly, ParseError> {
    let (num, den) = parse_with(text, &["w", "x"])?;
    match den.degree() {
        Some(0) => Ok(num.scale(&den.coeff(0).recip())),
        _ => Err(ParseError::at(0, "expected a polynomial, found a quotient")),
    }
}

fn parse_with(text: &str, vars: &[&str]) -> Result<(RatPoly, RatPoly), ParseError> {
    let tokens = tokenize(text, vars)?;
    let mut p = Parser { tokens, pos: 0, var: None };
    let first = p.expr()?;
    let value = if p.eat(&Tok::Semi) { first.div(&p.expr()?)? } else { first };
    match p.peek() {
        (Tok::End, _) => Ok((value.num, value.den)),
        (t, pos) => Err(ParseError::at(pos, format!("unexpected {}", t.describe()))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Semi,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Var(v) => format!("variable {v}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Semi => "';'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str, vars: &[&str]) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().unwrap()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let name = &text[start..i];
                if !vars.contains(&name) {
                    return Err(ParseError::at(start, format!("unknown variable '{name}'")));
                }
                out.push((Tok::Var(name.to_string()), start));
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b';' => Tok::Semi,
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(ParseError::at(start, format!("unexpected character '{ch}'")));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

/// `num / den`, unreduced; constant denominators are folded into `num`.
#[derive(Clone, Debug)]
struct Frac {
    num: RatPoly,
    den: RatPoly,
}

impl Frac {
    fn poly(num: RatPoly) -> Self {
        Frac { num, den: RatPoly::one() }
    }

    fn folded(num: RatPoly, den: RatPoly) -> Self {
        match den.degree() {
            Some(0) => Frac { num: num.scale(&den.coeff(0).recip()), den: RatPoly::one() },
            _ => Frac { num, den },
        }
    }

    fn add(&self, o: &Frac) -> Frac {
        if self.den == o.den {
            return Frac { num: self.num.add(&o.num), den: self.den.clone() };
        }
        Frac::folded(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    fn neg(&self) -> Frac {
        Frac { num: self.num.neg(), den: self.den.clone() }
    }

    fn mul(&self, o: &Frac) -> Frac {
        Frac::folded(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    fn div(&self, o: &Frac) -> Result<Frac, ParseError> {
        if o.num.is_zero() {
            return Err(ParseError::ZeroDenominator);
        }
        Ok(Frac::folded(self.num.mul(&o.den), self.den.mul(&o.num)))
    }

    fn pow(&self, e: u32) -> Frac {
        Frac { num: self.num.pow(e), den: self.den.pow(e) }
    }
}

struct Parser {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    var: Option<String>,
}

const MAX_EXPONENT: u32 = 10_000;

impl Parser {
    fn peek(&self) -> (Tok, usize) {
        self.tokens[self.pos].clone()
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.peek();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if &self.peek().0 == t {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Frac, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.add(&self.term()?.neg());
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Frac, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                (Tok::Star, _) => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                (Tok::Slash, _) => {
                    self.bump();
                    acc = acc.div(&self.factor()?)?;
                }
                (Tok::Var(_) | Tok::LParen, _) => acc = acc.mul(&self.factor()?),
                (Tok::Int(_), pos) => return Err(ParseError::at(pos, "missing operator before number")),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Frac, ParseError> {
        if self.eat(&Tok::Minus) {
            return Ok(self.factor()?.neg());
        }
        if self.eat(&Tok::Plus) {
            return self.factor();
        }
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        match self.bump() {
            (Tok::Int(n), pos) => match n.to_u32().filter(|&e| e <= MAX_EXPONENT) {
                Some(e) => Ok(base.pow(e)),
                None => Err(ParseError::at(pos, format!("exponent {n} is too large"))),
            },
            (Tok::Minus, pos) => Err(ParseError::at(pos, "exponents must be nonnegative integers")),
            (t, pos) => Err(ParseError::at(pos, format!("expected an exponent, found {}", t.describe()))),
        }
    }

    fn atom(&mut self) -> Result<Frac, ParseError> {
        match self.bump() {
            (Tok::Int(n), _) => Ok(Frac::poly(RatPoly::constant(BigRational::from_integer(n)))),
            (Tok::Var(v), pos) => {
                match &self.var {
                    Some(seen) if *seen != v => {
                        return Err(ParseError::at(pos, format!("mixed variables '{seen}' and '{v}'")));
                    }
                    _ => self.var = Some(v),
                }
                Ok(Frac::poly(RatPoly::x()))
            }
            (Tok::LParen, _) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (t, pos) => Err(ParseError::at(pos, format!("expected ')', found {}", t.describe()))),
                }
            }
            (t, pos) => Err(ParseError::at(pos, format!("expected a number, variable or '(', found {}", t.describe()))),
        }
    }
}
