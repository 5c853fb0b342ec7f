//! Lie-word expressions over the monomial syntax.
//!
//! ```text
//! expr    := term { "+" term }
//! term    := primary [ "^" INT ]          (INT a power of two: repeated squaring)
//! primary := monomial | "0" | "(" expr ")" | "[" expr { "," item } "]"
//! item    := expr [ "^" INT ]             (any INT >= 1: repeated bracketing)
//! monomial:= { "t" INT "*" } "v" INT
//! ```
//!
//! Brackets are left-normed, `[a, b, c] = [[a, b], c]`, and inside a bracket
//! list `[u, x^k]` stands for `[u, x, ..., x]` with `k` copies of `x`.

use std::fmt;

use fiblie_core::calculus::{bracket, power_2k};
use fiblie_core::{Element, Error, Monomial, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieExpr {
    Zero,
    Monomial(Monomial),
    Sum(Vec<LieExpr>),
    /// Left-normed bracket of at least two items.
    Bracket(Vec<LieExpr>),
    /// `base^(2^k)`, stored as the exponent `2^k`.
    Power(Box<LieExpr>, u64),
    /// `x^k` inside a bracket list: `k` successive brackets with `x`.
    Repeat(Box<LieExpr>, u64),
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src.as_bytes().get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(err(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        while bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(start, "expected an integer"));
        }
        self.src[start..self.pos].parse().map(|v| (v, start)).map_err(|_| err(start, "integer out of range"))
    }

    fn expr(&mut self) -> Result<LieExpr> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(b'+') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { LieExpr::Sum(terms) })
    }

    fn term(&mut self) -> Result<LieExpr> {
        let base = self.primary()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let (k, at) = self.int()?;
        if k == 0 || !k.is_power_of_two() {
            return Err(err(at, "exponent must be a power of two (only 2-powers exist)"));
        }
        Ok(if k == 1 { base } else { LieExpr::Power(Box::new(base), k) })
    }

    fn item(&mut self) -> Result<LieExpr> {
        let mut terms = vec![self.primary_with_repeat()?];
        while self.peek() == Some(b'+') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { LieExpr::Sum(terms) })
    }

    fn primary_with_repeat(&mut self) -> Result<LieExpr> {
        let base = self.primary()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let (k, at) = self.int()?;
        match k {
            0 => Err(err(at, "repetition count must be at least 1")),
            1 => Ok(base),
            _ => Ok(LieExpr::Repeat(Box::new(base), k)),
        }
    }

    fn primary(&mut self) -> Result<LieExpr> {
        match self.peek() {
            Some(b'[') => {
                let open = self.pos;
                self.pos += 1;
                let mut items = vec![self.expr()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    items.push(self.item()?);
                }
                self.expect(b']')?;
                if items.len() < 2 {
                    return Err(err(open, "a bracket needs at least two entries"));
                }
                Ok(LieExpr::Bracket(items))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(LieExpr::Zero)
            }
            Some(b't' | b'v') => {
                let (m, end) = Monomial::parse_at(self.src, self.pos)?;
                self.pos = end;
                Ok(m.map_or(LieExpr::Zero, LieExpr::Monomial))
            }
            Some(c) => Err(err(self.pos, format!("unexpected '{}'", c as char))),
            None => Err(err(self.pos, "unexpected end of input")),
        }
    }
}

impl LieExpr {
    pub fn parse(src: &str) -> Result<LieExpr> {
        let mut p = Parser { src, pos: 0 };
        let e = p.expr()?;
        match p.peek() {
            None => Ok(e),
            Some(c) => Err(err(p.pos, format!("unexpected '{}'", c as char))),
        }
    }

    /// Evaluates through the engine; `cap` bounds intermediate monomial counts.
    pub fn eval(&self, cap: usize) -> Result<Element> {
        Ok(match self {
            LieExpr::Zero => Element::zero(),
            LieExpr::Monomial(m) => (*m).into(),
            LieExpr::Sum(terms) => {
                let mut out = Element::zero();
                for t in terms {
                    out.add_assign(&t.eval(cap)?);
                }
                out
            }
            LieExpr::Bracket(items) => {
                let mut acc: Option<Element> = None;
                for item in items {
                    let (x, times) = match item {
                        LieExpr::Repeat(x, k) => (x.eval(cap)?, *k),
                        other => (other.eval(cap)?, 1),
                    };
                    for _ in 0..times {
                        acc = Some(match acc {
                            None => x.clone(),
                            Some(a) => bracket(&a, &x),
                        });
                    }
                }
                acc.unwrap_or_default()
            }
            LieExpr::Power(base, k) => power_2k(&base.eval(cap)?, k.trailing_zeros(), cap)?,
            LieExpr::Repeat(x, _) => x.eval(cap)?,
        })
    }
}

fn needs_parens(e: &LieExpr) -> bool {
    matches!(e, LieExpr::Sum(_) | LieExpr::Power(..) | LieExpr::Repeat(..))
}

impl fmt::Display for LieExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieExpr::Zero => f.write_str("0"),
            LieExpr::Monomial(m) => write!(f, "{m}"),
            LieExpr::Sum(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            LieExpr::Bracket(items) => {
                f.write_str("[")?;
                for (i, t) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_str("]")
            }
            LieExpr::Power(base, k) | LieExpr::Repeat(base, k) => {
                if needs_parens(base) {
                    write!(f, "({base})^{k}")
                } else {
                    write!(f, "{base}^{k}")
                }
            }
        }
    }
}
