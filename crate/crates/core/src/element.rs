//! Monomials `t_{i_1} ... t_{i_k} v_n` and their GF(2) combinations.
//!
//! Text syntax: `t0*t3*v7` for a monomial (tail factors ascending, then the
//! pivot), `0` for zero, and `+`-separated monomials for an element.

use alloc::collections::btree_set::{self, BTreeSet};
use alloc::format;
use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::{RingMonomial, INDEX_CEILING};

/// `tail * v_pivot`. Ordered by pivot, then by tail mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pivot: u32,
    tail: RingMonomial,
}

/// Which part of the restricted basis a monomial belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisClass {
    /// `t_0^* ... t_{n-4}^* v_n`.
    Standard,
    /// `t_{n-3} v_n`, the square of `v_{n-2}`.
    Square,
    NonBasis,
}

impl Monomial {
    pub fn new(tail: RingMonomial, pivot: u32) -> Result<Self> {
        if pivot == 0 {
            return Err(Error::ZeroPivot);
        }
        Ok(Monomial { pivot, tail })
    }

    /// The pivot element `v_n`. Panics for `n = 0`.
    pub fn v(n: u32) -> Self {
        assert!(n >= 1, "pivot index must be at least 1");
        Monomial { pivot: n, tail: RingMonomial::ONE }
    }

    pub fn from_parts<I: IntoIterator<Item = u32>>(tail: I, pivot: u32) -> Result<Self> {
        Monomial::new(RingMonomial::from_indices(tail)?, pivot)
    }

    pub fn pivot(self) -> u32 {
        self.pivot
    }

    pub fn tail(self) -> RingMonomial {
        self.tail
    }

    pub(crate) fn raw(tail: RingMonomial, pivot: u32) -> Self {
        debug_assert!(pivot >= 1);
        Monomial { pivot, tail }
    }

    pub fn classify(self) -> BasisClass {
        let n = self.pivot;
        let mask = self.tail.mask();
        let standard = if n >= 3 { n - 3 >= 128 || mask >> (n - 3) == 0 } else { mask == 0 };
        if standard {
            BasisClass::Standard
        } else if n >= 3 && n - 3 < INDEX_CEILING && mask == 1u128 << (n - 3) {
            BasisClass::Square
        } else {
            BasisClass::NonBasis
        }
    }

    pub fn is_standard(self) -> bool {
        self.classify() == BasisClass::Standard
    }

    pub fn is_basis_form(self) -> bool {
        self.classify() != BasisClass::NonBasis
    }

    /// Reads one monomial starting at byte `start`. Returns `None` for the
    /// monomial when a t-index repeats (the product is zero), together with
    /// the byte offset just past the monomial.
    pub fn parse_at(input: &str, start: usize) -> Result<(Option<Monomial>, usize)> {
        let bytes = input.as_bytes();
        let mut pos = start;
        let mut tail = RingMonomial::ONE;
        let mut zero = false;
        loop {
            match bytes.get(pos) {
                Some(b't') => {
                    let (i, next) = parse_uint(input, pos + 1)?;
                    if i >= INDEX_CEILING {
                        return Err(parse_error(pos, "t-index exceeds the index ceiling"));
                    }
                    match tail.mul(RingMonomial::var(i)?) {
                        Some(t) => tail = t,
                        None => zero = true,
                    }
                    if bytes.get(next) != Some(&b'*') {
                        return Err(parse_error(next, "expected '*' after a tail factor"));
                    }
                    pos = next + 1;
                }
                Some(b'v') => {
                    let (n, next) = parse_uint(input, pos + 1)?;
                    if n == 0 {
                        return Err(parse_error(pos, "pivot index must be at least 1"));
                    }
                    let m = (!zero).then_some(Monomial { pivot: n, tail });
                    return Ok((m, next));
                }
                _ => return Err(parse_error(pos, "expected 't<k>*' or 'v<k>'")),
            }
        }
    }
}

pub(crate) fn parse_error(pos: usize, msg: &str) -> Error {
    Error::Parse { pos, msg: msg.to_string() }
}

fn parse_uint(input: &str, start: usize) -> Result<(u32, usize)> {
    let bytes = input.as_bytes();
    let mut end = start;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end == start {
        return Err(parse_error(start, "expected an index"));
    }
    input[start..end].parse::<u32>().map(|v| (v, end)).map_err(|_| parse_error(start, "index out of range"))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in self.tail.indices() {
            write!(f, "t{i}*")?;
        }
        write!(f, "v{}", self.pivot)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match Monomial::parse_at(s, 0)? {
            (Some(m), end) if end == s.len() => Ok(m),
            (None, end) if end == s.len() => Err(parse_error(0, "repeated t-index gives zero")),
            (_, end) => Err(parse_error(end, "trailing input")),
        }
    }
}

/// A GF(2) combination of monomials; addition is symmetric difference.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Element {
    terms: BTreeSet<Monomial>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn v(n: u32) -> Self {
        Monomial::v(n).into()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    pub fn iter(&self) -> btree_set::Iter<'_, Monomial> {
        self.terms.iter()
    }

    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &Element) {
        for &m in &other.terms {
            self.toggle(m);
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn min_pivot(&self) -> Option<u32> {
        self.terms.first().map(|m| m.pivot)
    }

    pub fn max_pivot(&self) -> Option<u32> {
        self.terms.last().map(|m| m.pivot)
    }

    pub fn is_basis_form(&self) -> bool {
        self.terms.iter().all(|m| m.is_basis_form())
    }

    /// The single monomial of a one-term element.
    pub fn as_monomial(&self) -> Option<Monomial> {
        (self.terms.len() == 1).then(|| *self.terms.first().unwrap())
    }
}

impl From<Monomial> for Element {
    fn from(m: Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        Element { terms }
    }
}

impl FromIterator<Monomial> for Element {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut out = Element::zero();
        for m in iter {
            out.toggle(m);
        }
        out
    }
}

impl<'a> IntoIterator for &'a Element {
    type Item = &'a Monomial;
    type IntoIter = btree_set::Iter<'a, Monomial>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, m) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let skip_ws = |mut p: usize| {
            while p < bytes.len() && bytes[p].is_ascii_whitespace() {
                p += 1;
            }
            p
        };
        let mut out = Element::zero();
        let mut pos = skip_ws(0);
        if pos == bytes.len() {
            return Err(parse_error(pos, "empty input"));
        }
        loop {
            if bytes.get(pos) == Some(&b'0') {
                pos += 1;
            } else {
                let (m, next) = Monomial::parse_at(s, pos)?;
                if let Some(m) = m {
                    out.toggle(m);
                }
                pos = next;
            }
            pos = skip_ws(pos);
            match bytes.get(pos) {
                None => return Ok(out),
                Some(b'+') => pos = skip_ws(pos + 1),
                Some(_) => return Err(parse_error(pos, &format!("unexpected '{}'", bytes[pos] as char))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(m("t0*v5").classify(), BasisClass::Standard);
        assert_eq!(m("t0*v3").classify(), BasisClass::Square);
        assert_eq!(m("t1*v3").classify(), BasisClass::NonBasis);
        assert_eq!(m("v1").classify(), BasisClass::Standard);
        assert_eq!(m("t0*v2").classify(), BasisClass::NonBasis);
        assert_eq!(m("t0*t1*v5").classify(), BasisClass::Standard);
        assert_eq!(m("t2*v5").classify(), BasisClass::Square);
        assert_eq!(m("t0*t2*v5").classify(), BasisClass::NonBasis);
    }

    #[test]
    fn canonical_order_is_pivot_then_mask() {
        let e: Element = "t0*v4 + v5 + v4 + t1*v4".parse().unwrap();
        assert_eq!(e.to_string(), "v4 + t0*v4 + t1*v4 + v5");
    }

    #[test]
    fn parse_print_examples() {
        assert_eq!(m("t0*t3*v7").to_string(), "t0*t3*v7");
        assert_eq!("0".parse::<Element>().unwrap(), Element::zero());
        let e: Element = "v1 + v1".parse().unwrap();
        assert!(e.is_zero());
        let e: Element = "t0*t0*v3 + v2".parse().unwrap();
        assert_eq!(e, Element::v(2));
        assert_eq!("t3*t0*v7".parse::<Element>().unwrap().to_string(), "t0*t3*v7");
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!("v1 + x3".parse::<Element>().unwrap_err(), parse_error(5, "expected 't<k>*' or 'v<k>'"));
        assert!(matches!("t1v3".parse::<Element>(), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!("v0".parse::<Element>(), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!("t128*v3".parse::<Element>(), Err(Error::Parse { .. })));
        assert!(matches!("".parse::<Element>(), Err(Error::Parse { .. })));
    }
}
