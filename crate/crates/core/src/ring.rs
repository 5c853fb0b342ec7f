//! The truncated ring `GF(2)[t_0, t_1, ...] / (t_i^2)`.
//!
//! A ring monomial is a squarefree product of distinct `t_i`, stored as a bit
//! mask. Multiplying two monomials that share an index gives zero.

use alloc::collections::btree_set::{self, BTreeSet};
use core::fmt;

use crate::error::{Error, Result};

/// Number of t-indices a mask can hold. Indices `>= INDEX_CEILING` are rejected.
pub const INDEX_CEILING: u32 = 128;

/// Squarefree product `t_{i_1} ... t_{i_k}`; the empty product is `1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RingMonomial(u128);

impl RingMonomial {
    pub const ONE: RingMonomial = RingMonomial(0);

    pub const fn from_mask(mask: u128) -> Self {
        RingMonomial(mask)
    }

    pub const fn mask(self) -> u128 {
        self.0
    }

    pub fn from_indices<I: IntoIterator<Item = u32>>(indices: I) -> Result<Self> {
        let mut mask = 0u128;
        for i in indices {
            check_index(i)?;
            mask |= 1u128 << i;
        }
        Ok(RingMonomial(mask))
    }

    pub fn var(i: u32) -> Result<Self> {
        check_index(i)?;
        Ok(RingMonomial(1u128 << i))
    }

    /// `t_lo t_{lo+1} ... t_hi`, or `1` when `lo > hi`.
    ///
    /// Panics if `hi` reaches the index ceiling.
    pub fn range(lo: u32, hi: u32) -> Self {
        if lo > hi {
            return RingMonomial::ONE;
        }
        assert!(hi < INDEX_CEILING, "t-index {hi} exceeds the index ceiling {INDEX_CEILING}");
        let width = hi - lo + 1;
        let ones = if width == 128 { u128::MAX } else { (1u128 << width) - 1 };
        RingMonomial(ones << lo)
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: u32) -> bool {
        i < INDEX_CEILING && self.0 >> i & 1 == 1
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn max_index(self) -> Option<u32> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros())
    }

    pub fn indices(self) -> Indices {
        Indices(self.0)
    }

    /// Product in the truncated ring; `None` when an index repeats.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: RingMonomial) -> Option<RingMonomial> {
        (self.0 & other.0 == 0).then_some(RingMonomial(self.0 | other.0))
    }

    pub fn without(self, i: u32) -> RingMonomial {
        RingMonomial(self.0 & !(1u128 << i))
    }

    /// Applies `t_i -> t_{i+k}`. Panics past the index ceiling.
    pub fn shift(self, k: u32) -> RingMonomial {
        if self.0 == 0 || k == 0 {
            return self;
        }
        let top = self.max_index().unwrap_or(0) + k;
        assert!(top < INDEX_CEILING, "t-index {top} exceeds the index ceiling {INDEX_CEILING}");
        RingMonomial(self.0 << k)
    }
}

fn check_index(i: u32) -> Result<()> {
    if i >= INDEX_CEILING {
        Err(Error::IndexCeiling { index: i, ceiling: INDEX_CEILING })
    } else {
        Ok(())
    }
}

/// Ascending t-indices of a monomial.
pub struct Indices(u128);

impl Iterator for Indices {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl fmt::Display for RingMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "t{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RingMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A GF(2) combination of ring monomials.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RingElement {
    terms: BTreeSet<RingMonomial>,
}

impl RingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        RingMonomial::ONE.into()
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

    pub fn iter(&self) -> btree_set::Iter<'_, RingMonomial> {
        self.terms.iter()
    }

    pub fn contains(&self, m: &RingMonomial) -> bool {
        self.terms.contains(m)
    }

    /// Adds one monomial (symmetric difference).
    pub fn toggle(&mut self, m: RingMonomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        let mut out = self.clone();
        for &m in &other.terms {
            out.toggle(m);
        }
        out
    }

    pub fn mul(&self, other: &RingElement) -> RingElement {
        let mut out = RingElement::zero();
        for &a in &self.terms {
            for &b in &other.terms {
                if let Some(p) = a.mul(b) {
                    out.toggle(p);
                }
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: RingMonomial) -> RingElement {
        let mut out = RingElement::zero();
        for &a in &self.terms {
            if let Some(p) = a.mul(m) {
                out.toggle(p);
            }
        }
        out
    }
}

impl From<RingMonomial> for RingElement {
    fn from(m: RingMonomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        RingElement { terms }
    }
}

impl FromIterator<RingMonomial> for RingElement {
    fn from_iter<I: IntoIterator<Item = RingMonomial>>(iter: I) -> Self {
        let mut out = RingElement::zero();
        for m in iter {
            out.toggle(m);
        }
        out
    }
}

impl<'a> IntoIterator for &'a RingElement {
    type Item = &'a RingMonomial;
    type IntoIter = btree_set::Iter<'a, RingMonomial>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl fmt::Display for RingElement {
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

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collision_is_zero() {
        let a = RingMonomial::from_indices([0, 2]).unwrap();
        let b = RingMonomial::from_indices([2, 5]).unwrap();
        assert_eq!(a.mul(b), None);
        let c = RingMonomial::from_indices([1]).unwrap();
        assert_eq!(a.mul(c), Some(RingMonomial::from_indices([0, 1, 2]).unwrap()));
    }

    #[test]
    fn range_and_empty_range() {
        assert_eq!(RingMonomial::range(3, 2), RingMonomial::ONE);
        assert_eq!(RingMonomial::range(0, 1), RingMonomial::from_indices([0, 1]).unwrap());
        assert_eq!(RingMonomial::range(0, 127).degree(), 128);
    }

    #[test]
    fn ceiling_is_an_error() {
        assert_eq!(RingMonomial::var(128), Err(Error::IndexCeiling { index: 128, ceiling: 128 }));
        assert!(RingMonomial::var(127).is_ok());
    }

    #[test]
    #[should_panic(expected = "index ceiling")]
    fn shift_past_ceiling_panics() {
        RingMonomial::var(120).unwrap().shift(8);
    }

    #[test]
    fn element_addition_cancels() {
        let t0: RingElement = RingMonomial::var(0).unwrap().into();
        assert!(t0.add(&t0).is_zero());
        let one = RingElement::one();
        assert_eq!(t0.add(&one).len(), 2);
        // (1 + t0)^2 = 1 in characteristic 2 with t0^2 = 0
        let s = t0.add(&one);
        assert_eq!(s.mul(&s), one);
    }
}
