//! Bracket, square, iterated 2-power, ring action and shift, computed with the
//! closed commutator and action formulas for pivot elements. The infinite
//! derivation sums behind `v_n` are never expanded.

use crate::element::{BasisClass, Element, Monomial};
use crate::error::{Error, Result};
use crate::ring::{RingElement, RingMonomial};

/// Monomial cap used by [`power_2k`] callers that have no better bound.
pub const DEFAULT_MONOMIAL_CAP: usize = 1_000_000;

/// `v_n(t_j)` as a single ring monomial, or `None` when it vanishes.
#[inline]
pub fn action_monomial(n: u32, j: u32) -> Option<RingMonomial> {
    use core::cmp::Ordering::*;
    match n.cmp(&j) {
        Less => Some(RingMonomial::range(n - 1, j - 2)),
        Equal => Some(RingMonomial::ONE),
        Greater => None,
    }
}

/// `v_n(t_j)`: `t_{n-1} ... t_{j-2}` for `n < j`, `1` for `n = j`, `0` for `n > j`.
pub fn pivot_action(n: u32, j: u32) -> RingElement {
    assert!(n >= 1, "pivot index must be at least 1");
    action_monomial(n, j).map(RingElement::from).unwrap_or_default()
}

/// `[v_i, v_j] = t_{i-1} ... t_{j-3} v_{j+1}` for `i < j`, zero for `i = j`.
pub fn pivot_bracket_monomial(i: u32, j: u32) -> Option<Monomial> {
    assert!(i >= 1 && j >= 1, "pivot index must be at least 1");
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    if lo == hi {
        return None;
    }
    let tail = if lo + 2 > hi { RingMonomial::ONE } else { RingMonomial::range(lo - 1, hi - 3) };
    Some(Monomial::raw(tail, hi + 1))
}

pub fn pivot_bracket(i: u32, j: u32) -> Element {
    pivot_bracket_monomial(i, j).map(Element::from).unwrap_or_default()
}

/// Calls `emit` with every monomial of `v_n(r)` (Leibniz over the factors of `r`).
#[inline]
fn derive_monomial(n: u32, r: RingMonomial, mut emit: impl FnMut(RingMonomial)) {
    // only factors t_j with j >= n survive
    let high = if n >= 128 { 0 } else { r.mask() >> n << n };
    for j in RingMonomial::from_mask(high).indices() {
        if let Some(p) = action_monomial(n, j).and_then(|a| a.mul(r.without(j))) {
            emit(p);
        }
    }
}

/// `v_n(r)` for a ring element `r`.
pub fn derive(n: u32, r: &RingElement) -> RingElement {
    let mut out = RingElement::zero();
    for &m in r {
        derive_monomial(n, m, |p| out.toggle(p));
    }
    out
}

/// The derivation action of `e` on `r`.
pub fn apply(e: &Element, r: &RingElement) -> RingElement {
    let mut out = RingElement::zero();
    for m in e {
        for &s in r {
            derive_monomial(m.pivot(), s, |p| {
                if let Some(q) = p.mul(m.tail()) {
                    out.toggle(q);
                }
            });
        }
    }
    out
}

/// Adds `[a, b]` into `out`:
/// `[r v_n, r' v_m] = r v_n(r') v_m + r' v_m(r) v_n + r r' [v_n, v_m]`.
pub fn bracket_monomials_into(a: Monomial, b: Monomial, out: &mut Element) {
    let (r, n) = (a.tail(), a.pivot());
    let (s, m) = (b.tail(), b.pivot());
    derive_monomial(n, s, |p| {
        if let Some(q) = p.mul(r) {
            out.toggle(Monomial::raw(q, m));
        }
    });
    derive_monomial(m, r, |p| {
        if let Some(q) = p.mul(s) {
            out.toggle(Monomial::raw(q, n));
        }
    });
    if let (Some(rs), Some(c)) = (r.mul(s), pivot_bracket_monomial(n, m)) {
        if let Some(tail) = rs.mul(c.tail()) {
            out.toggle(Monomial::raw(tail, c.pivot()));
        }
    }
}

pub fn bracket_monomials(a: Monomial, b: Monomial) -> Element {
    let mut out = Element::zero();
    bracket_monomials_into(a, b, &mut out);
    out
}

/// Bilinear extension of the monomial bracket.
pub fn bracket(a: &Element, b: &Element) -> Element {
    let mut out = Element::zero();
    for &x in a {
        for &y in b {
            bracket_monomials_into(x, y, &mut out);
        }
    }
    out
}

/// `(r v_n)^2 = r v_n(r) v_n + r^2 v_n^2`, where `r^2 = 0` unless `r = 1` and
/// `v_n^2 = t_{n-1} v_{n+2}`.
pub fn square_monomial_into(a: Monomial, out: &mut Element) {
    let (r, n) = (a.tail(), a.pivot());
    derive_monomial(n, r, |p| {
        if let Some(q) = p.mul(r) {
            out.toggle(Monomial::raw(q, n));
        }
    });
    if r.is_one() {
        out.toggle(Monomial::raw(RingMonomial::range(n - 1, n - 1), n + 2));
    }
}

/// The 2-map: `(a + b)^2 = a^2 + b^2 + [a, b]` expanded over all monomials.
pub fn square(e: &Element) -> Element {
    let terms: alloc::vec::Vec<Monomial> = e.iter().copied().collect();
    let mut out = Element::zero();
    for (k, &a) in terms.iter().enumerate() {
        square_monomial_into(a, &mut out);
        for &b in &terms[k + 1..] {
            bracket_monomials_into(a, b, &mut out);
        }
    }
    out
}

/// `e^(2^k)` by `k` squarings, failing once an intermediate result holds more
/// than `cap` monomials.
pub fn power_2k(e: &Element, k: u32, cap: usize) -> Result<Element> {
    let mut x = e.clone();
    for _ in 0..k {
        if x.is_zero() {
            break;
        }
        x = square(&x);
        if x.len() > cap {
            return Err(Error::MonomialCap { count: x.len(), cap });
        }
    }
    Ok(x)
}

/// The shift `t_i -> t_{i+k}`, `v_i -> v_{i+k}`.
pub fn tau_monomial(m: Monomial, k: u32) -> Monomial {
    Monomial::raw(m.tail().shift(k), m.pivot() + k)
}

pub fn tau(e: &Element, k: u32) -> Element {
    e.iter().map(|&m| tau_monomial(m, k)).collect()
}

pub fn is_basis_monomial(m: Monomial) -> BasisClass {
    m.classify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn e(s: &str) -> Element {
        s.parse().unwrap()
    }

    fn r(indices: &[u32]) -> RingElement {
        RingMonomial::from_indices(indices.iter().copied()).unwrap().into()
    }

    #[test]
    fn pivot_bracket_examples() {
        assert_eq!(pivot_bracket(1, 2), e("v3"));
        assert!(pivot_bracket(3, 3).is_zero());
        assert_eq!(pivot_bracket(1, 4), e("t0*t1*v5"));
        assert_eq!(pivot_bracket(4, 1), e("t0*t1*v5"));
        for i in 1..=30 {
            assert_eq!(pivot_bracket(i, i + 1), Element::v(i + 2));
        }
    }

    #[test]
    fn pivot_action_examples() {
        assert_eq!(pivot_action(2, 2), RingElement::one());
        assert!(pivot_action(5, 3).is_zero());
        assert_eq!(pivot_action(1, 3), r(&[0, 1]));
    }

    #[test]
    fn apply_examples() {
        assert_eq!(apply(&e("v1"), &r(&[3])), r(&[0, 1]));
        assert!(apply(&e("v2"), &r(&[0])).is_zero());
        assert_eq!(apply(&e("v1 + v2"), &r(&[2])), r(&[0]).add(&RingElement::one()));
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(&e("v1"), &e("v2")), e("v3"));
        assert!(bracket(&e("v3"), &e("v3")).is_zero());
        assert_eq!(bracket(&e("v2"), &e("t0*v4")), e("t0*t1*v5"));
        // v1(t0) = 0 and t0 * t0 = 0
        assert!(bracket(&e("v1"), &e("t0*v4")).is_zero());
    }

    #[test]
    fn square_examples() {
        assert_eq!(square(&e("v1")), e("t0*v3"));
        assert!(square(&e("t0*v3")).is_zero());
        assert_eq!(square(&e("v1 + v2")), e("v3 + t0*v3 + t1*v4"));
        for i in 1..=20 {
            assert_eq!(square(&Element::v(i)).to_string(), alloc::format!("t{}*v{}", i - 1, i + 2));
        }
    }

    #[test]
    fn power_examples() {
        let cap = DEFAULT_MONOMIAL_CAP;
        assert!(power_2k(&e("v1"), 2, cap).unwrap().is_zero());
        assert_eq!(power_2k(&e("v1"), 0, cap).unwrap(), e("v1"));
        assert_eq!(power_2k(&e("v1"), 1, cap).unwrap(), e("t0*v3"));
        assert_eq!(
            power_2k(&e("v1 + v2 + v3"), 1, 1),
            Err(Error::MonomialCap { count: square(&e("v1 + v2 + v3")).len(), cap: 1 })
        );
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&e("v1"), 1), e("v2"));
        assert_eq!(tau(&e("t0*v4"), 2), e("t2*v6"));
        assert!(tau(&Element::zero(), 5).is_zero());
    }

    #[test]
    fn basis_classification() {
        assert_eq!(is_basis_monomial("t0*v5".parse().unwrap()), BasisClass::Standard);
        assert_eq!(is_basis_monomial("t0*v3".parse().unwrap()), BasisClass::Square);
        assert_eq!(is_basis_monomial("t1*v3".parse().unwrap()), BasisClass::NonBasis);
    }
}
