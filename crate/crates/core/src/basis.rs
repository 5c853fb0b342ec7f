//! Standard monomials `W_n`, the restricted basis `W̃_n`, and the structural
//! decompositions used to cross-check the bracket engine.

use alloc::vec::Vec;

use crate::calculus::{bracket_monomials, tau_monomial};
use crate::element::{BasisClass, Monomial};
use crate::error::{Error, Result};
use crate::ring::{RingMonomial, INDEX_CEILING};

/// Largest level [`enumerate_w`] will materialize (`2^37` monomials).
pub const ENUMERATION_CEILING: u32 = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// `W`, a basis of the Lie algebra generated by `v_1, v_2`.
    Lie,
    /// `W̃`, which adds the pivot squares `t_{n-3} v_n`.
    Restricted,
}

/// One length level of the basis, ordered by tail mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisLevel {
    pub n: u32,
    pub kind: BasisKind,
    pub monomials: Vec<Monomial>,
}

/// `|W_n|`: 1 for `n <= 3`, `2^{n-3}` above.
pub fn level_size(n: u32) -> u64 {
    if n <= 3 {
        1
    } else {
        1u64 << (n - 3)
    }
}

/// `|W_{<=n}| = 1 + 2^{n-2}` for `n >= 3`.
pub fn cumulative_size(n: u32) -> u64 {
    (1..=n).map(level_size).sum()
}

fn check_level(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroPivot);
    }
    if n > ENUMERATION_CEILING {
        return Err(Error::EnumerationCeiling { level: n, ceiling: ENUMERATION_CEILING });
    }
    if n >= 4 && n - 4 >= INDEX_CEILING {
        return Err(Error::IndexCeiling { index: n - 4, ceiling: INDEX_CEILING });
    }
    Ok(())
}

/// Calls `f` on every standard monomial of length `n`, tail mask ascending,
/// without materializing the level.
pub fn for_each_standard(n: u32, mut f: impl FnMut(Monomial)) -> Result<()> {
    check_level(n)?;
    let count = level_size(n) as u128;
    for mask in 0..count {
        f(Monomial::raw(RingMonomial::from_mask(mask), n));
    }
    Ok(())
}

pub fn enumerate_w(n: u32) -> Result<BasisLevel> {
    let mut monomials = Vec::with_capacity(level_size(n.min(ENUMERATION_CEILING)) as usize);
    for_each_standard(n, |m| monomials.push(m))?;
    Ok(BasisLevel { n, kind: BasisKind::Lie, monomials })
}

/// `W̃_n = W_n ∪ {t_{n-3} v_n}` for `n >= 3`, `W_n` otherwise.
pub fn enumerate_w_restricted(n: u32) -> Result<BasisLevel> {
    let mut level = enumerate_w(n)?;
    level.kind = BasisKind::Restricted;
    if n >= 3 {
        level.monomials.push(square_monomial(n));
    }
    Ok(level)
}

/// The pivot square `t_{n-3} v_n = v_{n-2}^2`.
pub fn square_monomial(n: u32) -> Monomial {
    assert!(n >= 3);
    Monomial::raw(RingMonomial::range(n - 3, n - 3), n)
}

pub fn enumerate_w_upto(n: u32) -> Result<Vec<BasisLevel>> {
    (1..=n).map(enumerate_w).collect()
}

pub fn enumerate_w_restricted_upto(n: u32) -> Result<Vec<BasisLevel>> {
    (1..=n).map(enumerate_w_restricted).collect()
}

/// `W_{n+1} = [v_{n-1}, W_n] ∪ [v_{n-2}, W_n]`, computed with the bracket
/// engine. Every bracket must produce exactly one monomial.
pub fn build_w_recursive(n: u32) -> Result<BasisLevel> {
    if n < 3 {
        return Err(Error::NotStandard(alloc::format!("recursion needs n >= 3, got {n}")));
    }
    let level = enumerate_w(n)?;
    let mut out = Vec::with_capacity(2 * level.monomials.len());
    for k in [n - 1, n - 2] {
        let v = Monomial::v(k);
        for &w in &level.monomials {
            let b = bracket_monomials(v, w);
            match b.as_monomial() {
                Some(m) => out.push(m),
                None => {
                    return Err(Error::NotStandard(alloc::format!("[v{k}, {w}] = {b}")));
                }
            }
        }
    }
    out.sort_unstable();
    Ok(BasisLevel { n: n + 1, kind: BasisKind::Lie, monomials: out })
}

/// Figure-1 colouring of a standard monomial of length `n >= 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fig1Colour {
    /// Arises as `[v_{n-2}, W_{n-1}]` (no `t_{n-4}` in the tail).
    Green,
    /// Arises as `[v_{n-3}, W_{n-1}]` (`t_{n-4}` in the tail).
    Blue,
}

pub fn classify_fig1(m: Monomial) -> Result<Fig1Colour> {
    let n = m.pivot();
    if m.classify() != BasisClass::Standard || n < 4 {
        return Err(Error::NotStandard(alloc::format!("{m}")));
    }
    Ok(if m.tail().contains(n - 4) { Fig1Colour::Blue } else { Fig1Colour::Green })
}

/// Index sets into the flattened `W_{<=n}` (levels in order, each by tail
/// mask) realising `W_{<=n} = {v_1} ∪ τ(W_{<=n-1}) ∪ t_0 τ(W_{<=n-1} ∖ {v_1, v_2})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub head: Option<usize>,
    pub shifted: Vec<usize>,
    pub t0_shifted: Vec<usize>,
}

/// Position of a standard monomial in the flattened `W_{<=n}`.
pub fn flat_index(m: Monomial) -> usize {
    let n = m.pivot();
    (cumulative_size(n - 1) + m.tail().mask() as u64) as usize
}

pub fn decompose_w(n: u32) -> Result<Decomposition> {
    if n < 2 {
        return Err(Error::NotStandard(alloc::format!("decomposition needs n >= 2, got {n}")));
    }
    check_level(n)?;
    let mut shifted = Vec::new();
    let mut t0_shifted = Vec::new();
    for k in 1..n {
        for_each_standard(k, |w| {
            let s = tau_monomial(w, 1);
            shifted.push(flat_index(s));
            if k >= 3 {
                let t = Monomial::raw(s.tail().mul(RingMonomial::range(0, 0)).unwrap(), s.pivot());
                t0_shifted.push(flat_index(t));
            }
        })?;
    }
    Ok(Decomposition { head: Some(0), shifted, t0_shifted })
}
