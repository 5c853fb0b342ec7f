//! Nilpotency of the 2-map: exact indices by iterated squaring, the structure
//! of iterated squares, and the two index estimates.

use alloc::vec::Vec;

use crate::calculus::square;
use crate::element::{Element, Monomial};
use crate::error::{Error, Result};

/// `ln λ / ln(λ²/2) ≈ 1.787`.
pub fn lower_proof_constant() -> f64 {
    let l = crate::golden::LAMBDA_F64;
    libm::log(l) / libm::log(l * l / 2.0)
}

/// `ln λ / ln(2/λ) ≈ 2.27`.
pub fn upper_proof_constant() -> f64 {
    let l = crate::golden::LAMBDA_F64;
    libm::log(l) / libm::log(2.0 / l)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilReport {
    pub element: Element,
    pub min_pivot: u32,
    pub max_pivot: u32,
    /// Minimal `N` with `e^{2^N} = 0`.
    pub index: u32,
    /// `m - n + 2`.
    pub bound: u32,
    /// Largest number of monomials among `e, e^2, e^4, ...`.
    pub peak_monomials: usize,
    /// The senior index `s`: the top pivot when all top-pivot monomials have a
    /// nonempty tail, one more otherwise.
    pub senior: u32,
}

impl NilReport {
    pub fn within_bound(&self) -> bool {
        self.index <= self.bound
    }
}

/// Pivot `s` such that `e = Σ_{j < s} r_j v_j + h v_s` with `h` free of
/// constant terms.
pub fn senior_index(e: &Element) -> Option<u32> {
    let m = e.max_pivot()?;
    let top_has_pure = e.iter().any(|x| x.pivot() == m && x.tail().is_one());
    Some(if top_has_pure { m + 1 } else { m })
}

/// Squares `e` until it vanishes. Fails once more than `cap` squarings are
/// needed or an intermediate result exceeds `monomial_cap` monomials.
pub fn nil_index(e: &Element, cap: u32, monomial_cap: usize) -> Result<NilReport> {
    let (Some(n), Some(m)) = (e.min_pivot(), e.max_pivot()) else {
        return Err(Error::EmptyInput);
    };
    let mut x = e.clone();
    let mut peak = x.len();
    let mut index = 0;
    while !x.is_zero() {
        if index == cap {
            return Err(Error::ExponentCap(cap));
        }
        x = square(&x);
        index += 1;
        if x.len() > monomial_cap {
            return Err(Error::MonomialCap { count: x.len(), cap: monomial_cap });
        }
        peak = peak.max(x.len());
    }
    Ok(NilReport {
        element: e.clone(),
        min_pivot: n,
        max_pivot: m,
        index,
        bound: m - n + 2,
        peak_monomials: peak,
        senior: senior_index(e).unwrap(),
    })
}

/// Checks the shape of `e^{2^k}` for `1 <= k <= steps`: all pivots lie in
/// `[n + 2k, s + k]`, and every monomial at pivot `s + k` has a nonempty tail.
pub fn shift_structure_check(e: &Element, steps: u32) -> bool {
    let (Some(n), Some(s)) = (e.min_pivot(), senior_index(e)) else {
        return true;
    };
    let mut x = e.clone();
    for k in 1..=steps {
        x = square(&x);
        if x.is_zero() {
            return true;
        }
        let ok = x.iter().all(|m: &Monomial| {
            let p = m.pivot();
            p >= n + 2 * k && p <= s + k && (p < s + k || !m.tail().is_one())
        });
        if !ok {
            return false;
        }
    }
    true
}

/// `v_n + v_{n+1} + ... + v_m`.
pub fn pivot_run(n: u32, m: u32) -> Element {
    (n..=m).map(Monomial::v).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub n: u32,
    pub m: u32,
    pub index: u32,
    pub bound: u32,
}

impl ScanRow {
    pub fn tight(&self) -> bool {
        self.index == self.bound
    }
}

/// Exact indices of `v_n + ... + v_m` for `lo <= n <= m <= hi`.
pub fn conjecture_scan(lo: u32, hi: u32, monomial_cap: usize) -> Result<Vec<ScanRow>> {
    let mut rows = Vec::new();
    for n in lo..=hi {
        for m in n..=hi {
            let r = nil_index(&pivot_run(n, m), m - n + 3, monomial_cap)?;
            rows.push(ScanRow { n, m, index: r.index, bound: r.bound });
        }
    }
    Ok(rows)
}

/// Soft checks with the floating constants of the two index estimates:
/// `N < C (m - n + 1)` and `N < C₁ s`, where `N = index - 1` is the last
/// exponent with a nonzero power.
pub fn bound_constants_check(reports: &[NilReport]) -> bool {
    let c = lower_proof_constant();
    let c1 = upper_proof_constant();
    reports.iter().all(|r| {
        let last = r.index.saturating_sub(1) as f64;
        last < c * (r.max_pivot - r.min_pivot + 1) as f64 && last < c1 * r.senior as f64
    })
}
