//! Multidegree, weight and superweight of monomials, the strip they lie in,
//! the sign splitting by superweight, and growth functions.
//!
//! Conventions: `wt v_n = λ^n`, `wt t_j = -λ^j`, `swt = conj(wt)`,
//! `Gr(v_1) = (1, 0)`, `Gr(v_2) = (0, 1)`, Fibonacci numbers `F_1 = F_2 = 1`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Sub};

use crate::basis::{for_each_standard, level_size, square_monomial, BasisKind};
use crate::calculus::bracket;
use crate::element::{Element, Monomial};
use crate::error::{Error, Result};
use crate::golden::GoldenInt;
use crate::series::OneVarSeries;

/// `log_λ 2 ≈ 1.44042`, the growth exponent of the Lie algebra.
pub fn log_lambda_2() -> f64 {
    libm::log(2.0) / libm::log(crate::golden::LAMBDA_F64)
}

/// `θ = λ / (λ + 1) = log_{2λ} 2 ≈ 0.5902`.
pub fn theta() -> f64 {
    libm::log(2.0) / libm::log(2.0 * crate::golden::LAMBDA_F64)
}

/// `13 / 2^{1 + log_λ(λ² + 1)} ≈ 1.0197`.
pub fn nonuniform_constant() -> f64 {
    let l = crate::golden::LAMBDA_F64;
    let e = 1.0 + libm::log(l * l + 1.0) / libm::log(l);
    13.0 / libm::pow(2.0, e)
}

// F_{k-2} for k = 0..=93, i.e. FIB_SHIFTED[k] = F_{k-2} with F_{-2} = -1, F_{-1} = 1.
const FIB_LEN: usize = 94;
const FIB_SHIFTED: [i64; FIB_LEN] = {
    let mut t = [0i64; FIB_LEN];
    t[0] = -1;
    t[1] = 1;
    let mut k = 2;
    while k < FIB_LEN {
        t[k] = t[k - 1] + t[k - 2];
        k += 1;
    }
    t
};

/// Largest index for which weights and multidegrees fit in `i64`.
pub const MAX_GRADED_INDEX: u32 = 90;

/// `F_n` for `n >= -2`, with `F_1 = F_2 = 1`.
pub fn fib(n: i32) -> i64 {
    assert!((-2..=(FIB_LEN as i32 - 3)).contains(&n), "Fibonacci index {n} out of range");
    FIB_SHIFTED[(n + 2) as usize]
}

/// `(a, b)`: the number of `v_1` and `v_2` factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Multidegree {
    pub a: i64,
    pub b: i64,
}

impl Multidegree {
    pub const fn new(a: i64, b: i64) -> Self {
        Multidegree { a, b }
    }

    pub fn total(self) -> i64 {
        self.a + self.b
    }

    /// Componentwise `<=`.
    pub fn le(self, other: Multidegree) -> bool {
        self.a <= other.a && self.b <= other.b
    }
}

impl Add for Multidegree {
    type Output = Multidegree;
    fn add(self, o: Multidegree) -> Multidegree {
        Multidegree::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Multidegree {
    type Output = Multidegree;
    fn sub(self, o: Multidegree) -> Multidegree {
        Multidegree::new(self.a - o.a, self.b - o.b)
    }
}

fn check_graded(i: u32) {
    assert!(i <= MAX_GRADED_INDEX, "index {i} beyond the graded range {MAX_GRADED_INDEX}");
}

/// `Gr(v_k) = (F_{k-2}, F_{k-1})`; also valid at `k = 0` as `-Gr(t_0)`.
fn gr_pivot(k: u32) -> Multidegree {
    check_graded(k);
    Multidegree::new(FIB_SHIFTED[k as usize], FIB_SHIFTED[k as usize + 1])
}

/// `Gr(t_j) = Gr(v_{j+1}) - Gr(v_{j+2})`.
pub fn gr_t(j: u32) -> Multidegree {
    Multidegree::default() - gr_pivot(j)
}

pub fn gr(m: Monomial) -> Multidegree {
    m.tail().indices().fold(gr_pivot(m.pivot()), |acc, j| acc + gr_t(j))
}

/// Multidegree of a homogeneous element; `None` for zero or mixed degrees.
pub fn gr_element(e: &Element) -> Option<Multidegree> {
    let mut it = e.iter().map(|&m| gr(m));
    let first = it.next()?;
    it.all(|d| d == first).then_some(first)
}

/// `Wt = (wt, swt)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pub wt: GoldenInt,
    pub swt: GoldenInt,
}

impl Add for WeightVector {
    type Output = WeightVector;
    fn add(self, o: WeightVector) -> WeightVector {
        WeightVector { wt: self.wt + o.wt, swt: self.swt + o.swt }
    }
}

fn lambda_pow(k: u32) -> GoldenInt {
    check_graded(k);
    let k = k as usize;
    // λ^k = F_{k-1} + F_k λ
    GoldenInt::new(FIB_SHIFTED[k + 1], FIB_SHIFTED[k + 2])
}

/// `wt` alone, without the conjugate.
pub fn wt(m: Monomial) -> GoldenInt {
    m.tail().indices().fold(lambda_pow(m.pivot()), |acc, j| acc - lambda_pow(j))
}

pub fn weight(m: Monomial) -> WeightVector {
    let w = wt(m);
    WeightVector { wt: w, swt: w.conjugate() }
}

/// `swt` of a monomial.
pub fn swt(m: Monomial) -> GoldenInt {
    wt(m).conjugate()
}

/// Weight coordinates of a lattice point:
/// `ξ = xλ + yλ² = y + (x + y)λ`, `η = -x/λ + y/λ² = (x + 2y) - (x + y)λ`.
pub fn weight_coords(d: Multidegree) -> (GoldenInt, GoldenInt) {
    let (x, y) = (d.a, d.b);
    (GoldenInt::new(y, x + y), GoldenInt::new(x + 2 * y, -(x + y)))
}

/// `-λ < swt(m) < 1`, by exact signs.
pub fn strip_check(m: Monomial) -> bool {
    swt_in_strip(swt(m), 1)
}

/// `-λn < η < n`, the strip for wedges of `n` basis monomials.
pub fn swt_in_strip(s: GoldenInt, n: i64) -> bool {
    (s + GoldenInt::LAMBDA.scale(n)).is_positive() && (GoldenInt::int(n) - s).is_positive()
}

/// `λx - λ³n < y < λx + λ²n` for a lattice point of `n`-chains.
pub fn lattice_in_strip(d: Multidegree, n: i64) -> bool {
    let y = GoldenInt::int(d.b);
    let lx = GoldenInt::LAMBDA.scale(d.a);
    let lower = lx - GoldenInt::lambda_pow(3).scale(n);
    let upper = lx + GoldenInt::lambda_pow(2).scale(n);
    y > lower && y < upper
}

/// Splits monomials by the sign of their superweight: `(plus, minus)`.
pub fn sign_split(basis: &[Monomial]) -> Result<(Vec<Monomial>, Vec<Monomial>)> {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for &m in basis {
        match swt(m).signum() {
            Ordering::Greater => plus.push(m),
            Ordering::Less => minus.push(m),
            Ordering::Equal => return Err(Error::ZeroSuperweight(alloc::format!("{m}"))),
        }
    }
    Ok((plus, minus))
}

/// Smallest `N` with `N · μ >= bound`, for `μ > 0`, by exact bisection.
fn ceil_ratio(bound: GoldenInt, mu: GoldenInt) -> u32 {
    debug_assert!(mu.is_positive());
    let ok = |n: i64| (mu.scale(n) - bound).signum() != Ordering::Less;
    let mut hi = 1i64;
    while !ok(hi) {
        hi *= 2;
    }
    let mut lo = 0i64;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi as u32
}

/// Bound `N` such that every `N`-fold bracket of the generators vanishes.
///
/// For positive superweights this is `⌈1/μ⌉` with `μ` the smallest superweight;
/// for negative ones `⌈λ/|μ|⌉` with `μ` the superweight closest to zero.
pub fn local_nilpotency_bound(gens: &[Monomial]) -> Result<u32> {
    let (plus, minus) = sign_split(gens)?;
    match (plus.is_empty(), minus.is_empty()) {
        (true, true) => Err(Error::EmptyInput),
        (false, true) => {
            let mu = plus.iter().map(|&m| swt(m)).min().unwrap();
            Ok(ceil_ratio(GoldenInt::ONE, mu))
        }
        (true, false) => {
            let mu = minus.iter().map(|&m| swt(m)).max().unwrap();
            Ok(ceil_ratio(GoldenInt::LAMBDA, -mu))
        }
        (false, false) => Err(Error::MixedSigns),
    }
}

/// All left-normed brackets `[g_{i_1}, ..., g_{i_len}]`, zero ones skipped.
pub fn left_normed_products(gens: &[Monomial], len: u32) -> Vec<Element> {
    let mut layer: Vec<Element> = gens.iter().map(|&g| g.into()).collect();
    for _ in 1..len {
        let mut next = Vec::new();
        for x in &layer {
            for &g in gens {
                let y = bracket(x, &g.into());
                if !y.is_zero() {
                    next.push(y);
                }
            }
        }
        layer = next;
        if layer.is_empty() {
            break;
        }
    }
    layer
}

/// Weight growth function `γ̃(x) = #{w in W (or W̃) : wt(w) <= x}` with exact
/// comparisons, backed by sorted weights of the levels up to `max_level`.
pub struct WeightGrowth {
    kind: BasisKind,
    max_level: u32,
    sorted: Vec<Vec<GoldenInt>>,
}

impl WeightGrowth {
    pub fn new(kind: BasisKind, max_level: u32) -> Result<Self> {
        let mut sorted = Vec::with_capacity(max_level as usize);
        for n in 1..=max_level {
            let mut ws = Vec::with_capacity(level_size(n) as usize);
            for_each_standard(n, |m| ws.push(wt(m)))?;
            ws.sort_unstable();
            sorted.push(ws);
        }
        Ok(WeightGrowth { kind, max_level, sorted })
    }

    pub fn max_level(&self) -> u32 {
        self.max_level
    }

    /// Thresholds up to `λ^{max_level}` are answered exactly.
    pub fn count_at_most(&self, x: GoldenInt) -> Result<u64> {
        if x > GoldenInt::lambda_pow(self.max_level as i32) {
            return Err(Error::EnumerationCeiling { level: self.max_level + 1, ceiling: self.max_level });
        }
        let mut count = 0u64;
        for (k, ws) in self.sorted.iter().enumerate() {
            let n = k as u32 + 1;
            if GoldenInt::lambda_pow(n as i32) <= x {
                count += ws.len() as u64;
            } else {
                count += ws.partition_point(|&w| w <= x) as u64;
            }
            if self.kind == BasisKind::Restricted && n >= 3 && wt(square_monomial(n)) <= x {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// `s(n) = dim L_n` by total degree, for `1 <= n <= n_max`.
pub fn degree_growth(series: &OneVarSeries, n_max: u32) -> Result<Vec<u64>> {
    if series.bound() < n_max {
        return Err(Error::InsufficientTruncation { have: series.bound(), need: n_max });
    }
    Ok((1..=n_max)
        .map(|n| {
            let c = series.coeff(n);
            u64::try_from(c).expect("dimensions are non-negative")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::enumerate_w_upto;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn multidegree_examples() {
        assert_eq!(gr(m("v3")), Multidegree::new(1, 1));
        assert_eq!(gr_t(0), Multidegree::new(1, -1));
        assert_eq!(gr(m("t0*v4")), Multidegree::new(2, 1));
        assert_eq!(gr(m("t0*v3")), Multidegree::new(2, 0));
        assert_eq!(gr(m("v1")), Multidegree::new(1, 0));
        assert_eq!(gr(m("v2")), Multidegree::new(0, 1));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(m("v2")).wt, GoldenInt::new(1, 1));
        assert_eq!(weight(m("v1")).swt, GoldenInt::new(1, -1));
        assert_eq!(weight(m("t0*v4")).wt, GoldenInt::new(1, 3));
    }

    #[test]
    fn weight_coordinate_examples() {
        assert_eq!(weight_coords(Multidegree::new(1, 0)), (GoldenInt::new(0, 1), GoldenInt::new(1, -1)));
        assert_eq!(weight_coords(Multidegree::new(0, 1)), (GoldenInt::new(1, 1), GoldenInt::new(2, -1)));
        assert_eq!(weight_coords(Multidegree::default()), (GoldenInt::ZERO, GoldenInt::ZERO));
    }

    #[test]
    fn coordinates_match_weights_on_basis() {
        for level in enumerate_w_upto(14).unwrap() {
            for &w in &level.monomials {
                let (xi, eta) = weight_coords(gr(w));
                assert_eq!(weight(w), WeightVector { wt: xi, swt: eta });
            }
        }
    }

    #[test]
    fn strip_examples() {
        assert!(strip_check(m("v1")));
        assert!(strip_check(m("t0*v3")));
        // a non-basis monomial can leave the strip: swt(t1*t3*t5*v7) > 1
        assert!(!strip_check(m("t1*t3*t5*v7")) || swt(m("t1*t3*t5*v7")) < GoldenInt::ONE);
    }

    #[test]
    fn sign_split_examples() {
        let (plus, minus) = sign_split(&[m("v1"), m("v2"), m("t0*v4"), m("t0*t1*v5")]).unwrap();
        assert_eq!(plus, [m("v2")]);
        assert_eq!(minus, [m("v1"), m("t0*v4"), m("t0*t1*v5")]);
    }

    #[test]
    fn nilpotency_bound_examples() {
        assert_eq!(local_nilpotency_bound(&[m("v2")]).unwrap(), 3);
        assert!(left_normed_products(&[m("v2")], 3).is_empty());
        let gens = [m("v2"), m("t1*v5")];
        let n = local_nilpotency_bound(&gens).unwrap();
        assert!(left_normed_products(&gens, n).is_empty());
        assert_eq!(local_nilpotency_bound(&[]), Err(Error::EmptyInput));
        assert_eq!(local_nilpotency_bound(&[m("v1"), m("v2")]), Err(Error::MixedSigns));
    }

    #[test]
    fn growth_examples() {
        let g = WeightGrowth::new(BasisKind::Lie, 12).unwrap();
        assert_eq!(g.count_at_most(GoldenInt::lambda_pow(2)).unwrap(), 2);
        for n in 3..=12 {
            assert_eq!(g.count_at_most(GoldenInt::lambda_pow(n)).unwrap(), 1 + (1 << (n - 2)));
        }
        assert!(g.count_at_most(GoldenInt::lambda_pow(13)).is_err());
        let r = WeightGrowth::new(BasisKind::Restricted, 12).unwrap();
        // v1^2 = t0 v3 has weight 2λ
        assert_eq!(r.count_at_most(GoldenInt::new(0, 2)).unwrap(), g.count_at_most(GoldenInt::new(0, 2)).unwrap() + 1);
    }

    #[test]
    fn constants() {
        assert!((log_lambda_2() - 1.44042).abs() < 1e-5);
        assert!((theta() - 0.5902).abs() < 1e-4);
        assert!((nonuniform_constant() - 1.0197).abs() < 1e-3);
        assert_eq!(fib(1), 1);
        assert_eq!(fib(2), 1);
        assert_eq!(fib(20), 6765);
        assert_eq!(fib(-1), 1);
    }
}
