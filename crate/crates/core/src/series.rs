//! Generating functions on the `Z²` lattice (and in one variable) truncated by
//! total degree: Hilbert series by enumeration and by the functional
//! recursion, the E-operator, and the Euler characteristic.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::basis::{for_each_standard, square_monomial, BasisKind};
use crate::error::{Error, Result};
use crate::grading::{fib, gr, Multidegree};

/// Sparse `Σ c_{a,b} x^a y^b`, keeping only terms with `a + b <= bound`.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LatticeSeries {
    coeffs: BTreeMap<(i64, i64), BigInt>,
    bound: u32,
}

impl LatticeSeries {
    pub fn zero(bound: u32) -> Self {
        LatticeSeries { coeffs: BTreeMap::new(), bound }
    }

    pub fn one(bound: u32) -> Self {
        let mut s = Self::zero(bound);
        s.add_term(0, 0, BigInt::one());
        s
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    fn keeps(&self, a: i64, b: i64) -> bool {
        a + b <= self.bound as i64
    }

    /// Adds `c x^a y^b`; terms beyond the bound are dropped.
    pub fn add_term(&mut self, a: i64, b: i64, c: BigInt) {
        if c.is_zero() || !self.keeps(a, b) {
            return;
        }
        let entry = self.coeffs.entry((a, b)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&(a, b));
        }
    }

    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.coeffs.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// Nonzero terms in `(a, b)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> + '_ {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Truncates to a smaller bound.
    pub fn truncate(&self, bound: u32) -> Self {
        let bound = bound.min(self.bound);
        let coeffs =
            self.coeffs.iter().filter(|(&(a, b), _)| a + b <= bound as i64).map(|(&k, v)| (k, v.clone())).collect();
        LatticeSeries { coeffs, bound }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.truncate(other.bound);
        for (&(a, b), c) in &other.coeffs {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.truncate(other.bound);
        for (&(a, b), c) in &other.coeffs {
            out.add_term(a, b, -c);
        }
        out
    }

    /// Truncated product; the bound is the smaller of the two.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.bound.min(other.bound));
        for (&(a, b), c) in &self.coeffs {
            for (&(p, q), d) in &other.coeffs {
                out.add_term(a + p, b + q, c * d);
            }
        }
        out
    }

    /// The dilatation `h(x^m, y^m)`.
    pub fn dilate(&self, m: u32) -> Self {
        let mut out = Self::zero(self.bound);
        for (&(a, b), c) in &self.coeffs {
            out.add_term(a * m as i64, b * m as i64, c.clone());
        }
        out
    }

    /// Errors unless every term lies in `N₀²`.
    pub fn check_support(&self) -> Result<()> {
        match self.coeffs.keys().find(|&&(a, b)| a < 0 || b < 0) {
            Some(&(a, b)) => Err(Error::LaurentSupport(a, b)),
            None => Ok(()),
        }
    }

    /// Sum of all coefficients.
    pub fn total_mass(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// `h(t, t)`.
    pub fn specialize(&self) -> OneVarSeries {
        let mut out = OneVarSeries::zero(self.bound);
        for (&(a, b), c) in &self.coeffs {
            if a + b >= 0 {
                out.coeffs[(a + b) as usize] += c;
            }
        }
        out
    }
}

impl fmt::Debug for LatticeSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticeSeries(bound {}) {{", self.bound)?;
        for (&(a, b), c) in &self.coeffs {
            write!(f, " ({a},{b}): {c}")?;
        }
        f.write_str(" }")
    }
}

/// Coefficients on the triangle `a, b >= 0, a + b <= bound`.
struct Dense {
    bound: usize,
    cells: Vec<BigInt>,
}

impl Dense {
    fn new(bound: u32) -> Self {
        let n = bound as usize + 1;
        Dense { bound: bound as usize, cells: vec![BigInt::zero(); n * n] }
    }

    fn idx(&self, a: usize, b: usize) -> usize {
        a * (self.bound + 1) + b
    }

    fn at(&self, a: usize, b: usize) -> &BigInt {
        &self.cells[self.idx(a, b)]
    }

    fn at_mut(&mut self, a: usize, b: usize) -> &mut BigInt {
        let i = self.idx(a, b);
        &mut self.cells[i]
    }

    /// Multiplies by `1 / (1 - x^p y^q)`: ascending total degree, in place.
    fn div_one_minus(&mut self, p: usize, q: usize) {
        for total in p + q..=self.bound {
            for a in p..=total - q {
                let b = total - a;
                let prev = self.at(a - p, b - q).clone();
                if !prev.is_zero() {
                    *self.at_mut(a, b) += prev;
                }
            }
        }
    }

    /// Multiplies by `1 - x^p y^q`: descending total degree, in place.
    fn mul_one_minus(&mut self, p: usize, q: usize) {
        for total in (p + q..=self.bound).rev() {
            for a in p..=total - q {
                let b = total - a;
                let prev = self.at(a - p, b - q).clone();
                if !prev.is_zero() {
                    *self.at_mut(a, b) -= prev;
                }
            }
        }
    }

    fn into_series(self) -> LatticeSeries {
        let mut out = LatticeSeries::zero(self.bound as u32);
        for a in 0..=self.bound {
            for b in 0..=self.bound - a {
                out.add_term(a as i64, b as i64, self.at(a, b).clone());
            }
        }
        out
    }
}

/// `Σ c_n t^n` for `0 <= n <= bound`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OneVarSeries {
    coeffs: Vec<BigInt>,
    bound: u32,
}

impl OneVarSeries {
    pub fn zero(bound: u32) -> Self {
        OneVarSeries { coeffs: vec![BigInt::zero(); bound as usize + 1], bound }
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Coefficient of `t^n`; zero beyond the bound.
    pub fn coeff(&self, n: u32) -> BigInt {
        self.coeffs.get(n as usize).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add_term(&mut self, n: u32, c: BigInt) {
        if n <= self.bound {
            self.coeffs[n as usize] += c;
        }
    }

    /// Partial sums `Σ_{k <= n} c_k`.
    pub fn partial_sums(&self) -> Vec<BigInt> {
        let mut acc = BigInt::zero();
        self.coeffs
            .iter()
            .map(|c| {
                acc += c;
                acc.clone()
            })
            .collect()
    }

    /// `∏ 1 / (1 - t^n)^{c_n}` for a series with non-negative coefficients
    /// and no constant term.
    pub fn e_operator(&self) -> Result<OneVarSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm);
        }
        let mut out = OneVarSeries::zero(self.bound);
        out.coeffs[0] = BigInt::one();
        for (n, c) in self.coeffs.iter().enumerate().skip(1) {
            if c.is_negative() {
                return Err(Error::NegativeCoefficient(n as i64, 0));
            }
            let times = c.to_u64().expect("dimension fits in u64");
            for _ in 0..times {
                for k in n..=self.bound as usize {
                    let prev = out.coeffs[k - n].clone();
                    out.coeffs[k] += prev;
                }
            }
        }
        Ok(out)
    }
}

/// Smallest total degree of a monomial in `W_n`: `1` for `n <= 2`,
/// `F_{n-1} + 1` above.
pub fn min_total_degree(n: u32) -> i64 {
    if n <= 2 {
        1
    } else {
        fib(n as i32 - 1) + 1
    }
}

/// Levels `W_1 .. W_depth` contain every basis monomial of total degree
/// `<= bound` (squares included, since `2 F_{n-2} > F_{n-1}` for `n >= 4`).
pub fn depth_for_degree(bound: u32) -> u32 {
    let mut n = 2;
    while min_total_degree(n + 1) <= bound as i64 {
        n += 1;
    }
    n
}

fn square_degree(n: u32) -> Multidegree {
    gr(square_monomial(n))
}

/// `H(W_{<=n})` (or `W̃_{<=n}`) by enumeration, truncated at total degree `bound`.
pub fn hilbert_enumerated(n: u32, kind: BasisKind, bound: u32) -> Result<LatticeSeries> {
    let mut out = LatticeSeries::zero(bound);
    for k in 1..=n {
        if kind == BasisKind::Restricted && k >= 3 {
            let d = square_degree(k);
            out.add_term(d.a, d.b, BigInt::one());
        }
        if min_total_degree(k) > bound as i64 {
            continue;
        }
        let mut counts: BTreeMap<(i64, i64), u64> = BTreeMap::new();
        for_each_standard(k, |m| {
            let d = gr(m);
            if d.total() <= bound as i64 {
                *counts.entry((d.a, d.b)).or_default() += 1;
            }
        })?;
        for ((a, b), c) in counts {
            out.add_term(a, b, BigInt::from(c));
        }
    }
    Ok(out)
}

/// `H(W_{<=n})` from `H(W_{<=2}) = x + y` by iterating
/// `H_{k+1}(x, y) = H_k(y, xy)(1 + x/y) - x²`.
pub fn hilbert_recursive(n: u32, bound: u32) -> Result<LatticeSeries> {
    if n < 2 {
        return Err(Error::NotStandard(alloc::format!("recursion starts at n = 2, got {n}")));
    }
    let mut h = LatticeSeries::zero(bound);
    h.add_term(1, 0, BigInt::one());
    h.add_term(0, 1, BigInt::one());
    for _ in 2..n {
        let mut next = LatticeSeries::zero(bound);
        for ((a, b), c) in h.iter() {
            // (x, y) -> (y, xy), then the factor 1 + x/y
            let (p, q) = (b, a + b);
            next.add_term(p, q, c.clone());
            next.add_term(p + 1, q - 1, c.clone());
        }
        next.add_term(2, 0, -BigInt::one());
        h = next;
    }
    h.check_support()?;
    if let Some(((a, b), _)) = h.iter().find(|(_, c)| c.is_negative()) {
        return Err(Error::NegativeCoefficient(a, b));
    }
    Ok(h)
}

/// `H(𝓛)` up to total degree `bound`.
pub fn hilbert_lie(bound: u32) -> LatticeSeries {
    hilbert_enumerated(depth_for_degree(bound), BasisKind::Lie, bound).expect("depth within the enumeration ceiling")
}

fn check_e_input(h: &LatticeSeries) -> Result<()> {
    h.check_support()?;
    if !h.coeff(0, 0).is_zero() {
        return Err(Error::ConstantTerm);
    }
    if let Some(((a, b), _)) = h.iter().find(|(_, c)| c.is_negative()) {
        return Err(Error::NegativeCoefficient(a, b));
    }
    Ok(())
}

/// `E(h) = ∏_{(a,b)} 1 / (1 - x^a y^b)^{h_{a,b}}`, by geometric factors.
pub fn e_operator(h: &LatticeSeries) -> Result<LatticeSeries> {
    check_e_input(h)?;
    let mut d = Dense::new(h.bound);
    *d.at_mut(0, 0) = BigInt::one();
    for ((a, b), c) in h.iter() {
        let times = c.to_u64().expect("dimension fits in u64");
        for _ in 0..times {
            d.div_one_minus(a as usize, b as usize);
        }
    }
    Ok(d.into_series())
}

/// `E(h) = exp(Σ_{m >= 1} h^{[m]} / m)` in exact rationals: with `G` the
/// exponent and `F = exp(G)` split by total degree, `k F_k = Σ_j j G_j F_{k-j}`.
pub fn e_operator_exp(h: &LatticeSeries) -> Result<LatticeSeries> {
    check_e_input(h)?;
    let bound = h.bound as usize;
    type Layer = BTreeMap<(i64, i64), BigRational>;
    let mut g: Vec<Layer> = vec![Layer::new(); bound + 1];
    for m in 1..=bound as i64 {
        for ((a, b), c) in h.iter() {
            let (p, q) = (a * m, b * m);
            if p + q <= bound as i64 {
                let term = BigRational::new(c.clone(), BigInt::from(m));
                *g[(p + q) as usize].entry((p, q)).or_insert_with(BigRational::zero) += term;
            }
        }
    }
    let mut f: Vec<Layer> = vec![Layer::new(); bound + 1];
    f[0].insert((0, 0), BigRational::one());
    for k in 1..=bound {
        let mut layer = Layer::new();
        for j in 1..=k {
            let weight = BigRational::from_integer(BigInt::from(j));
            for (&(a, b), gc) in &g[j] {
                for (&(p, q), fc) in &f[k - j] {
                    *layer.entry((a + p, b + q)).or_insert_with(BigRational::zero) += &weight * gc * fc;
                }
            }
        }
        let k_inv = BigRational::new(BigInt::one(), BigInt::from(k));
        for v in layer.values_mut() {
            *v *= &k_inv;
        }
        f[k] = layer;
    }
    let mut out = LatticeSeries::zero(h.bound);
    for layer in f {
        for ((a, b), v) in layer {
            if !v.is_integer() {
                return Err(Error::NotStandard(alloc::format!("non-integral coefficient at ({a},{b})")));
            }
            out.add_term(a, b, v.to_integer());
        }
    }
    Ok(out)
}

/// `E(𝓛, x, y) = ∏_{w ∈ W} (1 - x^{Gr_1 w} y^{Gr_2 w})` up to total degree
/// `bound`, from the levels `W_1 .. W_depth`.
pub fn euler_product_with_depth(depth: u32, bound: u32) -> Result<LatticeSeries> {
    let need = depth_for_degree(bound);
    if depth < need {
        return Err(Error::InsufficientTruncation { have: depth, need });
    }
    let h = hilbert_enumerated(need, BasisKind::Lie, bound)?;
    let mut d = Dense::new(bound);
    *d.at_mut(0, 0) = BigInt::one();
    for ((a, b), c) in h.iter() {
        let times = c.to_u64().expect("dimension fits in u64");
        for _ in 0..times {
            d.mul_one_minus(a as usize, b as usize);
        }
    }
    Ok(d.into_series())
}

pub fn euler_product(bound: u32) -> LatticeSeries {
    euler_product_with_depth(depth_for_degree(bound), bound).expect("depth is sufficient by construction")
}

/// Checks `E(𝓛) · E-operator(H(𝓛)) ≡ 1` through total degree `bound`;
/// returns the first offending lattice point.
pub fn euler_inverse_check(bound: u32) -> core::result::Result<(), (i64, i64)> {
    let e = euler_product(bound);
    let u = e_operator(&hilbert_lie(bound)).expect("Hilbert series has non-negative coefficients");
    let prod = e.mul(&u);
    let one = LatticeSeries::one(bound);
    let diff = prod.sub(&one);
    let first = diff.iter().next().map(|(p, _)| p);
    match first {
        None => Ok(()),
        Some(p) => Err(p),
    }
}

/// Number of subsets of `{F_1, .., F_k}` (as a multiset of values) by sum.
fn fib_subset_sums(k: u32) -> Vec<u64> {
    let total: i64 = (1..=k as i32).map(fib).sum();
    let mut ways = vec![0u64; total as usize + 1];
    ways[0] = 1;
    let mut reach = 0usize;
    for j in 1..=k as i32 {
        let f = fib(j) as usize;
        for s in (0..=reach).rev() {
            if ways[s] != 0 {
                ways[s + f] += ways[s];
            }
        }
        reach += f;
    }
    ways
}

/// `H(𝓛, t)` (or of the restricted algebra) up to degree `bound`.
///
/// The total degree of `t_S v_n` is `F_n - Σ_{j ∈ S, j >= 1} F_j`, with
/// `t_0` of degree 0, so each level is a subset-sum count.
pub fn hilbert_one_var(kind: BasisKind, bound: u32) -> Result<OneVarSeries> {
    let mut out = OneVarSeries::zero(bound);
    let depth = depth_for_degree(bound);
    for n in 1..=depth {
        if kind == BasisKind::Restricted && n >= 3 {
            let d = square_degree(n).total();
            if d <= bound as i64 {
                out.add_term(d as u32, BigInt::one());
            }
        }
        if n <= 3 {
            out.add_term(fib(n as i32) as u32, BigInt::one());
            continue;
        }
        let fn_ = fib(n as i32);
        let ways = fib_subset_sums(n - 4);
        for (s, &w) in ways.iter().enumerate() {
            let deg = fn_ - s as i64;
            if w != 0 && deg <= bound as i64 {
                // t_0 is present or absent independently
                out.add_term(deg as u32, BigInt::from(2 * w));
            }
        }
    }
    Ok(out)
}

/// One row of the enveloping-growth table.
#[derive(Clone, Debug, PartialEq)]
pub struct EnvelopeRow {
    pub n: u32,
    /// `dim U_n`.
    pub dim: BigInt,
    /// `γ_U(n) = Σ_{k <= n} dim U_k`.
    pub gamma: BigInt,
    /// `ln ln γ_U(n) / ln n`, when defined.
    pub theta_hat: Option<f64>,
}

/// Lower-bound witness: PBW products of distinct elements of `W_m` give
/// `γ_U(n) >= 2^{|W_m|}` once `n >= Σ_{w ∈ W_m} deg w`.
#[derive(Clone, Debug, PartialEq)]
pub struct EnvelopeWitness {
    pub level: u32,
    pub level_degree_sum: u64,
    pub log2_lower: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnvelopeReport {
    pub rows: Vec<EnvelopeRow>,
    pub witness: Option<EnvelopeWitness>,
}

fn ln_big(x: &BigInt) -> f64 {
    // ln x = ln(mantissa) + shift · ln 2, robust beyond f64 range
    let bits = x.bits();
    if bits <= 1000 {
        return libm::log(x.to_f64().unwrap_or(f64::INFINITY));
    }
    let shift = bits - 64;
    let top: BigInt = x >> shift;
    libm::log(top.to_f64().unwrap()) + shift as f64 * core::f64::consts::LN_2
}

/// Enveloping algebra growth for `U(𝓛)` up to degree `bound`.
pub fn enveloping_growth_report(bound: u32) -> Result<EnvelopeReport> {
    let u = hilbert_one_var(BasisKind::Lie, bound)?.e_operator()?;
    let sums = u.partial_sums();
    let rows = (0..=bound)
        .map(|n| {
            let gamma = sums[n as usize].clone();
            let theta_hat = (n >= 2 && gamma > BigInt::one()).then(|| {
                let ll = libm::log(ln_big(&gamma));
                ll / libm::log(n as f64)
            });
            EnvelopeRow { n, dim: u.coeff(n), gamma, theta_hat }
        })
        .collect();
    let mut witness = None;
    for m in 3..=crate::basis::ENUMERATION_CEILING.min(30) {
        let mut sum = 0u64;
        for_each_standard(m, |w| sum += gr(w).total() as u64)?;
        if sum > bound as u64 {
            break;
        }
        let log2_lower = crate::basis::level_size(m);
        let gamma = &sums[sum as usize];
        let holds = gamma >= &(BigInt::one() << log2_lower);
        witness = Some(EnvelopeWitness { level: m, level_degree_sum: sum, log2_lower, holds });
    }
    Ok(EnvelopeReport { rows, witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(bound: u32, terms: &[((i64, i64), i64)]) -> LatticeSeries {
        let mut s = LatticeSeries::zero(bound);
        for &((a, b), c) in terms {
            s.add_term(a, b, BigInt::from(c));
        }
        s
    }

    #[test]
    fn enumerated_small() {
        assert_eq!(hilbert_enumerated(2, BasisKind::Lie, 10).unwrap(), series(10, &[((1, 0), 1), ((0, 1), 1)]));
        assert_eq!(
            hilbert_enumerated(3, BasisKind::Lie, 10).unwrap(),
            series(10, &[((1, 0), 1), ((0, 1), 1), ((1, 1), 1)])
        );
        for n in 3..=12 {
            let h = hilbert_enumerated(n, BasisKind::Lie, 1000).unwrap();
            assert_eq!(h.total_mass(), BigInt::from(1 + (1u64 << (n - 2))));
        }
    }

    #[test]
    fn recursion_one_step_and_agreement() {
        assert_eq!(hilbert_recursive(3, 10).unwrap(), series(10, &[((1, 0), 1), ((0, 1), 1), ((1, 1), 1)]));
        for n in 2..=13 {
            assert_eq!(
                hilbert_recursive(n, 30).unwrap(),
                hilbert_enumerated(n, BasisKind::Lie, 30).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn e_operator_examples() {
        let xy = series(2, &[((1, 0), 1), ((0, 1), 1)]);
        let expect = series(2, &[((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((2, 0), 1), ((1, 1), 1), ((0, 2), 1)]);
        assert_eq!(e_operator(&xy).unwrap(), expect);
        let u = e_operator(&hilbert_lie(2)).unwrap();
        assert_eq!(u, series(2, &[((0, 0), 1), ((1, 0), 1), ((0, 1), 1), ((2, 0), 1), ((1, 1), 2), ((0, 2), 1)]));
        assert_eq!(xy.dilate(2), series(2, &[((2, 0), 1), ((0, 2), 1)]));
        assert_eq!(e_operator(&series(2, &[((1, 0), -1)])), Err(Error::NegativeCoefficient(1, 0)));
        assert_eq!(e_operator(&series(2, &[((0, 0), 1)])), Err(Error::ConstantTerm));
    }

    #[test]
    fn e_operator_routes_agree() {
        let h = hilbert_lie(14);
        assert_eq!(e_operator(&h).unwrap(), e_operator_exp(&h).unwrap());
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_product(2), series(2, &[((0, 0), 1), ((1, 0), -1), ((0, 1), -1)]));
        assert!(euler_product(2).coeff(1, 1).is_zero());
        assert_eq!(euler_inverse_check(0), Ok(()));
        assert_eq!(euler_inverse_check(2), Ok(()));
        assert_eq!(euler_inverse_check(16), Ok(()));
        assert_eq!(euler_product_with_depth(3, 10), Err(Error::InsufficientTruncation { have: 3, need: 7 }));
    }

    #[test]
    fn depth_for_degree_values() {
        assert_eq!(depth_for_degree(2), 3);
        assert_eq!(depth_for_degree(40), 10);
        assert_eq!(depth_for_degree(6766), 21);
    }

    #[test]
    fn one_variable_matches_specialization() {
        for kind in [BasisKind::Lie, BasisKind::Restricted] {
            let bound = 34;
            let direct = hilbert_one_var(kind, bound).unwrap();
            let lattice = hilbert_enumerated(depth_for_degree(bound), kind, bound).unwrap().specialize();
            assert_eq!(direct, lattice);
        }
        let s = hilbert_one_var(BasisKind::Lie, 10).unwrap();
        assert_eq!(s.coeff(1), BigInt::from(2));
        assert_eq!(s.coeff(2), BigInt::from(1));
    }

    #[test]
    fn one_variable_e_operator_matches_lattice() {
        let bound = 20;
        let lattice = e_operator(&hilbert_lie(bound)).unwrap().specialize();
        let direct = hilbert_one_var(BasisKind::Lie, bound).unwrap().e_operator().unwrap();
        assert_eq!(lattice, direct);
    }

    #[test]
    fn envelope_report_is_monotone() {
        let r = enveloping_growth_report(60).unwrap();
        assert!(r.rows.windows(2).all(|w| w[0].gamma <= w[1].gamma));
        let w = r.witness.unwrap();
        assert!(w.holds);
    }
}
