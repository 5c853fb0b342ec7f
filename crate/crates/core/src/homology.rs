//! The Chevalley–Eilenberg complex of the Lie algebra, sliced by
//! multidegree, with GF(2) differentials and homology dimensions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::basis::for_each_standard;
use crate::calculus::bracket_monomials;
use crate::element::Monomial;
use crate::gf2::BitMatrix;
use crate::golden::GoldenInt;
use crate::grading::{gr, lattice_in_strip, weight_coords, wt, Multidegree};
use crate::series::{depth_for_degree, euler_product, LatticeSeries};

/// Basis monomials of total degree `<= max_total`, in canonical order.
#[derive(Clone, Debug)]
pub struct ChainContext {
    max_total: u32,
    monomials: Vec<Monomial>,
    degrees: Vec<Multidegree>,
    index: BTreeMap<Monomial, usize>,
}

/// A wedge `x_{i_1} ∧ ... ∧ x_{i_n}` as strictly increasing basis positions.
pub type Wedge = Vec<u32>;

/// The multidegree-`(a, b)` slice of the `n`-chains.
#[derive(Clone, Debug)]
pub struct ChainSlice {
    pub n: usize,
    pub degree: Multidegree,
    pub basis: Vec<Wedge>,
}

impl ChainContext {
    pub fn new(max_total: u32) -> Self {
        let mut monomials = Vec::new();
        for k in 1..=depth_for_degree(max_total) {
            for_each_standard(k, |m| {
                if gr(m).total() <= max_total as i64 {
                    monomials.push(m);
                }
            })
            .expect("depth within the enumeration ceiling");
        }
        let degrees = monomials.iter().map(|&m| gr(m)).collect();
        let index = monomials.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        ChainContext { max_total, monomials, degrees, index }
    }

    pub fn max_total(&self) -> u32 {
        self.max_total
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, i: u32) -> Monomial {
        self.monomials[i as usize]
    }

    /// Multidegree of a wedge.
    pub fn wedge_degree(&self, w: &[u32]) -> Multidegree {
        w.iter().fold(Multidegree::default(), |acc, &i| acc + self.degrees[i as usize])
    }

    /// Weight of a wedge, the sum of its factors' weights.
    pub fn wedge_weight(&self, w: &[u32]) -> GoldenInt {
        w.iter().fold(GoldenInt::ZERO, |acc, &i| acc + wt(self.monomials[i as usize]))
    }

    /// All `n`-wedges of basis monomials with multidegree sum `d`.
    pub fn chain_basis(&self, n: usize, d: Multidegree) -> ChainSlice {
        assert!(d.total() <= self.max_total as i64, "slice beyond the context bound");
        let candidates: Vec<u32> =
            (0..self.monomials.len() as u32).filter(|&i| self.degrees[i as usize].le(d)).collect();
        let mut basis = Vec::new();
        let mut stack = Vec::with_capacity(n);
        self.extend(&candidates, 0, n, d, &mut stack, &mut basis);
        ChainSlice { n, degree: d, basis }
    }

    fn extend(
        &self,
        cand: &[u32],
        from: usize,
        left: usize,
        rest: Multidegree,
        stack: &mut Wedge,
        out: &mut Vec<Wedge>,
    ) {
        if left == 0 {
            if rest == Multidegree::default() {
                out.push(stack.clone());
            }
            return;
        }
        // every factor has total degree at least 1
        if rest.total() < left as i64 {
            return;
        }
        for (k, &i) in cand.iter().enumerate().skip(from) {
            let g = self.degrees[i as usize];
            if g.le(rest) {
                stack.push(i);
                self.extend(cand, k + 1, left - 1, rest - g, stack, out);
                stack.pop();
            }
        }
    }

    /// Matrix of `d_n` from the `n`-slice at `d` to the `(n-1)`-slice, one row
    /// per source wedge: `d(x_1 ∧ ... ∧ x_n) = Σ_{s<t} [x_s, x_t] ∧ (rest)`.
    pub fn differential(&self, source: &ChainSlice, target: &ChainSlice) -> BitMatrix {
        assert_eq!(source.n, target.n + 1);
        assert_eq!(source.degree, target.degree);
        let mut m = BitMatrix::zeros(source.basis.len(), target.basis.len());
        if source.n < 2 {
            return m;
        }
        let target_index: BTreeMap<&[u32], usize> =
            target.basis.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
        for (row, w) in source.basis.iter().enumerate() {
            for s in 0..w.len() {
                for t in s + 1..w.len() {
                    let b = bracket_monomials(self.monomial(w[s]), self.monomial(w[t]));
                    for term in &b {
                        let j = *self
                            .index
                            .get(term)
                            .unwrap_or_else(|| panic!("bracket term {term} is not a standard monomial in range"));
                        let j = j as u32;
                        let mut rest: Wedge =
                            w.iter().enumerate().filter(|&(k, _)| k != s && k != t).map(|(_, &x)| x).collect();
                        if rest.contains(&j) {
                            continue;
                        }
                        let pos = rest.partition_point(|&x| x < j);
                        rest.insert(pos, j);
                        let col = target_index[rest.as_slice()];
                        m.toggle(row, col);
                    }
                }
            }
        }
        m
    }
}

/// Dimensions of chains, ranks of differentials and homology at one lattice point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceHomology {
    pub degree: Multidegree,
    /// `dim C_n` for `n = 0 ..= a + b`.
    pub chain_dims: Vec<usize>,
    /// `rank d_n` for `n = 0 ..= a + b + 1` (`d_0 = d_1 = 0`).
    pub ranks: Vec<usize>,
    /// `dim H_n` for `n = 0 ..= a + b`.
    pub homology: Vec<usize>,
    /// Whether `d_{n-1} ∘ d_n = 0` held on every pair of consecutive differentials.
    pub d_squared_zero: bool,
}

impl SliceHomology {
    pub fn euler(&self) -> i64 {
        self.homology.iter().enumerate().map(|(n, &h)| if n % 2 == 0 { h as i64 } else { -(h as i64) }).sum()
    }

    pub fn chain_euler(&self) -> i64 {
        self.chain_dims.iter().enumerate().map(|(n, &h)| if n % 2 == 0 { h as i64 } else { -(h as i64) }).sum()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.homology.get(n).copied().unwrap_or(0)
    }
}

/// Homology of every slice at `(a, b)`.
pub fn slice_homology(ctx: &ChainContext, d: Multidegree) -> SliceHomology {
    let top = d.total() as usize;
    let slices: Vec<ChainSlice> = (0..=top + 1).map(|n| ctx.chain_basis(n, d)).collect();
    let mut ranks = alloc::vec![0usize; top + 2];
    let mut d_squared_zero = true;
    let mut prev: Option<BitMatrix> = None;
    for n in 1..=top + 1 {
        let m = ctx.differential(&slices[n], &slices[n - 1]);
        ranks[n] = m.rank();
        if let Some(p) = &prev {
            // rows of d_n are images in C_{n-1}; composing with d_{n-1}
            if !m.mul(p).is_zero() {
                d_squared_zero = false;
            }
        }
        prev = Some(m);
    }
    let chain_dims: Vec<usize> = slices[..=top].iter().map(|s| s.basis.len()).collect();
    let homology = (0..=top).map(|n| chain_dims[n] - ranks[n] - ranks[n + 1]).collect();
    SliceHomology { degree: d, chain_dims, ranks, homology, d_squared_zero }
}

pub fn homology_dim(ctx: &ChainContext, n: usize, d: Multidegree) -> usize {
    slice_homology(ctx, d).dim(n)
}

/// Homology of all slices with `a + b <= frontier`.
#[derive(Clone, Debug)]
pub struct HomologyTable {
    pub frontier: u32,
    pub slices: BTreeMap<(i64, i64), SliceHomology>,
}

impl HomologyTable {
    pub fn compute(frontier: u32) -> Self {
        let ctx = ChainContext::new(frontier);
        let mut slices = BTreeMap::new();
        for total in 0..=frontier as i64 {
            for a in 0..=total {
                let d = Multidegree::new(a, total - a);
                slices.insert((d.a, d.b), slice_homology(&ctx, d));
            }
        }
        HomologyTable { frontier, slices }
    }

    pub fn dim(&self, n: usize, a: i64, b: i64) -> usize {
        self.slices.get(&(a, b)).map_or(0, |s| s.dim(n))
    }

    /// Nonzero `(n, a, b, dim)` entries.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, i64, usize)> + '_ {
        self.slices.iter().flat_map(|(&(a, b), s)| {
            s.homology.iter().enumerate().filter(|(_, &h)| h > 0).map(move |(n, &h)| (n, a, b, h))
        })
    }

    pub fn d_squared_zero(&self) -> bool {
        self.slices.values().all(|s| s.d_squared_zero)
    }

    /// Lattice points where the alternating homology sum differs from the
    /// Euler product coefficient.
    pub fn euler_mismatches(&self, euler: &LatticeSeries) -> Vec<(i64, i64)> {
        self.slices
            .iter()
            .filter(|(&(a, b), s)| euler.coeff(a, b).to_i64() != Some(s.euler()))
            .map(|(&k, _)| k)
            .collect()
    }

    /// Nonzero entries outside the strip `λx - λ³n < y < λx + λ²n` (`n >= 1`).
    pub fn strip_violations(&self) -> Vec<(usize, i64, i64)> {
        self.entries()
            .filter(|&(n, a, b, _)| n >= 1 && !lattice_in_strip(Multidegree::new(a, b), n as i64))
            .map(|(n, a, b, _)| (n, a, b))
            .collect()
    }

    /// Computed slices that lie outside the `n`-strip (where homology must vanish).
    pub fn outside_strip_points(&self, n: usize) -> usize {
        self.slices.keys().filter(|&&(a, b)| !lattice_in_strip(Multidegree::new(a, b), n as i64)).count()
    }

    /// `Σ_{a+b <= d} dim H_{n,(a,b)}` for `d = 0 ..= frontier`.
    pub fn accumulation(&self, n: usize) -> Vec<usize> {
        let mut per = alloc::vec![0usize; self.frontier as usize + 1];
        for (&(a, b), s) in &self.slices {
            per[(a + b) as usize] += s.dim(n);
        }
        let mut acc = 0;
        per.iter()
            .map(|&x| {
                acc += x;
                acc
            })
            .collect()
    }
}

/// Compares homology against the Euler product at one lattice point.
pub fn euler_crosscheck(ctx: &ChainContext, d: Multidegree) -> bool {
    let e = euler_product(d.total() as u32);
    e.coeff(d.a, d.b).to_i64() == Some(slice_homology(ctx, d).euler())
}

/// Partial sums of `dim H_2` by total degree.
pub fn h2_accumulation(frontier: u32) -> Vec<usize> {
    HomologyTable::compute(frontier).accumulation(2)
}

/// One point of the envelope data: weight coordinates of a lattice point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnvelopePoint {
    pub a: i64,
    pub b: i64,
    pub xi: f64,
    pub eta: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnvelopeFit {
    pub points: Vec<EnvelopePoint>,
    /// Smallest `C` with `|η| <= C ξ^θ` on all points, `θ = log_{2λ} 2`.
    pub constant: f64,
    /// Least-squares slope of `ln max|η|` against `ln ξ` over the upper hull
    /// of points grouped by total degree.
    pub exponent: Option<f64>,
}

/// Envelope data for a set of lattice points, e.g. the support of the Euler
/// characteristic or of the homology.
pub fn paraboloid_report(points: impl IntoIterator<Item = (i64, i64)>) -> EnvelopeFit {
    let theta = crate::grading::theta();
    let pts: Vec<EnvelopePoint> = points
        .into_iter()
        .filter(|&(a, b)| a + b > 0)
        .map(|(a, b)| {
            let (xi, eta) = weight_coords(Multidegree::new(a, b));
            EnvelopePoint { a, b, xi: xi.to_f64(), eta: eta.to_f64() }
        })
        .collect();
    let constant = pts.iter().map(|p| libm::fabs(p.eta) / libm::pow(p.xi, theta)).fold(0.0, f64::max);
    let mut best: BTreeMap<i64, (f64, f64)> = BTreeMap::new();
    for p in &pts {
        let e = best.entry(p.a + p.b).or_insert((p.xi, 0.0));
        if libm::fabs(p.eta) > e.1 {
            *e = (p.xi, libm::fabs(p.eta));
        }
    }
    let samples: Vec<(f64, f64)> =
        best.values().filter(|&&(_, y)| y > 0.0).map(|&(x, y)| (libm::log(x), libm::log(y))).collect();
    let exponent = (samples.len() >= 2).then(|| {
        let n = samples.len() as f64;
        let mx = samples.iter().map(|s| s.0).sum::<f64>() / n;
        let my = samples.iter().map(|s| s.1).sum::<f64>() / n;
        let sxy: f64 = samples.iter().map(|s| (s.0 - mx) * (s.1 - my)).sum();
        let sxx: f64 = samples.iter().map(|s| (s.0 - mx) * (s.0 - mx)).sum();
        sxy / sxx
    });
    EnvelopeFit { points: pts, constant, exponent }
}
