//! The free Lie algebra on `x_1, x_2` over GF(2), truncated by degree, and
//! quotients by relations.
//!
//! Lie polynomials are realised inside the free associative algebra, where
//! `[P, Q] = PQ + QP`. A homogeneous polynomial of degree `d` is a bit vector
//! over the `2^d` words of length `d`, word `w_1 ... w_d` (letters `0 = x_1`,
//! `1 = x_2`) sitting at the binary number `w_1 ... w_d`, so bit order is
//! lexicographic order. The Lyndon basis element `P_w` has leading (smallest)
//! word `w`, which makes it triangular with respect to this order.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::calculus::{bracket, power_2k, tau, DEFAULT_MONOMIAL_CAP};
use crate::element::Element;
use crate::gf2::{leading_bit, xor_into, Echelon};

/// Largest supported degree (`2^16` words).
pub const MAX_FREE_DEGREE: u32 = 16;

/// A bracket expression in the generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum LieTree {
    /// `x_1` is `Gen(0)`, `x_2` is `Gen(1)`.
    Gen(u8),
    Bracket(Box<LieTree>, Box<LieTree>),
}

impl LieTree {
    pub fn x(i: u8) -> LieTree {
        assert!(i == 1 || i == 2, "generators are x1 and x2");
        LieTree::Gen(i - 1)
    }

    pub fn bracket(a: LieTree, b: LieTree) -> LieTree {
        LieTree::Bracket(Box::new(a), Box::new(b))
    }

    /// Left-normed `[g_1, g_2, ..., g_k]` of generators given as `1`/`2`.
    pub fn left_normed(gens: &[u8]) -> LieTree {
        let mut it = gens.iter().map(|&g| LieTree::x(g));
        let first = it.next().expect("nonempty bracket");
        it.fold(first, LieTree::bracket)
    }

    pub fn degree(&self) -> u32 {
        match self {
            LieTree::Gen(_) => 1,
            LieTree::Bracket(a, b) => a.degree() + b.degree(),
        }
    }

    /// `(x_1-degree, x_2-degree)`.
    pub fn multidegree(&self) -> (u32, u32) {
        match self {
            LieTree::Gen(0) => (1, 0),
            LieTree::Gen(_) => (0, 1),
            LieTree::Bracket(a, b) => {
                let (p, q) = a.multidegree();
                let (r, s) = b.multidegree();
                (p + r, q + s)
            }
        }
    }

    /// Image in the free associative algebra.
    pub fn to_poly(&self) -> LiePoly {
        match self {
            LieTree::Gen(g) => LiePoly::generator(*g),
            LieTree::Bracket(a, b) => a.to_poly().commutator(&b.to_poly()),
        }
    }

    /// Evaluates under `x_i ↦ assignment[i - 1]` with the engine's bracket.
    pub fn evaluate(&self, assignment: &[Element; 2]) -> Element {
        match self {
            LieTree::Gen(g) => assignment[*g as usize].clone(),
            LieTree::Bracket(a, b) => bracket(&a.evaluate(assignment), &b.evaluate(assignment)),
        }
    }
}

impl fmt::Display for LieTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieTree::Gen(g) => write!(f, "x{}", g + 1),
            LieTree::Bracket(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

impl fmt::Debug for LieTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A homogeneous element of the free associative algebra on two letters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LiePoly {
    degree: u32,
    bits: Vec<u64>,
}

impl LiePoly {
    pub fn zero(degree: u32) -> Self {
        assert!(degree <= MAX_FREE_DEGREE, "degree {degree} beyond {MAX_FREE_DEGREE}");
        LiePoly { degree, bits: vec![0; (1usize << degree).div_ceil(64)] }
    }

    fn generator(g: u8) -> Self {
        let mut p = LiePoly::zero(1);
        p.toggle(g as usize);
        p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn bits(&self) -> &[u64] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<u64> {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    fn toggle(&mut self, word: usize) {
        self.bits[word / 64] ^= 1 << (word % 64);
    }

    /// Words present, ascending.
    pub fn words(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| i * 64 + b))
    }

    /// Smallest word present.
    pub fn leading_word(&self) -> Option<usize> {
        leading_bit(&self.bits)
    }

    pub fn add_assign(&mut self, other: &LiePoly) {
        assert_eq!(self.degree, other.degree);
        xor_into(&mut self.bits, &other.bits);
    }

    /// `PQ + QP`.
    pub fn commutator(&self, other: &LiePoly) -> LiePoly {
        let (p, q) = (self.degree, other.degree);
        let mut out = LiePoly::zero(p + q);
        let left: Vec<usize> = self.words().collect();
        let right: Vec<usize> = other.words().collect();
        for &u in &left {
            for &v in &right {
                out.toggle(u << q | v);
                out.toggle(v << p | u);
            }
        }
        out
    }
}

/// Word of length `d` given by its code, as a letter list.
fn letters(code: usize, d: u32) -> Vec<u8> {
    (0..d).rev().map(|i| (code >> i & 1) as u8).collect()
}

fn code(letters: &[u8]) -> usize {
    letters.iter().fold(0, |acc, &l| acc << 1 | l as usize)
}

/// A word is Lyndon iff it is strictly smaller than all its proper rotations.
pub fn is_lyndon(w: &[u8]) -> bool {
    let n = w.len();
    n > 0 && (1..n).all(|k| w < &[&w[k..], &w[..k]].concat()[..])
}

/// Lyndon words of length `d` over `{0, 1}`, in lexicographic order.
pub fn lyndon_words(d: u32) -> Vec<Vec<u8>> {
    (0..1usize << d).map(|c| letters(c, d)).filter(|w| is_lyndon(w)).collect()
}

/// Standard bracketing: `w = uv` with `v` the longest proper Lyndon suffix.
pub fn standard_bracketing(w: &[u8]) -> LieTree {
    if w.len() == 1 {
        return LieTree::Gen(w[0]);
    }
    let split = (1..w.len()).find(|&k| is_lyndon(&w[k..])).expect("a single letter is Lyndon");
    LieTree::bracket(standard_bracketing(&w[..split]), standard_bracketing(&w[split..]))
}

/// `Σ_{e | d} μ(e) 2^{d/e} / d`.
pub fn necklace_count(d: u32) -> u64 {
    fn mobius(mut n: u32) -> i64 {
        let mut result = 1;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                result = -result;
            }
            p += 1;
        }
        if n > 1 {
            result = -result;
        }
        result
    }
    let sum: i64 = (1..=d).filter(|e| d.is_multiple_of(*e)).map(|e| mobius(e) * (1i64 << (d / e))).sum();
    (sum / d as i64) as u64
}

/// The free Lie algebra up to degree `cap`: Lyndon basis per degree.
#[derive(Clone, Debug)]
pub struct FreeLieBasis {
    pub cap: u32,
    /// `levels[d - 1]` holds `(word, bracketing, image)` for Lyndon words of length `d`.
    pub levels: Vec<Vec<(Vec<u8>, LieTree, LiePoly)>>,
}

impl FreeLieBasis {
    pub fn dim(&self, d: u32) -> usize {
        self.levels.get(d as usize - 1).map_or(0, Vec::len)
    }

    /// Coordinates of a Lie polynomial in the Lyndon basis (indices into the
    /// degree level). Returns `None` if `p` is not a Lie polynomial.
    pub fn coordinates(&self, p: &LiePoly) -> Option<Vec<usize>> {
        let level = self.levels.get(p.degree() as usize - 1)?;
        let mut rest = p.clone();
        let mut coords = Vec::new();
        while let Some(lead) = rest.leading_word() {
            let k = level.iter().position(|(w, _, _)| code(w) == lead)?;
            rest.add_assign(&level[k].2);
            coords.push(k);
        }
        coords.sort_unstable();
        Some(coords)
    }
}

pub fn free_lie(cap: u32) -> FreeLieBasis {
    assert!((1..=MAX_FREE_DEGREE).contains(&cap));
    let levels = (1..=cap)
        .map(|d| {
            lyndon_words(d)
                .into_iter()
                .map(|w| {
                    let t = standard_bracketing(&w);
                    let p = t.to_poly();
                    debug_assert_eq!(p.leading_word(), Some(code(&w)));
                    (w, t, p)
                })
                .collect()
        })
        .collect();
    FreeLieBasis { cap, levels }
}

/// The three defining relations in low degree, left-normed:
/// `[x2, x1, x1, x1]`, `[x2, x1, x1, x2, x2]`, `[x1, x2, x2, x2, x2]`.
pub fn fibonacci_relations() -> Vec<LieTree> {
    vec![
        LieTree::left_normed(&[2, 1, 1, 1]),
        LieTree::left_normed(&[2, 1, 1, 2, 2]),
        LieTree::left_normed(&[1, 2, 2, 2, 2]),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRow {
    pub degree: u32,
    pub free: usize,
    pub ideal: usize,
    pub quotient: usize,
}

/// Dimensions of `Free / (relations)` per degree `1..=cap`. The ideal is
/// closed degree by degree: `I_k = R_k + [I_{k-1}, x_1] + [I_{k-1}, x_2]`.
pub fn quotient_dims(relations: &[LieTree], cap: u32) -> Vec<QuotientRow> {
    let free = free_lie(cap);
    let gens = [LiePoly::generator(0), LiePoly::generator(1)];
    let mut rows = Vec::new();
    let mut prev: Vec<LiePoly> = Vec::new();
    for d in 1..=cap {
        let mut ech = Echelon::new(1 << d);
        let mut basis = Vec::new();
        let candidates = relations
            .iter()
            .filter(|r| r.degree() == d)
            .map(LieTree::to_poly)
            .chain(prev.iter().flat_map(|p| gens.iter().map(move |g| p.commutator(g))));
        for c in candidates {
            if ech.insert(c.bits().to_vec()) {
                basis.push(c);
            }
        }
        let f = free.dim(d);
        rows.push(QuotientRow { degree: d, free: f, ideal: ech.rank(), quotient: f - ech.rank() });
        prev = basis;
    }
    rows
}

/// Each relation, evaluated at `x_1 ↦ v_{1+k}`, `x_2 ↦ v_{2+k}` for
/// `0 <= k <= k_max`, vanishes, and so does `v_{1+k}^4`.
pub fn relation_shifts_check(relations: &[LieTree], k_max: u32) -> bool {
    (0..=k_max).all(|k| {
        let assignment = [tau(&Element::v(1), k), tau(&Element::v(2), k)];
        relations.iter().all(|r| r.evaluate(&assignment).is_zero())
            && power_2k(&Element::v(1 + k), 2, DEFAULT_MONOMIAL_CAP).is_ok_and(|p| p.is_zero())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::gr_element;

    fn pivots() -> [Element; 2] {
        [Element::v(1), Element::v(2)]
    }

    #[test]
    fn free_dims_match_necklaces() {
        let f = free_lie(10);
        let dims: Vec<_> = (1..=5).map(|d| f.dim(d)).collect();
        assert_eq!(dims, [2, 1, 2, 3, 6]);
        for d in 1..=10 {
            assert_eq!(f.dim(d) as u64, necklace_count(d));
        }
    }

    #[test]
    fn lyndon_examples() {
        assert!(is_lyndon(&[0, 0, 1]));
        assert!(!is_lyndon(&[0, 1, 0]));
        assert!(!is_lyndon(&[0, 1, 0, 1]));
        let x = LieTree::x;
        assert_eq!(standard_bracketing(&[0, 0, 1]), LieTree::bracket(x(1), LieTree::bracket(x(1), x(2))));
    }

    #[test]
    fn self_bracket_vanishes() {
        let f = free_lie(4);
        for level in &f.levels {
            for (_, t, _) in level {
                assert!(LieTree::bracket(t.clone(), t.clone()).to_poly().is_zero());
            }
        }
    }

    #[test]
    fn evaluation_examples() {
        assert!(LieTree::left_normed(&[2, 1, 1, 1]).evaluate(&pivots()).is_zero());
        assert_eq!(LieTree::left_normed(&[1, 2]).evaluate(&pivots()), Element::v(3));
        assert!(LieTree::left_normed(&[1, 2, 2, 2, 2]).evaluate(&pivots()).is_zero());
        let r = LieTree::left_normed(&[2, 1, 1, 1]);
        assert_eq!(r.multidegree(), (3, 1));
        let nonzero = LieTree::left_normed(&[1, 2, 2, 2]).evaluate(&pivots());
        assert_eq!(gr_element(&nonzero).map(|d| (d.a, d.b)), Some((1, 3)));
    }

    #[test]
    fn relations_and_shifts() {
        assert!(relation_shifts_check(&fibonacci_relations(), 3));
        let shifted = [Element::v(2), Element::v(3)];
        assert!(LieTree::left_normed(&[2, 1, 1, 1]).evaluate(&shifted).is_zero());
    }

    #[test]
    fn quotient_without_relations_is_free() {
        let rows = quotient_dims(&[], 6);
        assert!(rows.iter().all(|r| r.quotient == r.free && r.ideal == 0));
    }

    #[test]
    fn quotient_by_relations_low_degree() {
        let rows = quotient_dims(&fibonacci_relations(), 5);
        let q: Vec<_> = rows.iter().map(|r| r.quotient).collect();
        assert_eq!(&q[..4], &[2, 1, 2, 2]);
    }

    #[test]
    fn coordinates_roundtrip() {
        let f = free_lie(6);
        let t = LieTree::left_normed(&[2, 1, 1, 2, 1, 2]);
        let p = t.to_poly();
        let coords = f.coordinates(&p).unwrap();
        let mut back = LiePoly::zero(6);
        for k in coords {
            back.add_assign(&f.levels[5][k].2);
        }
        assert_eq!(back, p);
    }
}
