//! Dense GF(2) linear algebra on packed `u64` rows.
//!
//! Elimination is deterministic: a vector's pivot is its leftmost (lowest
//! index) set bit, and rows are processed top to bottom.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// Index of the lowest set bit of a packed vector.
pub fn leading_bit(v: &[u64]) -> Option<usize> {
    v.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

pub fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// A `rows × cols` matrix over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        if self.get(r, c) != value {
            self.toggle(r, c);
        }
    }

    pub fn toggle(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / 64] ^= 1 << (c % 64);
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// `self · other`, with `self.cols == other.rows`.
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) {
                    let src = other.row(k).to_vec();
                    xor_into(out.row_mut(r), &src);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        (0..self.rows).filter(|&r| e.insert(self.row(r).to_vec())).count()
    }
}

/// An echelon basis of a subspace of `GF(2)^len`, keyed by leading bit.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    len: usize,
    rows: BTreeMap<usize, Vec<u64>>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Echelon { len, rows: BTreeMap::new() }
    }

    pub fn zero_vector(&self) -> Vec<u64> {
        vec![0; words_for(self.len)]
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let mut from = 0;
        while let Some(lead) = leading_bit_from(&v, from) {
            match self.rows.get(&lead) {
                Some(row) => xor_into(&mut v, row),
                None => from = lead + 1,
            }
        }
        v
    }

    /// Adds `v`; returns whether it was independent of the current basis.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        assert_eq!(v.len(), words_for(self.len));
        let mut v = v;
        loop {
            match leading_bit(&v) {
                None => return false,
                Some(lead) => match self.rows.get(&lead) {
                    Some(row) => xor_into(&mut v, row),
                    None => {
                        self.rows.insert(lead, v);
                        return true;
                    }
                },
            }
        }
    }

    pub fn contains(&self, v: Vec<u64>) -> bool {
        self.reduce(v).iter().all(|&w| w == 0)
    }

    /// Basis vectors in order of their leading bits.
    pub fn basis(&self) -> impl Iterator<Item = &Vec<u64>> {
        self.rows.values()
    }
}

fn leading_bit_from(v: &[u64], from: usize) -> Option<usize> {
    let start = from / 64;
    if start >= v.len() {
        return None;
    }
    let first = v[start] & (!0u64 << (from % 64));
    if first != 0 {
        return Some(start * 64 + first.trailing_zeros() as usize);
    }
    leading_bit(&v[start + 1..]).map(|b| b + (start + 1) * 64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small() {
        let mut m = BitMatrix::zeros(3, 3);
        for (r, c) in [(0, 0), (0, 1), (1, 1), (1, 2), (2, 0), (2, 2)] {
            m.set(r, c, true);
        }
        // third row is the sum of the first two
        assert_eq!(m.rank(), 2);
        assert_eq!(BitMatrix::zeros(4, 0).rank(), 0);
        assert_eq!(BitMatrix::zeros(0, 7).rank(), 0);
    }

    #[test]
    fn wide_rows_and_product() {
        let mut a = BitMatrix::zeros(2, 130);
        a.set(0, 129, true);
        a.set(1, 64, true);
        a.set(1, 129, true);
        assert_eq!(a.rank(), 2);
        let mut b = BitMatrix::zeros(130, 1);
        b.set(129, 0, true);
        let p = a.mul(&b);
        assert!(p.get(0, 0) && p.get(1, 0));
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new(70);
        let mut v = e.zero_vector();
        v[0] = 0b101;
        v[1] = 1;
        assert!(e.insert(v.clone()));
        assert!(!e.insert(v.clone()));
        assert!(e.contains(v));
        let mut w = e.zero_vector();
        w[1] = 1;
        assert!(!e.contains(w.clone()));
        assert!(e.insert(w));
        assert_eq!(e.rank(), 2);
    }
}
