//! Independent reference computations for the acceptance criteria.
//!
//! Nothing here calls into the engine's arithmetic: elements become
//! derivations of the truncated polynomial ring through the defining
//! expansion `v_n = ∂_n + t_{n-1} ∂_{n+1} + t_{n-1} t_n ∂_{n+2} + ...`,
//! golden-ratio numbers are compared by squaring, and bases, gradings and
//! weights are rebuilt from their closed descriptions.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use fiblie_core::{Element, Monomial};

// ---------------------------------------------------------------------------
// Derivations

/// Polynomials in the `t_j` with `t_j² = 0`: sets of index masks.
pub type Poly = BTreeSet<u128>;

fn toggle(p: &mut Poly, m: u128) {
    if !p.remove(&m) {
        p.insert(m);
    }
}

fn mul_mono(p: &Poly, m: u128) -> Poly {
    let mut out = Poly::new();
    for &x in p {
        if x & m == 0 {
            toggle(&mut out, x | m);
        }
    }
    out
}

/// `v_n(t_j)`: the coefficient of `∂_j` in the expansion of `v_n`.
fn pivot_on_var(n: u32, j: u32) -> Poly {
    let mut out = Poly::new();
    if j >= n {
        let mask = (n - 1..j - 1).fold(0u128, |acc, i| acc | 1 << i);
        out.insert(mask);
    }
    out
}

/// A derivation stored by its values on `t_0, ..., t_{width-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation(pub Vec<Poly>);

impl Derivation {
    pub fn from_parts(parts: &[(u128, u32)], width: u32) -> Self {
        let mut vals = vec![Poly::new(); width as usize];
        for &(tail, pivot) in parts {
            for (j, v) in vals.iter_mut().enumerate() {
                for x in mul_mono(&pivot_on_var(pivot, j as u32), tail) {
                    toggle(v, x);
                }
            }
        }
        Derivation(vals)
    }

    pub fn of(e: &Element, width: u32) -> Self {
        let parts: Vec<_> = e.iter().map(|m| (m.tail().mask(), m.pivot())).collect();
        Derivation::from_parts(&parts, width)
    }

    pub fn of_monomial(m: Monomial, width: u32) -> Self {
        Derivation::from_parts(&[(m.tail().mask(), m.pivot())], width)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Poly::is_empty)
    }

    fn on(&self, f: &Poly) -> Poly {
        let mut out = Poly::new();
        for &m in f {
            let mut rest = m;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                for x in mul_mono(&self.0[j], m & !(1 << j)) {
                    toggle(&mut out, x);
                }
            }
        }
        out
    }

    fn var(j: usize) -> Poly {
        Poly::from([1u128 << j])
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        Derivation(self.0.iter().zip(&other.0).map(|(a, b)| a.symmetric_difference(b).copied().collect()).collect())
    }

    /// `[D, E](t_j) = D(E(t_j)) + E(D(t_j))`.
    pub fn commutator(&self, other: &Derivation) -> Derivation {
        Derivation(
            (0..self.0.len())
                .map(|j| {
                    let mut v = self.on(&other.on(&Derivation::var(j)));
                    for x in other.on(&self.on(&Derivation::var(j))) {
                        toggle(&mut v, x);
                    }
                    v
                })
                .collect(),
        )
    }

    /// `D²`, again a derivation in characteristic 2.
    pub fn square(&self) -> Derivation {
        Derivation((0..self.0.len()).map(|j| self.on(&self.on(&Derivation::var(j)))).collect())
    }
}

/// Minimal `N` with `D^{2^N} = 0`, or `None` past `cap` squarings.
pub fn nil_index(d: &Derivation, cap: u32) -> Option<u32> {
    let mut x = d.clone();
    for k in 0..=cap {
        if x.is_zero() {
            return Some(k);
        }
        x = x.square();
    }
    None
}

// ---------------------------------------------------------------------------
// Fibonacci numbers and golden-ratio arithmetic

/// `F_n` for `n >= -2`, with `F_{-2} = -1, F_{-1} = 1, F_0 = 0, F_1 = F_2 = 1`.
pub fn fib(n: i32) -> i128 {
    assert!(n >= -2);
    let (mut a, mut b) = (-1i128, 1i128);
    for _ in -2..n {
        (a, b) = (b, a + b);
    }
    a
}

/// `a + b λ` with `λ² = λ + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gold(pub i128, pub i128);

impl Gold {
    /// `λ^n = F_{n-1} + F_n λ`.
    pub fn lambda_pow(n: i32) -> Gold {
        Gold(fib(n - 1), fib(n))
    }

    /// `λ̄^n = F_{n+1} - F_n λ`, with `λ̄ = 1 - λ`.
    pub fn conj_pow(n: i32) -> Gold {
        Gold(fib(n + 1), -fib(n))
    }

    pub fn add(self, o: Gold) -> Gold {
        Gold(self.0 + o.0, self.1 + o.1)
    }

    pub fn sub(self, o: Gold) -> Gold {
        Gold(self.0 - o.0, self.1 - o.1)
    }

    pub fn scale(self, k: i128) -> Gold {
        Gold(self.0 * k, self.1 * k)
    }

    /// Sign of `a + bλ = (2a + b + b√5) / 2`.
    pub fn sign(self) -> Ordering {
        let p = 2 * self.0 + self.1;
        let q = self.1;
        match (p.cmp(&0), q.cmp(&0)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (a, b) if a == b => a,
            (Ordering::Greater, _) => (p * p).cmp(&(5 * q * q)),
            (Ordering::Less, _) => (5 * q * q).cmp(&(p * p)),
        }
    }

    pub fn cmp_exact(self, o: Gold) -> Ordering {
        self.sub(o).sign()
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 + self.1 as f64 * (1.0 + 5f64.sqrt()) / 2.0
    }
}

// ---------------------------------------------------------------------------
// Bases, gradings, weights

/// A basis monomial as `(tail mask, pivot)`.
pub type Mono = (u128, u32);

/// `W_n`: `t_0^{α_0} ... t_{n-4}^{α_{n-4}} v_n`, exponents in `{0, 1}`.
pub fn standard_level(n: u32) -> Vec<Mono> {
    if n <= 3 {
        return vec![(0, n)];
    }
    (0..1u128 << (n - 3)).map(|mask| (mask, n)).collect()
}

/// `W̃_n = W_n ∪ {t_{n-3} v_n}` for `n >= 3`.
pub fn restricted_level(n: u32) -> Vec<Mono> {
    let mut out = standard_level(n);
    if n >= 3 {
        out.push((1 << (n - 3), n));
    }
    out
}

fn indices(mask: u128) -> impl Iterator<Item = u32> {
    (0..128).filter(move |&i| mask >> i & 1 == 1)
}

/// `Gr(t_S v_n) = (F_{n-2}, F_{n-1}) - Σ_{j ∈ S} (F_{j-2}, F_{j-1})`.
pub fn gr((mask, n): Mono) -> (i128, i128) {
    let mut a = fib(n as i32 - 2);
    let mut b = fib(n as i32 - 1);
    for j in indices(mask) {
        a -= fib(j as i32 - 2);
        b -= fib(j as i32 - 1);
    }
    (a, b)
}

/// `wt(t_S v_n) = λ^n - Σ_{j ∈ S} λ^j`.
pub fn wt((mask, n): Mono) -> Gold {
    indices(mask).fold(Gold::lambda_pow(n as i32), |acc, j| acc.sub(Gold::lambda_pow(j as i32)))
}

/// `swt(t_S v_n) = λ̄^n - Σ_{j ∈ S} λ̄^j`.
pub fn swt((mask, n): Mono) -> Gold {
    indices(mask).fold(Gold::conj_pow(n as i32), |acc, j| acc.sub(Gold::conj_pow(j as i32)))
}

/// Basis monomials of `W_{<=n}`.
pub fn standard_upto(n: u32) -> Vec<Mono> {
    (1..=n).flat_map(standard_level).collect()
}

/// `dim L_{(a,b)}` for `a + b <= bound`, counted over `W_{<=depth}`.
pub fn lattice_counts(depth: u32, bound: i128) -> BTreeMap<(i128, i128), i128> {
    let mut out = BTreeMap::new();
    for m in standard_upto(depth) {
        let (a, b) = gr(m);
        if a + b <= bound {
            *out.entry((a, b)).or_insert(0) += 1;
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Truncated bivariate series with i128 coefficients

pub type Series = BTreeMap<(i128, i128), i128>;

pub fn series_mul(x: &Series, y: &Series, bound: i128) -> Series {
    let mut out = Series::new();
    for (&(a, b), &c) in x {
        for (&(p, q), &d) in y {
            if a + b + p + q <= bound {
                *out.entry((a + p, b + q)).or_insert(0) += c * d;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `∏ (1 - x^a y^b)^{c}` over the given counts.
pub fn euler_from_counts(counts: &Series, bound: i128) -> Series {
    let mut e = Series::from([((0, 0), 1)]);
    for (&(a, b), &c) in counts {
        for _ in 0..c {
            let f = Series::from([((0, 0), 1), ((a, b), -1)]);
            e = series_mul(&e, &f, bound);
        }
    }
    e
}

/// `∏ 1 / (1 - x^a y^b)^{c}` over the given counts.
pub fn envelope_from_counts(counts: &Series, bound: i128) -> Series {
    let mut u = Series::from([((0, 0), 1)]);
    for (&(a, b), &c) in counts {
        for _ in 0..c {
            let k_max = bound / (a + b);
            let f: Series = (0..=k_max).map(|k| ((k * a, k * b), 1)).collect();
            u = series_mul(&u, &f, bound);
        }
    }
    u
}

// ---------------------------------------------------------------------------
// Chevalley–Eilenberg homology over GF(2)

/// Rank over GF(2) of rows given as sorted column sets.
pub fn gf2_rank(rows: Vec<BTreeSet<usize>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for mut r in rows {
        while let Some(&lead) = r.iter().next() {
            match pivots.get(&lead) {
                Some(p) => r = r.symmetric_difference(p).copied().collect(),
                None => {
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    pivots.len()
}
