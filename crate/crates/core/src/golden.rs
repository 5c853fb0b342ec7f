//! Exact arithmetic in `Z[λ]`, `λ = (1 + √5) / 2`, `λ² = λ + 1`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// `a + bλ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GoldenInt {
    pub a: i64,
    pub b: i64,
}

pub const SQRT5: f64 = 2.236_067_977_499_79;
pub const LAMBDA_F64: f64 = (1.0 + SQRT5) / 2.0;

impl GoldenInt {
    pub const ZERO: GoldenInt = GoldenInt { a: 0, b: 0 };
    pub const ONE: GoldenInt = GoldenInt { a: 1, b: 0 };
    pub const LAMBDA: GoldenInt = GoldenInt { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        GoldenInt { a, b }
    }

    pub const fn int(a: i64) -> Self {
        GoldenInt { a, b: 0 }
    }

    /// `λ^n` for any integer `n`, using `λ^n = F_{n-1} + F_n λ` and
    /// `λ^{-n} = (-1)^n conj(λ^n)`.
    pub fn lambda_pow(n: i32) -> Self {
        let k = n.unsigned_abs();
        // (F_{k-1}, F_k) with F_{-1} = 1, F_0 = 0
        let (mut prev, mut cur) = (1i64, 0i64);
        for _ in 0..k {
            let next = prev.checked_add(cur).expect("golden power overflows i64");
            prev = cur;
            cur = next;
        }
        let pos = GoldenInt::new(prev, cur);
        if n >= 0 {
            pos
        } else if k.is_multiple_of(2) {
            pos.conjugate()
        } else {
            -pos.conjugate()
        }
    }

    /// The Galois conjugate `λ ↦ λ̄ = 1 - λ`.
    pub fn conjugate(self) -> Self {
        GoldenInt::new(self.a + self.b, -self.b)
    }

    /// Exact sign. Writes `2(a + bλ) = (2a + b) + b√5` and compares squares.
    pub fn signum(self) -> Ordering {
        let p = 2 * self.a as i128 + self.b as i128;
        let q = self.b as i128;
        match (p.cmp(&0), q.cmp(&0)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            // p > 0 > q: sign of p² - 5q²
            (Ordering::Greater, Ordering::Less) => (p * p).cmp(&(5 * q * q)),
            // p < 0 < q: sign of 5q² - p²
            (Ordering::Less, Ordering::Greater) => (5 * q * q).cmp(&(p * p)),
        }
    }

    pub fn is_positive(self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn scale(self, k: i64) -> Self {
        GoldenInt::new(self.a * k, self.b * k)
    }

    /// The norm `x · conj(x) = a² + ab - b²`.
    pub fn norm(self) -> i128 {
        let (a, b) = (self.a as i128, self.b as i128);
        a * a + a * b - b * b
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * LAMBDA_F64
    }

    /// Largest integer `k` with `k <= self`, by bisection on exact signs.
    pub fn floor(self) -> i64 {
        let mut lo = libm::floor(self.to_f64()) as i64 - 2;
        while GoldenInt::int(lo) > self {
            lo -= lo.unsigned_abs().max(2) as i64;
        }
        let mut hi = lo + 4;
        while GoldenInt::int(hi) <= self {
            hi += hi.unsigned_abs().max(4) as i64;
        }
        // invariant: lo <= self < hi
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if GoldenInt::int(mid) <= self {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// Smallest integer `k` with `k >= self`.
    pub fn ceil(self) -> i64 {
        -(-self).floor()
    }
}

impl PartialOrd for GoldenInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenInt {
    fn cmp(&self, other: &Self) -> Ordering {
        (*self - *other).signum()
    }
}

impl Add for GoldenInt {
    type Output = GoldenInt;
    fn add(self, o: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for GoldenInt {
    type Output = GoldenInt;
    fn sub(self, o: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt::new(-self.a, -self.b)
    }
}

impl Mul for GoldenInt {
    type Output = GoldenInt;
    // (a + bλ)(c + dλ) = (ac + bd) + (ad + bc + bd)λ
    fn mul(self, o: GoldenInt) -> GoldenInt {
        GoldenInt::new(self.a * o.a + self.b * o.b, self.a * o.b + self.b * o.a + self.b * o.b)
    }
}

impl AddAssign for GoldenInt {
    fn add_assign(&mut self, o: GoldenInt) {
        *self = *self + o;
    }
}

impl SubAssign for GoldenInt {
    fn sub_assign(&mut self, o: GoldenInt) {
        *self = *self - o;
    }
}

impl From<i64> for GoldenInt {
    fn from(a: i64) -> Self {
        GoldenInt::int(a)
    }
}

/// Serialized as `a+b*L` / `a-b*L`.
impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}*L", self.a, self.b)
    }
}

impl fmt::Debug for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn ring_identities() {
        let l = GoldenInt::LAMBDA;
        assert_eq!(l * l, l + GoldenInt::ONE);
        // λ λ̄ = -1
        assert_eq!(l * l.conjugate(), GoldenInt::int(-1));
        // 1/λ = λ - 1
        assert_eq!(l * (l - GoldenInt::ONE), GoldenInt::ONE);
        assert_eq!(GoldenInt::lambda_pow(4), GoldenInt::new(2, 3));
        assert_eq!(GoldenInt::lambda_pow(-1), GoldenInt::new(-1, 1));
        assert_eq!(GoldenInt::lambda_pow(-2), GoldenInt::new(2, -1));
        for n in -20..20 {
            assert_eq!(GoldenInt::lambda_pow(n) * GoldenInt::lambda_pow(-n), GoldenInt::ONE);
        }
    }

    #[test]
    fn signs_near_zero() {
        // λ̄ = 1 - λ < 0; λ̄² = 2 - λ > 0
        assert!(GoldenInt::new(1, -1).is_negative());
        assert!(GoldenInt::new(2, -1).is_positive());
        // consecutive Fibonacci ratios straddle λ
        assert!(GoldenInt::new(-55, 34).is_positive() != GoldenInt::new(-89, 55).is_positive());
        assert_eq!(GoldenInt::ZERO.signum(), Ordering::Equal);
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(GoldenInt::LAMBDA.floor(), 1);
        assert_eq!(GoldenInt::LAMBDA.ceil(), 2);
        assert_eq!(GoldenInt::int(3).ceil(), 3);
        assert_eq!(GoldenInt::int(-3).floor(), -3);
        assert_eq!((-GoldenInt::LAMBDA).floor(), -2);
        assert_eq!(GoldenInt::lambda_pow(20).floor(), 15126);
    }

    #[test]
    fn display_format() {
        assert_eq!(GoldenInt::new(1, 3).to_string(), "1+3*L");
        assert_eq!(GoldenInt::new(2, -1).to_string(), "2-1*L");
    }

    proptest! {
        #[test]
        fn sign_agrees_with_float(a in -1_000_000i64..1_000_000, b in -1_000_000i64..1_000_000) {
            let x = GoldenInt::new(a, b);
            let v = x.to_f64();
            // floats are reliable away from zero; the exact sign must agree there
            if v.abs() > 1e-6 {
                prop_assert_eq!(x.is_positive(), v > 0.0);
            }
            prop_assert_eq!(x.signum(), x.conjugate().conjugate().signum());
        }

        #[test]
        fn multiplication_is_commutative_and_norm_is_multiplicative(
            a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000, d in -1000i64..1000
        ) {
            let x = GoldenInt::new(a, b);
            let y = GoldenInt::new(c, d);
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
            prop_assert_eq!((x * y).conjugate(), x.conjugate() * y.conjugate());
        }
    }
}
