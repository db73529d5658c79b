//! Exact arithmetic in the ring of golden-mean integers `a + bφ`.
//!
//! Every power `φ^i` and every partial sum of a base-φ expansion lives in
//! this ring, so expansions can be built and checked without any floating
//! point. Ordering is decided by a pure-integer sign rule.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::sequences::fibonacci;

/// Coefficient type usable inside a [`PhiInt`].
///
/// `BigInt` is the default and is always exact. Fixed-width types such as
/// `i128` are only used by hot loops that bound their operands up front.
pub trait Coeff: Clone + Integer + Signed + fmt::Debug + fmt::Display {}

impl<T: Clone + Integer + Signed + fmt::Debug + fmt::Display> Coeff for T {}

/// The number `a + bφ` with `φ = (1 + √5) / 2`.
///
/// Since `1` and `φ` are linearly independent over the rationals, two values
/// are equal exactly when their components are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhiInt<T = BigInt> {
    pub a: T,
    pub b: T,
}

impl<T: Coeff> PhiInt<T> {
    pub fn new(a: T, b: T) -> Self {
        PhiInt { a, b }
    }

    pub fn zero() -> Self {
        PhiInt {
            a: T::zero(),
            b: T::zero(),
        }
    }

    pub fn one() -> Self {
        PhiInt {
            a: T::one(),
            b: T::zero(),
        }
    }

    /// `φ` itself.
    pub fn phi() -> Self {
        PhiInt {
            a: T::zero(),
            b: T::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign of `a + bφ` as `-1`, `0` or `+1`.
    ///
    /// With `s = 2a + b` the value equals `(s + b√5) / 2`, so the sign is
    /// settled by comparing `s²` against `5b²` whenever `s` and `b` disagree.
    pub fn sign(&self) -> i8 {
        let two = T::one() + T::one();
        let five = two.clone() + two.clone() + T::one();
        let s = two * self.a.clone() + self.b.clone();
        let b = &self.b;
        let zero = T::zero();
        if self.is_zero() {
            return 0;
        }
        let positive = if !b.is_negative() && s > zero {
            true
        } else if b.is_positive() && !s.is_positive() {
            five * b.clone() * b.clone() > s.clone() * s
        } else if b.is_negative() && s.is_positive() {
            s.clone() * s > five * b.clone() * b.clone()
        } else {
            false
        };
        if positive {
            1
        } else {
            -1
        }
    }

    /// Galois conjugate `a + bψ` with `ψ = 1 - φ`, expressed again in the
    /// basis `{1, φ}`.
    pub fn conjugate(&self) -> Self {
        PhiInt {
            a: self.a.clone() + self.b.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm `(a + bφ)(a + bψ) = a² + ab - b²`.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() + self.a.clone() * self.b.clone()
            - self.b.clone() * self.b.clone()
    }

    /// `⌊a + bφ⌋`, found from an integer estimate and confirmed by exact
    /// comparisons.
    pub fn floor(&self) -> T {
        // bφ = (b + b√5)/2, and ⌊√(5b²)⌋ bounds b√5 to within one.
        let two = T::one() + T::one();
        let five = two.clone() + two.clone() + T::one();
        let root = isqrt_coeff(five * self.b.clone() * self.b.clone());
        let root = if self.b.is_negative() { -root } else { root };
        let mut m = self.a.clone() + (self.b.clone() + root).div_floor(&two);
        loop {
            let below = PhiInt {
                a: self.a.clone() - m.clone(),
                b: self.b.clone(),
            };
            if below.sign() < 0 {
                m = m - T::one();
                continue;
            }
            let above = PhiInt {
                a: self.a.clone() - m.clone() - T::one(),
                b: self.b.clone(),
            };
            if above.sign() >= 0 {
                m = m + T::one();
                continue;
            }
            return m;
        }
    }
}

fn isqrt_coeff<T: Coeff>(x: T) -> T {
    if x <= T::one() {
        return x;
    }
    let two = T::one() + T::one();
    let mut y = x.clone();
    let mut z = (y.clone() + T::one()) / two.clone();
    while z < y {
        y = z.clone();
        z = (z.clone() + x.clone() / z) / two.clone();
    }
    y
}

impl PhiInt<BigInt> {
    pub fn from_ints(a: i64, b: i64) -> Self {
        PhiInt {
            a: BigInt::from(a),
            b: BigInt::from(b),
        }
    }

    /// Narrows to `i128` coefficients when both components fit.
    pub fn to_i128(&self) -> Option<PhiInt<i128>> {
        use num_traits::ToPrimitive;
        Some(PhiInt {
            a: self.a.to_i128()?,
            b: self.b.to_i128()?,
        })
    }
}

impl<T: Coeff> PartialOrd for PhiInt<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Coeff> Ord for PhiInt<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

/// Ordering of the real values of `x` and `y`.
pub fn compare<T: Coeff>(x: &PhiInt<T>, y: &PhiInt<T>) -> Ordering {
    let diff = PhiInt {
        a: x.a.clone() - y.a.clone(),
        b: x.b.clone() - y.b.clone(),
    };
    diff.sign().cmp(&0)
}

impl<T: Coeff> Add for PhiInt<T> {
    type Output = PhiInt<T>;
    fn add(self, rhs: Self) -> Self {
        PhiInt {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl<T: Coeff> Sub for PhiInt<T> {
    type Output = PhiInt<T>;
    fn sub(self, rhs: Self) -> Self {
        PhiInt {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl<T: Coeff> Neg for PhiInt<T> {
    type Output = PhiInt<T>;
    fn neg(self) -> Self {
        PhiInt {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl<T: Coeff> Mul for PhiInt<T> {
    type Output = PhiInt<T>;
    // φ² = φ + 1
    fn mul(self, rhs: Self) -> Self {
        let bb = self.b.clone() * rhs.b.clone();
        PhiInt {
            a: self.a.clone() * rhs.a.clone() + bb.clone(),
            b: self.a * rhs.b + self.b * rhs.a + bb,
        }
    }
}

impl<'a, T: Coeff> Add<&'a PhiInt<T>> for &'a PhiInt<T> {
    type Output = PhiInt<T>;
    fn add(self, rhs: Self) -> PhiInt<T> {
        PhiInt {
            a: self.a.clone() + rhs.a.clone(),
            b: self.b.clone() + rhs.b.clone(),
        }
    }
}

impl<'a, T: Coeff> Sub<&'a PhiInt<T>> for &'a PhiInt<T> {
    type Output = PhiInt<T>;
    fn sub(self, rhs: Self) -> PhiInt<T> {
        PhiInt {
            a: self.a.clone() - rhs.a.clone(),
            b: self.b.clone() - rhs.b.clone(),
        }
    }
}

impl<'a, T: Coeff> Mul<&'a PhiInt<T>> for &'a PhiInt<T> {
    type Output = PhiInt<T>;
    fn mul(self, rhs: Self) -> PhiInt<T> {
        self.clone() * rhs.clone()
    }
}

impl<T: Coeff> fmt::Display for PhiInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}φ", self.a, self.b.abs())
        } else {
            write!(f, "{} + {}φ", self.a, self.b)
        }
    }
}

pub fn add(x: &PhiInt, y: &PhiInt) -> PhiInt {
    x + y
}

pub fn mul(x: &PhiInt, y: &PhiInt) -> PhiInt {
    x * y
}

pub fn sign(x: &PhiInt) -> i8 {
    x.sign()
}

/// `φ^i = F(i-1) + F(i)φ` for any integer `i`, using Fibonacci numbers
/// extended to negative indices.
pub fn phi_power(i: i64) -> PhiInt {
    PhiInt {
        a: fibonacci(i - 1),
        b: fibonacci(i),
    }
}

/// `φ^i` with `i128` coefficients; `None` once they no longer fit.
pub fn phi_power_i128(i: i64) -> Option<PhiInt<i128>> {
    phi_power(i).to_i128()
}

impl<T: Coeff> One for PhiInt<T> {
    fn one() -> Self {
        PhiInt::one()
    }
}

impl<T: Coeff> Zero for PhiInt<T> {
    fn zero() -> Self {
        PhiInt::zero()
    }
    fn is_zero(&self) -> bool {
        PhiInt::is_zero(self)
    }
}
