//! Base-φ representations of natural numbers.
//!
//! [`expand`] is the reference: greedy most-significant-first extraction
//! with exact comparisons in `ℤ[φ]`. [`expand_recursive`] builds the same
//! digits from a small table by splicing expansions across Lucas intervals,
//! and serves as an independent cross-check.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::Error;
use crate::exact_arith::{phi_power, Coeff, PhiInt};
use crate::sequences::lucas;

/// A finite base-φ digit string `d_L ... d_0 . d_-1 ... d_R`.
///
/// Digits are stored most significant first; `digits[j]` is the digit at
/// index `high - j`. The stored range always covers index 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PhiExpansion {
    high: i64,
    digits: Vec<u8>,
}

/// First violation found by [`PhiExpansion::validate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `d_upper = d_lower = 1` with `upper = lower + 1`.
    AdjacentOnes { upper: i64, lower: i64 },
    /// The leading digit is `0` although the integer part is not just `0`.
    LeadingZero { index: i64 },
    /// The fraction ends in `0`.
    TrailingZero { index: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AdjacentOnes { upper, lower } => {
                write!(f, "consecutive ones at indices ({upper}, {lower})")
            }
            Violation::LeadingZero { index } => write!(f, "leading zero at index {index}"),
            Violation::TrailingZero { index } => write!(f, "trailing zero at index {index}"),
        }
    }
}

impl PhiExpansion {
    /// The expansion of zero, displayed as `0`.
    pub fn zero() -> Self {
        PhiExpansion {
            high: 0,
            digits: vec![0],
        }
    }

    /// Builds an expansion from the indices of its one-digits.
    pub fn from_ones(ones: &[i64]) -> Self {
        let high = ones.iter().copied().max().unwrap_or(0).max(0);
        let low = ones.iter().copied().min().unwrap_or(0).min(0);
        let mut digits = vec![0u8; (high - low + 1) as usize];
        for &i in ones {
            digits[(high - i) as usize] = 1;
        }
        PhiExpansion { high, digits }
    }

    /// Highest stored index (never negative).
    pub fn high(&self) -> i64 {
        self.high
    }

    /// Lowest stored index (never positive).
    pub fn low(&self) -> i64 {
        self.high - self.digits.len() as i64 + 1
    }

    /// `d_k`, zero outside the stored range.
    pub fn digit(&self, k: i64) -> u8 {
        if k > self.high || k < self.low() {
            0
        } else {
            self.digits[(self.high - k) as usize]
        }
    }

    /// Indices of the one-digits, most significant first.
    pub fn ones(&self) -> impl Iterator<Item = i64> + '_ {
        self.digits
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 1)
            .map(|(j, _)| self.high - j as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    /// Indices `(L, R)` of the outermost one-digits; `None` for zero.
    pub fn lr(&self) -> Option<(i64, i64)> {
        let l = self.ones().next()?;
        let r = self.ones().last()?;
        Some((l, r))
    }

    /// Checks the no-`11` rule and that both ends of the string are ones
    /// (apart from a lone `0` integer part).
    pub fn validate(&self) -> Result<(), Violation> {
        for j in 1..self.digits.len() {
            if self.digits[j - 1] == 1 && self.digits[j] == 1 {
                let upper = self.high - j as i64 + 1;
                return Err(Violation::AdjacentOnes {
                    upper,
                    lower: upper - 1,
                });
            }
        }
        if self.digits[0] == 0 && self.high > 0 {
            return Err(Violation::LeadingZero { index: self.high });
        }
        let low = self.low();
        if low < 0 && self.digits[self.digits.len() - 1] == 0 {
            return Err(Violation::TrailingZero { index: low });
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Exact value `Σ d_i φ^i`.
    pub fn value(&self) -> PhiInt {
        self.ones()
            .fold(PhiInt::zero(), |acc, i| acc + phi_power(i))
    }

    /// Digits as a bitmask with `d_i` at bit `i + 64`, if all indices fit.
    pub fn to_mask(&self) -> Option<u128> {
        let mut mask = 0u128;
        for i in self.ones() {
            if !(-64..64).contains(&i) {
                return None;
            }
            mask |= 1 << (i + 64);
        }
        Some(mask)
    }
}

/// `d_k` read from a mask produced by [`PhiExpansion::to_mask`] or
/// [`digit_mask`].
pub fn mask_digit(mask: u128, k: i64) -> u8 {
    if (-64..64).contains(&k) {
        ((mask >> (k + 64)) & 1) as u8
    } else {
        0
    }
}

impl fmt::Display for PhiExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let int_len = self.high as usize + 1;
        let mut s = String::with_capacity(self.digits.len() + 1);
        for (j, d) in self.digits.iter().enumerate() {
            if j == int_len {
                s.push('.');
            }
            s.push(if *d == 1 { '1' } else { '0' });
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for PhiExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhiExpansion({self})")
    }
}

impl FromStr for PhiExpansion {
    type Err = Error;

    /// Accepts `[01]+(\.[01]+)?`; semantic checks are left to
    /// [`PhiExpansion::validate`].
    fn from_str(s: &str) -> Result<Self, Error> {
        let err = |reason| Error::ParseDigits {
            input: s.to_string(),
            reason,
        };
        let (int, frac) = match s.split_once('.') {
            Some((i, f)) => {
                if f.is_empty() {
                    return Err(err("empty fraction"));
                }
                (i, f)
            }
            None => (s, ""),
        };
        if int.is_empty() {
            return Err(err("empty integer part"));
        }
        let mut digits = Vec::with_capacity(int.len() + frac.len());
        for c in int.chars().chain(frac.chars()) {
            match c {
                '0' => digits.push(0),
                '1' => digits.push(1),
                _ => return Err(err("digits must be 0 or 1")),
            }
        }
        Ok(PhiExpansion {
            high: int.len() as i64 - 1,
            digits,
        })
    }
}

pub fn value(e: &PhiExpansion) -> PhiInt {
    e.value()
}

pub fn is_valid(e: &PhiExpansion) -> Result<(), Violation> {
    e.validate()
}

// Largest N handled with i128 coefficients. Every remainder and power that
// appears stays below ~1e16 in magnitude, so squares in the sign rule fit.
const SMALL_LIMIT: u64 = 1_000_000_000_000_000;
const SMALL_POWERS: i64 = 90;

fn small_powers() -> &'static [PhiInt<i128>] {
    static TABLE: OnceLock<Vec<PhiInt<i128>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (-SMALL_POWERS..=SMALL_POWERS)
            .map(|i| phi_power(i).to_i128().expect("small power fits i128"))
            .collect()
    })
}

fn small_power(i: i64) -> PhiInt<i128> {
    small_powers()[(i + SMALL_POWERS) as usize].clone()
}

/// Greedy digit extraction. Reports each one-digit index, highest first.
fn greedy<T: Coeff>(
    target: PhiInt<T>,
    pow: impl Fn(i64) -> PhiInt<T>,
    lowest_power: i64,
    mut emit: impl FnMut(i64),
) -> Result<(), Error> {
    if target.is_zero() {
        return Ok(());
    }
    let mut top = 0i64;
    while pow(top + 1) <= target {
        top += 1;
    }
    let floor = (-(2 * top + 4)).max(lowest_power);
    let mut rem = target;
    let mut i = top;
    while !rem.is_zero() {
        if i < floor {
            return Err(Error::Internal(format!(
                "greedy expansion passed index {floor} with remainder {rem}"
            )));
        }
        let p = pow(i);
        if p <= rem {
            rem = rem - p;
            emit(i);
            // the remainder is now below φ^(i-1)
            i -= 2;
        } else {
            i -= 1;
        }
    }
    Ok(())
}

/// `β(N)` by greedy extraction.
pub fn expand(n: &BigUint) -> Result<PhiExpansion, Error> {
    if let Some(small) = n.to_u64() {
        return expand_u64(small);
    }
    let mut ones = Vec::new();
    greedy(
        PhiInt::new(BigInt::from(n.clone()), BigInt::zero()),
        phi_power,
        i64::MIN,
        |i| ones.push(i),
    )?;
    Ok(PhiExpansion::from_ones(&ones))
}

pub fn expand_u64(n: u64) -> Result<PhiExpansion, Error> {
    let mut ones = Vec::new();
    if n <= SMALL_LIMIT {
        greedy(PhiInt::new(n as i128, 0), small_power, -SMALL_POWERS, |i| {
            ones.push(i)
        })?;
    } else {
        greedy(
            PhiInt::new(BigInt::from(n), BigInt::zero()),
            phi_power,
            i64::MIN,
            |i| ones.push(i),
        )?;
    }
    Ok(PhiExpansion::from_ones(&ones))
}

/// Largest `N` accepted by [`digit_mask`].
pub const MASK_LIMIT: u64 = 10_000_000_000_000;

/// `β(N)` as a bitmask with `d_i` at bit `i + 64`, for `N ≤ MASK_LIMIT`.
pub fn digit_mask(n: u64) -> Result<u128, Error> {
    if n > MASK_LIMIT {
        return Err(Error::OutOfRange(format!(
            "{n} exceeds the digit-mask limit {MASK_LIMIT}"
        )));
    }
    let mut mask = 0u128;
    greedy(PhiInt::new(n as i128, 0), small_power, -SMALL_POWERS, |i| {
        mask |= 1 << (i + 64)
    })?;
    Ok(mask)
}

/// `d_k(N)`.
pub fn digit(n: &BigUint, k: i64) -> Result<u8, Error> {
    Ok(expand(n)?.digit(k))
}

/// `(L(N), R(N))`, the outermost one-digit indices of `β(N)` for `N ≥ 1`.
pub fn lr_indices(n: &BigUint) -> Result<(i64, i64), Error> {
    expand(n)?
        .lr()
        .ok_or_else(|| Error::OutOfRange("L/R are undefined for N = 0".into()))
}

fn from_display(s: &str) -> PhiExpansion {
    s.parse().expect("well-formed digit literal")
}

/// Closed form of `β(L_m)` for `m ≥ 2`:
/// `1 0^{2n} . 0^{2n-1} 1` for `m = 2n` and `1 (01)^n . (01)^n` for `m = 2n+1`.
pub fn lucas_expansion_closed_form(m: u32) -> Result<PhiExpansion, Error> {
    if m < 2 {
        return Err(Error::OutOfRange(format!(
            "closed form needs m >= 2, got {m}"
        )));
    }
    let n = (m / 2) as usize;
    let s = if m.is_multiple_of(2) {
        format!("1{}.{}1", "0".repeat(2 * n), "0".repeat(2 * n - 1))
    } else {
        format!("1{}.{}", "01".repeat(n), "01".repeat(n))
    };
    Ok(from_display(&s))
}

/// Closed form of `β(L_{2n+1} + 1) = 1 0^{2n+1} . (10)^n 01` for `n ≥ 1`.
pub fn lucas_plus_one_expansion(n: u32) -> Result<PhiExpansion, Error> {
    if n < 1 {
        return Err(Error::OutOfRange("closed form needs n >= 1".into()));
    }
    let n = n as usize;
    Ok(from_display(&format!(
        "1{}.{}01",
        "0".repeat(2 * n + 1),
        "10".repeat(n)
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// `Λ_m`: `[L_m, L_{m+1}]` for even `m`, `[L_m + 1, L_{m+1} - 1]` for odd `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasInterval {
    pub index: u32,
    pub start: BigUint,
    pub end: BigUint,
}

/// The three pieces of an odd interval `Λ_{2n+1}`, `n ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubInterval {
    I,
    J,
    K,
}

fn lucas_u(n: u32) -> BigUint {
    lucas(n).to_biguint().expect("Lucas numbers are positive")
}

impl LucasInterval {
    pub fn new(index: u32) -> Self {
        let (start, end) = if index.is_multiple_of(2) {
            (lucas_u(index), lucas_u(index + 1))
        } else {
            (lucas_u(index) + 1u32, lucas_u(index + 1) - 1u32)
        };
        LucasInterval { index, start, end }
    }

    pub fn parity(&self) -> Parity {
        if self.index.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Number of integers in the interval.
    pub fn len(&self) -> BigUint {
        if self.end < self.start {
            BigUint::zero()
        } else {
            &self.end - &self.start + 1u32
        }
    }

    pub fn is_empty(&self) -> bool {
        self.end < self.start
    }

    pub fn contains(&self, n: &BigUint) -> bool {
        self.start <= *n && *n <= self.end
    }

    /// `I_n`, `J_n`, `K_n` as inclusive bounds, for odd intervals `Λ_{2n+1}`
    /// with `n ≥ 2`.
    pub fn sub_intervals(&self) -> Option<[(SubInterval, BigUint, BigUint); 3]> {
        if self.index.is_multiple_of(2) || self.index < 5 {
            return None;
        }
        let n = (self.index - 1) / 2;
        let base = lucas_u(2 * n + 1);
        let l2 = lucas_u(2 * n - 2);
        let l1 = lucas_u(2 * n - 1);
        Some([
            (SubInterval::I, &base + 1u32, &base + &l2 - 1u32),
            (SubInterval::J, &base + &l2, &base + &l1),
            (
                SubInterval::K,
                &base + &l1 + 1u32,
                lucas_u(2 * n + 2) - 1u32,
            ),
        ])
    }
}

/// The Lucas interval containing `N`, with its sub-interval for odd kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalMembership {
    pub interval: LucasInterval,
    pub part: Option<SubInterval>,
}

pub fn interval_of(n: &BigUint) -> Result<IntervalMembership, Error> {
    if *n < BigUint::from(2u32) {
        return Err(Error::OutOfRange("Lucas intervals start at N = 2".into()));
    }
    // largest m ≥ 1 with L_m ≤ N
    let mut m = 1u32;
    while lucas_u(m + 1) <= *n {
        m += 1;
    }
    let index = if m % 2 == 1 && lucas_u(m) == *n {
        m - 1
    } else {
        m
    };
    let interval = LucasInterval::new(index);
    debug_assert!(interval.contains(n));
    let part = interval.sub_intervals().and_then(|parts| {
        parts
            .into_iter()
            .find(|(_, a, b)| a <= n && n <= b)
            .map(|(p, _, _)| p)
    });
    Ok(IntervalMembership { interval, part })
}

const BASE_TABLE: [&str; 12] = [
    "0",
    "1",
    "10.01",
    "100.01",
    "101.01",
    "1000.1001",
    "1010.0001",
    "10000.0001",
    "10001.0001",
    "10010.0101",
    "10100.0101",
    "10101.0101",
];

/// Replaces the leading `head` and trailing `tail` digits of `inner` by
/// `prefix` and `suffix`, keeping the indices of the remaining middle part.
fn splice(
    prefix: &str,
    head: &str,
    inner: &PhiExpansion,
    tail: &str,
    suffix: &str,
) -> Result<PhiExpansion, Error> {
    let bits = |s: &str| s.bytes().map(|c| c - b'0').collect::<Vec<u8>>();
    let (head, tail) = (bits(head), bits(tail));
    let d = &inner.digits;
    if d.len() < head.len() + tail.len()
        || d[..head.len()] != head[..]
        || d[d.len() - tail.len()..] != tail[..]
    {
        return Err(Error::Internal(format!(
            "cannot strip {head:?}/{tail:?} from {inner} during recursive expansion"
        )));
    }
    let mut digits = bits(prefix);
    digits.extend_from_slice(&d[head.len()..d.len() - tail.len()]);
    digits.extend(bits(suffix));
    let high = inner.high - head.len() as i64 + prefix.len() as i64;
    let out = PhiExpansion { high, digits };
    if out.high < 0 || out.low() > 0 {
        return Err(Error::Internal(format!(
            "spliced expansion {out} lost index 0"
        )));
    }
    Ok(out)
}

/// `β(N)` built by recursion over Lucas intervals.
///
/// Even intervals embed `β(k)` in the zeros of `β(L_{2n})`. Odd intervals
/// split into `I_n`, `J_n`, `K_n`, each obtained from an expansion two Lucas
/// indices lower by replacing its outer digits.
pub fn expand_recursive(n: &BigUint) -> Result<PhiExpansion, Error> {
    if let Some(small) = n.to_usize().filter(|&v| v < BASE_TABLE.len()) {
        return Ok(from_display(BASE_TABLE[small]));
    }
    let membership = interval_of(n)?;
    let m = membership.interval.index;
    if m % 2 == 0 {
        let half = (m / 2) as i64;
        let k = n - lucas_u(m);
        if k.is_zero() {
            return lucas_expansion_closed_form(m);
        }
        let inner = expand_recursive(&k)?;
        let (l, r) = inner.lr().expect("k >= 1");
        if l > 2 * half - 2 || r < -(2 * half - 2) {
            return Err(Error::Internal(format!(
                "β({k}) does not fit inside the zeros of β(L_{m})"
            )));
        }
        let mut ones: Vec<i64> = inner.ones().collect();
        ones.push(2 * half);
        ones.push(-2 * half);
        return Ok(PhiExpansion::from_ones(&ones));
    }
    let half = (m - 1) / 2;
    let base = lucas_u(2 * half + 1);
    match membership.part {
        Some(SubInterval::I) => {
            let k = n - &base;
            let inner = expand_recursive(&(lucas_u(2 * half - 1) + k))?;
            splice("1000", "10", &inner, "01", "1001")
        }
        Some(SubInterval::J) => {
            let k = n - &base - lucas_u(2 * half - 2);
            let inner = expand_recursive(&(lucas_u(2 * half - 2) + k))?;
            splice("10010", "10", &inner, "01", "001001")
        }
        Some(SubInterval::K) => {
            let k = n - &base - lucas_u(2 * half - 1);
            let inner = expand_recursive(&(lucas_u(2 * half - 1) + k))?;
            splice("1010", "10", &inner, "01", "0001")
        }
        None => Err(Error::Internal(format!(
            "{n} lies in Λ_{m} but in no sub-interval"
        ))),
    }
}

/// `|Λ_m| = ⌊φ^{m+1}⌋ - ⌊φ^m⌋`, evaluated exactly in `ℤ[φ]`.
pub fn interval_len_from_powers(m: u32) -> BigInt {
    phi_power(m as i64 + 1).floor() - phi_power(m as i64).floor()
}
