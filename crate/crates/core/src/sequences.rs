//! Lucas and Fibonacci numbers, the lower Wythoff sequence `⌊nφ⌋`,
//! generalized Beatty sequences and Fibonacci words.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Lucas number `L_n`: 2, 1, 3, 4, 7, 11, ...
pub fn lucas(n: u32) -> BigInt {
    let (mut prev, mut cur) = (BigInt::from(2), BigInt::one());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &prev + &cur;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `L_n` as a `u64`, or `None` past `L_92`.
pub fn lucas_u64(n: u32) -> Option<u64> {
    let (mut prev, mut cur) = (2u64, 1u64);
    if n == 0 {
        return Some(2);
    }
    for _ in 1..n {
        let next = prev.checked_add(cur)?;
        prev = cur;
        cur = next;
    }
    Some(cur)
}

/// Fibonacci number `F(i)` for any integer index, with
/// `F(-n) = (-1)^(n+1) F(n)`.
pub fn fibonacci(i: i64) -> BigInt {
    let n = i.unsigned_abs();
    let (f, _) = fib_pair(n);
    if i < 0 && n.is_multiple_of(2) {
        -f
    } else {
        f
    }
}

// Fast doubling: returns (F(n), F(n+1)).
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    if n == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (a, b) = fib_pair(n / 2);
    let c = &a * (&b * 2 - &a);
    let d = &a * &a + &b * &b;
    if n.is_multiple_of(2) {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

/// Exact floor square root, checked against `r² ≤ x < (r+1)²`.
pub fn isqrt(x: &BigUint) -> BigUint {
    let r = x.sqrt();
    assert!(
        &r * &r <= *x && *x < (&r + 1u32) * (&r + 1u32),
        "isqrt postcondition"
    );
    r
}

/// `⌊nφ⌋`, computed as `⌊(n + ⌊√(5n²)⌋) / 2⌋`.
pub fn floor_n_phi(n: &BigUint) -> BigUint {
    let root = isqrt(&(n * n * 5u32));
    (n + root) >> 1
}

/// `⌊nφ⌋` for `n < 2^62`, in machine integers.
pub fn floor_n_phi_u64(n: u64) -> u64 {
    assert!(n < 1 << 62, "floor_n_phi_u64 argument out of range");
    let n = n as u128;
    ((n + (5 * n * n).isqrt()) / 2) as u64
}

/// Parameters of the generalized Beatty sequence `V(n) = p⌊nφ⌋ + qn + r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GbsParams {
    pub p: BigInt,
    pub q: BigInt,
    pub r: BigInt,
}

impl GbsParams {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, r: impl Into<BigInt>) -> Self {
        GbsParams {
            p: p.into(),
            q: q.into(),
            r: r.into(),
        }
    }

    pub fn term(&self, n: u64) -> BigInt {
        gbs_term(self, n)
    }

    /// Terms `V(n0), V(n0 + 1), ...` as an endless iterator.
    pub fn terms(&self, n0: u64) -> impl Iterator<Item = BigInt> + '_ {
        (n0..).map(move |n| gbs_term(self, n))
    }

    /// Terms from `n0` that are at most `limit`, as `u64`.
    ///
    /// Requires a strictly increasing sequence, i.e. `p ≥ 0` and `p + q > 0`.
    pub fn terms_up_to(&self, n0: u64, limit: u64) -> impl Iterator<Item = u64> + '_ {
        assert!(!self.p.is_negative() && (&self.p + &self.q).is_positive());
        self.terms(n0)
            .skip_while(|v| v.is_negative())
            .map_while(move |v| v.to_u64().filter(|&v| v <= limit))
    }
}

impl std::fmt::Display for GbsParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}⌊nφ⌋ + {}n + {}", self.p, self.q, self.r)
    }
}

pub fn gbs_term(params: &GbsParams, n: u64) -> BigInt {
    let floor = if n < 1 << 62 {
        BigInt::from(floor_n_phi_u64(n))
    } else {
        BigInt::from(floor_n_phi(&BigUint::from(n)))
    };
    &params.p * floor + &params.q * BigInt::from(n) + &params.r
}

/// `V(n+1) - V(n)` for `n = 1..=count`.
pub fn gbs_differences(params: &GbsParams, count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let mut prev = gbs_term(params, 1);
    for n in 2..=count as u64 + 1 {
        let next = gbs_term(params, n);
        out.push(&next - &prev);
        prev = next;
    }
    out
}

/// A prefix of the Fibonacci word over the two letters `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibWord {
    pub a: BigInt,
    pub b: BigInt,
    pub letters: Vec<BigInt>,
}

/// First `length` bits of the fixed point of `0 → 01, 1 → 0`.
pub fn fibonacci_bits(length: usize) -> Vec<u8> {
    let mut bits = vec![0u8, 1];
    let mut next = 1;
    while bits.len() < length {
        if bits[next] == 0 {
            bits.extend([0, 1]);
        } else {
            bits.push(0);
        }
        next += 1;
    }
    bits.truncate(length);
    bits
}

/// `x_{a,b}`: the Fibonacci word `0100101001...` with `0 ↦ a`, `1 ↦ b`.
pub fn fibonacci_word(a: impl Into<BigInt>, b: impl Into<BigInt>, length: usize) -> FibWord {
    let (a, b) = (a.into(), b.into());
    let letters = fibonacci_bits(length)
        .into_iter()
        .map(|bit| if bit == 0 { a.clone() } else { b.clone() })
        .collect();
    FibWord { a, b, letters }
}

/// Recovers `(p, q, r)` from a difference word `x_{a,b}` and `V(1)`.
///
/// The first letter of the word is `a`; the other value is `b`. Then
/// `p = a - b`, `q = 2b - a` and `r = V(1) - p - q`.
pub fn gbs_from_differences(diffs: &[BigInt], first_term: &BigInt) -> Result<GbsParams, Error> {
    let a = diffs
        .first()
        .ok_or(Error::NotFibonacciWord { position: 0 })?
        .clone();
    let b = match diffs.iter().position(|d| *d != a) {
        Some(i) => diffs[i].clone(),
        None => return Err(Error::DegenerateAlphabet),
    };
    let expected = fibonacci_word(a.clone(), b.clone(), diffs.len());
    if let Some(position) = diffs
        .iter()
        .zip(&expected.letters)
        .position(|(x, y)| x != y)
    {
        return Err(Error::NotFibonacciWord { position });
    }
    let p = &a - &b;
    let q = &b * 2 - &a;
    let r = first_term - &p - &q;
    Ok(GbsParams { p, q, r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas(0), BigInt::from(2));
        assert_eq!(lucas(7), BigInt::from(29));
        assert_eq!(lucas(12), BigInt::from(322));
        let listed = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322];
        for (n, l) in listed.iter().enumerate() {
            assert_eq!(lucas_u64(n as u32), Some(*l));
        }
        assert_eq!(lucas_u64(92).map(BigInt::from), Some(lucas(92)));
        assert_eq!(lucas_u64(93), None);
    }

    #[test]
    fn fibonacci_examples() {
        assert_eq!(fibonacci(10), BigInt::from(55));
        assert_eq!(fibonacci(-2), BigInt::from(-1));
        assert_eq!(fibonacci(0), BigInt::from(0));
        assert_eq!(fibonacci(-1), BigInt::from(1));
    }

    #[test]
    fn fibonacci_matches_recurrence_both_directions() {
        let mut f = vec![BigInt::from(0), BigInt::from(1)];
        for i in 2..=200 {
            let next = &f[i - 1] + &f[i - 2];
            f.push(next);
        }
        for i in 0..=200i64 {
            assert_eq!(fibonacci(i), f[i as usize]);
            // F(i-2) = F(i) - F(i-1) run backwards
            assert_eq!(fibonacci(i - 2), fibonacci(i) - fibonacci(i - 1));
        }
    }

    #[test]
    fn lucas_from_fibonacci() {
        for n in 0..=60u32 {
            assert_eq!(lucas(n), fibonacci(n as i64 - 1) + fibonacci(n as i64 + 1));
        }
    }

    #[test]
    fn floor_n_phi_examples() {
        assert_eq!(floor_n_phi_u64(1), 1);
        assert_eq!(floor_n_phi_u64(2), 3);
        assert_eq!(floor_n_phi_u64(6), 9);
        assert_eq!(floor_n_phi(&BigUint::from(6u32)), BigUint::from(9u32));
    }

    #[test]
    fn floor_n_phi_gaps() {
        let mut prev = floor_n_phi_u64(0);
        for n in 1..=1_000_000u64 {
            let cur = floor_n_phi_u64(n);
            assert!(cur - prev == 1 || cur - prev == 2, "gap at {n}");
            prev = cur;
        }
    }

    #[test]
    fn floor_n_phi_wide_agrees() {
        for n in [0u64, 1, 12345, 1 << 40, (1 << 62) - 1] {
            assert_eq!(
                BigUint::from(floor_n_phi_u64(n)),
                floor_n_phi(&BigUint::from(n))
            );
        }
        // independent check via exact comparison in ℤ[φ]
        let n = BigInt::from(10u64).pow(30);
        let fl = BigInt::from(floor_n_phi(&n.to_biguint().unwrap()));
        assert_eq!(
            crate::exact_arith::PhiInt::new(BigInt::zero(), n).floor(),
            fl
        );
    }

    #[test]
    fn gbs_term_examples() {
        assert_eq!(gbs_term(&GbsParams::new(1, 2, 1), 2), BigInt::from(8));
        assert_eq!(gbs_term(&GbsParams::new(1, 2, -1), 1), BigInt::from(2));
        assert_eq!(gbs_term(&GbsParams::new(3, 1, 1), 1), BigInt::from(5));
    }

    #[test]
    fn fibonacci_word_examples() {
        assert_eq!(fibonacci_word(7, 4, 5).letters, ints(&[7, 4, 7, 7, 4]));
        assert_eq!(
            fibonacci_word(2, 1, 8).letters,
            ints(&[2, 1, 2, 2, 1, 2, 1, 2])
        );
        assert_eq!(fibonacci_word(3, 3, 4).letters, ints(&[3, 3, 3, 3]));
        assert!(fibonacci_word(1, 2, 0).letters.is_empty());
        // differences of ⌊nφ⌋ for n = 1..9
        let wythoff: Vec<BigInt> = (1..=9u64)
            .collect::<Vec<_>>()
            .windows(2)
            .map(|w| BigInt::from(floor_n_phi_u64(w[1]) - floor_n_phi_u64(w[0])))
            .collect();
        assert_eq!(fibonacci_word(2, 1, 8).letters, wythoff);
    }

    #[test]
    fn fibonacci_bits_prefix() {
        assert_eq!(fibonacci_bits(10), vec![0, 1, 0, 0, 1, 0, 1, 0, 0, 1]);
        assert_eq!(fibonacci_bits(1), vec![0]);
        assert!(fibonacci_bits(0).is_empty());
    }

    #[test]
    fn gbs_differences_examples() {
        assert_eq!(
            gbs_differences(&GbsParams::new(1, 2, 1), 5),
            ints(&[4, 3, 4, 4, 3])
        );
        assert_eq!(
            gbs_differences(&GbsParams::new(1, 0, 0), 5),
            ints(&[2, 1, 2, 2, 1])
        );
        assert_eq!(
            gbs_differences(&GbsParams::new(0, 5, 3), 3),
            ints(&[5, 5, 5])
        );
    }

    #[test]
    fn gbs_from_differences_examples() {
        let got = gbs_from_differences(&ints(&[7, 4, 7, 7, 4]), &BigInt::from(5)).unwrap();
        assert_eq!(got, GbsParams::new(3, 1, 1));
        let got = gbs_from_differences(&ints(&[4, 3, 4, 4, 3]), &BigInt::from(4)).unwrap();
        assert_eq!(got, GbsParams::new(1, 2, 1));
        let got = gbs_from_differences(&ints(&[2, 1, 2, 2, 1]), &BigInt::from(1)).unwrap();
        assert_eq!(got, GbsParams::new(1, 0, 0));
    }

    #[test]
    fn gbs_from_differences_rejects() {
        let one = BigInt::from(1);
        assert_eq!(
            gbs_from_differences(&ints(&[7, 4, 7, 4]), &one),
            Err(Error::NotFibonacciWord { position: 3 })
        );
        assert_eq!(
            gbs_from_differences(&ints(&[7, 4, 5]), &one),
            Err(Error::NotFibonacciWord { position: 2 })
        );
        assert_eq!(
            gbs_from_differences(&ints(&[5, 5, 5]), &one),
            Err(Error::DegenerateAlphabet)
        );
        assert_eq!(
            gbs_from_differences(&[], &one),
            Err(Error::NotFibonacciWord { position: 0 })
        );
    }

    #[test]
    fn terms_up_to_truncates() {
        let c = GbsParams::new(1, 2, 1);
        let got: Vec<u64> = c.terms_up_to(1, 24).collect();
        assert_eq!(got, vec![4, 8, 11, 15, 19, 22]);
    }

    fn params() -> impl Strategy<Value = GbsParams> {
        (-3i64..=3, -3i64..=3, -10i64..=10)
            .prop_filter("two distinct letters", |(p, _, _)| *p != 0)
            .prop_map(|(p, q, r)| GbsParams::new(p, q, r))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn differences_round_trip(params in params()) {
            let diffs = gbs_differences(&params, 10_000);
            let back = gbs_from_differences(&diffs, &gbs_term(&params, 1)).unwrap();
            prop_assert_eq!(back, params);
        }

        #[test]
        fn differences_are_fibonacci_word(params in params().prop_filter("p > 0", |g| g.p.is_positive())) {
            let diffs = gbs_differences(&params, 10_000);
            let a = &params.p * 2 + &params.q;
            let b = &params.p + &params.q;
            prop_assert_eq!(diffs, fibonacci_word(a, b, 10_000).letters);
        }
    }
}
