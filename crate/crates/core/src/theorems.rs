//! Digit-position results for base-φ expansions as executable checks.
//!
//! Every check compares a closed-form prediction (generalized Beatty
//! sequences, morphism fixed points) against digits read off the greedy
//! expansion of each `N` in range.

use std::fmt;

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::error::Error;
use crate::expansion::{digit_mask, expand, mask_digit, LucasInterval, PhiExpansion, MASK_LIMIT};
use crate::morphisms::{gamma, gamma_plus, Letter, GAMMA_PLUS_NAMES};
use crate::report::{ReportBuilder, VerificationReport};
use crate::sequences::{fibonacci_word, lucas, lucas_u64, GbsParams};

/// The four digit patterns around the radix point.
///
/// `A`: `d₁d₀ = 10`; `B`: `d₁d₀d₋₁ = 000`; `C`: `d₀ = 1`; `D`: `d₁d₀d₋₁ = 001`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum TCode {
    A = 0,
    B = 1,
    C = 2,
    D = 3,
}

impl TCode {
    pub const ALL: [TCode; 4] = [TCode::A, TCode::B, TCode::C, TCode::D];

    /// Classifies `(d₁, d₀, d₋₁)`. Returns `None` for digit triples that
    /// cannot occur in a valid expansion (`d₁ = d₀ = 1`).
    pub fn classify(d1: u8, d0: u8, dm1: u8) -> Option<TCode> {
        if d0 == 1 && (d1 == 1 || dm1 == 1) {
            return None;
        }
        let a = d1 == 1 && d0 == 0;
        let b = d1 == 0 && d0 == 0 && dm1 == 0;
        let c = d0 == 1;
        let d = d1 == 0 && d0 == 0 && dm1 == 1;
        match (a, b, c, d) {
            (true, false, false, false) => Some(TCode::A),
            (false, true, false, false) => Some(TCode::B),
            (false, false, true, false) => Some(TCode::C),
            (false, false, false, true) => Some(TCode::D),
            _ => None,
        }
    }

    pub fn from_mask(mask: u128) -> Option<TCode> {
        TCode::classify(
            mask_digit(mask, 1),
            mask_digit(mask, 0),
            mask_digit(mask, -1),
        )
    }

    pub fn from_expansion(e: &PhiExpansion) -> Option<TCode> {
        TCode::classify(e.digit(1), e.digit(0), e.digit(-1))
    }
}

impl fmt::Display for TCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TCode::A => "A",
            TCode::B => "B",
            TCode::C => "C",
            TCode::D => "D",
        })
    }
}

/// `T(N)` together with `j = d_k(N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TPlusCode {
    pub base: TCode,
    pub j: u8,
}

impl fmt::Display for TPlusCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(GAMMA_PLUS_NAMES[self.letter().0 as usize])
    }
}

fn unclassifiable(n: impl fmt::Display) -> Error {
    Error::Internal(format!("β({n}) matches no T-code pattern"))
}

/// `T(N)` for `N ≥ 1`.
pub fn t_code(n: &BigUint) -> Result<TCode, Error> {
    TCode::from_expansion(&expand(n)?).ok_or_else(|| unclassifiable(n))
}

pub(crate) fn t_plus_code_from(e: &PhiExpansion, k: i64) -> TPlusCode {
    let base = TCode::from_expansion(e).expect("expansions are classifiable");
    TPlusCode {
        base,
        j: e.digit(k),
    }
}

/// `T₊(N)` for digit index `k`.
pub fn t_plus_code(n: &BigUint, k: i64) -> Result<TPlusCode, Error> {
    let e = expand(n)?;
    let base = TCode::from_expansion(&e).ok_or_else(|| unclassifiable(n))?;
    Ok(TPlusCode {
        base,
        j: e.digit(k),
    })
}

/// Digit masks of `β(1), ..., β(limit)`, built once and shared by sweeps.
///
/// Construction is split across the rayon pool; the result does not depend
/// on the number of workers.
pub struct DigitTable {
    masks: Vec<u128>,
}

impl DigitTable {
    pub fn build(limit: u64) -> Result<Self, Error> {
        if limit > MASK_LIMIT {
            return Err(Error::OutOfRange(format!(
                "sweep limit {limit} exceeds {MASK_LIMIT}"
            )));
        }
        let masks = (1..=limit)
            .into_par_iter()
            .map(digit_mask)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DigitTable { masks })
    }

    pub fn limit(&self) -> u64 {
        self.masks.len() as u64
    }

    pub fn mask(&self, n: u64) -> u128 {
        self.masks[(n - 1) as usize]
    }

    pub fn digit(&self, n: u64, k: i64) -> u8 {
        mask_digit(self.mask(n), k)
    }

    pub fn t_code(&self, n: u64) -> Result<TCode, Error> {
        TCode::from_mask(self.mask(n)).ok_or_else(|| unclassifiable(n))
    }

    pub fn t_plus_code(&self, n: u64, k: i64) -> Result<TPlusCode, Error> {
        Ok(TPlusCode {
            base: self.t_code(n)?,
            j: self.digit(n, k),
        })
    }

    /// All `N ≤ limit` with `d_k(N) = 1`, ascending.
    pub fn positions(&self, k: i64) -> impl Iterator<Item = u64> + '_ {
        (1..=self.limit()).filter(move |&n| self.digit(n, k) == 1)
    }

    fn letter_positions(&self, letter: TCode) -> impl Iterator<Item = u64> + '_ {
        (1..=self.limit()).filter(move |&n| TCode::from_mask(self.mask(n)) == Some(letter))
    }
}

/// Compares two ascending streams as sets, recording each element found on
/// one side only. Repeated elements on the predicted side are reported too.
fn compare_sets(
    report: &mut ReportBuilder,
    label: &str,
    predicted: impl Iterator<Item = u64>,
    actual: impl Iterator<Item = u64>,
) {
    let mut predicted = predicted.peekable();
    let mut actual = actual.peekable();
    let mut prev = None;
    loop {
        match (predicted.peek().copied(), actual.peek().copied()) {
            (None, None) => break,
            (Some(x), _) if prev == Some(x) => {
                report.fail(
                    x as i64,
                    format!("{label}: one family"),
                    "several families".into(),
                );
                predicted.next();
            }
            (Some(x), Some(y)) if x == y => {
                report.count(1);
                prev = Some(x);
                predicted.next();
                actual.next();
            }
            (Some(x), y) if y.is_none_or(|y| x < y) => {
                report.fail(
                    x as i64,
                    format!("{label}: member"),
                    "digit test says no".into(),
                );
                prev = Some(x);
                predicted.next();
            }
            (_, Some(y)) => {
                report.fail(
                    y as i64,
                    format!("{label}: non-member"),
                    "digit test says yes".into(),
                );
                actual.next();
            }
            (Some(_), None) => unreachable!("covered by the member arm"),
        }
    }
}

/// Checks `T(L_{2n}) = B`, `T(L_{2n}+1) = C` and `T(L_{2n+1}+1) = D` for
/// `n` in `[1, n_max]`.
pub fn t_anchor_values(n_max: u32) -> Result<VerificationReport, Error> {
    let mut report = ReportBuilder::new("anchors").param("n_max", n_max);
    for n in 1..=n_max {
        let even = lucas(2 * n).to_biguint().unwrap();
        let odd = lucas(2 * n + 1).to_biguint().unwrap();
        let cases = [
            (even.clone(), TCode::B),
            (even + 1u32, TCode::C),
            (odd + 1u32, TCode::D),
        ];
        for (value, want) in cases {
            let got = t_code(&value)?;
            let at = value.to_i64().unwrap_or(i64::MAX);
            report.check(got == want, at, || want.to_string(), || got.to_string());
        }
    }
    Ok(report.finish())
}

/// `(T(N))_{N ≥ 2}` against the fixed point of `γ`, for `length` letters.
pub fn verify_theorem_52(length: usize) -> Result<VerificationReport, Error> {
    verify_theorem_52_on(&DigitTable::build(length as u64 + 1)?, length)
}

pub fn verify_theorem_52_on(
    table: &DigitTable,
    length: usize,
) -> Result<VerificationReport, Error> {
    let mut report = ReportBuilder::new("t52").param("length", length);
    if table.limit() < length as u64 + 1 {
        return Err(Error::OutOfRange("digit table too short".into()));
    }
    let g = gamma();
    for (i, letter) in g.fixed_point(Letter(0))?.take(length).enumerate() {
        let n = i as u64 + 2;
        let got = table.t_code(n)?;
        report.check(
            got.letter() == letter,
            n as i64,
            || g.name(letter).into(),
            || got.to_string(),
        );
    }
    Ok(report.finish())
}

fn t_word(table: &DigitTable, from: u64, to: u64) -> Result<Vec<Letter>, Error> {
    (from..=to).map(|n| Ok(table.t_code(n)?.letter())).collect()
}

/// `T(2)…T(L_n+1) = γⁿ(A)` for `n` in `[2, n_max]` and
/// `T(L_n+2)…T(L_{n+1}+1) = γⁿ⁻¹(A)` for `n` in `[3, n_max]`.
pub fn verify_theorem_53(n_max: u32) -> Result<VerificationReport, Error> {
    let top = lucas_u64(n_max + 1)
        .ok_or_else(|| Error::OutOfRange(format!("n_max {n_max} is too large")))?;
    let table = DigitTable::build(top + 1)?;
    let g = gamma();
    let mut report = ReportBuilder::new("t53").param("n_max", n_max);
    let mut powers = vec![vec![Letter(0)]];
    for n in 1..=n_max as usize {
        powers.push(g.apply(&powers[n - 1])?);
    }
    let l = |i: u32| lucas_u64(i).unwrap();
    for n in 2..=n_max {
        let got = t_word(&table, 2, l(n) + 1)?;
        let want = &powers[n as usize];
        report.check(
            got == *want,
            n as i64,
            || format!("a) γ^{n}(A)"),
            || format!("T(2)..T({}) differs", l(n) + 1),
        );
        if n >= 3 {
            let got = t_word(&table, l(n) + 2, l(n + 1) + 1)?;
            let want = &powers[n as usize - 1];
            report.check(
                got == *want,
                n as i64,
                || format!("b) γ^{}(A)", n - 1),
                || format!("T({})..T({}) differs", l(n) + 2, l(n + 1) + 1),
            );
        }
    }
    Ok(report.finish())
}

fn family_a() -> GbsParams {
    GbsParams::new(1, 2, -1)
}
fn family_b() -> GbsParams {
    GbsParams::new(1, 2, 0)
}
fn family_c() -> GbsParams {
    GbsParams::new(1, 2, 1)
}
fn family_d() -> GbsParams {
    GbsParams::new(3, 1, 1)
}

/// Positions `N ≤ limit` of a T-code letter according to the closed forms:
/// `A: ⌊nφ⌋+2n-1`, `B: ⌊nφ⌋+2n`, `C: {1} ∪ ⌊nφ⌋+2n+1`, `D: 3⌊nφ⌋+n+1`,
/// all for `n ≥ 1`.
pub fn positions_predicted(letter: TCode, limit: u64) -> Vec<u64> {
    let family = match letter {
        TCode::A => family_a(),
        TCode::B => family_b(),
        TCode::C => family_c(),
        TCode::D => family_d(),
    };
    let head = (letter == TCode::C && limit >= 1).then_some(1);
    head.into_iter()
        .chain(family.terms_up_to(1, limit))
        .collect()
}

/// Four-way position-set equality for the T-code letters, plus both
/// single-digit statements (`d₀ = 1`, `d₁ = 1`) read directly from the
/// digits.
pub fn verify_theorem_51(limit: u64) -> Result<VerificationReport, Error> {
    verify_theorem_51_on(&DigitTable::build(limit)?)
}

pub fn verify_theorem_51_on(table: &DigitTable) -> Result<VerificationReport, Error> {
    let limit = table.limit();
    let mut report = ReportBuilder::new("t51").param("limit", limit);

    // every N gets exactly one pattern
    for n in 1..=limit {
        let ok = TCode::from_mask(table.mask(n)).is_some();
        report.check(
            ok,
            n as i64,
            || "one T-code".into(),
            || "unclassifiable".into(),
        );
    }

    for letter in TCode::ALL {
        let predicted = positions_predicted(letter, limit);
        compare_sets(
            &mut report,
            &format!("T={letter}"),
            predicted.into_iter(),
            table.letter_positions(letter),
        );
    }

    // d₀(N) = 1 iff N = ⌊nφ⌋+2n+1 or N = 1
    let c = positions_predicted(TCode::C, limit);
    compare_sets(&mut report, "d0=1", c.into_iter(), table.positions(0));
    // d₁(N) = 1 iff N = ⌊nφ⌋+2n-1
    let a = positions_predicted(TCode::A, limit);
    compare_sets(&mut report, "d1=1", a.into_iter(), table.positions(1));

    // the four predicted families partition [1, limit]
    let merged = TCode::ALL
        .map(|l| positions_predicted(l, limit))
        .into_iter()
        .kmerge();
    compare_sets(&mut report, "partition", merged, 1..=limit);

    Ok(report.finish())
}

/// `d₁d₀ = 10` forces `d₋₁ = 0`, and `d₋₁(N) = 1` exactly on `3⌊nφ⌋+n+1`.
pub fn verify_remark_54(limit: u64) -> Result<VerificationReport, Error> {
    verify_remark_54_on(&DigitTable::build(limit)?)
}

pub fn verify_remark_54_on(table: &DigitTable) -> Result<VerificationReport, Error> {
    let limit = table.limit();
    let mut report = ReportBuilder::new("r54").param("limit", limit);
    for n in 1..=limit {
        let (d1, d0, dm1) = (table.digit(n, 1), table.digit(n, 0), table.digit(n, -1));
        if d1 == 1 && d0 == 0 {
            report.check(dm1 == 0, n as i64, || "d-1 = 0".into(), || "d-1 = 1".into());
        }
    }
    let family = family_d();
    compare_sets(
        &mut report,
        "d-1=1",
        family.terms_up_to(1, limit),
        table.positions(-1),
    );
    Ok(report.finish())
}

/// The Beatty families whose union is `{N : d_k(N) = 1}`: `p = L_k`,
/// `q = L_{k-1}` and `|Λ_k|` consecutive offsets `r` starting at
/// `-L_{k-1}` (even `k`) or `-L_{k-1} + 1` (odd `k`). Terms start at `n = 1`.
pub fn theorem_61_families(k: u32) -> Result<Vec<GbsParams>, Error> {
    if k < 2 {
        return Err(Error::OutOfRange(
            "digit-position families need k >= 2".into(),
        ));
    }
    let p = lucas(k);
    let q = lucas(k - 1);
    let (r1, len): (BigInt, BigInt) = if k.is_multiple_of(2) {
        (-&q, &q + 1)
    } else {
        (-&q + 1, &q - 1)
    };
    let len = len
        .to_u64()
        .ok_or_else(|| Error::OutOfRange(format!("|Λ_{k}| too large")))?;
    Ok((0..len)
        .map(|i| GbsParams {
            p: p.clone(),
            q: q.clone(),
            r: &r1 + BigInt::from(i),
        })
        .collect())
}

fn families_up_to(families: &[GbsParams], n0: u64, limit: u64) -> impl Iterator<Item = u64> + '_ {
    families
        .iter()
        .map(move |f| f.terms_up_to(n0, limit))
        .kmerge()
}

/// Maximal runs of consecutive integers in an ascending stream.
fn runs(values: impl Iterator<Item = u64>) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = Vec::new();
    for v in values {
        match out.last_mut() {
            Some((_, end)) if *end + 1 == v => *end = v,
            _ => out.push((v, v)),
        }
    }
    out
}

/// `{N ≤ limit : d_k(N) = 1}` against the union of [`theorem_61_families`],
/// with the train structure: every maximal run has length `|Λ_k|` (the last
/// one may be cut by `limit`) and the first run is `Λ_k`.
pub fn verify_theorem_61(k: u32, limit: u64) -> Result<VerificationReport, Error> {
    verify_theorem_61_on(&DigitTable::build(limit)?, k)
}

pub fn verify_theorem_61_on(table: &DigitTable, k: u32) -> Result<VerificationReport, Error> {
    let limit = table.limit();
    let mut report = ReportBuilder::new("t61")
        .param("k", k)
        .param("limit", limit);
    let families = theorem_61_families(k)?;
    compare_sets(
        &mut report,
        &format!("d{k}=1"),
        families_up_to(&families, 1, limit),
        table.positions(k as i64),
    );

    let lambda = LucasInterval::new(k);
    let train_len = lambda.len().to_u64().unwrap_or(u64::MAX);
    let trains = runs(table.positions(k as i64));
    for (i, &(start, end)) in trains.iter().enumerate() {
        let len = end - start + 1;
        let truncated = end == limit && len < train_len;
        report.check(
            len == train_len || truncated,
            start as i64,
            || format!("train {} of length {train_len}", i + 1),
            || format!("[{start}, {end}]"),
        );
    }
    match trains.first() {
        Some(&(start, end)) => {
            let want = (lambda.start.to_u64(), lambda.end.to_u64());
            let ok = want == (Some(start), Some(end));
            report.check(
                ok,
                start as i64,
                || format!("first train Λ_{k} = [{}, {}]", lambda.start, lambda.end),
                || format!("[{start}, {end}]"),
            );
            let from_families = families[0].term(1).to_u64();
            report.check(
                from_families == Some(start),
                start as i64,
                || "first train starts at the first family term".into(),
                || format!("{from_families:?}"),
            );
        }
        None => report.note(format!("no N ≤ {limit} has d_{k} = 1")),
    }
    Ok(report.finish())
}

fn minus_two_families() -> [GbsParams; 3] {
    [
        GbsParams::new(4, 3, 2),
        GbsParams::new(4, 3, 3),
        GbsParams::new(4, 3, 4),
    ]
}

/// `d₋₂(N) = 1` iff `N = 4⌊nφ⌋+3n+r` with `r ∈ {2,3,4}` and `n ≥ 0`.
pub fn verify_remark_62(limit: u64) -> Result<VerificationReport, Error> {
    verify_remark_62_on(&DigitTable::build(limit)?)
}

pub fn verify_remark_62_on(table: &DigitTable) -> Result<VerificationReport, Error> {
    let limit = table.limit();
    let mut report = ReportBuilder::new("r62").param("limit", limit);
    let families = minus_two_families();
    compare_sets(
        &mut report,
        "d-2=1",
        families_up_to(&families, 0, limit),
        table.positions(-2),
    );
    Ok(report.finish())
}

/// Closed-form positions of `d_k = 1` up to `limit`, for the digit indices
/// that have one: `k = 0, 1, -1, -2` and `k ≥ 2`.
pub fn predicted_digit_positions(k: i64, limit: u64) -> Result<Vec<u64>, Error> {
    match k {
        0 => Ok(positions_predicted(TCode::C, limit)),
        1 => Ok(positions_predicted(TCode::A, limit)),
        -1 => Ok(positions_predicted(TCode::D, limit)),
        -2 => Ok(families_up_to(&minus_two_families(), 0, limit).collect()),
        k if k >= 2 => {
            let k = u32::try_from(k).map_err(|_| Error::OutOfRange(format!("k = {k}")))?;
            let families = theorem_61_families(k)?;
            Ok(families_up_to(&families, 1, limit).collect())
        }
        _ => Err(Error::Unsupported(format!(
            "no closed form for digit index {k}"
        ))),
    }
}

/// `T₊(N)` for `N = 2..=length+1` against the fixed point of `γ₊` for `k`.
pub fn verify_gamma_plus_fixed_point(k: u32, length: usize) -> Result<VerificationReport, Error> {
    let table = DigitTable::build(length as u64 + 1)?;
    verify_gamma_plus_fixed_point_on(&table, k, length)
}

pub fn verify_gamma_plus_fixed_point_on(
    table: &DigitTable,
    k: u32,
    length: usize,
) -> Result<VerificationReport, Error> {
    let mut report = ReportBuilder::new("gammaplus")
        .param("k", k)
        .param("length", length);
    let gp = gamma_plus(k)?;
    let seed = table.t_plus_code(2, k as i64)?.letter();
    for (i, letter) in gp.fixed_point(seed)?.take(length).enumerate() {
        let n = i as u64 + 2;
        let got = table.t_plus_code(n, k as i64)?;
        report.check(
            got.letter() == letter,
            n as i64,
            || gp.name(letter).into(),
            || got.to_string(),
        );
    }
    Ok(report.finish())
}

/// The observed `L(N)`/`R(N)` law on Lucas intervals:
/// `L = 2n, R = -2n` on `Λ_{2n}` and `L = 2n+1, R = -(2n+2)` on `Λ_{2n+1}`.
pub fn verify_lr_law(limit: u64) -> Result<VerificationReport, Error> {
    let table = DigitTable::build(limit)?;
    let mut report = ReportBuilder::new("lr").param("limit", limit);
    let mut m = 1u32;
    let mut lambda = LucasInterval::new(m);
    for n in 2..=limit {
        while lambda.end.to_u64().is_some_and(|e| e < n) {
            m += 1;
            lambda = LucasInterval::new(m);
        }
        let mask = table.mask(n);
        let l = 127 - mask.leading_zeros() as i64 - 64;
        let r = mask.trailing_zeros() as i64 - 64;
        let want = if m.is_multiple_of(2) {
            (m as i64, -(m as i64))
        } else {
            (m as i64, -(m as i64) - 1)
        };
        report.check(
            (l, r) == want,
            n as i64,
            || format!("Λ_{m}: (L, R) = {want:?}"),
            || format!("({l}, {r})"),
        );
    }
    report.note("(L, R) = (m, -m) on even Λ_m and (m, -m-1) on odd Λ_m");
    Ok(report.finish())
}

/// Relative frequency of `d₀ = 1` over `1..=limit`.
#[derive(Clone, Debug, PartialEq)]
pub struct DigitFrequency {
    pub count: u64,
    pub limit: u64,
    /// `count / limit`, exact.
    pub frequency: BigRational,
    /// `(5 - √5)/10` to twelve decimal places.
    pub constant: BigRational,
    /// `frequency - constant`.
    pub deviation: BigRational,
}

/// `(5 - √5)/10` with `√5` replaced by `⌊√5·10^d⌋ / 10^d`.
pub fn frequency_constant(decimals: u32) -> BigRational {
    let scale = BigUint::from(10u32).pow(decimals);
    let root = crate::sequences::isqrt(&(&scale * &scale * 5u32));
    let numer = BigInt::from(&scale * 5u32) - BigInt::from(root);
    BigRational::new(numer, BigInt::from(scale) * 10)
}

pub fn digit_frequency(limit: u64) -> Result<DigitFrequency, Error> {
    digit_frequency_on(&DigitTable::build(limit)?)
}

pub fn digit_frequency_on(table: &DigitTable) -> Result<DigitFrequency, Error> {
    let limit = table.limit();
    if limit == 0 {
        return Err(Error::OutOfRange("frequency needs limit >= 1".into()));
    }
    let count = table.positions(0).count() as u64;
    let frequency = BigRational::new(count.into(), limit.into());
    let constant = frequency_constant(12);
    let deviation = &frequency - &constant;
    Ok(DigitFrequency {
        count,
        limit,
        frequency,
        constant,
        deviation,
    })
}

/// Frequency check as a report, passing when `|deviation| < tolerance`.
pub fn verify_frequency(limit: u64, tolerance: &BigRational) -> Result<VerificationReport, Error> {
    let report = ReportBuilder::new("freq").param("limit", limit);
    let freq = digit_frequency(limit)?;
    let mut report = report.param("count", freq.count);
    let dev = freq.deviation.abs();
    let approx = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
    report.check(
        &dev < tolerance,
        limit as i64,
        || format!("|deviation| < {}", approx(tolerance)),
        || format!("{:.3e}", approx(&dev)),
    );
    report.note(format!(
        "frequency {}/{} ≈ {:.7}, constant ≈ {:.7}, deviation ≈ {:+.3e}",
        freq.count,
        limit,
        approx(&freq.frequency),
        approx(&freq.constant),
        approx(&freq.deviation)
    ));
    Ok(report.finish())
}

/// Gaps between successive `D` positions, checked against `x_{7,4}`.
pub fn d_gap_word(limit: u64) -> Vec<u64> {
    positions_predicted(TCode::D, limit)
        .windows(2)
        .map(|w| w[1] - w[0])
        .collect()
}

pub fn d_gaps_are_fibonacci_word(gaps: &[u64]) -> bool {
    let word = fibonacci_word(7, 4, gaps.len());
    gaps.iter()
        .zip(&word.letters)
        .all(|(g, w)| BigInt::from(*g) == *w)
}
