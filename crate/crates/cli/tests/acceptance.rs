//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use basephi::expansion::{
    expand, expand_recursive, lucas_expansion_closed_form, lucas_plus_one_expansion,
};
use basephi::morphisms::{check_lemma_31, gamma_plus};
use basephi::report::VerificationReport;
use basephi::sequences::{fibonacci_word, gbs_differences, gbs_from_differences, lucas};
use basephi::theorems::{self, DigitTable};
use basephi::{GbsParams, PhiInt};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

const SWEEP: u64 = 1_000_000;

type Outcome = Result<String, String>;
type Criterion<'a> = (
    &'static str,
    &'static str,
    Duration,
    Box<dyn Fn() -> Outcome + 'a>,
);

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn passed(r: &VerificationReport) -> Outcome {
    if r.pass {
        Ok(format!("{} checks", r.checked))
    } else {
        Err(format!("{r}"))
    }
}

fn all(results: impl IntoIterator<Item = Outcome>) -> Outcome {
    let mut total = 0u64;
    for r in results {
        let detail = r?;
        total += detail
            .split_whitespace()
            .next()
            .and_then(|n| n.parse().ok())
            .unwrap_or(0);
    }
    Ok(format!("{total} checks"))
}

fn table_golden() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_basephi"))
        .args(["table", "1", "24"])
        .output()
        .map_err(|e| e.to_string())?;
    let golden = include_str!("golden/table_1_24.txt");
    if out.status.success() && out.stdout == golden.as_bytes() {
        Ok("24 rows byte-identical".into())
    } else {
        Err(String::from_utf8_lossy(&out.stdout).into_owned())
    }
}

fn illustration() -> Outcome {
    let shown = [
        (12, "100000.101001"),
        (13, "100010.001001"),
        (16, "101000.100001"),
        (17, "101010.000001"),
        (14, "100100.001001"),
        (15, "100101.001001"),
    ];
    for (n, want) in shown {
        let got = expand(&big(n)).map_err(|e| e.to_string())?.to_string();
        if got != want {
            return Err(format!("β({n}) = {got}, expected {want}"));
        }
    }
    Ok("6 expansions".into())
}

fn round_trip() -> Outcome {
    let check = |n: u64| -> Result<(), String> {
        let e = expand(&big(n)).map_err(|e| e.to_string())?;
        if e.value() != PhiInt::new(BigInt::from(n), BigInt::from(0)) {
            return Err(format!("value(β({n})) = {}", e.value()));
        }
        e.validate().map_err(|v| format!("β({n}) = {e}: {v:?}"))
    };
    (0..=100_000u64).into_par_iter().try_for_each(check)?;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let sample: Vec<u64> = (0..1000)
        .map(|_| rng.random_range(0..=1_000_000_000_000))
        .collect();
    sample.into_iter().try_for_each(check)?;
    Ok("100001 + 1000 random".into())
}

fn dual_algorithm() -> Outcome {
    (0..=100_000u64).into_par_iter().try_for_each(|n| {
        let a = expand(&big(n)).map_err(|e| e.to_string())?;
        let b = expand_recursive(&big(n)).map_err(|e| e.to_string())?;
        if a == b {
            Ok(())
        } else {
            Err(format!("N={n}: greedy {a}, recursive {b}"))
        }
    })?;
    Ok("100001 values".into())
}

fn closed_forms() -> Outcome {
    for m in 2..=40u32 {
        let want = expand(&lucas(m).to_biguint().unwrap()).map_err(|e| e.to_string())?;
        let got = lucas_expansion_closed_form(m).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("m={m}: {got} vs {want}"));
        }
    }
    for n in 1..=19u32 {
        let target = lucas(2 * n + 1).to_biguint().unwrap() + 1u32;
        let want = expand(&target).map_err(|e| e.to_string())?;
        let got = lucas_plus_one_expansion(n).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("n={n}: {got} vs {want}"));
        }
    }
    Ok("39 + 19 closed forms".into())
}

fn iterate_lengths() -> Outcome {
    passed(&check_lemma_31(25).map_err(|e| e.to_string())?)
}

fn fixed_point_coding() -> Outcome {
    all([
        passed(&theorems::verify_theorem_52(100_000).map_err(|e| e.to_string())?),
        passed(&theorems::verify_theorem_53(20).map_err(|e| e.to_string())?),
    ])
}

fn four_families(table: &DigitTable) -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| e.to_string())?;
    pool.install(|| passed(&theorems::verify_theorem_51_on(table).map_err(|e| e.to_string())?))
}

fn digit_trains(table: &DigitTable) -> Outcome {
    let results: Vec<Outcome> = (2..=18u32)
        .into_par_iter()
        .map(|k| passed(&theorems::verify_theorem_61_on(table, k).map_err(|e| e.to_string())?))
        .collect();
    all(results)
}

fn minus_two(table: &DigitTable) -> Outcome {
    passed(&theorems::verify_remark_62_on(table).map_err(|e| e.to_string())?)
}

fn ten_forces_zero() -> Outcome {
    passed(&theorems::verify_remark_54(100_000).map_err(|e| e.to_string())?)
}

fn frequency(table: &DigitTable) -> Outcome {
    let f = theorems::digit_frequency_on(table).map_err(|e| e.to_string())?;
    let tolerance = BigRational::new(1.into(), 1000.into());
    let approx = |r: &BigRational| num_traits::ToPrimitive::to_f64(r).unwrap();
    let detail = format!(
        "{}/{} = {:.7}, deviation {:+.2e}",
        f.count,
        f.limit,
        approx(&f.frequency),
        approx(&f.deviation)
    );
    if num_traits::Signed::abs(&f.deviation) < tolerance {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn beatty_words() -> Outcome {
    const TERMS: usize = 10_000;
    let mut rng = StdRng::seed_from_u64(21);
    for _ in 0..100 {
        let p = loop {
            let p: i64 = rng.random_range(-50..=50);
            if p != 0 {
                break p;
            }
        };
        let q: i64 = rng.random_range(-50..=50);
        let r: i64 = rng.random_range(-100..=100);
        let params = GbsParams::new(p, q, r);
        let diffs = gbs_differences(&params, TERMS);
        if diffs != fibonacci_word(2 * p + q, p + q, TERMS).letters {
            return Err(format!("forward fails for ({p}, {q}, {r})"));
        }
        let back = gbs_from_differences(&diffs, &params.term(1)).map_err(|e| e.to_string())?;
        if back != params {
            return Err(format!(
                "({p}, {q}, {r}) recovered as ({}, {}, {})",
                back.p, back.q, back.r
            ));
        }
    }
    Ok("100 triples".into())
}

fn extended_coding() -> Outcome {
    let display = [
        ("A0", "A0 B1 C1 D0 A0 B0 C0"),
        ("A1", "A0 B1 C1 D0 A0 B0 C0"),
        ("B0", "A0 B1 C1 D0"),
        ("B1", "A0 B1 C1 D0"),
        ("C0", "A0 B1 C1 D0 A0 B0 C0"),
        ("C1", "A0 B1 C1 D0 A0 B0 C0"),
        ("D0", "A0 B1 C1 D0 A0 B0 C0 A0 B1 C1 D0"),
        ("D1", "A0 B1 C1 D0 A0 B0 C0 A0 B1 C1 D0"),
    ];
    let gp = gamma_plus(2).map_err(|e| e.to_string())?;
    for (name, want) in display {
        let got = gp.format_word(gp.rule(gp.letter(name).unwrap()));
        if got != want {
            return Err(format!("γ₊({name}) = {got}, expected {want}"));
        }
    }
    all([2, 3].map(|k| {
        passed(&theorems::verify_gamma_plus_fixed_point(k, 10_000).map_err(|e| e.to_string())?)
    }))
}

fn main() -> ExitCode {
    let started = Instant::now();
    let table = DigitTable::build(SWEEP).expect("digit table");
    let build = started.elapsed();
    println!(
        "shared digit table for N ≤ {SWEEP} built in {:.2} s",
        build.as_secs_f64()
    );

    let table = &table;
    let shared = |f: fn(&DigitTable) -> Outcome| move || f(table);
    let criteria: Vec<Criterion> = vec![
        (
            "AC1",
            "table 1 24 matches the golden rows",
            secs(1),
            Box::new(table_golden),
        ),
        (
            "AC2",
            "six illustrated expansions",
            secs(1),
            Box::new(illustration),
        ),
        (
            "AC3",
            "round trip and validity",
            secs(30),
            Box::new(round_trip),
        ),
        (
            "AC4",
            "recursive = greedy for N ≤ 10^5",
            secs(60),
            Box::new(dual_algorithm),
        ),
        ("AC5", "Lucas closed forms", secs(1), Box::new(closed_forms)),
        (
            "AC6",
            "γ iterate lengths and identities, n ≤ 25",
            secs(5),
            Box::new(iterate_lengths),
        ),
        (
            "AC7",
            "T coding is the γ fixed point",
            secs(60),
            Box::new(fixed_point_coding),
        ),
        (
            "AC8",
            "four letter families to 10^6",
            secs(300),
            Box::new(shared(four_families)),
        ),
        (
            "AC9",
            "d_k families for k in 2..=18 to 10^6",
            secs(1800),
            Box::new(shared(digit_trains)),
        ),
        (
            "AC10",
            "d_-2 families to 10^6",
            secs(300),
            Box::new(shared(minus_two)),
        ),
        (
            "AC11",
            "d_1 d_0 = 10 forces d_-1 = 0",
            secs(30),
            Box::new(ten_forces_zero),
        ),
        (
            "AC12",
            "frequency of d_0 = 1 within 1e-3",
            secs(300),
            Box::new(shared(frequency)),
        ),
        (
            "AC13",
            "Beatty difference words, 100 triples",
            secs(30),
            Box::new(beatty_words),
        ),
        (
            "AC14",
            "γ₊ display and fixed point, k = 2, 3",
            secs(60),
            Box::new(extended_coding),
        ),
    ];

    let mut failures = 0;
    for (id, what, budget, run) in &criteria {
        let t = Instant::now();
        let mut outcome = run();
        let mut elapsed = t.elapsed();
        if ["AC8", "AC9", "AC10", "AC12"].contains(id) {
            elapsed += build;
        }
        if outcome.is_ok() && elapsed > *budget {
            outcome = Err(format!(
                "took {:.2} s, budget {} s",
                elapsed.as_secs_f64(),
                budget.as_secs()
            ));
        }
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {id} {what}: {detail} ({secs:.2} s)"),
            Err(detail) => {
                failures += 1;
                println!("[FAIL] {id} {what} ({secs:.2} s)\n{detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}
