//! `basephi`: expansions, Beatty sequences, morphisms and verification sweeps.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use basephi::expansion::{expand, expand_recursive, PhiExpansion};
use basephi::morphisms::{gamma, gamma_plus, sigma, Morphism};
use basephi::report::VerificationReport;
use basephi::sequences::{gbs_differences, GbsParams};
use basephi::theorems::{self, t_code, DigitTable};
use basephi::Error;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "basephi",
    version,
    about = "Base-φ expansions of natural numbers"
)]
struct Cli {
    /// Output layout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Worker threads for sweeps (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Records,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Greedy,
    Recursive,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Theorem,
    Brute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    T51,
    T52,
    T53,
    T61,
    R62,
    L31,
    Freq,
    Gammaplus,
    R54,
    Lr,
    Anchors,
}

#[derive(Clone, Copy, ValueEnum)]
enum MorphismName {
    Sigma,
    Gamma,
    Gammaplus,
}

#[derive(Subcommand)]
enum Command {
    /// Print β(N).
    Expand {
        n: BigUint,
        #[arg(long, value_enum, default_value_t = Algorithm::Greedy)]
        algorithm: Algorithm,
    },
    /// Rows `N  β(N)  T(N)` for N in [from, to].
    Table { from: BigUint, to: BigUint },
    /// All N ≤ limit with d_k(N) = 1.
    #[command(allow_negative_numbers = true)]
    Positions {
        k: BigInt,
        limit: BigUint,
        #[arg(long, value_enum, default_value_t = Source::Theorem)]
        source: Source,
    },
    /// Run a verification sweep; exit 1 on any mismatch.
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[arg(long)]
        limit: Option<BigUint>,
        #[arg(long)]
        k: Option<BigUint>,
        #[arg(long)]
        n_max: Option<BigUint>,
        #[arg(long)]
        length: Option<BigUint>,
        /// Largest |deviation| accepted by `freq`.
        #[arg(long)]
        tolerance: Option<f64>,
        /// Mismatches listed in the report.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Terms of V(n) = p⌊nφ⌋ + qn + r for n = 1..=count.
    #[command(allow_negative_numbers = true)]
    Beatty {
        p: BigInt,
        q: BigInt,
        r: BigInt,
        count: BigUint,
        /// Print V(n+1) - V(n) for n = 1..count-1 instead.
        #[arg(long)]
        differences: bool,
    },
    /// Print a morphism, an iterate, or a fixed-point prefix.
    Morphism {
        #[arg(value_enum)]
        name: MorphismName,
        #[arg(long, conflicts_with = "length")]
        iter: Option<usize>,
        #[arg(long)]
        seed: Option<String>,
        #[arg(long)]
        length: Option<usize>,
        /// Digit index for gammaplus.
        #[arg(long)]
        k: Option<u32>,
    },
}

enum Failure {
    Usage(String),
    Mismatch,
    Unsupported(String),
    Internal(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Unsupported(_) | Error::OutOfRange(_) => Failure::Unsupported(e.to_string()),
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Out = BufWriter<io::Stdout>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => return fail(Failure::Usage(format!("--jobs: {e}"))),
    };
    let mut out = BufWriter::new(io::stdout());
    let result = pool
        .install(|| run(&cli, &mut out))
        .and_then(|()| Ok(out.flush()?));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            fail(f)
        }
    }
}

fn fail(f: Failure) -> ExitCode {
    let (code, msg) = match f {
        Failure::Mismatch => return ExitCode::from(1),
        Failure::Internal(m) => (1, m),
        Failure::Usage(m) => (2, m),
        Failure::Unsupported(m) => (3, m),
        Failure::Io(e) if e.kind() == io::ErrorKind::BrokenPipe => return ExitCode::SUCCESS,
        Failure::Io(e) => (1, e.to_string()),
    };
    eprintln!("basephi: {msg}");
    ExitCode::from(code)
}

fn run(cli: &Cli, out: &mut Out) -> Result<(), Failure> {
    let records = cli.format == Format::Records;
    match &cli.command {
        Command::Expand { n, algorithm } => {
            let e = match algorithm {
                Algorithm::Greedy => expand(n)?,
                Algorithm::Recursive => expand_recursive(n)?,
            };
            if records {
                let mut rec = expansion_record(n, &e);
                rec.as_object_mut().unwrap().remove("t");
                writeln!(out, "{rec}")?;
            } else {
                writeln!(out, "{e}")?;
            }
        }
        Command::Table { from, to } => {
            if from < &BigUint::one() || from > to {
                return Err(Failure::Usage(format!(
                    "bad range {from}..{to}; need 1 <= from <= to"
                )));
            }
            let mut n = from.clone();
            while &n <= to {
                let e = expand(&n)?;
                if records {
                    writeln!(out, "{}", expansion_record(&n, &e))?;
                } else {
                    writeln!(out, "{n}  {e}  {}", t_code(&n)?)?;
                }
                n += 1u32;
            }
        }
        Command::Positions { k, limit, source } => {
            let k = k
                .to_i64()
                .ok_or_else(|| Failure::Unsupported(format!("digit index {k}")))?;
            let limit = to_u64(limit, "limit")?;
            if limit == 0 {
                return Err(Failure::Usage("limit must be at least 1".into()));
            }
            let found: Vec<u64> = match source {
                Source::Theorem if k <= -3 => {
                    return Err(Failure::Unsupported(
                        "no closed form implemented; use --source brute".into(),
                    ))
                }
                Source::Theorem => theorems::predicted_digit_positions(k, limit)?,
                Source::Brute => DigitTable::build(limit)?.positions(k).collect(),
            };
            if records {
                for n in found {
                    writeln!(out, "{}", json!({ "k": k, "n": n }))?;
                }
            } else {
                writeln!(out, "{}", join(found))?;
            }
        }
        Command::Verify {
            target,
            limit,
            k,
            n_max,
            length,
            tolerance,
            cap,
        } => {
            let mut report = verify(*target, limit, k, n_max, length, *tolerance)?;
            if let Some(cap) = cap {
                report.mismatches.truncate(*cap);
            }
            if records {
                writeln!(out, "{}", report.to_record())?;
            } else {
                writeln!(out, "{report}")?;
            }
            if !report.pass {
                return Err(Failure::Mismatch);
            }
        }
        Command::Beatty {
            p,
            q,
            r,
            count,
            differences,
        } => {
            let count = to_u64(count, "count")?;
            if count == 0 {
                return Err(Failure::Usage("count must be at least 1".into()));
            }
            let params = GbsParams::new(p.clone(), q.clone(), r.clone());
            let values: Vec<BigInt> = if *differences {
                gbs_differences(&params, count as usize - 1)
            } else {
                params.terms(1).take(count as usize).collect()
            };
            if records {
                let key = if *differences { "dv" } else { "v" };
                for (i, v) in values.iter().enumerate() {
                    let mut rec = serde_json::Map::new();
                    rec.insert("n".into(), json!(i + 1));
                    rec.insert(key.into(), big(v));
                    writeln!(out, "{}", Value::Object(rec))?;
                }
            } else {
                writeln!(out, "{}", join(values))?;
            }
        }
        Command::Morphism {
            name,
            iter,
            seed,
            length,
            k,
        } => {
            let m = match (name, k) {
                (MorphismName::Sigma, None) => sigma(),
                (MorphismName::Gamma, None) => gamma(),
                (MorphismName::Gammaplus, Some(k)) => gamma_plus(*k)?,
                (MorphismName::Gammaplus, None) => {
                    return Err(Failure::Usage("gammaplus needs --k".into()))
                }
                (_, Some(_)) => return Err(Failure::Usage("--k applies to gammaplus only".into())),
            };
            morphism(out, &m, *iter, seed.as_deref(), *length, records)?;
        }
    }
    Ok(())
}

fn verify(
    target: Target,
    limit: &Option<BigUint>,
    k: &Option<BigUint>,
    n_max: &Option<BigUint>,
    length: &Option<BigUint>,
    tolerance: Option<f64>,
) -> Result<VerificationReport, Failure> {
    use Target::*;
    let allowed: &[&str] = match target {
        T51 | R62 | R54 | Lr => &["limit"],
        T52 => &["length"],
        T53 | L31 | Anchors => &["n-max"],
        T61 => &["k", "limit"],
        Freq => &["limit", "tolerance"],
        Gammaplus => &["k", "length"],
    };
    let given = [
        ("limit", limit.is_some()),
        ("k", k.is_some()),
        ("n-max", n_max.is_some()),
        ("length", length.is_some()),
        ("tolerance", tolerance.is_some()),
    ];
    for (flag, present) in given {
        if present && !allowed.contains(&flag) {
            return Err(Failure::Usage(format!(
                "--{flag} does not apply to this target"
            )));
        }
    }
    let num = |v: &Option<BigUint>, flag: &str, default: u64| match v {
        Some(v) => to_u64(v, flag),
        None => Ok(default),
    };
    let limit = num(limit, "limit", 100_000)?;
    let length = num(length, "length", 10_000)?;
    let n_max = num(n_max, "n-max", 20)?;
    let k = match k {
        Some(k) => Some(
            u32::try_from(to_u64(k, "k")?).map_err(|_| Failure::Unsupported(format!("k = {k}")))?,
        ),
        None if matches!(target, T61 | Gammaplus) => {
            return Err(Failure::Usage("this target needs --k".into()))
        }
        None => None,
    };
    let small = |v: u64, flag: &str| {
        u32::try_from(v).map_err(|_| Failure::Unsupported(format!("--{flag} {v} is too large")))
    };
    let report = match target {
        T51 => theorems::verify_theorem_51(limit)?,
        T52 => theorems::verify_theorem_52(length as usize)?,
        T53 => theorems::verify_theorem_53(small(n_max, "n-max")?)?,
        T61 => theorems::verify_theorem_61(k.unwrap(), limit)?,
        R62 => theorems::verify_remark_62(limit)?,
        L31 => basephi::morphisms::check_lemma_31(n_max as usize)?,
        Freq => {
            let tol = tolerance.unwrap_or(1e-3);
            let tol = BigRational::from_float(tol)
                .filter(|t| t > &BigRational::from_integer(0.into()))
                .ok_or_else(|| Failure::Usage(format!("bad tolerance {tol}")))?;
            theorems::verify_frequency(limit, &tol)?
        }
        Gammaplus => theorems::verify_gamma_plus_fixed_point(k.unwrap(), length as usize)?,
        R54 => theorems::verify_remark_54(limit)?,
        Lr => theorems::verify_lr_law(limit)?,
        Anchors => theorems::t_anchor_values(small(n_max, "n-max")?)?,
    };
    Ok(report)
}

fn morphism(
    out: &mut Out,
    m: &Morphism,
    iter: Option<usize>,
    seed: Option<&str>,
    length: Option<usize>,
    records: bool,
) -> Result<(), Failure> {
    let word = match seed {
        Some(s) => m.parse_word(s)?,
        None => vec![basephi::Letter(0)],
    };
    let result = match (iter, length) {
        (Some(n), _) => m.iterate(&word, n)?,
        (None, Some(len)) => {
            let [seed] = word[..] else {
                return Err(Failure::Usage(
                    "a fixed point needs a single-letter seed".into(),
                ));
            };
            m.fixed_point_prefix(seed, len)?
        }
        (None, None) => {
            for l in 0..m.alphabet_len() {
                let letter = basephi::Letter(l as u8);
                let image = m.format_word(m.rule(letter));
                if records {
                    writeln!(
                        out,
                        "{}",
                        json!({ "letter": m.name(letter), "image": image })
                    )?;
                } else {
                    writeln!(out, "{} -> {image}", m.name(letter))?;
                }
            }
            return Ok(());
        }
    };
    let text = m.format_word(&result);
    if records {
        writeln!(
            out,
            "{}",
            json!({ "seed": m.format_word(&word), "length": result.len(), "word": text })
        )?;
    } else {
        writeln!(out, "{text}")?;
    }
    Ok(())
}

fn expansion_record(n: &BigUint, e: &PhiExpansion) -> Value {
    let (l, r) = match e.lr() {
        Some((l, r)) => (json!(l), json!(r)),
        None => (Value::Null, Value::Null),
    };
    let t = t_code(n)
        .map(|t| json!(t.to_string()))
        .unwrap_or(Value::Null);
    json!({ "n": big(n), "digits": e.to_string(), "L": l, "R": r, "t": t })
}

/// Integers of any size as JSON numbers.
fn big(n: &impl std::fmt::Display) -> Value {
    serde_json::from_str(&n.to_string()).expect("decimal integers are JSON numbers")
}

fn to_u64(v: &BigUint, what: &str) -> Result<u64, Failure> {
    v.to_u64()
        .ok_or_else(|| Failure::Unsupported(format!("{what} {v} is beyond 64 bits")))
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
