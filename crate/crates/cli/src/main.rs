use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use binarray::scalar::parse_list;
use binarray::{dwyer_frankel_check, replay, run_suite, BinomialArray, InitialSequence, Params, SeqVec, Suite};
use clap::{Parser, Subcommand, ValueEnum};

/// Exact binomial arrays, transforms and identity checks.
#[derive(Parser)]
#[command(name = "binarray", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// Print a window of B(a): rows 0..rows-1, columns a..b.
    Render {
        /// Initial sequence, comma separated (integers or p/q).
        #[arg(long, allow_hyphen_values = true)]
        init: String,
        #[arg(long)]
        rows: u64,
        /// Column range such as -2..2.
        #[arg(long, allow_hyphen_values = true)]
        cols: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Run an identity suite and print a JSON report.
    ///
    /// Random cases draw coefficients from [-9, 9] and polynomials of degree
    /// at most 6 from a ChaCha8 generator seeded per family with the seed.
    /// Grid families ignore --cases. Exit status is 1 when a normative family
    /// fails, or any family with --strict.
    Verify {
        /// core, hockey, convolution, catalan, sl2 or all.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long)]
        strict: bool,
    },
    /// Re-evaluate one case of an identity family.
    Replay {
        #[arg(long)]
        family: String,
        /// Parameters as JSON, e.g. '{"n":0}'.
        #[arg(long)]
        params: String,
    },
    /// Print the first terms of a named sequence, one per line.
    Seq {
        /// catalan, shapiro-row, crs, c-seq, aeration, cg, near-zero-cg or ballot.
        #[arg(long)]
        family: String,
        /// Family parameter as key=value; repeatable.
        #[arg(long = "param", allow_hyphen_values = true)]
        params: Vec<String>,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Compare (a*b)_m with (B^shift a * B^-shift b)_m.
    Convolve {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        shift: i64,
    },
}

fn parse_cols(text: &str) -> Result<(i64, i64)> {
    let (lo, hi) = text.split_once("..").context("columns must look like a..b")?;
    let lo = lo.trim().parse().with_context(|| format!("bad column bound {lo:?}"))?;
    let hi = hi.trim().parse().with_context(|| format!("bad column bound {hi:?}"))?;
    Ok((lo, hi))
}

fn parse_params(raw: &[String]) -> Result<BTreeMap<String, i64>> {
    raw.iter()
        .map(|kv| {
            let (k, v) = kv.split_once('=').with_context(|| format!("parameter {kv:?} is not key=value"))?;
            let v = v.trim().parse().with_context(|| format!("parameter {k} needs an integer"))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Render { init, rows, cols, format } => {
            if rows == 0 {
                bail!("rows must be positive");
            }
            let (lo, hi) = parse_cols(&cols)?;
            let array = BinomialArray::new(InitialSequence::new(parse_list(&init)?));
            let window = array.window(0, rows - 1, lo, hi)?;
            match format {
                Format::Csv => print!("{}", window.to_csv()),
                Format::Ascii => print!("{}", window.to_ascii()),
            }
        }
        Command::Verify { suite, seed, cases, strict } => {
            let suite: Suite = suite.parse()?;
            let report = run_suite(suite, seed, cases)?;
            println!("{}", report.to_json());
            return Ok(report.success(strict));
        }
        Command::Replay { family, params } => {
            let params: Params = serde_json::from_str(&params).context("params must be a JSON object")?;
            let outcome = replay(&family, &params)?;
            println!("{}", serde_json::to_string_pretty(&outcome)?);
            return Ok(outcome.passed() != Some(false));
        }
        Command::Seq { family, params, count } => {
            let params = parse_params(&params)?;
            for v in binarray::catalan::sequence(&family, &params, count)? {
                println!("{v}");
            }
        }
        Command::Convolve { a, b, m, shift } => {
            let (a, b) = (SeqVec::new(parse_list(&a)?), SeqVec::new(parse_list(&b)?));
            let c = dwyer_frankel_check(&a, &b, shift, m)?;
            println!("{}", c.rhs);
            println!("{}", c.lhs);
            println!("{}", if c.equal { "EQUAL" } else { "UNEQUAL" });
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
