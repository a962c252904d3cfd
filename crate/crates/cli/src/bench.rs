use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use anyhow::Result;
use clap::ValueEnum;
use num_bigint::BigUint;
use piecewise::binary::{rho_rle_traced, ReductionOrder};
use piecewise::oracle::{h_oracle, Budget};
use piecewise::side::{r_vector_counted, l_vector_counted};
use piecewise::{build_l_table, build_r_table, complexity, Alphabet, Letter, RleWord, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    #[value(name = "h_table")]
    HTable,
    #[value(name = "rho_vector")]
    RhoVector,
    #[value(name = "rho_rle")]
    RhoRle,
    #[value(name = "oracle")]
    Oracle,
}

#[derive(clap::Args)]
pub struct Args {
    /// Input sizes: word length, or block count for rho_rle.
    #[arg(long, value_delimiter = ',', default_values_t = [10_000usize, 100_000, 1_000_000])]
    sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', value_enum, default_values_t = [Algorithm::HTable, Algorithm::RhoVector, Algorithm::RhoRle])]
    algorithms: Vec<Algorithm>,
    /// Alphabet size for the generated words (rho_rle is always binary).
    #[arg(long, default_value_t = 4)]
    sigma: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Debug, Serialize)]
pub struct BenchResult {
    pub algorithm: Algorithm,
    pub input_size: usize,
    pub alphabet_size: usize,
    pub wall_micros: u64,
    /// Stack pushes for rho_vector, table cells for h_table, reduction steps
    /// for rho_rle, candidate insertions for the oracle.
    pub ops_counter: u64,
    /// Time ratio over size ratio relative to the previous size; 1.0 is linear.
    pub scaling: Option<f64>,
}

fn random_word(rng: &mut ChaCha8Rng, alphabet: &Arc<Alphabet>, n: usize) -> Word {
    let sigma = alphabet.len() as u32;
    Word::new(Arc::clone(alphabet), (0..n).map(|_| Letter(rng.gen_range(0..sigma))).collect())
        .expect("letters drawn from the alphabet")
}

// Block lengths up to 10^18, a quarter of them 1 so every phase has work.
fn random_rle(rng: &mut ChaCha8Rng, k: usize) -> RleWord {
    let blocks = (0..k)
        .map(|_| {
            if rng.gen_bool(0.25) {
                BigUint::from(1u32)
            } else {
                BigUint::from(rng.gen_range(2..=1_000_000_000_000_000_000u64))
            }
        })
        .collect();
    let alphabet = Arc::new(Alphabet::new("AB".chars()).expect("distinct symbols"));
    let first = (k > 0).then_some(Letter(0));
    RleWord::new(alphabet, first, blocks).expect("valid blocks")
}

fn measure(algorithm: Algorithm, n: usize, alphabet: &Arc<Alphabet>, rng: &mut ChaCha8Rng) -> Result<(Duration, u64)> {
    Ok(match algorithm {
        Algorithm::HTable => {
            let u = random_word(rng, alphabet, n);
            let started = Instant::now();
            let _ = complexity::h(&u);
            let took = started.elapsed();
            let cells = build_r_table(&u).columns() + build_l_table(&u).columns();
            (took, (cells * alphabet.len()) as u64)
        }
        Algorithm::RhoVector => {
            let u = random_word(rng, alphabet, n);
            let started = Instant::now();
            let (_, r) = r_vector_counted(&u);
            let (_, l) = l_vector_counted(&u);
            let took = started.elapsed();
            (took, r.max(l) as u64)
        }
        Algorithm::RhoRle => {
            let w = random_rle(rng, n);
            let started = Instant::now();
            let trace = rho_rle_traced(&w, ReductionOrder::Leftmost);
            (started.elapsed(), trace.steps.len() as u64)
        }
        Algorithm::Oracle => {
            let u = random_word(rng, alphabet, n);
            let started = Instant::now();
            h_oracle(&u, &Budget::default())?;
            (started.elapsed(), ((u.len() + 1) * alphabet.len()) as u64)
        }
    })
}

pub fn run(out: &mut impl Write, args: &Args, format: Format) -> Result<ExitCode> {
    let alphabet = Arc::new(Alphabet::latin(args.sigma)?);
    let mut results = Vec::new();
    let mut violations = 0;
    for &algorithm in &args.algorithms {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let mut previous: Option<(usize, Duration)> = None;
        for &n in &args.sizes {
            let sigma = if algorithm == Algorithm::RhoRle { 2 } else { args.sigma };
            let (took, ops) = match measure(algorithm, n, &alphabet, &mut rng) {
                Ok(m) => m,
                Err(e) => {
                    eprintln!("skipping {algorithm:?} at size {n}: {e}");
                    continue;
                }
            };
            if algorithm == Algorithm::RhoVector && ops > 2 * n as u64 {
                violations += 1;
            }
            let scaling = previous.and_then(|(pn, pt)| {
                (pt.as_nanos() > 0 && pn > 0)
                    .then(|| (took.as_secs_f64() / pt.as_secs_f64()) / (n as f64 / pn as f64))
            });
            previous = Some((n, took));
            results.push(BenchResult {
                algorithm,
                input_size: n,
                alphabet_size: sigma,
                wall_micros: took.as_micros() as u64,
                ops_counter: ops,
                scaling,
            });
        }
    }
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in &results {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Json => {
            for r in &results {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Text => {
            writeln!(out, "{:<12}{:>12}{:>6}{:>14}{:>14}{:>9}", "algorithm", "size", "|A|", "micros", "ops", "scaling")?;
            for r in &results {
                let name = serde_json::to_value(r.algorithm)?;
                let scaling = r.scaling.map_or("-".to_string(), |s| format!("{s:.2}"));
                writeln!(
                    out,
                    "{:<12}{:>12}{:>6}{:>14}{:>14}{:>9}",
                    name.as_str().unwrap_or_default(),
                    r.input_size,
                    r.alphabet_size,
                    r.wall_micros,
                    r.ops_counter,
                    scaling
                )?;
            }
        }
    }
    if violations > 0 {
        eprintln!("rho_vector exceeded 2|u| stack pushes {violations} time(s)");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}
