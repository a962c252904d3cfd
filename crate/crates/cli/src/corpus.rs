use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use piecewise::{analyze, Word};
use rayon::prelude::*;
use serde::Serialize;

use crate::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Unit {
    Line,
    Token,
}

/// What to do with characters other than ASCII letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Symbols {
    Strip,
    Keep,
    Error,
}

#[derive(clap::Args)]
pub struct Args {
    path: PathBuf,
    #[arg(long, value_enum, default_value_t = Unit::Line)]
    unit: Unit,
    #[arg(long, value_enum, default_value_t = Symbols::Strip)]
    symbols: Symbols,
    /// Do not uppercase the input.
    #[arg(long)]
    keep_case: bool,
}

#[derive(Debug, Serialize)]
pub struct CorpusRecord {
    pub source_id: String,
    pub word_length: usize,
    pub alphabet_size: usize,
    pub h: usize,
    pub rho: usize,
    pub elapsed_micros: u64,
}

/// Splits `text` into `(source id, raw unit)` pairs. Lines are numbered from
/// 1; tokens are `line:index`, both 1-based.
fn units(text: &str, unit: Unit) -> Vec<(String, &str)> {
    let lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    match unit {
        Unit::Line => lines.map(|(i, l)| (i.to_string(), l)).collect(),
        Unit::Token => lines
            .flat_map(|(i, l)| {
                l.split_whitespace()
                    .enumerate()
                    .map(move |(j, t)| (format!("{i}:{}", j + 1), t))
            })
            .collect(),
    }
}

fn normalize(id: &str, raw: &str, symbols: Symbols, keep_case: bool) -> Result<String> {
    let text = if keep_case { raw.to_string() } else { raw.to_uppercase() };
    match symbols {
        Symbols::Keep => Ok(text),
        Symbols::Strip => Ok(text.chars().filter(char::is_ascii_alphabetic).collect()),
        Symbols::Error => match text.chars().find(|c| !c.is_ascii_alphabetic()) {
            Some(c) => bail!("unit {id}: symbol {c:?} is not an ASCII letter"),
            None => Ok(text),
        },
    }
}

pub fn records(text: &str, args: &Args, no_timing: bool) -> Result<Vec<CorpusRecord>> {
    let units = units(text, args.unit);
    let normalized: Vec<(String, String)> = units
        .into_iter()
        .map(|(id, raw)| normalize(&id, raw, args.symbols, args.keep_case).map(|w| (id, w)))
        .collect::<Result<_>>()?;
    // empty units have no alphabet to measure against
    Ok(normalized
        .into_par_iter()
        .filter(|(_, w)| !w.is_empty())
        .map(|(source_id, w)| {
            let report = analyze(&Word::infer(&w));
            CorpusRecord {
                source_id,
                word_length: report.word_length,
                alphabet_size: report.alphabet_size,
                h: report.h,
                rho: report.rho,
                elapsed_micros: if no_timing { 0 } else { report.elapsed.as_micros() as u64 },
            }
        })
        .collect())
}

pub fn run(out: &mut impl Write, args: &Args, format: Format, no_timing: bool) -> Result<()> {
    let text = std::fs::read_to_string(&args.path).with_context(|| format!("cannot read {}", args.path.display()))?;
    let records = records(&text, args, no_timing)?;
    match format {
        Format::Json => {
            for r in &records {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv | Format::Text => {
            let mut w = csv::Writer::from_writer(out);
            if records.is_empty() {
                w.write_record(["source_id", "word_length", "alphabet_size", "h", "rho", "elapsed_micros"])?;
            }
            for r in &records {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
