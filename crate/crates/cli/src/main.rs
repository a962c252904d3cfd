use std::io::{self, Write};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use piecewise::binary::{extremal_binary_word, h_rle, max_binary_length, rho_rle_traced, ReductionOrder};
use piecewise::complexity::{analyze, gap_search, h, rho};
use piecewise::oracle::{self, Budget};
use piecewise::side::{build_l_table, build_r_table, SideVectors};
use piecewise::word::words_up_to;
use piecewise::{Alphabet, RleWord, Word};
use serde_json::json;

mod bench;
mod corpus;
mod render;

#[derive(Parser)]
#[command(name = "piecewise", version, about = "Piecewise complexity h(u) and minimality index rho(u) of words")]
struct Cli {
    /// Alphabet symbols in order, e.g. `AB`; inferred from the input when omitted.
    #[arg(long, global = true)]
    alphabet: Option<String>,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Oracle work budget `LEN[,ALPHABET[,SET]]`; defaults to $PIECEWISE_CAP.
    #[arg(long, global = true)]
    cap: Option<String>,

    /// Report zero elapsed time, for byte-identical output across runs.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// h, rho and their witnesses for one word.
    Analyze { word: String },
    /// Piecewise complexity h(u).
    H {
        word: String,
        /// Exit with status 1 unless h(u) equals this value.
        #[arg(long)]
        expect: Option<usize>,
    },
    /// Minimality index rho(u).
    Rho {
        word: String,
        /// Exit with status 1 unless rho(u) equals this value.
        #[arg(long)]
        expect: Option<usize>,
    },
    /// The r-table (or with --left the l-table): rows are symbols, columns prefix lengths.
    Rtable {
        word: String,
        #[arg(long)]
        left: bool,
    },
    /// The r- and l-vectors.
    Rvector { word: String },
    /// rho and h of a binary word in run-length form such as `A1B5A1` or `A^1 B^5 A^1`.
    Binary {
        word: String,
        /// Print every reduction step.
        #[arg(long)]
        trace: bool,
    },
    /// Longest binary word with the given h.
    Maxlen { h: BigUint },
    /// A binary word of maximal length with the given h.
    Extremal { h: u64 },
    /// Compare the fast algorithms with the brute-force oracles on all short words.
    Check {
        /// Longest word length (at most 10).
        max_len: usize,
        /// Alphabet size (at most 3).
        alphabet_size: usize,
    },
    /// Analyze every line or token of a text file.
    Corpus(corpus::Args),
    /// Time the algorithms on pseudo-random words.
    Bench(bench::Args),
    /// Brute-force reference computations.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// For each gap h - rho - 1, the first short word exhibiting it.
    GapSearch {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// delta(u, v): largest k with u ~k v, or inf when u = v.
    Delta { u: String, v: String },
    /// A shortest subword of exactly one of u and v.
    Distinguisher { u: String, v: String },
    /// h(u) by searching single-letter insertions.
    H { word: String },
    /// rho(u) by searching single-letter deletions.
    Rho { word: String },
}

const CHECK_MAX_LEN: usize = 10;
const CHECK_MAX_ALPHABET: usize = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let format = cli.format.unwrap_or(Format::Text);
    let out = io::stdout();
    let mut out = out.lock();
    match &cli.command {
        Command::Analyze { word } => {
            let u = parse_word(word, cli.alphabet.as_deref())?;
            let mut report = analyze(&u);
            if cli.no_timing {
                report = report.without_timing();
            }
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
                _ => render::report(&mut out, &report)?,
            }
        }
        Command::H { word, expect } => {
            let u = parse_word(word, cli.alphabet.as_deref())?;
            let r = h(&u);
            match format {
                Format::Json => {
                    let witness = r.witness.map(|w| json!({"pos": w.pos, "symbol": u.alphabet().symbol(w.letter).to_string()}));
                    writeln!(out, "{}", json!({"h": r.value, "witness": witness}))?
                }
                _ => writeln!(out, "{}", r.value)?,
            }
            return Ok(expectation("h", r.value, *expect));
        }
        Command::Rho { word, expect } => {
            let u = parse_word(word, cli.alphabet.as_deref())?;
            let r = rho(&u);
            match format {
                Format::Json => writeln!(out, "{}", json!({"rho": r.value, "witness": r.witness.map(|pos| json!({"pos": pos}))}))?,
                _ => writeln!(out, "{}", r.value)?,
            }
            return Ok(expectation("rho", r.value, *expect));
        }
        Command::Rtable { word, left } => {
            let u = parse_word(word, cli.alphabet.as_deref())?;
            let table = if *left { build_l_table(&u) } else { build_r_table(&u) };
            match format {
                Format::Json => writeln!(out, "{}", render::table_json(&table))?,
                _ => render::table(&mut out, &table)?,
            }
        }
        Command::Rvector { word } => {
            let u = parse_word(word, cli.alphabet.as_deref())?;
            let v = SideVectors::new(&u);
            let r = rho(&u);
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"word": u.to_string(), "r": v.r, "l": v.l, "pushes": v.pushes, "rho": r.value})
                )?,
                _ => render::vectors(&mut out, &v, &r)?,
            }
        }
        Command::Binary { word, trace } => {
            let w = match &cli.alphabet {
                Some(symbols) => RleWord::parse_with(word, &Arc::new(Alphabet::new(symbols.chars())?))?,
                None => RleWord::parse(word)?,
            };
            let t = rho_rle_traced(&w, ReductionOrder::Leftmost);
            let hv = h_rle(&w);
            match format {
                Format::Json => {
                    let mut value = json!({"input": w.to_string(), "rho": t.rho.to_string(), "h": hv.to_string()});
                    if *trace {
                        value["trace"] = serde_json::to_value(&t.steps)?;
                    }
                    writeln!(out, "{value}")?
                }
                _ if *trace => writeln!(out, "{t}\nh = {hv}")?,
                _ => writeln!(out, "rho = {}\nh = {hv}", t.rho)?,
            }
        }
        Command::Maxlen { h } => {
            let n = max_binary_length(h)?;
            match format {
                Format::Json => writeln!(out, "{}", json!({"h": h.to_string(), "max_length": n.to_string()}))?,
                _ => writeln!(out, "{n}")?,
            }
        }
        Command::Extremal { h } => {
            let alphabet = Arc::new(Alphabet::new(cli.alphabet.as_deref().unwrap_or("AB").chars())?);
            let w = extremal_binary_word(*h, &alphabet)?;
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"h": h, "word": w.to_string(), "length": w.total_len().to_string()})
                )?,
                _ => writeln!(out, "{w}")?,
            }
        }
        Command::Check { max_len, alphabet_size } => return check(&mut out, *max_len, *alphabet_size, &budget(cli)?),
        Command::Corpus(args) => corpus::run(&mut out, args, format, cli.no_timing)?,
        Command::Bench(args) => return bench::run(&mut out, args, format),
        Command::Oracle(cmd) => oracle_command(&mut out, cmd, cli, format)?,
        Command::GapSearch { max_len } => {
            let alphabet = Arc::new(Alphabet::new(cli.alphabet.as_deref().unwrap_or("ABC").chars())?);
            for (gap, u) in gap_search(&alphabet, *max_len) {
                match format {
                    Format::Json => writeln!(out, "{}", json!({"gap": gap, "word": u.to_string()}))?,
                    _ if u.is_empty() => writeln!(out, "gap {gap}: ε")?,
                    _ => writeln!(out, "gap {gap}: {u}")?,
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn expectation(name: &str, got: usize, expect: Option<usize>) -> ExitCode {
    match expect {
        Some(want) if want != got => {
            eprintln!("{name} is {got}, expected {want}");
            ExitCode::from(1)
        }
        _ => ExitCode::SUCCESS,
    }
}

fn budget(cli: &Cli) -> Result<Budget> {
    Ok(match &cli.cap {
        Some(text) => Budget::parse(text)?,
        None => Budget::from_env()?,
    })
}

fn parse_word(text: &str, alphabet: Option<&str>) -> Result<Word> {
    match alphabet {
        Some(symbols) => {
            let alphabet = Arc::new(Alphabet::new(symbols.chars())?);
            Ok(Word::parse(text, &alphabet)?)
        }
        None if text.is_empty() => bail!("the empty word needs an explicit --alphabet"),
        None => Ok(Word::infer(text)),
    }
}

fn parse_pair(u: &str, v: &str, alphabet: Option<&str>) -> Result<(Word, Word)> {
    let joined = format!("{u}{v}");
    let symbols = match alphabet {
        Some(s) => s.to_string(),
        None if joined.is_empty() => bail!("two empty words need an explicit --alphabet"),
        None => Alphabet::infer(&joined).symbols().iter().collect(),
    };
    Ok((parse_word(u, Some(&symbols))?, parse_word(v, Some(&symbols))?))
}

fn check(out: &mut impl Write, max_len: usize, sigma: usize, budget: &Budget) -> Result<ExitCode> {
    if max_len > CHECK_MAX_LEN || sigma > CHECK_MAX_ALPHABET {
        bail!("check is limited to length <= {CHECK_MAX_LEN} and alphabet size <= {CHECK_MAX_ALPHABET}");
    }
    let alphabet = Arc::new(Alphabet::latin(sigma)?);
    let (mut total, mut h_ok, mut rho_ok) = (0usize, 0usize, 0usize);
    for u in words_up_to(&alphabet, max_len) {
        total += 1;
        let (fast_h, slow_h) = (h(&u).value, oracle::h_oracle(&u, budget)?);
        let (fast_rho, slow_rho) = (rho(&u).value, oracle::rho_oracle(&u, budget)?);
        if fast_h == slow_h {
            h_ok += 1;
        } else {
            writeln!(out, "mismatch h({u}): fast {fast_h}, oracle {slow_h}")?;
        }
        if fast_rho == slow_rho {
            rho_ok += 1;
        } else {
            writeln!(out, "mismatch rho({u}): fast {fast_rho}, oracle {slow_rho}")?;
        }
    }
    writeln!(out, "h: {h_ok}/{total} match, rho: {rho_ok}/{total} match")?;
    Ok(if h_ok == total && rho_ok == total {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn oracle_command(out: &mut impl Write, cmd: &OracleCommand, cli: &Cli, format: Format) -> Result<()> {
    let budget = budget(cli)?;
    let alphabet = cli.alphabet.as_deref();
    match cmd {
        OracleCommand::Delta { u, v } => {
            let (u, v) = parse_pair(u, v, alphabet)?;
            let d = oracle::delta(&u, &v, &budget)?;
            match format {
                Format::Json => writeln!(out, "{}", json!({"delta": d}))?,
                _ => writeln!(out, "{d}")?,
            }
        }
        OracleCommand::Distinguisher { u, v } => {
            let (u, v) = parse_pair(u, v, alphabet)?;
            let d = oracle::shortest_distinguisher(&u, &v, &budget).context("no distinguisher")?;
            match format {
                Format::Json => writeln!(out, "{}", json!({"word": d.word.to_string(), "side": d.side}))?,
                _ => {
                    let side = serde_json::to_value(d.side)?;
                    writeln!(out, "{} ({})", d.word, side.as_str().unwrap_or_default())?
                }
            }
        }
        OracleCommand::H { word } => {
            let u = parse_word(word, alphabet)?;
            let value = oracle::h_oracle(&u, &budget)?;
            match format {
                Format::Json => writeln!(out, "{}", json!({"h": value}))?,
                _ => writeln!(out, "{value}")?,
            }
        }
        OracleCommand::Rho { word } => {
            let u = parse_word(word, alphabet)?;
            let value = oracle::rho_oracle(&u, &budget)?;
            match format {
                Format::Json => writeln!(out, "{}", json!({"rho": value}))?,
                _ => writeln!(out, "{value}")?,
            }
        }
    }
    Ok(())
}
