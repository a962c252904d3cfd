// Human-readable layouts. Tables put symbols in rows and prefix lengths in
// columns, with the letter read between two columns printed above them.

use std::io::{self, Write};

use piecewise::complexity::RhoResult;
use piecewise::side::{Orientation, SideTable, SideVectors};
use piecewise::{ComplexityReport, Letter};
use serde_json::{json, Value};

pub fn report(out: &mut impl Write, r: &ComplexityReport) -> io::Result<()> {
    writeln!(out, "length    {}", r.word_length)?;
    writeln!(out, "alphabet  {} ({} symbols)", r.alphabet, r.alphabet_size)?;
    match r.h_witness {
        Some((pos, symbol)) => writeln!(out, "h         {}  (insert {symbol} at position {pos})", r.h)?,
        None => writeln!(out, "h         {}", r.h)?,
    }
    match r.rho_witness {
        Some(pos) => writeln!(out, "rho       {}  (delete letter {pos})", r.rho)?,
        None => writeln!(out, "rho       {}", r.rho)?,
    }
    writeln!(out, "h = rho+1 {}", if r.h_is_rho_plus_one() { "yes" } else { "no" })?;
    writeln!(out, "micros    {}", r.elapsed.as_micros())
}

fn row(out: &mut impl Write, label: &str, cells: impl IntoIterator<Item = String>, width: usize) -> io::Result<()> {
    write!(out, "{label:<4}")?;
    for c in cells {
        write!(out, "{c:>width$}")?;
    }
    writeln!(out)
}

pub fn table(out: &mut impl Write, t: &SideTable) -> io::Result<()> {
    let u = t.word();
    let alphabet = u.alphabet();
    let rows: Vec<Vec<u32>> = alphabet.letters().map(|a| t.row(a)).collect();
    let max = rows.iter().flatten().max().copied().unwrap_or(0);
    let width = max.max(t.columns() as u32 - 1).to_string().len() + 1;
    // r reads u(i) between columns i-1 and i; l reads it between i and i+1
    let letters = u.letters().iter().map(|&a| alphabet.symbol(a).to_string());
    let shifted: Vec<String> = match t.orientation() {
        Orientation::Right => std::iter::once(String::new()).chain(letters).collect(),
        Orientation::Left => letters.chain(std::iter::once(String::new())).collect(),
    };
    row(out, "u", shifted, width)?;
    row(out, "i", (0..t.columns()).map(|i| i.to_string()), width)?;
    for (a, values) in rows.iter().enumerate() {
        let label = alphabet.symbol(Letter(a as u32)).to_string();
        row(out, &label, values.iter().map(u32::to_string), width)?;
    }
    Ok(())
}

pub fn table_json(t: &SideTable) -> Value {
    let alphabet = t.word().alphabet();
    let rows: serde_json::Map<String, Value> = alphabet
        .letters()
        .map(|a| (alphabet.symbol(a).to_string(), json!(t.row(a))))
        .collect();
    let orientation = match t.orientation() {
        Orientation::Right => "right",
        Orientation::Left => "left",
    };
    json!({"word": t.word().to_string(), "orientation": orientation, "rows": rows})
}

pub fn vectors(out: &mut impl Write, v: &SideVectors, r: &RhoResult) -> io::Result<()> {
    let u = &v.word;
    let max = v.r.iter().chain(&v.l).max().copied().unwrap_or(0) as usize;
    let width = max.max(u.len()).to_string().len() + 1;
    row(out, "i", (1..=u.len()).map(|i| i.to_string()), width)?;
    row(
        out,
        "u",
        u.letters().iter().map(|&a| u.alphabet().symbol(a).to_string()),
        width,
    )?;
    row(out, "r", v.r.iter().map(u32::to_string), width)?;
    row(out, "l", v.l.iter().map(u32::to_string), width)?;
    match r.witness {
        Some(i) => writeln!(out, "rho = {} (at i = {i})", r.value),
        None => writeln!(out, "rho = {}", r.value),
    }
}
