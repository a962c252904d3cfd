//! Piecewise complexity `h(u)` and minimality index `ρ(u)`.
//!
//! `h(u) = max { r(u_1, a) + ℓ(a, u_2) + 1 : u = u_1 u_2, a ∈ A }` is read off
//! the two side tables in `O(|A|·|u|)`; `ρ(u) = 1 + max_i (r_i + ℓ_i)` off the
//! two side vectors in `O(|A| + |u|)`.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::side::{build_l_table, build_r_table, r_step, SideVectors};
use crate::word::{words_up_to, Alphabet, Letter, Word};

/// A split position `pos` (prefix length) and inserted letter reaching `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HWitness {
    pub pos: usize,
    pub letter: Letter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HResult {
    pub value: usize,
    /// `None` only for the empty word over the empty alphabet.
    pub witness: Option<HWitness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RhoResult {
    pub value: usize,
    /// 1-based index `i` of the letter maximising `r_i + ℓ_i`; `None` for `ε`.
    pub witness: Option<usize>,
}

/// How `h` holds its tables in memory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HStrategy {
    /// Both full tables, `2·|A|·(|u|+1)` entries.
    #[default]
    FullTables,
    /// One rolling `r` column; the `ℓ`-table is kept only at every
    /// `block`-th column and recomputed block by block from the right.
    Blocked { block: usize },
}

#[derive(Default)]
struct Best {
    value: Option<usize>,
    witness: Option<HWitness>,
}

impl Best {
    // first maximum wins: smallest position, then smallest letter
    fn offer_column(&mut self, pos: usize, r: &[u32], l: &[u32]) {
        for (a, (&x, &y)) in r.iter().zip(l).enumerate() {
            let v = (x + y) as usize + 1;
            if self.value.is_none_or(|b| v > b) {
                self.value = Some(v);
                self.witness = Some(HWitness {
                    pos,
                    letter: Letter(a as u32),
                });
            }
        }
    }

    fn finish(self) -> HResult {
        HResult {
            value: self.value.unwrap_or(0),
            witness: self.witness,
        }
    }
}

/// `h(u)` with the first maximising `(pos, letter)`.
///
/// Over the empty alphabet `h(ε) = 0`; otherwise `h(ε) = 1`.
pub fn h(u: &Word) -> HResult {
    h_with(u, HStrategy::FullTables)
}

pub fn h_with(u: &Word, strategy: HStrategy) -> HResult {
    match strategy {
        HStrategy::FullTables => {
            let r = build_r_table(u);
            let l = build_l_table(u);
            let mut best = Best::default();
            for i in 0..=u.len() {
                best.offer_column(i, r.column(i), l.column(i));
            }
            best.finish()
        }
        HStrategy::Blocked { block } => h_blocked(u, block.max(1)),
    }
}

fn h_blocked(u: &Word, block: usize) -> HResult {
    let sigma = u.alphabet().len();
    let n = u.len();
    let letters = u.letters();
    // ℓ column i is the r-recursion run over u[i..] backwards; keep it at
    // every multiple of `block`
    let mut checkpoints: Vec<Vec<u32>> = vec![Vec::new(); n / block + 1];
    let mut col = vec![0u32; sigma];
    let mut next = vec![0u32; sigma];
    for i in (0..=n).rev() {
        if i < n {
            r_step(&col, letters[i], &mut next);
            std::mem::swap(&mut col, &mut next);
        }
        if i % block == 0 {
            checkpoints[i / block] = col.clone();
        }
    }
    let zero = vec![0u32; sigma];
    let mut best = Best::default();
    let mut r_col = vec![0u32; sigma];
    let mut r_next = vec![0u32; sigma];
    let mut buffer = vec![0u32; (block + 1) * sigma];
    for start in (0..=n).step_by(block) {
        let end = (start + block).min(n);
        let width = end - start;
        let from = if end == n { &zero } else { &checkpoints[end / block] };
        buffer[width * sigma..(width + 1) * sigma].copy_from_slice(from);
        for k in (0..width).rev() {
            let (lo, hi) = buffer.split_at_mut((k + 1) * sigma);
            r_step(&hi[..sigma], letters[start + k], &mut lo[k * sigma..]);
        }
        let last = if end == n { width } else { width - 1 };
        for k in 0..=last {
            let i = start + k;
            if i > 0 {
                r_step(&r_col, letters[i - 1], &mut r_next);
                std::mem::swap(&mut r_col, &mut r_next);
            }
            best.offer_column(i, &r_col, &buffer[k * sigma..(k + 1) * sigma]);
        }
        if end == n {
            break;
        }
    }
    best.finish()
}

/// `ρ(u)` with the first maximising position; `ρ(ε) = 0`.
pub fn rho(u: &Word) -> RhoResult {
    rho_from_vectors(&SideVectors::new(u))
}

pub fn rho_from_vectors(v: &SideVectors) -> RhoResult {
    let mut best: Option<(u32, usize)> = None;
    for (i, (&r, &l)) in v.r.iter().zip(&v.l).enumerate() {
        if best.is_none_or(|(b, _)| r + l > b) {
            best = Some((r + l, i + 1));
        }
    }
    match best {
        Some((s, i)) => RhoResult {
            value: s as usize + 1,
            witness: Some(i),
        },
        None => RhoResult {
            value: 0,
            witness: None,
        },
    }
}

/// Everything `analyze` reports about one word.
#[derive(Debug, Clone)]
pub struct ComplexityReport {
    pub word_length: usize,
    pub alphabet: String,
    pub alphabet_size: usize,
    pub h: usize,
    pub rho: usize,
    /// `(split position, symbol)`.
    pub h_witness: Option<(usize, char)>,
    /// 1-based position of the deleted letter.
    pub rho_witness: Option<usize>,
    pub elapsed: Duration,
}

impl ComplexityReport {
    /// `h = ρ + 1`, which always holds over at most two letters.
    pub fn h_is_rho_plus_one(&self) -> bool {
        self.h == self.rho + 1
    }

    pub fn without_timing(mut self) -> Self {
        self.elapsed = Duration::ZERO;
        self
    }
}

impl Serialize for ComplexityReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct HW {
            pos: usize,
            symbol: String,
        }
        #[derive(Serialize)]
        struct RW {
            pos: usize,
        }
        let mut st = s.serialize_struct("ComplexityReport", 7)?;
        st.serialize_field("word_length", &self.word_length)?;
        st.serialize_field("alphabet", &self.alphabet)?;
        st.serialize_field("h", &self.h)?;
        st.serialize_field("rho", &self.rho)?;
        st.serialize_field(
            "h_witness",
            &self.h_witness.map(|(pos, c)| HW {
                pos,
                symbol: c.to_string(),
            }),
        )?;
        st.serialize_field("rho_witness", &self.rho_witness.map(|pos| RW { pos }))?;
        st.serialize_field("micros", &(self.elapsed.as_micros() as u64))?;
        st.end()
    }
}

const PARALLEL_THRESHOLD: usize = 1 << 16;

/// `h` from the side tables and `ρ` from the side vectors (independent code
/// paths), timed together. Long words run the two on separate threads.
pub fn analyze(u: &Word) -> ComplexityReport {
    let started = Instant::now();
    let (hr, rr) = if u.len() >= PARALLEL_THRESHOLD {
        std::thread::scope(|s| {
            let hh = s.spawn(|| h(u));
            let rr = rho(u);
            (hh.join().expect("h worker panicked"), rr)
        })
    } else {
        (h(u), rho(u))
    };
    let elapsed = started.elapsed();
    ComplexityReport {
        word_length: u.len(),
        alphabet: u.alphabet().to_string(),
        alphabet_size: u.alphabet().len(),
        h: hr.value,
        rho: rr.value,
        h_witness: hr.witness.map(|w| (w.pos, u.alphabet().symbol(w.letter))),
        rho_witness: rr.witness,
        elapsed,
    }
}

/// For each gap `h(u) - ρ(u) - 1` seen among the words of length at most
/// `max_len`, the first such word in shortlex order.
///
/// Exploration only: nothing is claimed about which gaps exist.
pub fn gap_search(alphabet: &Arc<Alphabet>, max_len: usize) -> BTreeMap<usize, Word> {
    let mut found = BTreeMap::new();
    for u in words_up_to(alphabet, max_len) {
        let gap = h(&u).value - rho(&u).value - 1;
        found.entry(gap).or_insert(u);
    }
    found
}
