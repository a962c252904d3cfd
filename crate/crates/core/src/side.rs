//! Side distances `r(u, t) = δ(u, ut)` and `ℓ(t, u) = δ(tu, u)`.
//!
//! `r` is computed with the prefix recursion
//!
//! ```text
//! r(ε, a)  = 0
//! r(ub, a) = r(u, a) + 1                   if a = b
//!          = min(r(u, b) + 1, r(u, a))     otherwise
//! ```
//!
//! and `ℓ` only ever as the mirror image of `r` over the reversed word.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::DeltaValue;
use crate::word::{common_alphabet, Alphabet, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Entry `(i, a)` is `r(u(0,i), a)`.
    Right,
    /// Entry `(i, a)` is `ℓ(a, u(i,|u|))`.
    Left,
}

/// All side distances of the prefixes (or suffixes) of a word, one column
/// per split position `i ∈ 0..=|u|`, one row per symbol.
#[derive(Debug, Clone)]
pub struct SideTable {
    orientation: Orientation,
    word: Word,
    sigma: usize,
    // column-major: column i is values[i * sigma..(i + 1) * sigma]
    values: Vec<u32>,
}

impl SideTable {
    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Number of columns, `|u| + 1`.
    pub fn columns(&self) -> usize {
        self.word.len() + 1
    }

    pub fn get(&self, i: usize, a: Letter) -> usize {
        self.values[i * self.sigma + a.index()] as usize
    }

    pub fn column(&self, i: usize) -> &[u32] {
        &self.values[i * self.sigma..(i + 1) * self.sigma]
    }

    /// The row of symbol `a`, as printed in the usual table layout.
    pub fn row(&self, a: Letter) -> Vec<u32> {
        (0..self.columns()).map(|i| self.values[i * self.sigma + a.index()]).collect()
    }
}

/// One step of the prefix recursion: the column after reading `b`.
#[inline]
pub(crate) fn r_step(prev: &[u32], b: Letter, next: &mut [u32]) {
    let via_b = prev[b.index()] + 1;
    for (a, (out, &old)) in next.iter_mut().zip(prev).enumerate() {
        *out = if a == b.index() { via_b } else { old.min(via_b) };
    }
}

fn check_len(u: &Word) {
    assert!(u.len() < u32::MAX as usize, "words longer than u32::MAX are not supported");
}

fn check_letter(alphabet: &Alphabet, a: Letter) -> Result<()> {
    if alphabet.contains(a) {
        Ok(())
    } else {
        Err(Error::LetterOutOfRange(a.0))
    }
}

/// Builds the columns for the letters in `order`, starting from zeros.
fn sweep(letters: impl Iterator<Item = Letter>, n: usize, sigma: usize) -> Vec<u32> {
    let mut values = vec![0u32; (n + 1) * sigma];
    for (i, b) in letters.enumerate() {
        let (done, rest) = values.split_at_mut((i + 1) * sigma);
        r_step(&done[i * sigma..], b, &mut rest[..sigma]);
    }
    values
}

pub fn build_r_table(u: &Word) -> SideTable {
    check_len(u);
    let sigma = u.alphabet().len();
    SideTable {
        orientation: Orientation::Right,
        word: u.clone(),
        sigma,
        values: sweep(u.letters().iter().copied(), u.len(), sigma),
    }
}

/// The `ℓ`-table: the `r`-table of the reversed word, with columns reindexed
/// so that column `i` holds `ℓ(a, u(i,|u|))`.
pub fn build_l_table(u: &Word) -> SideTable {
    check_len(u);
    let sigma = u.alphabet().len();
    let n = u.len();
    let reversed = sweep(u.letters().iter().rev().copied(), n, sigma);
    let mut values = vec![0u32; reversed.len()];
    for i in 0..=n {
        values[i * sigma..(i + 1) * sigma].copy_from_slice(&reversed[(n - i) * sigma..(n - i + 1) * sigma]);
    }
    SideTable {
        orientation: Orientation::Left,
        word: u.clone(),
        sigma,
        values,
    }
}

/// The final column of the recursion over `letters`.
pub(crate) fn last_column(letters: impl Iterator<Item = Letter>, sigma: usize) -> Vec<u32> {
    let mut col = vec![0u32; sigma];
    let mut next = vec![0u32; sigma];
    for b in letters {
        r_step(&col, b, &mut next);
        std::mem::swap(&mut col, &mut next);
    }
    col
}

/// `r(u, a)` for a letter.
pub fn r_letter(u: &Word, a: Letter) -> Result<usize> {
    check_letter(u.alphabet(), a)?;
    Ok(last_column(u.letters().iter().copied(), u.alphabet().len())[a.index()] as usize)
}

/// `r(u, t) = min{ r(u, a) : a ∈ alph(t) }`, `∞` for `t = ε`.
pub fn r_word(u: &Word, t: &Word) -> Result<DeltaValue> {
    common_alphabet(u, t)?;
    let col = last_column(u.letters().iter().copied(), u.alphabet().len());
    Ok(t.alph()
        .iter()
        .zip(&col)
        .filter(|(&m, _)| m)
        .map(|(_, &r)| DeltaValue::Finite(r as usize))
        .min()
        .unwrap_or(DeltaValue::Infinite))
}

/// `ℓ(a, u) = r(reverse(u), a)`.
pub fn ell_letter(a: Letter, u: &Word) -> Result<usize> {
    r_letter(&u.reverse(), a)
}

/// `ℓ(t, u) = r(reverse(u), reverse(t))`.
pub fn ell_word(t: &Word, u: &Word) -> Result<DeltaValue> {
    r_word(&u.reverse(), &t.reverse())
}

/// Stack algorithm for the `r`-vector, with 1-based positions, a sentinel
/// position 0 at the bottom of the stack, and `locc[a] = 0` meaning "not
/// seen yet". Returns the vector and the number of pushes made while
/// scanning (the initial sentinel is not counted).
fn r_vector_stack(letters: impl Iterator<Item = Letter>, n: usize, sigma: usize) -> (Vec<u32>, usize) {
    assert!(n < u32::MAX as usize, "words longer than u32::MAX are not supported");
    let mut locc = vec![0u32; sigma];
    let mut stack: Vec<u32> = Vec::with_capacity(64);
    stack.push(0);
    // r[0] is never read: the guard below maps j = 0 to 0
    let mut r = vec![0u32; n + 1];
    let mut pushes = 0usize;
    for (idx, a) in letters.enumerate() {
        let i = idx as u32 + 1;
        let last = locc[a.index()];
        let mut j = 0;
        while let Some(&head) = stack.last() {
            if head < last {
                break;
            }
            j = head;
            stack.pop();
        }
        r[i as usize] = if j > 0 { 1 + r[j as usize] } else { 0 };
        stack.push(j);
        stack.push(i);
        pushes += 2;
        locc[a.index()] = i;
    }
    r.remove(0);
    (r, pushes)
}

/// `⟨r_1, …, r_m⟩` with `r_i = r(a_1 ⋯ a_{i-1}, a_i)`, in `O(|A| + |u|)`.
pub fn r_vector(u: &Word) -> Vec<u32> {
    r_vector_counted(u).0
}

/// [`r_vector`] together with its stack-push count (always `2|u|`).
pub fn r_vector_counted(u: &Word) -> (Vec<u32>, usize) {
    r_vector_stack(u.letters().iter().copied(), u.len(), u.alphabet().len())
}

/// `⟨ℓ_1, …, ℓ_m⟩` with `ℓ_i = ℓ(a_i, a_{i+1} ⋯ a_m)`: the reversed
/// `r`-vector of the reversed word.
pub fn l_vector(u: &Word) -> Vec<u32> {
    l_vector_counted(u).0
}

pub fn l_vector_counted(u: &Word) -> (Vec<u32>, usize) {
    let (mut l, pushes) = r_vector_stack(u.letters().iter().rev().copied(), u.len(), u.alphabet().len());
    l.reverse();
    (l, pushes)
}

/// The `r`- and `ℓ`-vectors of a word.
#[derive(Debug, Clone)]
pub struct SideVectors {
    pub r: Vec<u32>,
    pub l: Vec<u32>,
    pub word: Word,
    /// Stack pushes made by both passes.
    pub pushes: usize,
}

impl SideVectors {
    pub fn new(u: &Word) -> Self {
        let (r, rp) = r_vector_counted(u);
        let (l, lp) = l_vector_counted(u);
        SideVectors {
            r,
            l,
            word: u.clone(),
            pushes: rp + lp,
        }
    }
}

/// Single-letter word helper used by tests and the CLI.
pub fn letter_word(alphabet: &Arc<Alphabet>, a: Letter) -> Result<Word> {
    Word::new(Arc::clone(alphabet), vec![a])
}
