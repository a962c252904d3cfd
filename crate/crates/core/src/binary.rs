//! `ρ` and `h` of binary words in run-length form, with block lengths of any
//! size.
//!
//! The reduction has three phases:
//!
//! 1. drop adjacent blocks of length 1 (`…X^m Y X Y^n…` → `…X^m Y^n…`),
//!    each drop adding 1 to `ρ`;
//! 2. eliminate each interior block of length 1 (`X^m Y X^n Z…` →
//!    `X^(m+1) Y^(n+1) swap(Z…)`), which leaves `ρ` unchanged;
//! 3. apply the closed formula `ρ = k + max(n_1 + 1, n_k + 1, n_2, …, n_(k-1)) - 3`.
//!
//! Phases 1 and 2 are single linear passes. Over two letters `h = ρ + 1`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, RleWord};

/// Which occurrence a reduction step rewrites first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReductionOrder {
    #[default]
    Leftmost,
    Rightmost,
}

/// One rewrite, with 0-based block indices into the word it applies to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum ReductionStep {
    /// Blocks `index` and `index + 1`, both of length 1, are removed.
    PairRemoval { index: usize },
    /// The interior block `index` of length 1 is eliminated; its neighbours
    /// grow by one each and everything after it swaps letters.
    IsolatedSwap { index: usize },
    /// The closed formula on the fully reduced word.
    Formula {
        k: usize,
        #[serde(serialize_with = "bigs_as_strings")]
        blocks: Vec<BigUint>,
        #[serde(serialize_with = "big_as_string")]
        value: BigUint,
    },
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionStep::PairRemoval { index } => {
                write!(f, "remove isolated pair at blocks {}-{} (+1)", index + 1, index + 2)
            }
            ReductionStep::IsolatedSwap { index } => {
                write!(f, "eliminate isolated letter at block {}", index + 1)
            }
            ReductionStep::Formula { k, blocks, value } => {
                let blocks: Vec<String> = blocks.iter().map(|n| n.to_string()).collect();
                write!(f, "formula with k = {k} on [{}]: {value}", blocks.join(", "))
            }
        }
    }
}

fn bigs_as_strings<S: serde::Serializer>(ns: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ns.iter().map(|n| n.to_string()))
}

fn big_as_string<S: serde::Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

/// Everything `rho_rle` did, in order.
#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub input: RleWord,
    pub steps: Vec<ReductionStep>,
    /// Number of pair removals, each adding 1 to `ρ`.
    pub rho_increments: usize,
    /// The word the formula was applied to.
    pub final_word: RleWord,
    pub rho: BigUint,
}

impl ReductionTrace {
    /// Re-applies the steps to the input and returns every intermediate word,
    /// starting with the input and ending with the reduced word.
    pub fn replay(&self) -> Result<Vec<RleWord>> {
        let mut words = vec![self.input.clone()];
        let mut blocks = self.input.blocks().to_vec();
        for step in &self.steps {
            match *step {
                ReductionStep::PairRemoval { index } => {
                    let ok = index + 1 < blocks.len() && blocks[index].is_one() && blocks[index + 1].is_one();
                    if !ok {
                        return Err(Error::OutOfRange(format!("no isolated pair at block {index}")));
                    }
                    blocks.drain(index..index + 2);
                }
                ReductionStep::IsolatedSwap { index } => {
                    let ok = index >= 1 && index + 1 < blocks.len() && blocks[index].is_one();
                    if !ok {
                        return Err(Error::OutOfRange(format!("no isolated letter at block {index}")));
                    }
                    swap_at(&mut blocks, index);
                }
                ReductionStep::Formula { .. } => continue,
            }
            words.push(self.input.with_blocks(blocks.clone()));
        }
        Ok(words)
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words = self.replay().map_err(|_| fmt::Error)?;
        writeln!(f, "input: {}", self.input.to_exponent_string())?;
        let mut after = words.iter().skip(1);
        for step in &self.steps {
            match step {
                ReductionStep::Formula { .. } => writeln!(f, "{step}")?,
                _ => writeln!(f, "{step}: {}", after.next().expect("one word per step").to_exponent_string())?,
            }
        }
        write!(f, "rho = {} + {} = {}", self.rho_increments, formula_part(&self.steps), self.rho)
    }
}

fn formula_part(steps: &[ReductionStep]) -> BigUint {
    steps
        .iter()
        .find_map(|s| match s {
            ReductionStep::Formula { value, .. } => Some(value.clone()),
            _ => None,
        })
        .unwrap_or_default()
}

// (m, 1, n) at index-1..=index+1 becomes (m+1, n+1)
fn swap_at(blocks: &mut Vec<BigUint>, index: usize) {
    blocks[index - 1] += 1u32;
    let n = blocks.remove(index + 1);
    blocks[index] = n + 1u32;
}

/// `ρ` of a word whose interior blocks all have length at least 2.
pub fn rho_formula(w: &RleWord) -> Result<BigUint> {
    formula(w.blocks())
}

fn formula(blocks: &[BigUint]) -> Result<BigUint> {
    let k = blocks.len();
    match k {
        0 => return Ok(BigUint::zero()),
        1 => return Ok(blocks[0].clone()),
        _ => {}
    }
    if let Some(i) = (1..k - 1).find(|&i| blocks[i].is_one()) {
        return Err(Error::ReductionRequired { index: i });
    }
    let ends = (&blocks[0]).max(&blocks[k - 1]) + 1u32;
    let inner = blocks[1..k - 1].iter().max().cloned().unwrap_or_default();
    Ok(ends.max(inner) + k - 3u32)
}

/// Phase 1: removes adjacent pairs of unit blocks until none is left.
/// Returns the remaining blocks and the removals as `PairRemoval` steps.
pub fn remove_isolated_pairs(w: &RleWord, order: ReductionOrder) -> (RleWord, Vec<ReductionStep>) {
    let (blocks, steps) = match order {
        ReductionOrder::Leftmost => pairs_leftmost(w.blocks().to_vec()),
        ReductionOrder::Rightmost => {
            let (mut blocks, steps) = pairs_leftmost(w.blocks().iter().rev().cloned().collect());
            blocks.reverse();
            (blocks, mirror_steps(steps, w.block_count()))
        }
    };
    (w.with_blocks(blocks), steps)
}

// The stack never holds two adjacent unit blocks, so the leftmost pair of the
// current word is always the stack top with the next input block.
fn pairs_leftmost(blocks: Vec<BigUint>) -> (Vec<BigUint>, Vec<ReductionStep>) {
    let mut stack: Vec<BigUint> = Vec::with_capacity(blocks.len());
    let mut steps = Vec::new();
    for n in blocks {
        if n.is_one() && stack.last().is_some_and(One::is_one) {
            stack.pop();
            steps.push(ReductionStep::PairRemoval { index: stack.len() });
        } else {
            stack.push(n);
        }
    }
    (stack, steps)
}

// Steps recorded on the reversed word, rewritten for the original
// orientation. The word shrinks by 2 on each removal, by 1 on each swap.
fn mirror_steps(steps: Vec<ReductionStep>, mut len: usize) -> Vec<ReductionStep> {
    steps
        .into_iter()
        .map(|s| match s {
            ReductionStep::PairRemoval { index } => {
                let out = ReductionStep::PairRemoval { index: len - 2 - index };
                len -= 2;
                out
            }
            ReductionStep::IsolatedSwap { index } => {
                let out = ReductionStep::IsolatedSwap { index: len - 1 - index };
                len -= 1;
                out
            }
            other => other,
        })
        .collect()
}

/// Phase 2, one step: eliminates the leftmost interior unit block.
///
/// Fails with `PairsRemaining` if two unit blocks are adjacent and with
/// `NoIsolatedPattern` if there is no interior unit block.
pub fn eliminate_isolated_letter(w: &RleWord) -> Result<(RleWord, usize)> {
    let blocks = w.blocks();
    if let Some(i) = (0..blocks.len().saturating_sub(1)).find(|&i| blocks[i].is_one() && blocks[i + 1].is_one()) {
        return Err(Error::PairsRemaining { index: i });
    }
    let k = blocks.len();
    let i = (1..k.saturating_sub(1))
        .find(|&i| blocks[i].is_one())
        .ok_or(Error::NoIsolatedPattern)?;
    let mut blocks = blocks.to_vec();
    swap_at(&mut blocks, i);
    Ok((w.with_blocks(blocks), i))
}

/// Phase 2: eliminates every interior unit block. Requires phase 1 to have
/// run (no adjacent unit blocks).
pub fn eliminate_isolated_letters(w: &RleWord, order: ReductionOrder) -> Result<(RleWord, Vec<ReductionStep>)> {
    let blocks = w.blocks();
    if let Some(i) = (0..blocks.len().saturating_sub(1)).find(|&i| blocks[i].is_one() && blocks[i + 1].is_one()) {
        return Err(Error::PairsRemaining { index: i });
    }
    let (blocks, steps) = match order {
        ReductionOrder::Leftmost => swaps_leftmost(blocks.to_vec()),
        ReductionOrder::Rightmost => {
            let (mut out, steps) = swaps_leftmost(blocks.iter().rev().cloned().collect());
            out.reverse();
            (out, mirror_steps(steps, w.block_count()))
        }
    };
    Ok((w.with_blocks(blocks), steps))
}

fn swaps_leftmost(blocks: Vec<BigUint>) -> (Vec<BigUint>, Vec<ReductionStep>) {
    let k = blocks.len();
    let mut out: Vec<BigUint> = Vec::with_capacity(k);
    let mut steps = Vec::new();
    let mut iter = blocks.into_iter().enumerate();
    while let Some((i, n)) = iter.next() {
        if i > 0 && i + 1 < k && n.is_one() {
            steps.push(ReductionStep::IsolatedSwap { index: out.len() });
            *out.last_mut().expect("interior block has a left neighbour") += 1u32;
            let (_, right) = iter.next().expect("interior block has a right neighbour");
            out.push(right + 1u32);
        } else {
            out.push(n);
        }
    }
    (out, steps)
}

/// `ρ(u)` for a binary run-length word, leftmost-first.
pub fn rho_rle(w: &RleWord) -> BigUint {
    rho_rle_traced(w, ReductionOrder::Leftmost).rho
}

pub fn rho_rle_traced(w: &RleWord, order: ReductionOrder) -> ReductionTrace {
    let (paired, mut steps) = remove_isolated_pairs(w, order);
    let (reduced, swaps) = eliminate_isolated_letters(&paired, order).expect("phase 1 leaves no adjacent unit blocks");
    steps.extend(swaps);
    let value = rho_formula(&reduced).expect("phase 2 leaves no interior unit block");
    let rho_increments = steps.len() - count_swaps(&steps);
    steps.push(ReductionStep::Formula {
        k: reduced.block_count(),
        blocks: reduced.blocks().to_vec(),
        value: value.clone(),
    });
    ReductionTrace {
        input: w.clone(),
        steps,
        rho_increments,
        final_word: reduced,
        rho: value + rho_increments,
    }
}

fn count_swaps(steps: &[ReductionStep]) -> usize {
    steps
        .iter()
        .filter(|s| matches!(s, ReductionStep::IsolatedSwap { .. }))
        .count()
}

/// `h(u) = ρ(u) + 1` for binary words; `h(ε)` is 1 (0 over the empty
/// alphabet).
pub fn h_rle(w: &RleWord) -> BigUint {
    if w.is_empty() {
        return if w.alphabet().is_empty() {
            BigUint::zero()
        } else {
            BigUint::one()
        };
    }
    rho_rle(w) + 1u32
}

/// The largest `|u|` of a binary word with `h(u) = h`: `⌊h²/4⌋ + h - 1`.
pub fn max_binary_length(h: &BigUint) -> Result<BigUint> {
    if h.is_zero() {
        return Err(Error::OutOfRange("no binary word has h = 0".into()));
    }
    Ok(h * h / 4u32 + h - 1u32)
}

/// A binary word over `alphabet` (starting with its first symbol) reaching
/// [`max_binary_length`] for `h`.
///
/// For `h = 2g` it has `g + 1` blocks, for `h = 2g - 1` it has `g` blocks;
/// the two outer blocks have length `g` and every inner block `g + 1`.
pub fn extremal_binary_word(h: u64, alphabet: &Arc<Alphabet>) -> Result<RleWord> {
    if alphabet.len() != 2 {
        return Err(Error::NotBinary(alphabet.len()));
    }
    if h < 2 {
        return Err(Error::OutOfRange(format!("extremal words start at h = 2, got {h}")));
    }
    let g = h.div_ceil(2);
    let k = if h.is_multiple_of(2) { g + 1 } else { g };
    let lengths: Vec<u64> = (0..k).map(|i| if i == 0 || i + 1 == k { g } else { g + 1 }).collect();
    RleWord::from_lengths(Arc::clone(alphabet), Some(Letter(0)), &lengths)
}

/// `(r, ℓ)` at offset `x` (1-based) inside block `i` (0-based) of a word
/// whose interior blocks all have length at least 2.
pub fn closed_form_at(w: &RleWord, i: usize, x: &BigUint) -> Result<(BigUint, BigUint)> {
    let blocks = w.blocks();
    let k = blocks.len();
    if let Some(j) = (1..k.saturating_sub(1)).find(|&j| blocks[j].is_one()) {
        return Err(Error::ReductionRequired { index: j });
    }
    if i >= k || x.is_zero() || x > &blocks[i] {
        return Err(Error::OutOfRange(format!("offset {x} in block {i}")));
    }
    let r = if i == 0 { x - 1u32 } else { x + i - 2u32 };
    let n = &blocks[i];
    let l = if i == k - 1 {
        n + (k - i) - x - 1u32
    } else {
        n + (k - i) - x - 2u32
    };
    Ok((r, l))
}

/// The `r`- and `ℓ`-vectors from the closed forms, for words short enough to
/// expand.
pub fn closed_form_vectors(w: &RleWord) -> Result<(Vec<u32>, Vec<u32>)> {
    let total = w
        .total_len()
        .to_usize()
        .filter(|&n| n <= u32::MAX as usize)
        .ok_or_else(|| Error::OutOfRange("word too long to expand".into()))?;
    let mut r = Vec::with_capacity(total);
    let mut l = Vec::with_capacity(total);
    for (i, n) in w.blocks().iter().enumerate() {
        let n = n.to_u64().expect("bounded by total");
        for x in 1..=n {
            let (ri, li) = closed_form_at(w, i, &BigUint::from(x))?;
            r.push(ri.to_u32().expect("bounded by |u|"));
            l.push(li.to_u32().expect("bounded by |u|"));
        }
    }
    Ok((r, l))
}
