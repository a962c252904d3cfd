//! Alphabets, words, the subword ordering and run-length notation.
//!
//! Symbols are stored as small integer ids ([`Letter`]) indexing into an
//! explicit [`Alphabet`]. Every [`Word`] carries its alphabet because the
//! complexity of the empty word depends on it.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default cardinality limit for [`downward_closure`] and [`shuffle_set`].
pub const DEFAULT_SET_CAP: usize = 1_000_000;

/// Default limit on `|u| + |v|` for [`shuffle_set`].
pub const DEFAULT_SHUFFLE_LEN: usize = 20;

/// Index of a symbol in its alphabet. The order of ids is the alphabet order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// An ordered set of distinct symbols.
#[derive(Clone)]
pub struct Alphabet {
    symbols: Vec<char>,
    // sorted by char, for lookup
    lookup: Vec<(char, u32)>,
    ascii: Box<[u32; 128]>,
}

const NO_LETTER: u32 = u32::MAX;

impl Alphabet {
    /// Builds an alphabet whose order is the iteration order of `symbols`.
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        let mut lookup: Vec<(char, u32)> = symbols
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i as u32))
            .collect();
        lookup.sort_unstable();
        if let Some(w) = lookup.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateSymbol(w[0].0));
        }
        let mut ascii = Box::new([NO_LETTER; 128]);
        for &(c, i) in &lookup {
            if c.is_ascii() {
                ascii[c as usize] = i;
            }
        }
        Ok(Alphabet {
            symbols,
            lookup,
            ascii,
        })
    }

    /// The empty alphabet. Only the empty word can be written over it.
    pub fn empty() -> Self {
        Alphabet::new(std::iter::empty()).expect("empty alphabet has no duplicates")
    }

    /// The sorted set of distinct characters occurring in `text`.
    pub fn infer(text: &str) -> Self {
        let set: BTreeSet<char> = text.chars().collect();
        Alphabet::new(set).expect("a set has no duplicates")
    }

    /// The first `n` capital letters `A, B, C, ...` (`n <= 26`).
    pub fn latin(n: usize) -> Result<Self> {
        if n > 26 {
            return Err(Error::OutOfRange(format!(
                "latin alphabet of size {n} (at most 26)"
            )));
        }
        Alphabet::new((b'A'..b'A' + n as u8).map(char::from))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, a: Letter) -> char {
        self.symbols[a.index()]
    }

    #[inline]
    pub fn letter(&self, c: char) -> Option<Letter> {
        if c.is_ascii() {
            let id = self.ascii[c as usize];
            return (id != NO_LETTER).then_some(Letter(id));
        }
        self.lookup
            .binary_search_by_key(&c, |&(s, _)| s)
            .ok()
            .map(|i| Letter(self.lookup[i].1))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.symbols.len() as u32).map(Letter)
    }

    pub fn contains(&self, a: Letter) -> bool {
        a.index() < self.symbols.len()
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl std::hash::Hash for Alphabet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.symbols.hash(state)
    }
}

impl PartialOrd for Alphabet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Alphabet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.symbols.cmp(&other.symbols)
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({self})")
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A finite word over an explicit alphabet.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(alphabet: Arc<Alphabet>, letters: Vec<Letter>) -> Result<Self> {
        if let Some(a) = letters.iter().find(|a| !alphabet.contains(**a)) {
            return Err(Error::LetterOutOfRange(a.0));
        }
        Ok(Word { alphabet, letters })
    }

    pub(crate) fn from_parts(alphabet: Arc<Alphabet>, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|a| alphabet.contains(*a)));
        Word { alphabet, letters }
    }

    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        Word {
            alphabet,
            letters: Vec::new(),
        }
    }

    /// Parses `text` symbol by symbol over a declared alphabet.
    pub fn parse(text: &str, alphabet: &Arc<Alphabet>) -> Result<Self> {
        let letters = text
            .chars()
            .map(|c| alphabet.letter(c).ok_or(Error::UnknownSymbol(c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word {
            alphabet: Arc::clone(alphabet),
            letters,
        })
    }

    /// Parses `text` over the alphabet of the characters it uses, sorted.
    pub fn infer(text: &str) -> Self {
        let alphabet = Arc::new(Alphabet::infer(text));
        Word::parse(text, &alphabet).expect("inferred alphabet covers the text")
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn alphabet_arc(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// `|u|_a`, the number of occurrences of `a`.
    pub fn count(&self, a: Letter) -> usize {
        self.letters.iter().filter(|&&b| b == a).count()
    }

    /// `alph(u)` as a membership mask indexed by letter id.
    pub fn alph(&self) -> Vec<bool> {
        let mut mask = vec![false; self.alphabet.len()];
        for a in &self.letters {
            mask[a.index()] = true;
        }
        mask
    }

    /// The factor `u(i, j)`, i.e. letters `i..j` (0-based, end exclusive).
    pub fn factor(&self, i: usize, j: usize) -> Word {
        Word::from_parts(Arc::clone(&self.alphabet), self.letters[i..j].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        let alphabet = common_alphabet(self, other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_parts(alphabet, letters))
    }

    /// `u(0,pos) a u(pos,|u|)`.
    pub fn insert(&self, pos: usize, a: Letter) -> Word {
        assert!(self.alphabet.contains(a));
        let mut letters = self.letters.clone();
        letters.insert(pos, a);
        Word::from_parts(Arc::clone(&self.alphabet), letters)
    }

    /// The word with the letter at `pos` (0-based) deleted.
    pub fn remove(&self, pos: usize) -> Word {
        let mut letters = self.letters.clone();
        letters.remove(pos);
        Word::from_parts(Arc::clone(&self.alphabet), letters)
    }

    pub fn reverse(&self) -> Word {
        let letters = self.letters.iter().rev().copied().collect();
        Word::from_parts(Arc::clone(&self.alphabet), letters)
    }

    /// Exchanges the two letters of a binary alphabet.
    pub fn letter_swap(&self) -> Result<Word> {
        if self.alphabet.len() != 2 {
            return Err(Error::NotBinary(self.alphabet.len()));
        }
        let letters = self.letters.iter().map(|a| Letter(1 - a.0)).collect();
        Ok(Word::from_parts(Arc::clone(&self.alphabet), letters))
    }

    /// Renames letters through `map` (indexed by old id) into `alphabet`.
    pub fn relabel(&self, alphabet: Arc<Alphabet>, map: &[Letter]) -> Result<Word> {
        Word::new(alphabet, self.letters.iter().map(|a| map[a.index()]).collect())
    }

    pub fn with_letters(&self, letters: Vec<Letter>) -> Result<Word> {
        Word::new(Arc::clone(&self.alphabet), letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters
            .iter()
            .try_for_each(|&a| write!(f, "{}", self.alphabet.symbol(a)))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\" over {})", self.alphabet)
    }
}

pub(crate) fn common_alphabet(u: &Word, v: &Word) -> Result<Arc<Alphabet>> {
    if Arc::ptr_eq(&u.alphabet, &v.alphabet) || u.alphabet == v.alphabet {
        Ok(Arc::clone(&u.alphabet))
    } else {
        Err(Error::AlphabetMismatch)
    }
}

/// Greedy embedding test on raw letter sequences.
pub fn embeds(needle: &[Letter], hay: &[Letter]) -> bool {
    let mut it = hay.iter();
    needle.iter().all(|a| it.any(|b| b == a))
}

/// `u ⊑ v`: `u` is a (scattered) subword of `v`.
///
/// Words over different alphabets are compared symbol by symbol.
pub fn is_subword(u: &Word, v: &Word) -> bool {
    if u.alphabet == v.alphabet {
        embeds(&u.letters, &v.letters)
    } else {
        let mut it = v.letters.iter().map(|&b| v.alphabet.symbol(b));
        u.letters
            .iter()
            .map(|&a| u.alphabet.symbol(a))
            .all(|c| it.any(|d| d == c))
    }
}

/// Table `next[p][a]` = smallest `q >= p` with `u[q] = a`, or `len` if none.
fn next_occurrence(letters: &[Letter], sigma: usize) -> Vec<u32> {
    let n = letters.len();
    let mut next = vec![n as u32; (n + 1) * sigma];
    for p in (0..n).rev() {
        let (head, tail) = next.split_at_mut((p + 1) * sigma);
        head[p * sigma..].copy_from_slice(&tail[..sigma]);
        head[p * sigma + letters[p].index()] = p as u32;
    }
    next
}

/// Level-by-level enumeration of the distinct subwords of a word: the
/// `n`-th item is every subword of length `n`, in lexicographic order of
/// letter ids.
///
/// Every subword has exactly one leftmost embedding, so extending each
/// leftmost embedding by the next occurrence of each letter enumerates
/// subwords without duplicates.
pub(crate) struct SubwordLevels<'a> {
    len: usize,
    sigma: usize,
    next: Vec<u32>,
    frontier: Option<Vec<(Vec<Letter>, usize)>>,
    total: usize,
    cap: usize,
    _word: std::marker::PhantomData<&'a [Letter]>,
}

impl<'a> SubwordLevels<'a> {
    pub(crate) fn new(letters: &'a [Letter], sigma: usize, cap: usize) -> Self {
        SubwordLevels {
            len: letters.len(),
            sigma,
            next: next_occurrence(letters, sigma),
            frontier: None,
            total: 0,
            cap,
            _word: std::marker::PhantomData,
        }
    }
}

impl Iterator for SubwordLevels<'_> {
    type Item = Result<Vec<Vec<Letter>>>;

    fn next(&mut self) -> Option<Self::Item> {
        let grown = match &self.frontier {
            None => vec![(Vec::new(), 0)],
            Some(frontier) => {
                let mut grown = Vec::new();
                for (s, p) in frontier {
                    for a in 0..self.sigma {
                        let q = self.next[p * self.sigma + a] as usize;
                        if q < self.len {
                            let mut t = Vec::with_capacity(s.len() + 1);
                            t.extend_from_slice(s);
                            t.push(Letter(a as u32));
                            grown.push((t, q + 1));
                        }
                    }
                }
                grown
            }
        };
        if grown.is_empty() {
            return None;
        }
        self.total += grown.len();
        if self.total > self.cap {
            self.frontier = Some(Vec::new());
            return Some(Err(Error::BudgetExceeded(format!(
                "downward closure has more than {} elements",
                self.cap
            ))));
        }
        let level = grown.iter().map(|(s, _)| s.clone()).collect();
        self.frontier = Some(grown);
        Some(Ok(level))
    }
}

/// `{ s : s ⊑ u, |s| <= k }` in shortlex order; `None` means no length bound.
pub fn downward_closure(u: &Word, k: Option<usize>, cap: usize) -> Result<Vec<Word>> {
    let bound = k.unwrap_or(u.len());
    let mut out = Vec::new();
    for level in SubwordLevels::new(&u.letters, u.alphabet.len(), cap).take(bound + 1) {
        out.extend(level?.into_iter().map(|s| Word::from_parts(Arc::clone(&u.alphabet), s)));
    }
    Ok(out)
}

/// All interleavings of `u` and `v`, deduplicated, in lexicographic order.
pub fn shuffle_set(u: &Word, v: &Word, max_len: usize, cap: usize) -> Result<Vec<Word>> {
    let alphabet = common_alphabet(u, v)?;
    if u.len() + v.len() > max_len {
        return Err(Error::BudgetExceeded(format!(
            "shuffle of total length {} exceeds {max_len}",
            u.len() + v.len()
        )));
    }
    fn go(
        u: &[Letter],
        v: &[Letter],
        acc: &mut Vec<Letter>,
        out: &mut BTreeSet<Vec<Letter>>,
        cap: usize,
    ) -> Result<()> {
        match (u.split_first(), v.split_first()) {
            (None, None) => {
                out.insert(acc.clone());
                if out.len() > cap {
                    return Err(Error::BudgetExceeded(format!(
                        "shuffle set has more than {cap} elements"
                    )));
                }
                Ok(())
            }
            (hu, hv) => {
                if let Some((&a, rest)) = hu {
                    acc.push(a);
                    go(rest, v, acc, out, cap)?;
                    acc.pop();
                }
                if let Some((&b, rest)) = hv {
                    acc.push(b);
                    go(u, rest, acc, out, cap)?;
                    acc.pop();
                }
                Ok(())
            }
        }
    }
    let mut out = BTreeSet::new();
    go(&u.letters, &v.letters, &mut Vec::new(), &mut out, cap)?;
    Ok(out
        .into_iter()
        .map(|s| Word::from_parts(Arc::clone(&alphabet), s))
        .collect())
}

/// Iterates over all words of length exactly `len` in lexicographic order.
pub fn words_of_length(alphabet: &Arc<Alphabet>, len: usize) -> impl Iterator<Item = Word> + '_ {
    let sigma = alphabet.len() as u32;
    let total = if sigma == 0 {
        usize::from(len == 0)
    } else {
        (sigma as usize).pow(len as u32)
    };
    (0..total).map(move |mut code| {
        let mut letters = vec![Letter(0); len];
        for slot in letters.iter_mut().rev() {
            *slot = Letter((code % sigma as usize) as u32);
            code /= sigma as usize;
        }
        Word::from_parts(Arc::clone(alphabet), letters)
    })
}

/// All words of length `0..=max_len`, shortest first.
pub fn words_up_to(alphabet: &Arc<Alphabet>, max_len: usize) -> impl Iterator<Item = Word> + '_ {
    (0..=max_len).flat_map(move |len| words_of_length(alphabet, len))
}

/// A binary word in exponential notation `a^n1 b^n2 a^n3 ...`.
///
/// Block lengths are arbitrary-precision, so `A^(10^30)` is a legal value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RleWord {
    alphabet: Arc<Alphabet>,
    first: Option<Letter>,
    blocks: Vec<BigUint>,
}

impl RleWord {
    pub fn new(alphabet: Arc<Alphabet>, first: Option<Letter>, blocks: Vec<BigUint>) -> Result<Self> {
        if alphabet.len() > 2 {
            return Err(Error::NotBinary(alphabet.len()));
        }
        if let Some(i) = blocks.iter().position(Zero::is_zero) {
            return Err(Error::Parse {
                what: "run-length word",
                reason: format!("block {i} has length 0"),
            });
        }
        match first {
            None if !blocks.is_empty() => Err(Error::Parse {
                what: "run-length word",
                reason: "blocks without a first symbol".into(),
            }),
            Some(_) if blocks.is_empty() => Err(Error::Parse {
                what: "run-length word",
                reason: "first symbol without blocks".into(),
            }),
            Some(a) if !alphabet.contains(a) => Err(Error::LetterOutOfRange(a.0)),
            Some(_) if blocks.len() > 1 && alphabet.len() < 2 => Err(Error::NotBinary(alphabet.len())),
            _ => Ok(RleWord {
                alphabet,
                first,
                blocks,
            }),
        }
    }

    /// Convenience constructor with machine-sized block lengths.
    pub fn from_lengths(alphabet: Arc<Alphabet>, first: Option<Letter>, lengths: &[u64]) -> Result<Self> {
        RleWord::new(alphabet, first, lengths.iter().map(|&n| BigUint::from(n)).collect())
    }

    /// Parses `A^1 B^5 A^1` or `A1B5A1`; the alphabet is the sorted set of
    /// symbols used.
    pub fn parse(text: &str) -> Result<Self> {
        let runs = parse_runs(text)?;
        let alphabet = Arc::new(Alphabet::new(
            runs.iter().map(|(c, _)| *c).collect::<BTreeSet<_>>(),
        )?);
        Self::from_runs(runs, alphabet)
    }

    /// Parses the run-length text format over a declared alphabet.
    pub fn parse_with(text: &str, alphabet: &Arc<Alphabet>) -> Result<Self> {
        Self::from_runs(parse_runs(text)?, Arc::clone(alphabet))
    }

    fn from_runs(runs: Vec<(char, BigUint)>, alphabet: Arc<Alphabet>) -> Result<Self> {
        let first = match runs.first() {
            Some((c, _)) => Some(alphabet.letter(*c).ok_or(Error::UnknownSymbol(*c))?),
            None => None,
        };
        for (c, _) in &runs {
            alphabet.letter(*c).ok_or(Error::UnknownSymbol(*c))?;
        }
        RleWord::new(alphabet, first, runs.into_iter().map(|(_, n)| n).collect())
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn first(&self) -> Option<Letter> {
        self.first
    }

    pub fn blocks(&self) -> &[BigUint] {
        &self.blocks
    }

    /// Number of blocks `k`.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The letter of block `i` (0-based).
    pub fn block_letter(&self, i: usize) -> Letter {
        let first = self.first.expect("non-empty word");
        if i.is_multiple_of(2) {
            first
        } else {
            Letter(1 - first.0)
        }
    }

    /// `|u|`, the total length.
    pub fn total_len(&self) -> BigUint {
        self.blocks.iter().sum()
    }

    /// Same alphabet and first symbol, new blocks.
    pub(crate) fn with_blocks(&self, blocks: Vec<BigUint>) -> RleWord {
        debug_assert!(blocks.iter().all(|n| !n.is_zero()));
        let first = if blocks.is_empty() {
            None
        } else {
            Some(self.first.unwrap_or(Letter(0)))
        };
        RleWord {
            alphabet: Arc::clone(&self.alphabet),
            first,
            blocks,
        }
    }

    /// The exponent form `A^1 B^5 A^1`; the empty word prints as `ε`.
    pub fn to_exponent_string(&self) -> String {
        if self.blocks.is_empty() {
            return "ε".to_string();
        }
        self.blocks
            .iter()
            .enumerate()
            .map(|(i, n)| format!("{}^{}", self.alphabet.symbol(self.block_letter(i)), n))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Compact form `A1B5A1`.
impl fmt::Display for RleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.blocks.iter().enumerate() {
            write!(f, "{}{}", self.alphabet.symbol(self.block_letter(i)), n)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RleWord({})", self.to_exponent_string())
    }
}

fn parse_runs(text: &str) -> Result<Vec<(char, BigUint)>> {
    let err = |reason: String| Error::Parse {
        what: "run-length word",
        reason,
    };
    let mut runs: Vec<(char, BigUint)> = Vec::new();
    let mut chars = text.chars().filter(|c| !c.is_whitespace()).peekable();
    while let Some(c) = chars.next() {
        if c.is_ascii_digit() || c == '^' {
            return Err(err(format!("expected a symbol, found {c:?}")));
        }
        if chars.peek() == Some(&'^') {
            chars.next();
            if !chars.peek().is_some_and(char::is_ascii_digit) {
                return Err(err(format!("missing exponent after {c}^")));
            }
        }
        let mut digits = String::new();
        while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
            digits.push(*d);
            chars.next();
        }
        let n = if digits.is_empty() {
            BigUint::one()
        } else {
            digits.parse::<BigUint>().map_err(|e| err(e.to_string()))?
        };
        if n.is_zero() {
            return Err(err(format!("block {c}^0 is empty")));
        }
        if let Some((prev, _)) = runs.last() {
            if *prev == c {
                return Err(err(format!("symbols must alternate, found {c} twice in a row")));
            }
        }
        runs.push((c, n));
    }
    let distinct: BTreeSet<char> = runs.iter().map(|(c, _)| *c).collect();
    if distinct.len() > 2 {
        return Err(Error::NotBinary(distinct.len()));
    }
    Ok(runs)
}

/// Run-length encodes a word using at most two distinct symbols.
///
/// The declared alphabet is kept when it has at most two symbols; otherwise
/// the encoding is over `alph(u)`.
pub fn rle_encode(u: &Word) -> Result<RleWord> {
    let alphabet = if u.alphabet.len() <= 2 {
        Arc::clone(&u.alphabet)
    } else {
        let used: Vec<char> = u
            .alph()
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| u.alphabet.symbols[i])
            .collect();
        if used.len() > 2 {
            return Err(Error::NotBinary(used.len()));
        }
        Arc::new(Alphabet::new(used)?)
    };
    let remap = |a: Letter| {
        alphabet
            .letter(u.alphabet.symbol(a))
            .expect("restricted alphabet covers the word")
    };
    let mut blocks: Vec<BigUint> = Vec::new();
    let mut prev = None;
    let mut run = 0u64;
    for &a in &u.letters {
        if Some(a) != prev && run > 0 {
            blocks.push(run.into());
            run = 0;
        }
        prev = Some(a);
        run += 1;
    }
    if run > 0 {
        blocks.push(run.into());
    }
    let first = u.letters.first().map(|&a| remap(a));
    RleWord::new(alphabet, first, blocks)
}

/// Expands a run-length word. Fails if the word is too long to materialise.
pub fn rle_decode(w: &RleWord) -> Result<Word> {
    let total = w
        .total_len()
        .to_usize()
        .filter(|&n| n <= u32::MAX as usize)
        .ok_or_else(|| Error::OutOfRange(format!("word of length {} is too long to expand", w.total_len())))?;
    let mut letters = Vec::with_capacity(total);
    for (i, n) in w.blocks.iter().enumerate() {
        let n = n.to_usize().expect("bounded by total");
        letters.extend(std::iter::repeat_n(w.block_letter(i), n));
    }
    Ok(Word::from_parts(Arc::clone(&w.alphabet), letters))
}
