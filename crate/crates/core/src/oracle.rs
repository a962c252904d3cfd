//! Definition-level implementations of Simon's congruence `~k`, the subword
//! distance `δ`, shortest distinguishers, the side distances `r` and `ℓ`,
//! and of `h` and `ρ`.
//!
//! Everything here works by enumerating subwords. It is exponential and is
//! only meant as ground truth for the fast algorithms, so every entry point
//! checks its inputs against a [`Budget`] and fails loudly beyond it.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::{common_alphabet, Letter, SubwordLevels, Word, DEFAULT_SET_CAP};

/// Environment variable overriding [`Budget::default`], in the format
/// accepted by [`Budget::parse`].
pub const BUDGET_ENV: &str = "PIECEWISE_CAP";

/// A natural number or `∞`.
///
/// `Finite` sorts below `Infinite`, so `min`/`max` behave as on `ℕ ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DeltaValue {
    Finite(usize),
    Infinite,
}

impl DeltaValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            DeltaValue::Finite(k) => Some(k),
            DeltaValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == DeltaValue::Infinite
    }
}

impl From<usize> for DeltaValue {
    fn from(k: usize) -> Self {
        DeltaValue::Finite(k)
    }
}

impl fmt::Display for DeltaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaValue::Finite(k) => write!(f, "{k}"),
            DeltaValue::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for DeltaValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DeltaValue::Finite(k) => s.serialize_u64(*k as u64),
            DeltaValue::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Work limits for the oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Longest accepted input word.
    pub max_word_len: usize,
    /// Largest accepted alphabet.
    pub max_alphabet: usize,
    /// Largest subword set materialised while searching.
    pub max_set_size: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_word_len: 12,
            max_alphabet: 4,
            max_set_size: DEFAULT_SET_CAP,
        }
    }
}

impl Budget {
    /// Parses `LEN[,ALPHABET[,SET]]`; omitted fields keep their defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut budget = Budget::default();
        let fields: Vec<&str> = text.split(',').map(str::trim).collect();
        if fields.len() > 3 {
            return Err(Error::Parse {
                what: "budget",
                reason: "expected LEN[,ALPHABET[,SET]]".into(),
            });
        }
        let slots = [
            &mut budget.max_word_len,
            &mut budget.max_alphabet,
            &mut budget.max_set_size,
        ];
        for (field, slot) in fields.iter().zip(slots) {
            *slot = field.parse().map_err(|_| Error::Parse {
                what: "budget",
                reason: format!("{field:?} is not a natural number"),
            })?;
        }
        Ok(budget)
    }

    /// The default budget, overridden by `PIECEWISE_CAP` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(text) => Budget::parse(&text),
            Err(_) => Ok(Budget::default()),
        }
    }

    pub fn check(&self, u: &Word) -> Result<()> {
        if u.len() > self.max_word_len {
            return Err(Error::BudgetExceeded(format!(
                "word of length {} exceeds the oracle limit {}",
                u.len(),
                self.max_word_len
            )));
        }
        if u.alphabet().len() > self.max_alphabet {
            return Err(Error::BudgetExceeded(format!(
                "alphabet of size {} exceeds the oracle limit {}",
                u.alphabet().len(),
                self.max_alphabet
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A shortest word that is a subword of exactly one of two words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguisherResult {
    pub word: Word,
    /// The input the word embeds into.
    pub side: Side,
}

impl DistinguisherResult {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// Shortest distinguisher on raw letters: `(word, embeds-in-left)`.
///
/// A minimal distinguisher is a subword of the input it embeds in, so the
/// candidates are `↓u ∪ ↓v` enumerated by increasing length. At each length
/// the lexicographically least candidate wins.
fn distinguish(u: &[Letter], v: &[Letter], sigma: usize, cap: usize) -> Result<Option<(Vec<Letter>, Side)>> {
    if u == v {
        return Ok(None);
    }
    let mut left = SubwordLevels::new(u, sigma, cap);
    let mut right = SubwordLevels::new(v, sigma, cap);
    loop {
        let l = left.next().transpose()?.unwrap_or_default();
        let r = right.next().transpose()?.unwrap_or_default();
        if l.is_empty() && r.is_empty() {
            unreachable!("distinct words are distinguished by one of themselves");
        }
        let l_set: BTreeSet<&Vec<Letter>> = l.iter().collect();
        let r_set: BTreeSet<&Vec<Letter>> = r.iter().collect();
        let only_left = l_set.difference(&r_set).next().map(|s| (*s, Side::Left));
        let only_right = r_set.difference(&l_set).next().map(|s| (*s, Side::Right));
        let best = match (only_left, only_right) {
            (Some(a), Some(b)) => Some(if b.0 < a.0 { b } else { a }),
            (a, b) => a.or(b),
        };
        if let Some((s, side)) = best {
            return Ok(Some((s.clone(), side)));
        }
    }
}

fn delta_raw(u: &[Letter], v: &[Letter], sigma: usize, cap: usize) -> Result<DeltaValue> {
    Ok(match distinguish(u, v, sigma, cap)? {
        None => DeltaValue::Infinite,
        Some((s, _)) => DeltaValue::Finite(s.len() - 1),
    })
}

fn check_pair(u: &Word, v: &Word, budget: &Budget) -> Result<Arc<crate::word::Alphabet>> {
    budget.check(u)?;
    budget.check(v)?;
    common_alphabet(u, v)
}

/// `u ~k v`: `u` and `v` have the same subwords of length at most `k`.
pub fn simon_equiv(u: &Word, v: &Word, k: usize, budget: &Budget) -> Result<bool> {
    let alphabet = check_pair(u, v, budget)?;
    let sigma = alphabet.len();
    let left = SubwordLevels::new(u.letters(), sigma, budget.max_set_size).take(k + 1);
    let mut right = SubwordLevels::new(v.letters(), sigma, budget.max_set_size).take(k + 1);
    for l in left {
        let l = l?;
        match right.next().transpose()? {
            Some(r) if r == l => {}
            _ => return Ok(false),
        }
    }
    Ok(right.next().is_none())
}

/// A length-minimal distinguisher, least in alphabet order among those.
pub fn shortest_distinguisher(u: &Word, v: &Word, budget: &Budget) -> Result<DistinguisherResult> {
    let alphabet = check_pair(u, v, budget)?;
    let (letters, side) = distinguish(u.letters(), v.letters(), alphabet.len(), budget.max_set_size)?
        .ok_or(Error::NoDistinguisher)?;
    Ok(DistinguisherResult {
        word: Word::new(alphabet, letters)?,
        side,
    })
}

/// `δ(u, v) = max{k : u ~k v}`, `∞` iff `u = v`.
pub fn delta(u: &Word, v: &Word, budget: &Budget) -> Result<DeltaValue> {
    let alphabet = check_pair(u, v, budget)?;
    delta_raw(u.letters(), v.letters(), alphabet.len(), budget.max_set_size)
}

/// `r(u, t) = δ(u, ut)`.
pub fn r_oracle(u: &Word, t: &Word, budget: &Budget) -> Result<DeltaValue> {
    let alphabet = check_pair(u, t, budget)?;
    let ut = u.concat(t)?;
    delta_raw(u.letters(), ut.letters(), alphabet.len(), budget.max_set_size)
}

/// `ℓ(t, u) = δ(tu, u)`.
pub fn ell_oracle(t: &Word, u: &Word, budget: &Budget) -> Result<DeltaValue> {
    let alphabet = check_pair(t, u, budget)?;
    let tu = t.concat(u)?;
    delta_raw(tu.letters(), u.letters(), alphabet.len(), budget.max_set_size)
}

/// The greatest `k` such that `u = u_1 ⋯ u_k` with
/// `alph(u_1) ⊇ ⋯ ⊇ alph(u_k) ⊇ alph(v)`, or 0 when there is none.
///
/// Peels from the right the shortest suffix whose alphabet covers the
/// current target, then makes that suffix's alphabet the next target.
/// Any leftover prefix is absorbed by `u_1`. For `v = ε` empty factors are
/// allowed and the value is unbounded; it is reported as `|u|`.
pub fn arch_factorization_k(u: &Word, v: &Word) -> Result<usize> {
    common_alphabet(u, v)?;
    if v.is_empty() {
        return Ok(u.len());
    }
    let sigma = u.alphabet().len();
    let mut target = v.alph();
    let letters = u.letters();
    let mut end = letters.len();
    let mut k = 0;
    loop {
        let mut missing = target.iter().filter(|&&m| m).count();
        let mut seen = vec![false; sigma];
        let mut start = end;
        while missing > 0 && start > 0 {
            start -= 1;
            let a = letters[start].index();
            if !seen[a] {
                seen[a] = true;
                if target[a] {
                    missing -= 1;
                }
            }
        }
        if missing > 0 {
            return Ok(k);
        }
        k += 1;
        target = seen;
        end = start;
    }
}

/// `h(u) = 1 + max δ(u, u_1 a u_2)` over all insertions of a letter.
///
/// Over the empty alphabet `h(ε) = 0`.
pub fn h_oracle(u: &Word, budget: &Budget) -> Result<usize> {
    budget.check(u)?;
    if u.alphabet().is_empty() {
        return Ok(0);
    }
    let sigma = u.alphabet().len();
    let mut seen = BTreeSet::new();
    let mut best = 0;
    for pos in 0..=u.len() {
        for a in u.alphabet().letters() {
            let v = u.insert(pos, a);
            if seen.insert(v.letters().to_vec()) {
                let d = delta_raw(u.letters(), v.letters(), sigma, budget.max_set_size)?;
                best = best.max(d.finite().expect("different lengths"));
            }
        }
    }
    Ok(best + 1)
}

/// `ρ(u) = 1 + max δ(u, u_1 u_2)` over all deletions `u = u_1 a u_2`.
///
/// `ρ(u)` is `1 + max δ(u, u')` over all strict subwords `u'`. If
/// `u ~m u'` with `u' ⊑ w ⊑ u` then `u ~m w` (convexity of `~m`), and some
/// single deletion `w` of `u` contains `u'`, so single deletions suffice.
/// [`rho_oracle_exhaustive`] checks this against the full search.
pub fn rho_oracle(u: &Word, budget: &Budget) -> Result<usize> {
    budget.check(u)?;
    if u.is_empty() {
        return Ok(0);
    }
    let sigma = u.alphabet().len();
    let mut seen = BTreeSet::new();
    let mut best = 0;
    for pos in 0..u.len() {
        let v = u.remove(pos);
        if seen.insert(v.letters().to_vec()) {
            let d = delta_raw(u.letters(), v.letters(), sigma, budget.max_set_size)?;
            best = best.max(d.finite().expect("different lengths"));
        }
    }
    Ok(best + 1)
}

/// `ρ(u)` by its definition: the least `m` such that no strict subword of
/// `u` is `~m`-equivalent to it.
pub fn rho_oracle_exhaustive(u: &Word, budget: &Budget) -> Result<usize> {
    budget.check(u)?;
    if u.is_empty() {
        return Ok(0);
    }
    let sigma = u.alphabet().len();
    let mut best = 0;
    for level in SubwordLevels::new(u.letters(), sigma, budget.max_set_size).take(u.len()) {
        for s in level? {
            let d = delta_raw(u.letters(), &s, sigma, budget.max_set_size)?;
            best = best.max(d.finite().expect("strict subword"));
        }
    }
    Ok(best + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{is_subword, words_up_to, Alphabet};
    use proptest::prelude::*;

    fn over(s: &str, alphabet: &str) -> Word {
        Word::parse(s, &Arc::new(Alphabet::new(alphabet.chars()).unwrap())).unwrap()
    }

    fn ab(s: &str) -> Word {
        over(s, "AB")
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn simon_equivalence_examples() {
        assert!(simon_equiv(&ab("ABAB"), &ab("AABB"), 1, &b()).unwrap());
        assert!(!simon_equiv(&ab("ABAB"), &ab("AABB"), 2, &b()).unwrap());
        for k in 0..6 {
            assert!(simon_equiv(&ab("ABBA"), &ab("ABBA"), k, &b()).unwrap());
        }
        assert!(simon_equiv(&ab("A"), &ab("B"), 0, &b()).unwrap());
        assert!(!simon_equiv(&ab("A"), &ab(""), 1, &b()).unwrap());
    }

    #[test]
    fn distinguisher_examples() {
        let d = shortest_distinguisher(&ab("ABAB"), &ab("AABB"), &b()).unwrap();
        assert_eq!(d.word.to_string(), "BA");
        assert_eq!(d.side, Side::Left);

        let a = over("a", "a");
        let d = shortest_distinguisher(&a, &over("", "a"), &b()).unwrap();
        assert_eq!(d.word.to_string(), "a");
        assert_eq!(d.side, Side::Left);

        let d = shortest_distinguisher(&ab("ABA"), &ab("ABBA"), &b()).unwrap();
        assert_eq!(d.word.to_string(), "BB");
        assert_eq!(d.side, Side::Right);

        assert_eq!(
            shortest_distinguisher(&ab("AB"), &ab("AB"), &b()).unwrap_err(),
            Error::NoDistinguisher
        );
    }

    #[test]
    fn abba_vs_aba_needs_length_three() {
        // ABBA vs ABA: every word of length <= 2 over {A,B} embeds in both or
        // neither, except BB which embeds in ABBA only.
        let d = shortest_distinguisher(&ab("ABBA"), &ab("ABA"), &b()).unwrap();
        assert_eq!(d.word.to_string(), "BB");
        assert_eq!(d.side, Side::Left);
        assert_eq!(delta(&ab("ABBA"), &ab("ABA"), &b()).unwrap(), DeltaValue::Finite(1));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&ab("ABBA"), &ab("ABBA"), &b()).unwrap(), DeltaValue::Infinite);
        assert_eq!(delta(&ab("ABAB"), &ab("AABB"), &b()).unwrap(), DeltaValue::Finite(1));
        // AA vs AAB: B is a distinguisher
        assert_eq!(delta(&ab("AA"), &ab("AAB"), &b()).unwrap(), DeltaValue::Finite(0));
        assert_eq!(
            delta(&ab("A"), &over("A", "A"), &b()).unwrap_err(),
            Error::AlphabetMismatch
        );
    }

    #[test]
    fn side_distance_examples() {
        let a = |s: &str| over(s, "ab");
        assert_eq!(r_oracle(&a("aa"), &a("a"), &b()).unwrap(), DeltaValue::Finite(2));
        assert_eq!(r_oracle(&a("aab"), &a("a"), &b()).unwrap(), DeltaValue::Finite(1));
        assert_eq!(r_oracle(&a("aab"), &a(""), &b()).unwrap(), DeltaValue::Infinite);
        assert_eq!(ell_oracle(&a("a"), &a(""), &b()).unwrap(), DeltaValue::Finite(0));
    }

    #[test]
    fn budget_is_enforced() {
        let long = ab("ABABABABABABA");
        assert!(matches!(h_oracle(&long, &b()), Err(Error::BudgetExceeded(_))));
        let wide = over("ABCDE", "ABCDE");
        assert!(matches!(rho_oracle(&wide, &b()), Err(Error::BudgetExceeded(_))));
        let roomy = Budget::parse("13,5").unwrap();
        assert_eq!(roomy.max_word_len, 13);
        assert_eq!(roomy.max_alphabet, 5);
        assert_eq!(roomy.max_set_size, DEFAULT_SET_CAP);
        assert!(h_oracle(&long, &roomy).is_ok());
        assert!(Budget::parse("x").is_err());
        assert!(Budget::parse("1,2,3,4").is_err());
    }

    #[test]
    fn h_and_rho_oracle_examples() {
        let a3 = over("aaa", "a");
        assert_eq!(h_oracle(&a3, &b()).unwrap(), 4);
        assert_eq!(rho_oracle(&a3, &b()).unwrap(), 3);
        assert_eq!(h_oracle(&ab("ABBA"), &b()).unwrap(), 3);
        assert_eq!(h_oracle(&ab(""), &b()).unwrap(), 1);
        let empty = Word::empty(Arc::new(Alphabet::empty()));
        assert_eq!(h_oracle(&empty, &b()).unwrap(), 0);
        assert_eq!(rho_oracle(&empty, &b()).unwrap(), 0);
        for n in 1..6 {
            let an = over(&"a".repeat(n), "a");
            assert_eq!(rho_oracle(&an, &b()).unwrap(), n);
            assert_eq!(h_oracle(&an, &b()).unwrap(), n + 1);
        }
        let u = over("CAACBABA", "ABC");
        assert_eq!(rho_oracle(&u, &b()).unwrap(), 3);
        assert_eq!(h_oracle(&u, &b()).unwrap(), 5);
    }

    /// All ways to cut `u` into `k >= 1` non-empty factors.
    fn factorizations(n: usize) -> Vec<Vec<usize>> {
        // cut points strictly inside 1..n, as subsets
        (0u32..(1 << n.saturating_sub(1)))
            .map(|mask| {
                let mut cuts = vec![0];
                cuts.extend((1..n).filter(|i| mask >> (i - 1) & 1 == 1));
                cuts.push(n);
                cuts
            })
            .collect()
    }

    fn arch_brute(u: &Word, v: &Word) -> usize {
        let alph = |w: &[Letter]| {
            let mut m = vec![false; u.alphabet().len()];
            w.iter().for_each(|a| m[a.index()] = true);
            m
        };
        let sub = |x: &[bool], y: &[bool]| x.iter().zip(y).all(|(&a, &b)| !a || b);
        let target = v.alph();
        if u.is_empty() {
            return 0;
        }
        factorizations(u.len())
            .into_iter()
            .filter(|cuts| {
                let parts: Vec<Vec<bool>> = cuts.windows(2).map(|c| alph(&u.letters()[c[0]..c[1]])).collect();
                parts.windows(2).all(|p| sub(&p[1], &p[0])) && sub(&target, parts.last().unwrap())
            })
            .map(|cuts| cuts.len() - 1)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn arch_factorization_examples() {
        let x = |s: &str| over(s, "ab");
        assert_eq!(arch_brute(&x("ab"), &x("b")), 1);
        assert_eq!(arch_factorization_k(&x("ab"), &x("b")).unwrap(), 1);
        assert_eq!(arch_brute(&x("abab"), &x("ab")), 2);
        assert_eq!(arch_factorization_k(&x("abab"), &x("ab")).unwrap(), 2);
        assert_eq!(arch_factorization_k(&x("abab"), &x("")).unwrap(), 4);
        assert_eq!(arch_factorization_k(&x("aaa"), &x("b")).unwrap(), 0);
    }

    #[test]
    fn arch_factorization_matches_enumeration_and_r() {
        let alphabet = Arc::new(Alphabet::latin(3).unwrap());
        let budget = b();
        let ts: Vec<Word> = words_up_to(&alphabet, 2).skip(1).collect();
        for u in words_up_to(&alphabet, 7) {
            for v in &ts {
                let greedy = arch_factorization_k(&u, v).unwrap();
                assert_eq!(greedy, arch_brute(&u, v), "u={u} v={v}");
                let r = r_oracle(&u, v, &budget).unwrap().finite().unwrap();
                assert!(r <= u.len());
                assert_eq!(greedy, r, "u={u} v={v}");
            }
        }
    }

    #[test]
    fn rho_single_deletions_suffice() {
        let budget = b();
        for sigma in 1..=3 {
            let alphabet = Arc::new(Alphabet::latin(sigma).unwrap());
            for u in words_up_to(&alphabet, 6) {
                assert_eq!(
                    rho_oracle(&u, &budget).unwrap(),
                    rho_oracle_exhaustive(&u, &budget).unwrap(),
                    "u={u}"
                );
            }
        }
    }

    #[test]
    fn delta_is_the_largest_equivalence_order() {
        let budget = b();
        for sigma in 1..=2 {
            let alphabet = Arc::new(Alphabet::latin(sigma).unwrap());
            let words: Vec<Word> = words_up_to(&alphabet, 5).collect();
            for u in &words {
                for v in &words {
                    let by_equiv = (0..=u.len() + v.len())
                        .take_while(|&k| simon_equiv(u, v, k, &budget).unwrap())
                        .last()
                        .unwrap();
                    match delta(u, v, &budget).unwrap() {
                        DeltaValue::Infinite => {
                            assert_eq!(u, v);
                            assert_eq!(by_equiv, u.len() + v.len());
                        }
                        DeltaValue::Finite(d) => assert_eq!(d, by_equiv, "u={u} v={v}"),
                    }
                }
            }
        }
    }

    #[test]
    fn delta_splits_into_side_distances() {
        // δ(uv, uav) = r(u,a) + ℓ(a,v)
        let budget = b();
        for sigma in 1..=3 {
            let alphabet = Arc::new(Alphabet::latin(sigma).unwrap());
            let max_len = if sigma == 3 { 6 } else { 8 };
            for w in words_up_to(&alphabet, max_len) {
                for cut in 0..=w.len() {
                    let u = w.factor(0, cut);
                    let v = w.factor(cut, w.len());
                    for a in alphabet.letters() {
                        let letter = Word::new(Arc::clone(&alphabet), vec![a]).unwrap();
                        let lhs = delta(&w, &w.insert(cut, a), &budget).unwrap().finite().unwrap();
                        let r = r_oracle(&u, &letter, &budget).unwrap().finite().unwrap();
                        let l = ell_oracle(&letter, &v, &budget).unwrap().finite().unwrap();
                        assert_eq!(lhs, r + l, "u={u} a={a:?} v={v}");
                    }
                }
            }
        }
    }

    fn arb_pair(max_len: usize) -> impl Strategy<Value = (Word, Word)> {
        (1..=3usize).prop_flat_map(move |sigma| {
            (
                prop::collection::vec(0..sigma as u32, 0..=max_len),
                prop::collection::vec(0..sigma as u32, 0..=max_len),
            )
                .prop_map(move |(x, y)| {
                    let alphabet = Arc::new(Alphabet::latin(sigma).unwrap());
                    (
                        Word::new(Arc::clone(&alphabet), x.into_iter().map(Letter).collect()).unwrap(),
                        Word::new(alphabet, y.into_iter().map(Letter).collect()).unwrap(),
                    )
                })
        })
    }

    proptest! {
        #[test]
        fn distinguisher_is_minimal_and_one_sided((u, v) in arb_pair(7)) {
            prop_assume!(u != v);
            let budget = b();
            let d = shortest_distinguisher(&u, &v, &budget).unwrap();
            let in_u = is_subword(&d.word, &u);
            let in_v = is_subword(&d.word, &v);
            prop_assert!(in_u != in_v);
            prop_assert_eq!(d.side == Side::Left, in_u);
            // nothing shorter separates them
            prop_assert!(simon_equiv(&u, &v, d.len() - 1, &budget).unwrap());
        }

        #[test]
        fn delta_is_reversal_symmetric((u, v) in arb_pair(7)) {
            let budget = b();
            prop_assert_eq!(
                delta(&u, &v, &budget).unwrap(),
                delta(&u.reverse(), &v.reverse(), &budget).unwrap()
            );
            prop_assert_eq!(
                ell_oracle(&v, &u, &budget).unwrap(),
                r_oracle(&u.reverse(), &v.reverse(), &budget).unwrap()
            );
        }

        #[test]
        fn equivalence_is_convex((u, v) in arb_pair(6), k in 0usize..4, keep in prop::collection::vec(any::<bool>(), 6)) {
            // take w between u' ⊑ w ⊑ u for u' a subword of u equivalent to it
            let budget = b();
            let sub: Vec<Letter> = u.letters().iter().zip(keep.iter().cycle()).filter(|(_, &k)| k).map(|(a, _)| *a).collect();
            let small = u.with_letters(sub).unwrap();
            if simon_equiv(&small, &u, k, &budget).unwrap() {
                // any w with small ⊑ w ⊑ u: add back a prefix of the dropped letters
                for cut in 0..=u.len() {
                    let w = u.with_letters(
                        u.letters().iter().enumerate()
                            .filter(|(i, _)| *i < cut || keep[*i % keep.len()])
                            .map(|(_, a)| *a).collect()
                    ).unwrap();
                    prop_assert!(simon_equiv(&small, &w, k, &budget).unwrap());
                    prop_assert!(simon_equiv(&w, &u, k, &budget).unwrap());
                }
            }
            let _ = v;
        }

        #[test]
        fn pumping_preserves_equivalence((u, v) in arb_pair(4), a in 0u32..3, k in 0usize..4) {
            let budget = b();
            let sigma = u.alphabet().len() as u32;
            let a = Letter(a % sigma);
            let uv = u.concat(&v).unwrap();
            if simon_equiv(&uv, &uv.insert(u.len(), a), k, &budget).unwrap() {
                for m in [0usize, 2, 3, 4] {
                    let mut pumped = u.letters().to_vec();
                    pumped.extend(std::iter::repeat_n(a, m));
                    pumped.extend_from_slice(v.letters());
                    let pumped = u.with_letters(pumped).unwrap();
                    prop_assert!(simon_equiv(&uv, &pumped, k, &budget).unwrap());
                }
            }
        }

        #[test]
        fn shorter_equivalent_subword_exists((u, v) in arb_pair(6), k in 0usize..4) {
            // if u ~k v and |u| < |v| then some v' ⊑ v with |v'| = |u| has u ~k v'
            let budget = b();
            if u.len() < v.len() && simon_equiv(&u, &v, k, &budget).unwrap() {
                let found = crate::word::downward_closure(&v, Some(u.len()), DEFAULT_SET_CAP).unwrap()
                    .into_iter()
                    .filter(|w| w.len() == u.len())
                    .any(|w| simon_equiv(&u, &w, k, &budget).unwrap());
                prop_assert!(found);
            }
        }
    }
}
