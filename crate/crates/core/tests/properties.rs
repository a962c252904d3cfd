mod common;

use std::sync::Arc;

use common::*;
use piecewise::oracle::{h_oracle, rho_oracle, Budget};
use piecewise::word::{is_subword, shuffle_set, words_up_to, DEFAULT_SET_CAP};
use piecewise::{h, rho, Letter, Word};
use proptest::prelude::*;

/// Up to four words of length at most `max_len` over one random alphabet.
fn words(max_len: usize) -> impl Strategy<Value = Vec<Word>> {
    (1usize..=4).prop_flat_map(move |sigma| {
        let alphabet = latin(sigma);
        proptest::collection::vec(proptest::collection::vec(0..sigma as u32, 0..=max_len), 4).prop_map(
            move |raw| {
                raw.into_iter()
                    .map(|ls| Word::new(Arc::clone(&alphabet), ls.into_iter().map(Letter).collect()).unwrap())
                    .collect()
            },
        )
    })
}

fn ok(r: Result<(), String>) -> Result<(), TestCaseError> {
    r.map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn concatenation_inequalities(ws in words(14)) {
        let (u, v) = (&ws[0], &ws[1]);
        ok(h_at_least_rho_plus_one(u))?;
        ok(rho_subadditive(u, v))?;
        ok(h_of_concat_mixed(u, v))?;
        ok(h_subadditive(u, v))?;
        ok(concat_monotone(u, v))?;
        ok(h_bounded_by_letter_count(u))?;
    }

    #[test]
    fn side_distance_inequalities(ws in words(12), a in 0u32..4, b in 0u32..4) {
        let (u, v, t) = (&ws[0], &ws[1], &ws[2]);
        let sigma = u.alphabet().len() as u32;
        let (a, b) = (Letter(a % sigma), Letter(b % sigma));
        ok(side_distance_monotone(u, v, t))?;
        ok(insertion_bound(u, v, a, b))?;
        ok(r_bounded_by_rho(u))?;
        ok(r_extends_by_rho(u, v, t))?;
        let t2 = t.concat(&ws[3]).unwrap();
        ok(subalphabet_monotone(u, t, &t2))?;
    }

    #[test]
    fn invariant_under_renaming_and_reversal(ws in words(16), seed in any::<u64>()) {
        let u = &ws[0];
        let sigma = u.alphabet().len();
        let mut map: Vec<Letter> = (0..sigma as u32).map(Letter).collect();
        // a seeded rotation plus swap covers non-trivial bijections
        map.rotate_left(seed as usize % sigma);
        if sigma > 1 && seed % 2 == 0 {
            map.swap(0, 1);
        }
        let renamed = u.relabel(Arc::clone(u.alphabet_arc()), &map).unwrap();
        prop_assert_eq!(h(&renamed).value, h(u).value);
        prop_assert_eq!(rho(&renamed).value, rho(u).value);
        let rev = u.reverse();
        prop_assert_eq!(h(&rev).value, h(u).value);
        prop_assert_eq!(rho(&rev).value, rho(u).value);
    }

    #[test]
    fn blocked_tables_give_the_same_h(ws in words(40), block in 1usize..12) {
        use piecewise::{h_with, HStrategy};
        let u = &ws[0];
        prop_assert_eq!(h_with(u, HStrategy::Blocked { block }), h(u));
    }

    #[test]
    fn witnesses_are_maximisers(ws in words(16)) {
        use piecewise::side::{build_l_table, build_r_table, SideVectors};
        let u = &ws[0];
        let hr = h(u);
        let w = hr.witness.unwrap();
        let (rt, lt) = (build_r_table(u), build_l_table(u));
        prop_assert_eq!(rt.get(w.pos, w.letter) + lt.get(w.pos, w.letter) + 1, hr.value);
        let rr = rho(u);
        if let Some(i) = rr.witness {
            let v = SideVectors::new(u);
            prop_assert_eq!((v.r[i - 1] + v.l[i - 1]) as usize + 1, rr.value);
            prop_assert!(rr.value >= 1);
        } else {
            prop_assert!(u.is_empty());
        }
    }
}

#[test]
fn fast_paths_match_the_oracles() {
    let budget = Budget::default();
    for (symbols, max_len) in [("AB", 8), ("ABC", 7)] {
        for u in words_up_to(&alphabet(symbols), max_len) {
            assert_eq!(h(&u).value, h_oracle(&u, &budget).unwrap(), "h({u})");
            assert_eq!(rho(&u).value, rho_oracle(&u, &budget).unwrap(), "rho({u})");
        }
    }
}

#[test]
fn shuffles_at_desk_scale() {
    let ab = alphabet("AB");
    let abc = alphabet("ABC");
    for (alph, n) in [(&ab, 4), (&abc, 3)] {
        let all: Vec<Word> = words_up_to(alph, n).collect();
        for u in &all {
            for v in all.iter().filter(|v| v.len() <= 3) {
                for w in shuffle_set(u, v, 20, DEFAULT_SET_CAP).unwrap() {
                    shuffle_bound(&w, u, v).unwrap();
                    multi_shuffle_bound(&w, &[u.clone(), v.clone()]).unwrap();
                }
            }
        }
    }
    // three-fold shuffles
    let small: Vec<Word> = words_up_to(&ab, 2).collect();
    for u in &small {
        for v in &small {
            for t in &small {
                for uv in shuffle_set(u, v, 20, DEFAULT_SET_CAP).unwrap() {
                    for w in shuffle_set(&uv, t, 20, DEFAULT_SET_CAP).unwrap() {
                        multi_shuffle_bound(&w, &[u.clone(), v.clone(), t.clone()]).unwrap();
                    }
                }
            }
        }
    }
}

#[test]
fn shuffle_does_not_bound_h_by_the_parts() {
    let ab = alphabet("AB");
    let u = Word::parse("AAABBB", &ab).unwrap();
    let v = Word::parse("AAAABAAAA", &ab).unwrap();
    let w = Word::parse("AAAAAAABABABAAB", &ab).unwrap();
    assert_eq!(h(&u).value, 4);
    assert_eq!(h(&v).value, 6);
    assert_eq!(h(&w).value, 12);
    assert!(h(&w).value > h(&u).value + h(&v).value);
    assert!(shuffle_set(&u, &v, 15, DEFAULT_SET_CAP).unwrap().contains(&w));
    assert!(is_subword(&u, &w) && is_subword(&v, &w));
}

#[test]
fn random_shuffles_respect_the_bounds() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for sigma in 1..=4 {
        let alphabet = latin(sigma);
        for _ in 0..2000 {
            let parts: Vec<Word> = (0..3).map(|_| random_word(&mut rng, &alphabet, 10)).collect();
            let w = random_shuffle(&mut rng, &parts[..2]);
            shuffle_bound(&w, &parts[0], &parts[1]).unwrap();
            multi_shuffle_bound(&w, &parts[..2]).unwrap();
            let w3 = random_shuffle(&mut rng, &parts);
            multi_shuffle_bound(&w3, &parts).unwrap();
        }
    }
}
