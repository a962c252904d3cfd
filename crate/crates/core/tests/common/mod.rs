// Shared word generators and inequality checkers for the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use piecewise::side::{ell_word, r_letter, r_word};
use piecewise::{h, rho, Alphabet, DeltaValue, Letter, Word};
use rand::Rng;

pub fn alphabet(symbols: &str) -> Arc<Alphabet> {
    Arc::new(Alphabet::new(symbols.chars()).unwrap())
}

pub fn latin(n: usize) -> Arc<Alphabet> {
    Arc::new(Alphabet::latin(n).unwrap())
}

pub fn random_word<R: Rng>(rng: &mut R, alphabet: &Arc<Alphabet>, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    random_word_of_len(rng, alphabet, len)
}

pub fn random_word_of_len<R: Rng>(rng: &mut R, alphabet: &Arc<Alphabet>, len: usize) -> Word {
    let sigma = alphabet.len() as u32;
    let letters = (0..len).map(|_| Letter(rng.gen_range(0..sigma))).collect();
    Word::new(Arc::clone(alphabet), letters).unwrap()
}

/// A random interleaving of `parts`.
pub fn random_shuffle<R: Rng>(rng: &mut R, parts: &[Word]) -> Word {
    let mut cursors = vec![0usize; parts.len()];
    let mut out = Vec::new();
    loop {
        let open: Vec<usize> = (0..parts.len()).filter(|&i| cursors[i] < parts[i].len()).collect();
        if open.is_empty() {
            break;
        }
        let i = open[rng.gen_range(0..open.len())];
        out.push(parts[i].letters()[cursors[i]]);
        cursors[i] += 1;
    }
    parts[0].with_letters(out).unwrap()
}

fn cat(u: &Word, v: &Word) -> Word {
    u.concat(v).unwrap()
}

fn plus(n: usize, d: DeltaValue) -> DeltaValue {
    match d {
        DeltaValue::Finite(m) => DeltaValue::Finite(n + m),
        DeltaValue::Infinite => DeltaValue::Infinite,
    }
}

fn fail(name: &str, detail: String) -> Result<(), String> {
    Err(format!("{name}: {detail}"))
}

pub fn h_at_least_rho_plus_one(u: &Word) -> Result<(), String> {
    let (hv, rv) = (h(u).value, rho(u).value);
    if hv > rv {
        Ok(())
    } else {
        fail("h >= 1 + rho", format!("u={u} h={hv} rho={rv}"))
    }
}

pub fn rho_subadditive(u: &Word, v: &Word) -> Result<(), String> {
    let uv = rho(&cat(u, v)).value;
    let (a, b) = (rho(u).value, rho(v).value);
    if uv <= a + b {
        Ok(())
    } else {
        fail("rho(uv) <= rho(u) + rho(v)", format!("u={u} v={v}: {uv} > {a} + {b}"))
    }
}

pub fn h_of_concat_mixed(u: &Word, v: &Word) -> Result<(), String> {
    let huv = h(&cat(u, v)).value;
    let bound = (h(u).value + rho(v).value).max(rho(u).value + h(v).value);
    if huv <= bound {
        Ok(())
    } else {
        fail("h(uv) <= max(h(u)+rho(v), rho(u)+h(v))", format!("u={u} v={v}: {huv} > {bound}"))
    }
}

pub fn h_subadditive(u: &Word, v: &Word) -> Result<(), String> {
    let huv = h(&cat(u, v)).value;
    let bound = h(u).value + h(v).value - 1;
    if huv <= bound {
        Ok(())
    } else {
        fail("h(uv) <= h(u) + h(v) - 1", format!("u={u} v={v}: {huv} > {bound}"))
    }
}

pub fn concat_monotone(u: &Word, v: &Word) -> Result<(), String> {
    let uv = cat(u, v);
    let (huv, ruv) = (h(&uv).value, rho(&uv).value);
    let ok = h(u).value <= huv && h(v).value <= huv && rho(u).value <= ruv && rho(v).value <= ruv;
    if ok {
        Ok(())
    } else {
        fail("h, rho monotone under concatenation", format!("u={u} v={v}"))
    }
}

pub fn h_bounded_by_letter_count(u: &Word) -> Result<(), String> {
    let max = u.alphabet().letters().map(|a| u.count(a)).max().unwrap_or(0);
    let hv = h(u).value;
    if hv <= 1 + max {
        Ok(())
    } else {
        fail("h(u) <= 1 + max |u|_a", format!("u={u}: {hv} > 1 + {max}"))
    }
}

pub fn side_distance_monotone(u: &Word, v: &Word, t: &Word) -> Result<(), String> {
    let r_ok = r_word(v, t).unwrap() <= r_word(&cat(u, v), t).unwrap();
    let l_ok = ell_word(t, u).unwrap() <= ell_word(t, &cat(u, v)).unwrap();
    if r_ok && l_ok {
        Ok(())
    } else {
        fail("r(v,t) <= r(uv,t), l(t,u) <= l(t,uv)", format!("u={u} v={v} t={t}"))
    }
}

pub fn insertion_bound(u: &Word, v: &Word, a: Letter, b: Letter) -> Result<(), String> {
    let uav = cat(&u.insert(u.len(), a), v);
    let lhs = r_letter(&uav, b).unwrap();
    let rhs = 1 + r_letter(&cat(u, v), b).unwrap();
    if lhs <= rhs {
        Ok(())
    } else {
        fail("r(uav, b) <= 1 + r(uv, b)", format!("u={u} v={v} a={a:?} b={b:?}: {lhs} > {rhs}"))
    }
}

/// `t2` is `t` with extra letters, so `alph(t) ⊆ alph(t2)`.
pub fn subalphabet_monotone(u: &Word, t: &Word, t2: &Word) -> Result<(), String> {
    if r_word(u, t).unwrap() >= r_word(u, t2).unwrap() {
        Ok(())
    } else {
        fail("alph(t) ⊆ alph(t') => r(u,t) >= r(u,t')", format!("u={u} t={t} t'={t2}"))
    }
}

pub fn r_bounded_by_rho(u: &Word) -> Result<(), String> {
    let rv = rho(u).value;
    for a in u.alphabet().letters() {
        let r = r_letter(u, a).unwrap();
        if r > rv {
            return fail("r(u,a) <= rho(u)", format!("u={u} a={a:?}: {r} > {rv}"));
        }
    }
    Ok(())
}

pub fn r_extends_by_rho(u: &Word, v: &Word, t: &Word) -> Result<(), String> {
    let lhs = r_word(&cat(u, v), t).unwrap();
    let rhs = plus(rho(u).value, r_word(v, t).unwrap());
    if lhs <= rhs {
        Ok(())
    } else {
        fail("r(uv,t) <= rho(u) + r(v,t)", format!("u={u} v={v} t={t}: {lhs} > {rhs}"))
    }
}

pub fn shuffle_bound(w: &Word, u: &Word, v: &Word) -> Result<(), String> {
    let hw = h(w).value;
    let bound = h(u).value + v.len();
    if hw <= bound {
        Ok(())
    } else {
        fail("w in u ⧢ v => h(w) <= h(u) + |v|", format!("w={w} u={u} v={v}"))
    }
}

pub fn multi_shuffle_bound(w: &Word, parts: &[Word]) -> Result<(), String> {
    let max = w
        .alphabet()
        .letters()
        .map(|a| parts.iter().map(|p| p.count(a)).sum::<usize>())
        .max()
        .unwrap_or(0);
    let hw = h(w).value;
    if hw <= 1 + max {
        Ok(())
    } else {
        fail("w in u1 ⧢ … ⧢ um => h(w) <= 1 + max_a Σ|ui|_a", format!("w={w} parts={parts:?}"))
    }
}
