//! Piecewise complexity of words.
//!
//! Two words are `k`-equivalent (Simon congruence, `~k`) when they have the
//! same subwords (scattered subsequences) of length at most `k`. This crate
//! computes, for a word `u`:
//!
//! * `h(u)`, the least `k` such that the language `{u}` is a union of
//!   `~k`-classes, i.e. the smallest `k` with `[u]_k = {u}`;
//! * `ρ(u)`, the least `k` such that deleting any single letter from `u`
//!   gives a word that is not `k`-equivalent to `u`;
//!
//! in time linear in `|u|` (times `|A|` for `h`), plus a closed formula for
//! binary words in run-length form with arbitrary-precision block lengths.
//!
//! The [`oracle`] module has exponential brute-force versions of everything,
//! used to cross-check the fast code.
//!
//! ```
//! use piecewise::{analyze, Word};
//!
//! let report = analyze(&Word::infer("ABBA"));
//! assert_eq!((report.h, report.rho), (3, 2));
//! ```

pub mod binary;
pub mod complexity;
pub mod error;
pub mod oracle;
pub mod side;
pub mod word;

pub use binary::{
    extremal_binary_word, h_rle, max_binary_length, rho_formula, rho_rle, rho_rle_traced, ReductionOrder,
    ReductionStep, ReductionTrace,
};
pub use complexity::{analyze, h, h_with, rho, ComplexityReport, HResult, HStrategy, HWitness, RhoResult};
pub use error::{Error, Result};
pub use oracle::{Budget, DeltaValue};
pub use side::{build_l_table, build_r_table, l_vector, r_vector, SideTable, SideVectors};
pub use word::{rle_decode, rle_encode, Alphabet, Letter, RleWord, Word};
