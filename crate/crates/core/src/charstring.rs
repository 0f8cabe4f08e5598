//! Characteristic strings of two-argument predicates.

use crate::alphabet::{Letter, Word};
use crate::error::{Error, Result};

/// A decidable set of pairs `(x, y)`, with `x` a word and `y` a natural
/// (a word via the length-lexicographic bijection).
pub trait Predicate: Send + Sync {
    fn holds(&self, x: &[Letter], y: u64) -> bool;
}

impl<F> Predicate for F
where
    F: Fn(&[Letter], u64) -> bool + Send + Sync,
{
    fn holds(&self, x: &[Letter], y: u64) -> bool {
        self(x, y)
    }
}

/// `χ(lo) χ(lo+1) … χ(hi)` for the section `{y : (x, y) ∈ A}`, as a binary word.
pub fn char_string<P: Predicate + ?Sized>(pred: &P, x: &[Letter], lo: u64, hi: u64) -> Result<Word> {
    if lo > hi {
        return Err(Error::ReversedRange { lo, hi });
    }
    Ok((lo..=hi).map(|y| pred.holds(x, y) as Letter).collect())
}
