use std::cmp::Ordering;

use super::partition::SparseMonomial;
use crate::error::{Error, Result};

/// The order `≺` on level tuples: by support degree, then weight, then
/// `a ≺ b` when the leftmost nonzero entry of `a - b` is negative.
pub fn compare_partitions(a: &[u32], b: &[u32]) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(tuple_order(a, b))
}

pub(crate) fn tuple_order(a: &[u32], b: &[u32]) -> Ordering {
    let suppdeg = |x: &[u32]| x.iter().filter(|&&v| v > 0).count();
    let weight = |x: &[u32]| x.iter().map(|&v| v as u64).sum::<u64>();
    suppdeg(a)
        .cmp(&suppdeg(b))
        .then_with(|| weight(a).cmp(&weight(b)))
        .then_with(|| a.cmp(b))
}

/// Compares two sparse monomials in the lexicographic order whose variables
/// satisfy `z_{i,j} > z_{i',j'}` iff `j < j'`, or `j = j'` and `i < i'`.
/// Returns `Greater` when `f` is lex-larger.
pub fn lex_compare(f: &SparseMonomial, g: &SparseMonomial) -> Ordering {
    debug_assert_eq!(f.s(), g.s());
    let top = f.top_level().max(g.top_level());
    for level in 1..=top {
        for (a, b) in f.levels().iter().zip(g.levels()) {
            match (*a == level, *b == level) {
                (true, false) => return Ordering::Greater,
                (false, true) => return Ordering::Less,
                _ => {}
            }
        }
    }
    Ordering::Equal
}

/// The generator order `≺`: first by partition, then the lex-larger
/// monomial comes first.
pub fn compare_generators(f: &SparseMonomial, g: &SparseMonomial) -> Ordering {
    tuple_order(f.partition().parts(), g.partition().parts()).then_with(|| lex_compare(g, f))
}
