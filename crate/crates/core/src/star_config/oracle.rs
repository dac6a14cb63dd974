use rayon::prelude::*;

use crate::error::Result;
use crate::monomial::{associated_primes, MonomialIdeal};

/// `I^{(m)} = ∩_{p ∈ Ass(T/I)} I^m T_p ∩ T` for a monomial ideal `I`.
///
/// For a monomial prime `p`, contracting from `T_p` is saturation by the
/// variables outside `p`, i.e. setting them to 1. That substitution is a ring
/// map, so it commutes with powers and `(I^m : u^∞) = (I : u^∞)^m`; the
/// localized ideal is raised to the `m`-th power instead of `I` itself.
pub fn symbolic_oracle(ideal: &MonomialIdeal, m: u32) -> Result<MonomialIdeal> {
    symbolic_with(ideal, |outside| Ok(ideal.saturate(outside)?.power(m)))
}

/// The same intersection with every term computed as `I^m : u^∞`, exactly as
/// the definition reads. Only practical for small `I^m`.
pub fn symbolic_oracle_literal(ideal: &MonomialIdeal, m: u32) -> Result<MonomialIdeal> {
    let power = ideal.power(m);
    symbolic_with(ideal, |outside| power.saturate(outside))
}

fn symbolic_with(
    ideal: &MonomialIdeal,
    localize: impl Fn(&[usize]) -> Result<MonomialIdeal> + Sync,
) -> Result<MonomialIdeal> {
    let n = ideal.ring().num_vars();
    let terms = associated_primes(ideal)?
        .par_iter()
        .map(|prime| {
            let outside: Vec<usize> = (0..n).filter(|v| prime.binary_search(v).is_err()).collect();
            localize(&outside)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::intersect_all(ideal.ring(), &terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{Monomial, RingDescriptor};
    use crate::star_config::{fold_ideal, fold_symbolic, FoldParams};

    #[test]
    fn principal_squarefree() {
        let r = RingDescriptor::plain(2).unwrap();
        let i = MonomialIdeal::new(r, vec![Monomial::plain(&[1, 1]).unwrap()]).unwrap();
        assert_eq!(symbolic_oracle(&i, 2).unwrap().to_string(), "<z_1^2z_2^2>");
    }

    #[test]
    fn both_readings_agree_on_the_example() {
        let p = FoldParams::new(4, 2, 6).unwrap();
        let i = fold_ideal(&p);
        for m in 1..=2 {
            let fast = symbolic_oracle(&i, m).unwrap();
            assert_eq!(fast, symbolic_oracle_literal(&i, m).unwrap());
            assert_eq!(fast, fold_symbolic(&p, m).unwrap());
        }
    }
}
