use std::fmt;

use super::partition::SparseMonomial;
use super::SssIdeal;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Why an ideal fails to be sparse symmetric shifted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SssViolation {
    NotProper,
    NotSquarefree(Monomial),
    /// (S-1): a generator uses two variables of one row.
    NotSparse(Monomial),
    /// (S-2): lowering one level of `generator` leaves the ideal.
    MissingShift {
        generator: Monomial,
        shifted: Monomial,
    },
    /// (S-3): swapping `rows` moves `generator` out of the ideal.
    NotSymmetric {
        generator: Monomial,
        rows: (usize, usize),
        image: Monomial,
    },
}

impl fmt::Display for SssViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotProper => f.write_str("ideal is zero or the unit ideal"),
            Self::NotSquarefree(g) => write!(f, "generator {g} is not squarefree"),
            Self::NotSparse(g) => write!(f, "S-1: generator {g} is not sparse"),
            Self::MissingShift { generator, shifted } => {
                write!(f, "S-2: {shifted} (shift of {generator}) is not in the ideal")
            }
            Self::NotSymmetric {
                generator,
                rows,
                image,
            } => write!(
                f,
                "S-3: swapping rows {} and {} maps {generator} to {image}, which is not in the ideal",
                rows.0, rows.1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SssCheck {
    pub witness: Option<SssViolation>,
}

impl SssCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Decides (S-1), (S-2) and (S-3) for a grid-ring monomial ideal.
///
/// (S-2) is checked on single-level shifts of minimal generators and (S-3) on
/// adjacent row swaps; both generate the full conditions.
pub fn is_sss(ideal: &MonomialIdeal) -> Result<SssCheck> {
    let ring = ideal.ring();
    if !ring.is_grid() {
        return Err(Error::WrongRingKind {
            op: "is_sss",
            expected: "grid",
        });
    }
    let fail = |w| Ok(SssCheck { witness: Some(w) });
    if !ideal.is_proper_nonzero() {
        return fail(SssViolation::NotProper);
    }
    let mut sparse = Vec::with_capacity(ideal.len());
    for g in ideal.generators() {
        if !g.is_squarefree() {
            return fail(SssViolation::NotSquarefree(g.clone()));
        }
        match SparseMonomial::from_monomial(g) {
            Some(f) => sparse.push((g, f)),
            None => return fail(SssViolation::NotSparse(g.clone())),
        }
    }
    for (g, f) in &sparse {
        for (row, &level) in f.levels().iter().enumerate() {
            if level >= 2 {
                let mut mu = f.levels().to_vec();
                mu[row] -= 1;
                let shifted = SparseMonomial::new(mu).to_monomial(ring)?;
                if !ideal.contains(&shifted) {
                    return fail(SssViolation::MissingShift {
                        generator: (*g).clone(),
                        shifted,
                    });
                }
            }
        }
    }
    for (g, f) in &sparse {
        for row in 1..ring.s() {
            let mut mu = f.levels().to_vec();
            mu.swap(row - 1, row);
            let image = SparseMonomial::new(mu).to_monomial(ring)?;
            if !ideal.contains(&image) {
                return fail(SssViolation::NotSymmetric {
                    generator: (*g).clone(),
                    rows: (row, row + 1),
                    image,
                });
            }
        }
    }
    Ok(SssCheck { witness: None })
}

/// Membership in `J` decided from `Λ(J)` alone: `f ∈ J` iff for some
/// `λ ∈ Λ(J)` the nonzero parts of `λ` can be placed on distinct rows of `f`
/// at levels where `f` has a variable.
pub fn shift_closure_member(ideal: &SssIdeal, f: &Monomial) -> Result<bool> {
    let ring = ideal.ring();
    if f.ring() != ring {
        return Err(Error::RingMismatch(ring, f.ring()));
    }
    let levels = ring.levels();
    let has = |row: usize, level: u32| f.exponent(row * levels + level as usize - 1) > 0;
    Ok(ideal
        .lambdas()
        .iter()
        .any(|lambda| row_matching_exists(lambda.nonzero(), ring.s(), &has)))
}

/// Bipartite matching of parts to rows (augmenting paths).
fn row_matching_exists(parts: &[u32], rows: usize, has: &impl Fn(usize, u32) -> bool) -> bool {
    if parts.len() > rows {
        return false;
    }
    let mut row_owner: Vec<Option<usize>> = vec![None; rows];
    for k in 0..parts.len() {
        let mut seen = vec![false; rows];
        if !augment(k, parts, has, &mut row_owner, &mut seen) {
            return false;
        }
    }
    true
}

fn augment(
    k: usize,
    parts: &[u32],
    has: &impl Fn(usize, u32) -> bool,
    row_owner: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for row in 0..row_owner.len() {
        if seen[row] || !has(row, parts[k]) {
            continue;
        }
        seen[row] = true;
        let free = match row_owner[row] {
            None => true,
            Some(other) => augment(other, parts, has, row_owner, seen),
        };
        if free {
            row_owner[row] = Some(k);
            return true;
        }
    }
    false
}
