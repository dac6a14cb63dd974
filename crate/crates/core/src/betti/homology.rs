use rayon::prelude::*;

use super::BettiTable;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;

/// Largest number of support variables the oracle accepts.
pub const MAX_HOMOLOGY_VARS: usize = 12;

/// Graded Betti numbers of a squarefree ideal over `GF(p)` by Hochster's
/// formula: `β_{i,σ}(I) = dim H̃_{|σ|-i-2}(Δ_σ)`, where `Δ` is the
/// Stanley–Reisner complex of `I` and `σ` runs over the lcm lattice.
///
/// Variables outside the generator supports do not change the table and are
/// dropped before the size limit is applied.
pub fn betti_homology_oracle(ideal: &MonomialIdeal, field_char: u32) -> Result<BettiTable> {
    if !is_prime(field_char) {
        return Err(Error::NotPrime(field_char));
    }
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree {
            op: "betti_homology_oracle",
        });
    }
    if ideal.is_zero() {
        return Ok(BettiTable::new());
    }
    if ideal.is_unit() {
        return Err(Error::DegenerateIdeal {
            op: "betti_homology_oracle",
        });
    }
    let mut vars: Vec<usize> = ideal.generators().iter().flat_map(|g| g.support()).collect();
    vars.sort_unstable();
    vars.dedup();
    if vars.len() > MAX_HOMOLOGY_VARS {
        return Err(Error::TooManyVariables(vars.len(), MAX_HOMOLOGY_VARS));
    }
    let masks: Vec<u32> = ideal
        .generators()
        .iter()
        .map(|g| {
            g.support()
                .map(|v| 1u32 << vars.binary_search(&v).expect("collected above"))
                .fold(0, |a, b| a | b)
        })
        .collect();
    let n = vars.len();
    let p = field_char as u64;
    let per_sigma: Vec<Vec<(usize, usize, u128)>> = (1u32..1 << n)
        .into_par_iter()
        .filter(|&sigma| {
            let covered = masks
                .iter()
                .filter(|&&m| m & !sigma == 0)
                .fold(0, |a, &m| a | m);
            covered == sigma
        })
        .map(|sigma| {
            let size = sigma.count_ones() as usize;
            reduced_homology(sigma, &masks, p)
                .into_iter()
                .enumerate()
                .filter(|&(_, h)| h > 0)
                .map(|(k, h)| {
                    // H̃ of dimension k - 1 gives i = |σ| - 1 - k.
                    let i = size - 1 - k;
                    (i, size - i, h as u128)
                })
                .collect()
        })
        .collect();
    let mut table = BettiTable::new();
    for (i, d, v) in per_sigma.into_iter().flatten() {
        table.add(i, d, v)?;
    }
    Ok(table)
}

/// `dim H̃_{k-1}(Δ_σ)` for `k = 0..|σ|`, where `k` counts face vertices.
fn reduced_homology(sigma: u32, masks: &[u32], p: u64) -> Vec<u64> {
    let size = sigma.count_ones() as usize;
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); size + 1];
    let mut sub = sigma;
    loop {
        if masks.iter().all(|&m| m & !sub != 0) {
            faces[sub.count_ones() as usize].push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & sigma;
    }
    for f in &mut faces {
        f.sort_unstable();
    }
    // rank[k] = rank of the boundary from k-faces to (k-1)-faces.
    let mut rank = vec![0u64; size + 2];
    for k in 1..=size {
        rank[k] = boundary_rank(&faces[k], &faces[k - 1], p);
    }
    (0..size)
        .map(|k| faces[k].len() as u64 - rank[k] - rank[k + 1])
        .collect()
}

fn boundary_rank(upper: &[u32], lower: &[u32], p: u64) -> u64 {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let mut rows: Vec<Vec<u64>> = upper
        .iter()
        .map(|&face| {
            let mut row = vec![0u64; lower.len()];
            let mut bits = face;
            let mut pos = 0;
            while bits != 0 {
                let v = bits & bits.wrapping_neg();
                bits ^= v;
                let col = lower.binary_search(&(face ^ v)).expect("faces are closed under removal");
                row[col] = if pos % 2 == 0 { 1 } else { p - 1 };
                pos += 1;
            }
            row
        })
        .collect();
    rank_mod_p(&mut rows, p)
}

fn rank_mod_p(rows: &mut [Vec<u64>], p: u64) -> u64 {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail {
            let factor = row[col];
            if factor != 0 {
                for (x, &y) in row.iter_mut().zip(pivot_row).skip(col) {
                    *x = (*x + (p - factor) * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[allow(clippy::manual_is_multiple_of)] // is_multiple_of is newer than the MSRV
fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{Monomial, RingDescriptor};

    fn ideal(s: usize, gens: &[&[u32]]) -> MonomialIdeal {
        let r = RingDescriptor::plain(s).unwrap();
        MonomialIdeal::new(r, gens.iter().map(|e| Monomial::from_exponents(r, e).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn principal() {
        let t = betti_homology_oracle(&ideal(2, &[&[1, 1]]), 2).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 2), 1)]);
    }

    #[test]
    fn path() {
        let t = betti_homology_oracle(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]]), 3).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 2), 2), ((1, 2), 1)]);
    }

    #[test]
    fn maximal_ideal_is_koszul() {
        let t = betti_homology_oracle(&ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]), 2)
            .unwrap();
        assert_eq!(t.row(1), vec![4, 6, 4, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(betti_homology_oracle(&ideal(2, &[&[1, 1]]), 4).is_err());
        assert!(betti_homology_oracle(&ideal(2, &[&[2, 1]]), 2).is_err());
    }
}
