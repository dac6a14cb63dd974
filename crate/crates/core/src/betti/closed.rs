use serde::Serialize;

use super::{binomial, factorial, BettiTable};
use crate::error::{Error, Result};
use crate::sss::{Partition, SssIdeal};

/// The statistics of a nonzero partition entering the closed formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaStats {
    pub suppdeg: usize,
    pub weight: u64,
    pub lambda_s: u32,
    /// `#{j : 1 <= λ_j < λ_s}`
    pub p: usize,
    /// `#{j : λ_j = λ_s}`
    pub r: usize,
    /// `|λ| + s(λ_s - 1) - λ_s suppdeg(λ)`
    pub p_tri: u64,
    /// `Π_k t_k!` with `t_k = #{j : λ_j = k}` for `1 <= k < λ_s`.
    pub type_factorial: u128,
}

pub fn lambda_stats(lambda: &Partition) -> Result<LambdaStats> {
    if lambda.is_zero() {
        return Err(Error::InvalidPartition {
            parts: lambda.parts().to_vec(),
            reason: "statistics need a nonzero partition".into(),
        });
    }
    let top = lambda.top();
    let nz = lambda.nonzero();
    let r = nz.iter().filter(|&&x| x == top).count();
    let p = nz.len() - r;
    let weight: u64 = nz.iter().map(|&x| x as u64).sum();
    let s = lambda.s() as u64;
    let p_tri = weight + s * (top as u64 - 1) - top as u64 * nz.len() as u64;
    let mut type_factorial = 1u128;
    for run in nz[..p].chunk_by(|a, b| a == b) {
        type_factorial *= factorial(run.len() as u64)?;
    }
    Ok(LambdaStats {
        suppdeg: nz.len(),
        weight,
        lambda_s: top,
        p,
        r,
        p_tri,
        type_factorial,
    })
}

/// `β_{i,i+d}(J) = Σ_λ Σ_{k+ℓ=i} (p!/type!) C(p△,ℓ) C(s,p) C(s-p,r+k) C(r+k-1,k)`
/// over `λ ∈ Λ(J)` with `suppdeg(λ) = d`.
pub fn betti_closed(ideal: &SssIdeal) -> Result<BettiTable> {
    let s = ideal.s() as u64;
    let mut table = BettiTable::new();
    for lambda in ideal.lambdas() {
        let st = lambda_stats(lambda)?;
        let (p, r) = (st.p as u64, st.r as u64);
        let orbit = factorial(p)? / st.type_factorial * binomial(s, p)?;
        // C(s-p, r+k) vanishes once r + k > s - p.
        let max_k = s - p - r;
        for k in 0..=max_k {
            let veronese = binomial(s - p, r + k)? * binomial(r + k - 1, k)?;
            for ell in 0..=st.p_tri {
                let term = orbit
                    .checked_mul(binomial(st.p_tri, ell)?)
                    .and_then(|x| x.checked_mul(veronese))
                    .ok_or_else(super::overflow)?;
                table.add((k + ell) as usize, st.suppdeg, term)?;
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn stats_examples() {
        let a = lambda_stats(&p(&[0, 0, 1, 2])).unwrap();
        assert_eq!((a.suppdeg, a.p, a.r, a.p_tri, a.type_factorial), (2, 1, 1, 3, 1));
        let b = lambda_stats(&p(&[0, 0, 1, 1])).unwrap();
        assert_eq!((b.suppdeg, b.p, b.r, b.p_tri), (2, 0, 2, 0));
        let c = lambda_stats(&p(&[0, 2, 2, 2])).unwrap();
        assert_eq!((c.suppdeg, c.p, c.r, c.p_tri), (3, 0, 3, 4));
        let d = lambda_stats(&p(&[1, 1, 2, 3])).unwrap();
        assert_eq!((d.p, d.r, d.type_factorial), (3, 1, 2));
        assert!(lambda_stats(&p(&[0, 0])).is_err());
    }

    #[test]
    fn squarefree_veronese() {
        let j = SssIdeal::generated_by(4, 1, [p(&[0, 0, 1, 1])]).unwrap();
        let t = betti_closed(&j).unwrap();
        assert_eq!(t.row(2), vec![6, 8, 3]);
    }
}
