use super::FoldParams;
use crate::error::Result;
use crate::sss::{is_sss, verify_linear_quotients, Partition, QuotientCertificate, SssCheck, SssIdeal};

/// `Pol(I^{(m)})^∨` built from its generators: for each `c0 <= c <= h` with
/// `m_c = m μ̂_c`, the monomials `z_{i_1,e_1} ... z_{i_c,e_c}` on distinct rows
/// with `1 <= e_j <= m_c` and `Σ e_j <= m_c + c - 1`.
///
/// The candidate partitions are taken as they are (no shift closure), so a
/// later [`is_sss`] check is meaningful.
pub fn pol_dual_sss(params: &FoldParams, m: u32) -> Result<SssIdeal> {
    let s = params.s as usize;
    let mut parts = Vec::new();
    for (c, mu) in params.mu_hats() {
        let mc = m * mu;
        let mut cur = vec![0; s - c as usize];
        candidates(c as usize, mc, mc + c - 1, 1, &mut cur, &mut parts);
    }
    let parts = parts
        .into_iter()
        .map(Partition::new)
        .collect::<Result<Vec<_>>>()?;
    SssIdeal::from_partitions(s, (m * params.mu_hat(params.h)) as usize, parts)
}

/// Ascending tails of `left` more entries in `lo..=cap` with sum `<= budget`.
fn candidates(left: usize, cap: u32, budget: u32, lo: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for e in lo..=cap {
        if e * left as u32 > budget {
            break;
        }
        cur.push(e);
        candidates(left - 1, cap, budget - e, e, cur, out);
        cur.pop();
    }
}

/// Evidence that `I^{(m)}` is sequentially Cohen–Macaulay: its polarization
/// dual is SSS and so has linear quotients, making it componentwise linear.
#[derive(Clone, Debug)]
pub struct SeqCmCertificate {
    pub params: FoldParams,
    pub m: u32,
    pub dual: SssIdeal,
    pub sss: SssCheck,
    /// Present once the SSS stage passed.
    pub quotients: Option<QuotientCertificate>,
    /// The first stage that failed.
    pub failed_stage: Option<&'static str>,
}

impl SeqCmCertificate {
    pub fn valid(&self) -> bool {
        self.failed_stage.is_none()
    }
}

pub fn seqcm_certificate(params: &FoldParams, m: u32) -> Result<SeqCmCertificate> {
    let dual = pol_dual_sss(params, m)?;
    let sss = is_sss(&dual.to_ideal())?;
    let mut cert = SeqCmCertificate {
        params: *params,
        m,
        dual,
        sss,
        quotients: None,
        failed_stage: None,
    };
    if !cert.sss.holds() {
        cert.failed_stage = Some("is_sss");
        return Ok(cert);
    }
    let q = verify_linear_quotients(&cert.dual)?;
    if !q.holds() {
        cert.failed_stage = Some("linear_quotients");
    }
    cert.quotients = Some(q);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{alexander_dual, polarize};
    use crate::star_config::fold_symbolic;

    #[test]
    fn example_dual() {
        let p = FoldParams::new(4, 2, 6).unwrap();
        let j = pol_dual_sss(&p, 1).unwrap();
        let lambdas: Vec<Vec<u32>> = j.lambdas().iter().map(|l| l.parts().to_vec()).collect();
        assert_eq!(lambdas, vec![vec![0, 0, 1, 1], vec![0, 0, 1, 2], vec![0, 2, 2, 2]]);
        assert_eq!(j.num_generators(), 22);
        assert_eq!(j.levels(), 4);
        let other = alexander_dual(&polarize(&fold_symbolic(&p, 1).unwrap()).unwrap()).unwrap();
        assert_eq!(j.with_levels(other.ring().levels()).unwrap().to_ideal(), other);
    }

    #[test]
    fn certificates() {
        for (s, b, a, m) in [(4, 2, 6, 1), (4, 2, 6, 2), (5, 2, 9, 1)] {
            let c = seqcm_certificate(&FoldParams::new(s, b, a).unwrap(), m).unwrap();
            assert!(c.valid(), "({s},{b},{a}) m={m}");
        }
    }
}
