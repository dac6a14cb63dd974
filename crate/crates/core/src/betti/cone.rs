use super::{binomial, BettiTable};
use crate::error::{Error, Result};
use crate::sss::{verify_linear_quotients, QuotientCertificate, SssIdeal};

/// Betti numbers from linear quotients: each generator `u` adds
/// `C(|𝒢_u|, i)` to `β_{i, deg u + i}`.
pub fn betti_mapping_cone(ideal: &SssIdeal) -> Result<BettiTable> {
    betti_from_certificate(&verify_linear_quotients(ideal)?)
}

pub fn betti_from_certificate(cert: &QuotientCertificate) -> Result<BettiTable> {
    if let Some(row) = cert.first_failure() {
        return Err(Error::CertificateFailed(format!(
            "quotient of u_{} = {} is not the predicted linear ideal",
            row.index, row.generator
        )));
    }
    let mut table = BettiTable::new();
    for row in &cert.rows {
        let q = row.predicted.len() as u64;
        for i in 0..=q {
            table.add(i as usize, row.generator.degree(), binomial(q, i)?)?;
        }
    }
    Ok(table)
}
