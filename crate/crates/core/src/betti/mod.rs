//! Graded Betti numbers of SSS ideals: closed formula, mapping cone over the
//! linear quotients, and Hochster's formula as an independent check.

mod closed;
mod cone;
mod homology;

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::Serialize;

pub use closed::{betti_closed, lambda_stats, LambdaStats};
pub use cone::{betti_mapping_cone, betti_from_certificate};
pub use homology::{betti_homology_oracle, MAX_HOMOLOGY_VARS};

use crate::error::{Error, Result};

/// `β_{i,i+d}` stored under the key `(i, d)`. Zero entries are never stored,
/// so equality of tables is entrywise equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u128>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: usize, d: usize) -> u128 {
        self.entries.get(&(i, d)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, d: usize, value: u128) -> Result<()> {
        if value == 0 {
            return Ok(());
        }
        let slot = self.entries.entry((i, d)).or_insert(0);
        *slot = slot.checked_add(value).ok_or_else(overflow)?;
        Ok(())
    }

    pub fn merge(&mut self, other: &BettiTable) -> Result<()> {
        for (&(i, d), &v) in &other.entries {
            self.add(i, d, v)?;
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries as `((i, d), β_{i,i+d})`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u128)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Largest homological index with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// The degree strata `d` carrying a nonzero entry, ascending.
    pub fn strata(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.entries.keys().map(|&(_, d)| d).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// `(β_{0,d}, β_{1,1+d}, ..., β_{pd,pd+d})`.
    pub fn row(&self, d: usize) -> Vec<u128> {
        let pd = self.projective_dimension().unwrap_or(0);
        (0..=pd).map(|i| self.get(i, d)).collect()
    }

    /// Total Betti numbers `β_i`.
    pub fn totals(&self) -> Vec<u128> {
        let Some(pd) = self.projective_dimension() else {
            return Vec::new();
        };
        let mut t = vec![0u128; pd + 1];
        for (&(i, _), &v) in &self.entries {
            t[i] += v;
        }
        t
    }

    /// The table in the usual diagram layout: rows are labelled `d - 1`
    /// and zero entries print as `.`.
    pub fn render(&self) -> String {
        let Some(pd) = self.projective_dimension() else {
            return "0\n".into();
        };
        let strata = self.strata();
        let (lo, hi) = (strata[0], *strata.last().expect("nonempty"));
        let mut lines: Vec<(String, Vec<String>)> = Vec::new();
        lines.push((String::new(), (0..=pd).map(|i| i.to_string()).collect()));
        lines.push(("total:".into(), self.totals().iter().map(u128::to_string).collect()));
        for d in lo..=hi {
            let cells = self
                .row(d)
                .iter()
                .map(|&v| if v == 0 { ".".to_string() } else { v.to_string() })
                .collect();
            lines.push((format!("{}:", d - 1), cells));
        }
        let label_w = lines.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let mut widths = vec![0; pd + 1];
        for (_, cells) in &lines {
            for (w, c) in widths.iter_mut().zip(cells) {
                *w = (*w).max(c.len());
            }
        }
        let mut out = String::new();
        for (label, cells) in &lines {
            let _ = write!(out, "{label:>label_w$}");
            for (c, w) in cells.iter().zip(&widths) {
                let _ = write!(out, " {c:>w$}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json_value(&self) -> BettiJson {
        BettiJson {
            rows: self
                .strata()
                .into_iter()
                .map(|d| (d.to_string(), self.row(d)))
                .collect(),
            total: self.totals(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data")
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `{"rows": {"d": [β_{0,d}, β_{1,1+d}, ...]}, "total": [...]}`
#[derive(Clone, Debug, Serialize)]
pub struct BettiJson {
    pub rows: BTreeMap<String, Vec<u128>>,
    pub total: Vec<u128>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableStats {
    pub projective_dimension: usize,
    pub regularity: usize,
}

pub fn table_stats(t: &BettiTable) -> Result<TableStats> {
    let pd = t
        .projective_dimension()
        .ok_or(Error::DegenerateIdeal { op: "table_stats" })?;
    let reg = *t.strata().last().expect("nonzero table");
    Ok(TableStats {
        projective_dimension: pd,
        regularity: reg,
    })
}

fn overflow() -> Error {
    Error::Unsupported("Betti number exceeds 128 bits".into())
}

/// `C(n, k)`, zero when `k > n`.
pub(crate) fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc
            .checked_mul((n - j) as u128)
            .ok_or_else(overflow)?
            / (j + 1) as u128;
    }
    Ok(acc)
}

pub(crate) fn factorial(n: u64) -> Result<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k).ok_or_else(overflow))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2).unwrap(), 6);
        assert_eq!(binomial(2, 3).unwrap(), 0);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(60, 30).unwrap(), 118264581564861424);
        assert_eq!(factorial(5).unwrap(), 120);
    }

    #[test]
    fn render_layout() {
        let mut t = BettiTable::new();
        t.add(0, 2, 6).unwrap();
        t.add(1, 2, 8).unwrap();
        t.add(2, 2, 3).unwrap();
        t.add(0, 3, 1).unwrap();
        assert_eq!(t.render(), "       0 1 2\ntotal: 7 8 3\n    1: 6 8 3\n    2: 1 . .\n");
        assert_eq!(t.to_json(), r#"{"rows":{"2":[6,8,3],"3":[1,0,0]},"total":[7,8,3]}"#);
        assert_eq!(
            table_stats(&t).unwrap(),
            TableStats {
                projective_dimension: 2,
                regularity: 3
            }
        );
        assert!(table_stats(&BettiTable::new()).is_err());
    }
}
