use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::order::compare_generators;
use super::partition::SparseMonomial;
use super::SssIdeal;
use crate::error::{Error, Result};
use crate::monomial::{minimalize, Monomial, MonomialIdeal, RingDescriptor, Var};

/// The variables predicted to generate `J_f : f`, where `J_f` is spanned by
/// the generators before `f` in `≺`. Listed smallest first in the lex order
/// on variables: by level descending, then row descending.
pub fn predicted_quotient_set(ideal: &SssIdeal, f: &SparseMonomial) -> Result<Vec<Var>> {
    if f.s() != ideal.s() || !ideal.lambdas().contains(&f.partition()) {
        return Err(Error::NotAGenerator(f.to_string()));
    }
    Ok(predicted_unchecked(f))
}

fn predicted_unchecked(f: &SparseMonomial) -> Vec<Var> {
    let top = f.top_level() as usize;
    let max_row = f.max_row().unwrap_or(0);
    let mut vars = Vec::new();
    for (i, &mu) in f.levels().iter().enumerate() {
        let row = i + 1;
        if mu > 0 {
            vars.extend((1..mu as usize).map(|j| Var::new(row, j)));
        } else {
            vars.extend((1..top).map(|j| Var::new(row, j)));
            if row < max_row {
                vars.push(Var::new(row, top));
            }
        }
    }
    sort_lex_ascending(&mut vars);
    vars
}

fn sort_lex_ascending(vars: &mut [Var]) {
    vars.sort_by(|a, b| b.level.cmp(&a.level).then(b.row.cmp(&a.row)));
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRow {
    /// 1-based position in the `≺` order.
    pub index: usize,
    pub generator: SparseMonomial,
    pub predicted: Vec<Var>,
    /// `J_f : f`, computed generator by generator.
    pub computed: MonomialIdeal,
    pub max_row: usize,
    /// The computed colon is generated by variables.
    pub linear: bool,
    pub agrees: bool,
}

impl QuotientRow {
    /// The computed quotient variables, in the same order as `predicted`;
    /// `None` if the colon ideal is not linear.
    pub fn computed_vars(&self) -> Option<Vec<Var>> {
        let ring = self.computed.ring();
        let mut vars = Vec::with_capacity(self.computed.len());
        for g in self.computed.generators() {
            if g.degree() != 1 {
                return None;
            }
            vars.push(ring.var(g.support().next().expect("degree one")));
        }
        sort_lex_ascending(&mut vars);
        Some(vars)
    }
}

/// The linear-quotient certificate of an SSS ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCertificate {
    pub ring: RingDescriptor,
    pub rows: Vec<QuotientRow>,
}

impl QuotientCertificate {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.linear && r.agrees)
    }

    pub fn first_failure(&self) -> Option<&QuotientRow> {
        self.rows.iter().find(|r| !(r.linear && r.agrees))
    }

    /// `|𝒢_u|` for each generator, in order.
    pub fn quotient_sizes(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.predicted.len()).collect()
    }

    /// Columns `i`, `u_i`, `J_{u_i} : u_i` (`-` when empty), `max(u_i)`.
    pub fn render_table(&self) -> String {
        let cells: Vec<[String; 4]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.index.to_string(),
                    r.generator.to_string(),
                    self.render_vars(&r.predicted),
                    r.max_row.to_string(),
                ]
            })
            .collect();
        let header = ["i", "u_i", "J_{u_i}:u_i", "max(u_i)"].map(String::from);
        let mut widths = header.clone().map(|h| h.chars().count());
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&header).chain(&cells) {
            let line: Vec<String> = row
                .iter()
                .zip(widths)
                .enumerate()
                .map(|(k, (c, w))| {
                    if k == 0 {
                        format!("{c:>w$}")
                    } else {
                        format!("{c:<w$}")
                    }
                })
                .collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        out
    }

    fn render_vars(&self, vars: &[Var]) -> String {
        if vars.is_empty() {
            return "-".into();
        }
        let names: Vec<String> = vars.iter().map(|&v| self.ring.var_display(v).to_string()).collect();
        format!("<{}>", names.join(","))
    }

    pub fn to_json_value(&self) -> CertificateJson {
        CertificateJson {
            holds: self.holds(),
            rows: self
                .rows
                .iter()
                .map(|r| RowJson {
                    index: r.index,
                    generator: r.generator.to_string(),
                    levels: r.generator.levels().to_vec(),
                    quotient: r.predicted.clone(),
                    max: r.max_row,
                    linear: r.linear,
                    agrees: r.agrees,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateJson {
    pub holds: bool,
    pub rows: Vec<RowJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowJson {
    pub index: usize,
    pub generator: String,
    pub levels: Vec<u32>,
    pub quotient: Vec<Var>,
    pub max: usize,
    pub linear: bool,
    pub agrees: bool,
}

/// Computes every colon `J_f : f` directly from the earlier generators and
/// compares it with the predicted variable set.
pub fn verify_linear_quotients(ideal: &SssIdeal) -> Result<QuotientCertificate> {
    let ring = ideal.ring();
    let gens = ideal.generators();
    debug_assert!(gens.windows(2).all(|w| compare_generators(&w[0], &w[1]).is_lt()));
    let monos: Vec<Monomial> = gens
        .iter()
        .map(|g| g.to_monomial(ring))
        .collect::<Result<_>>()?;
    let rows = (0..gens.len())
        .into_par_iter()
        .map(|k| {
            let f = &monos[k];
            let colon = minimalize(ring, monos[..k].iter().map(|g| g.quotient_by_gcd(f)).collect())?;
            let predicted = predicted_unchecked(&gens[k]);
            let mut row = QuotientRow {
                index: k + 1,
                generator: gens[k].clone(),
                predicted,
                computed: colon,
                max_row: gens[k].max_row().unwrap_or(0),
                linear: false,
                agrees: false,
            };
            if let Some(vars) = row.computed_vars() {
                row.linear = true;
                row.agrees = vars == row.predicted;
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QuotientCertificate { ring, rows })
}
