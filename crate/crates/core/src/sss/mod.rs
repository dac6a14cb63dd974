//! Sparse symmetric shifted (SSS) ideals in the grid ring `K[z_{i,j}]`.
//!
//! An SSS ideal is generated by sparse squarefree monomials, is closed under
//! lowering the level of a used row, and is invariant under permuting rows.
//! It is therefore determined by the set `Λ(J)` of partitions of its minimal
//! generators, which is how [`SssIdeal`] stores it.

mod check;
mod order;
mod partition;
mod quotients;

use serde::{Deserialize, Serialize};

pub use check::{is_sss, shift_closure_member, SssCheck, SssViolation};
pub use order::{compare_generators, compare_partitions, lex_compare};
pub use partition::{expand_orbit, Partition, SparseMonomial};
pub use quotients::{predicted_quotient_set, verify_linear_quotients, QuotientCertificate, QuotientRow};

use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, RingDescriptor};

/// An SSS ideal, stored by its minimal partition set `Λ(J)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SssIdeal {
    ring: RingDescriptor,
    lambdas: Vec<Partition>,
}

impl SssIdeal {
    /// The smallest SSS ideal containing `z^λ` for every given `λ`: the
    /// orbits of all level-lowered shifts of the inputs, minimalized.
    pub fn generated_by(
        s: usize,
        levels: usize,
        parts: impl IntoIterator<Item = Partition>,
    ) -> Result<Self> {
        let parts = Self::validate(s, levels, parts)?;
        let closed = parts.iter().flat_map(Partition::shifts).collect();
        Self::build(s, levels, closed)
    }

    /// Takes the partitions as they are and only drops dominated ones. The
    /// result is an SSS ideal only if the input is already shift-closed;
    /// [`is_sss`] decides that.
    pub fn from_partitions(
        s: usize,
        levels: usize,
        parts: impl IntoIterator<Item = Partition>,
    ) -> Result<Self> {
        let parts = Self::validate(s, levels, parts)?;
        Self::build(s, levels, parts)
    }

    fn validate(
        s: usize,
        levels: usize,
        parts: impl IntoIterator<Item = Partition>,
    ) -> Result<Vec<Partition>> {
        let parts: Vec<Partition> = parts.into_iter().collect();
        for p in &parts {
            if p.s() != s {
                return Err(Error::LengthMismatch(p.s(), s));
            }
            if p.is_zero() {
                return Err(Error::InvalidPartition {
                    parts: p.parts().to_vec(),
                    reason: "the zero partition generates the unit ideal".into(),
                });
            }
            if p.top() as usize > levels {
                return Err(Error::InvalidPartition {
                    parts: p.parts().to_vec(),
                    reason: format!("entries exceed B = {levels}"),
                });
            }
        }
        Ok(parts)
    }

    fn build(s: usize, levels: usize, mut parts: Vec<Partition>) -> Result<Self> {
        let ring = RingDescriptor::grid(s, levels)?;
        parts.sort_by(|a, b| order::tuple_order(a.parts(), b.parts()));
        parts.dedup();
        // A dominating partition has support degree and weight at most those
        // of the partition it dominates, so it comes earlier in `≺`.
        let mut lambdas: Vec<Partition> = Vec::new();
        for p in parts {
            if !lambdas.iter().any(|q| q.divides(&p)) {
                lambdas.push(p);
            }
        }
        Ok(Self { ring, lambdas })
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn s(&self) -> usize {
        self.ring.s()
    }

    pub fn levels(&self) -> usize {
        self.ring.levels()
    }

    /// `Λ(J)` in `≺` order.
    pub fn lambdas(&self) -> &[Partition] {
        &self.lambdas
    }

    /// Minimal generators sorted by `≺`; this is the linear-quotient order.
    pub fn generators(&self) -> Vec<SparseMonomial> {
        let mut gens: Vec<SparseMonomial> = self.lambdas.iter().flat_map(expand_orbit).collect();
        gens.sort_by(compare_generators);
        debug_assert!(gens
            .windows(2)
            .all(|w| compare_generators(&w[0], &w[1]).is_lt()));
        gens
    }

    pub fn num_generators(&self) -> usize {
        self.lambdas.iter().map(|l| orbit_size(l) as usize).sum()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = self
            .generators()
            .iter()
            .map(|g| g.to_monomial(self.ring).expect("levels within ring"))
            .collect();
        MonomialIdeal::new(self.ring, gens).expect("same ring")
    }

    /// The same ideal in a grid ring with more levels.
    pub fn with_levels(&self, levels: usize) -> Result<Self> {
        if levels < self.levels() {
            let used = self.lambdas.iter().map(Partition::top).max().unwrap_or(0);
            if used as usize > levels {
                return Err(Error::InvalidRing(format!(
                    "{levels} levels cannot hold level {used}"
                )));
            }
        }
        Ok(Self {
            ring: RingDescriptor::grid(self.s(), levels)?,
            lambdas: self.lambdas.clone(),
        })
    }

    pub fn to_json_value(&self) -> LambdaJson {
        LambdaJson {
            s: self.s(),
            levels: self.levels(),
            lambdas: self.lambdas.iter().map(|l| l.parts().to_vec()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data")
    }

    /// Reads `Λ(J)`; the partitions are closed under shifts on the way in.
    pub fn from_json(s: &str) -> Result<Self> {
        let v: LambdaJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let parts = v
            .lambdas
            .into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>>>()?;
        Self::generated_by(v.s, v.levels, parts)
    }
}

/// `{"s": 4, "levels": 2, "lambdas": [[0,0,1,1], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaJson {
    pub s: usize,
    pub levels: usize,
    pub lambdas: Vec<Vec<u32>>,
}

/// `s! / prod(multiplicities!)`, counting zeros as a part.
pub fn orbit_size(lambda: &Partition) -> u64 {
    let parts = lambda.parts();
    let mut size = 1u64;
    let mut seen = 0u64;
    let mut run = 0u64;
    for (i, &p) in parts.iter().enumerate() {
        run = if i > 0 && parts[i - 1] == p { run + 1 } else { 1 };
        seen += 1;
        size = size * seen / run;
    }
    size
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    pub(crate) fn example() -> SssIdeal {
        SssIdeal::generated_by(4, 2, [p(&[0, 0, 1, 1]), p(&[0, 0, 1, 2]), p(&[0, 2, 2, 2])]).unwrap()
    }

    #[test]
    fn example_has_22_generators() {
        let j = example();
        assert_eq!(j.lambdas().len(), 3);
        assert_eq!(j.num_generators(), 22);
        assert_eq!(j.generators().len(), 22);
        assert_eq!(j.to_ideal().len(), 22);
    }

    #[test]
    fn example_generator_sequence() {
        let want = [
            "z_{1,1}z_{2,1}",
            "z_{1,1}z_{3,1}",
            "z_{1,1}z_{4,1}",
            "z_{2,1}z_{3,1}",
            "z_{2,1}z_{4,1}",
            "z_{3,1}z_{4,1}",
            "z_{1,1}z_{2,2}",
            "z_{1,1}z_{3,2}",
            "z_{1,1}z_{4,2}",
            "z_{2,1}z_{1,2}",
            "z_{2,1}z_{3,2}",
            "z_{2,1}z_{4,2}",
            "z_{3,1}z_{1,2}",
            "z_{3,1}z_{2,2}",
            "z_{3,1}z_{4,2}",
            "z_{4,1}z_{1,2}",
            "z_{4,1}z_{2,2}",
            "z_{4,1}z_{3,2}",
            "z_{1,2}z_{2,2}z_{3,2}",
            "z_{1,2}z_{2,2}z_{4,2}",
            "z_{1,2}z_{3,2}z_{4,2}",
            "z_{2,2}z_{3,2}z_{4,2}",
        ];
        let got: Vec<String> = example().generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn single_variable_orbit() {
        let j = SssIdeal::generated_by(3, 2, [p(&[0, 0, 1])]).unwrap();
        let got: Vec<String> = j.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(got, ["z_{1,1}", "z_{2,1}", "z_{3,1}"]);
    }

    #[test]
    fn closure_adds_lowered_shifts() {
        // (0,0,2,2) alone is not shift-closed; no lowered shift divides another.
        let j = SssIdeal::generated_by(4, 2, [p(&[0, 0, 2, 2])]).unwrap();
        assert_eq!(j.lambdas(), &[p(&[0, 0, 1, 1]), p(&[0, 0, 1, 2]), p(&[0, 0, 2, 2])]);
        assert_eq!(j.num_generators(), 6 + 12 + 6);
        let raw = SssIdeal::from_partitions(4, 2, [p(&[0, 0, 2, 2])]).unwrap();
        assert_eq!(raw.num_generators(), 6);
        assert!(raw.generators().iter().all(|g| g.top_level() == 2));
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(SssIdeal::generated_by(4, 2, [p(&[0, 0, 0, 0])]).is_err());
        assert!(SssIdeal::generated_by(4, 2, [p(&[0, 0, 1, 3])]).is_err());
        assert!(SssIdeal::generated_by(3, 2, [p(&[0, 0, 1, 1])]).is_err());
    }

    #[test]
    fn orbit_sizes_match_enumeration() {
        for v in [[0, 0, 1, 1], [0, 1, 2, 2], [1, 2, 3, 3], [0, 0, 0, 1], [2, 2, 2, 2]] {
            let l = p(&v);
            assert_eq!(orbit_size(&l) as usize, expand_orbit(&l).len());
        }
    }

    #[test]
    fn json_roundtrip() {
        let j = example();
        let text = j.to_json();
        assert_eq!(text, r#"{"s":4,"levels":2,"lambdas":[[0,0,1,1],[0,0,1,2],[0,2,2,2]]}"#);
        assert_eq!(SssIdeal::from_json(&text).unwrap(), j);
    }
}
