use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, RingDescriptor};

/// A nondecreasing tuple `λ_1 <= ... <= λ_s` of levels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition {
                parts,
                reason: "length must be positive".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "entries must be nondecreasing".into(),
            });
        }
        Ok(Self { parts })
    }

    /// Sorts arbitrary levels into a partition.
    pub fn from_levels(levels: &[u32]) -> Self {
        let mut parts = levels.to_vec();
        parts.sort_unstable();
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn s(&self) -> usize {
        self.parts.len()
    }

    pub fn suppdeg(&self) -> usize {
        self.nonzero().len()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `λ_s`, the largest part.
    pub fn top(&self) -> u32 {
        *self.parts.last().expect("nonempty")
    }

    pub fn is_zero(&self) -> bool {
        self.top() == 0
    }

    /// The nonzero parts, ascending.
    pub fn nonzero(&self) -> &[u32] {
        let k = self.parts.partition_point(|&p| p == 0);
        &self.parts[k..]
    }

    /// True iff some orbit monomial of `self` divides some orbit monomial of
    /// `other`, i.e. the nonzero parts of `self` form a sub-multiset of those
    /// of `other`.
    pub fn divides(&self, other: &Partition) -> bool {
        let (a, b) = (self.nonzero(), other.nonzero());
        let mut j = 0;
        for &x in a {
            while j < b.len() && b[j] < x {
                j += 1;
            }
            if j == b.len() || b[j] != x {
                return false;
            }
            j += 1;
        }
        true
    }

    /// All partitions `λ'` with `λ' <=_0 λ`: each nonzero part lowered to any
    /// positive value, zeros kept.
    pub fn shifts(&self) -> Vec<Partition> {
        let mut out = vec![Vec::with_capacity(self.parts.len())];
        for &p in &self.parts {
            let choices: Vec<u32> = if p == 0 { vec![0] } else { (1..=p).collect() };
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |&c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        let mut parts: Vec<Partition> = out.iter().map(|v| Partition::from_levels(v)).collect();
        parts.sort();
        parts.dedup();
        parts
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A sparse squarefree monomial `z^μ = prod_i z_{i,μ_i}` (`μ_i = 0` skips
/// row `i`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparseMonomial {
    levels: Vec<u32>,
}

impl SparseMonomial {
    pub fn new(levels: Vec<u32>) -> Self {
        Self { levels }
    }

    /// Reads a grid monomial; `None` unless it is squarefree with at most one
    /// variable per row.
    pub fn from_monomial(m: &Monomial) -> Option<Self> {
        let ring = m.ring();
        if !ring.is_grid() || !m.is_squarefree() {
            return None;
        }
        let mut levels = vec![0; ring.s()];
        for (v, _) in m.support_vars() {
            if levels[v.row - 1] != 0 {
                return None;
            }
            levels[v.row - 1] = v.level as u32;
        }
        Some(Self { levels })
    }

    pub fn to_monomial(&self, ring: RingDescriptor) -> Result<Monomial> {
        if ring.s() != self.levels.len() || !ring.is_grid() {
            return Err(Error::LengthMismatch(self.levels.len(), ring.s()));
        }
        let terms: Vec<(usize, usize, u32)> = self
            .levels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l > 0)
            .map(|(i, &l)| (i + 1, l as usize, 1))
            .collect();
        Monomial::from_terms(ring, &terms)
    }

    /// `μ`, indexed by row (0-based).
    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn s(&self) -> usize {
        self.levels.len()
    }

    pub fn degree(&self) -> usize {
        self.levels.iter().filter(|&&l| l > 0).count()
    }

    pub fn partition(&self) -> Partition {
        Partition::from_levels(&self.levels)
    }

    pub fn top_level(&self) -> u32 {
        self.levels.iter().copied().max().unwrap_or(0)
    }

    /// Largest (1-based) row carrying the top level; `None` for `1`.
    pub fn max_row(&self) -> Option<usize> {
        let top = self.top_level();
        if top == 0 {
            return None;
        }
        self.levels.iter().rposition(|&l| l == top).map(|i| i + 1)
    }
}

/// Written in decreasing variable order `z_{1,1} > ... > z_{s,1} > z_{1,2} > ...`.
impl fmt::Display for SparseMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut vars: Vec<(u32, usize)> = self
            .levels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l > 0)
            .map(|(i, &l)| (l, i + 1))
            .collect();
        if vars.is_empty() {
            return f.write_str("1");
        }
        vars.sort_unstable();
        for (l, i) in vars {
            write!(f, "z_{{{i},{l}}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SparseMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All distinct rearrangements `prod_i z_{σ(i),λ_i}` of `λ`, in ascending
/// lexicographic order of the level vector.
pub fn expand_orbit(lambda: &Partition) -> Vec<SparseMonomial> {
    let mut cur = lambda.parts().to_vec();
    let mut out = vec![SparseMonomial::new(cur.clone())];
    while next_permutation(&mut cur) {
        out.push(SparseMonomial::new(cur.clone()));
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn statistics() {
        let l = p(&[0, 0, 1, 2]);
        assert_eq!(l.suppdeg(), 2);
        assert_eq!(l.weight(), 3);
        assert_eq!(l.top(), 2);
        assert_eq!(l.nonzero(), &[1, 2]);
        assert!(Partition::new(vec![2, 1]).is_err());
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(expand_orbit(&p(&[0, 0, 1, 1])).len(), 6);
        assert_eq!(expand_orbit(&p(&[0, 2, 2, 2])).len(), 4);
        assert_eq!(expand_orbit(&p(&[0, 0, 1, 2])).len(), 12);
        let unit = expand_orbit(&p(&[0, 0, 0, 0]));
        assert_eq!(unit.len(), 1);
        assert_eq!(unit[0].to_string(), "1");
    }

    #[test]
    fn dominance_is_multiset_inclusion() {
        assert!(p(&[0, 0, 1, 1]).divides(&p(&[0, 1, 1, 2])));
        assert!(p(&[0, 0, 1, 2]).divides(&p(&[0, 1, 2, 2])));
        assert!(!p(&[0, 0, 1, 1]).divides(&p(&[0, 2, 2, 2])));
        assert!(!p(&[0, 0, 2, 2]).divides(&p(&[0, 1, 1, 2])));
    }

    #[test]
    fn shifts_keep_support() {
        let s = p(&[0, 1, 2]).shifts();
        assert_eq!(s, vec![p(&[0, 1, 1]), p(&[0, 1, 2])]);
    }

    #[test]
    fn sparse_monomial_roundtrip() {
        let r = RingDescriptor::grid(4, 2).unwrap();
        let f = SparseMonomial::new(vec![2, 1, 0, 0]);
        assert_eq!(f.to_string(), "z_{2,1}z_{1,2}");
        assert_eq!(f.max_row(), Some(1));
        let m = f.to_monomial(r).unwrap();
        assert_eq!(SparseMonomial::from_monomial(&m), Some(f));
        let dense = Monomial::from_terms(r, &[(1, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(SparseMonomial::from_monomial(&dense), None);
    }
}
