//! Alexander duality of squarefree ideals and polarization.
//!
//! The Alexander dual of a squarefree ideal is generated by the minimal
//! transversals of its generator supports. Those are enumerated by a
//! branch-and-bound search that always branches on an uncovered edge with
//! the fewest admissible vertices, excludes earlier siblings (so every
//! transversal is produced once) and cuts any partial set in which some
//! chosen vertex has lost all of its private edges.

use smallvec::SmallVec;

use super::ideal::MonomialIdeal;
use super::mono::{Exps, Monomial};
use super::ring::{RingDescriptor, RingKind};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
struct VarSet(SmallVec<[u64; 4]>);

impl VarSet {
    fn empty(n: usize) -> Self {
        Self(smallvec::smallvec![0; n.div_ceil(64).max(1)])
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn is_subset(&self, other: &VarSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }

    fn count_outside(&self, excluded: &VarSet) -> u32 {
        self.0
            .iter()
            .zip(&excluded.0)
            .map(|(a, b)| (a & !b).count_ones())
            .sum()
    }

    fn intersection_count(&self, other: &VarSet) -> u32 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    fn first_common(&self, other: &VarSet) -> Option<usize> {
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .find_map(|(w, (a, b))| {
                let x = a & b;
                (x != 0).then(|| w * 64 + x.trailing_zeros() as usize)
            })
    }
}

struct TransversalSearch<'a> {
    edges: &'a [VarSet],
    incidence: Vec<Vec<usize>>,
    cover: Vec<u32>,
    chosen: VarSet,
    excluded: VarSet,
    private: Vec<u32>,
    out: Vec<VarSet>,
}

impl TransversalSearch<'_> {
    fn run(&mut self) {
        let mut best: Option<(u32, usize)> = None;
        for (k, e) in self.edges.iter().enumerate() {
            if self.cover[k] == 0 {
                let avail = e.count_outside(&self.excluded);
                if avail == 0 {
                    return;
                }
                if best.is_none_or(|(b, _)| avail < b) {
                    best = Some((avail, k));
                }
            }
        }
        let Some((_, k)) = best else {
            self.out.push(self.chosen.clone());
            return;
        };
        let candidates: Vec<usize> = self.edges[k]
            .iter()
            .filter(|&v| !self.excluded.contains(v))
            .collect();
        for &v in &candidates {
            if self.try_add(v) {
                self.run();
                self.remove(v);
            }
            self.excluded.insert(v);
        }
        for &v in &candidates {
            self.excluded.remove(v);
        }
    }

    /// Adds `v` unless that would leave a chosen vertex without a private
    /// edge; on refusal the state is unchanged.
    fn try_add(&mut self, v: usize) -> bool {
        let mut lost: Vec<usize> = Vec::new();
        let mut own = 0;
        for &f in &self.incidence[v] {
            match self.cover[f] {
                0 => own += 1,
                1 => {
                    let u = self.edges[f]
                        .first_common(&self.chosen)
                        .expect("covered edge has a chosen vertex");
                    lost.push(u);
                }
                _ => {}
            }
        }
        lost.sort_unstable();
        let mut i = 0;
        while i < lost.len() {
            let u = lost[i];
            let n = lost[i..].iter().take_while(|&&x| x == u).count() as u32;
            if self.private[u] <= n {
                return false;
            }
            i += n as usize;
        }
        for &u in &lost {
            self.private[u] -= 1;
        }
        self.private[v] = own;
        for &f in &self.incidence[v] {
            self.cover[f] += 1;
        }
        self.chosen.insert(v);
        true
    }

    fn remove(&mut self, v: usize) {
        self.chosen.remove(v);
        for &f in &self.incidence[v] {
            self.cover[f] -= 1;
        }
        self.private[v] = 0;
        for &f in &self.incidence[v] {
            if self.cover[f] == 1 {
                let u = self.edges[f]
                    .first_common(&self.chosen)
                    .expect("covered edge has a chosen vertex");
                self.private[u] += 1;
            }
        }
    }
}

fn minimal_transversals(n: usize, edges: Vec<VarSet>) -> Vec<VarSet> {
    let mut edges = edges;
    edges.sort_by_key(|e| e.intersection_count(e));
    edges.dedup();
    let mut minimal: Vec<VarSet> = Vec::new();
    for e in edges {
        if !minimal.iter().any(|m| m.is_subset(&e)) {
            minimal.push(e);
        }
    }
    let mut incidence = vec![Vec::new(); n];
    for (k, e) in minimal.iter().enumerate() {
        for v in e.iter() {
            incidence[v].push(k);
        }
    }
    let mut search = TransversalSearch {
        edges: &minimal,
        incidence,
        cover: vec![0; minimal.len()],
        chosen: VarSet::empty(n),
        excluded: VarSet::empty(n),
        private: vec![0; n],
        out: Vec::new(),
    };
    search.run();
    search.out
}

/// Alexander dual `I^∨` of a squarefree proper nonzero ideal.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree {
            op: "alexander_dual",
        });
    }
    if !ideal.is_proper_nonzero() {
        return Err(Error::DegenerateIdeal {
            op: "alexander_dual",
        });
    }
    let ring = ideal.ring();
    let n = ring.num_vars();
    let edges = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut s = VarSet::empty(n);
            g.support().for_each(|v| s.insert(v));
            s
        })
        .collect();
    let gens = minimal_transversals(n, edges)
        .into_iter()
        .map(|t| {
            let mut exps: Exps = smallvec::smallvec![0; n];
            t.iter().for_each(|v| exps[v] = 1);
            Monomial::from_exps(ring, exps)
        })
        .collect();
    MonomialIdeal::new(ring, gens)
}

/// Polarization `z_i^e -> z_{i,1} ... z_{i,e}` into the grid ring whose
/// level count is the largest exponent among the generators.
pub fn polarize(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    polarize_with_levels(ideal, ideal.max_exponent().max(1) as usize)
}

/// Polarization into a grid ring with a prescribed number of levels.
pub fn polarize_with_levels(ideal: &MonomialIdeal, levels: usize) -> Result<MonomialIdeal> {
    let ring = ideal.ring();
    if ring.kind() != RingKind::Plain {
        return Err(Error::WrongRingKind {
            op: "polarize",
            expected: "plain",
        });
    }
    if (ideal.max_exponent() as usize) > levels {
        return Err(Error::InvalidRing(format!(
            "{levels} levels cannot hold exponent {}",
            ideal.max_exponent()
        )));
    }
    let grid = RingDescriptor::grid(ring.s(), levels)?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut exps: Exps = smallvec::smallvec![0; grid.num_vars()];
            for (row, &e) in g.exponents().iter().enumerate() {
                for level in 1..=e as usize {
                    exps[row * levels + level - 1] = 1;
                }
            }
            Monomial::from_exps(grid, exps)
        })
        .collect();
    MonomialIdeal::new(grid, gens)
}

/// Substitutes `z_{i,j} -> z_i`.
pub fn depolarize(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let ring = ideal.ring();
    if ring.kind() != RingKind::Grid {
        return Err(Error::WrongRingKind {
            op: "depolarize",
            expected: "grid",
        });
    }
    let plain = RingDescriptor::plain(ring.s())?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            let exps: Exps = g
                .exponents()
                .chunks(ring.levels())
                .map(|row| row.iter().sum())
                .collect();
            Monomial::from_exps(plain, exps)
        })
        .collect();
    MonomialIdeal::new(plain, gens)
}
