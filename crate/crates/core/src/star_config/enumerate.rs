//! Minimal exponent multisets of symmetric "prefix-sum" ideals.
//!
//! For constraints `(c, t)` the ideal is spanned by monomials whose ascending
//! exponent vector `λ` has `λ_1 + ... + λ_c >= t` for every constraint. Both
//! `I_c^{(t)}` (one constraint) and the fold symbolic powers (one constraint
//! per `c0 <= c <= h`) have this shape.

use crate::monomial::{Monomial, RingDescriptor};
use crate::sss::{expand_orbit, Partition};

/// Ascending exponent vectors of length `s` of the minimal generators.
///
/// A vector is minimal iff lowering the first entry of any block of equal
/// nonzero values breaks a constraint, i.e. some constraint at or after the
/// start of the top block is tight. Entries past the largest constrained
/// position equal the entry there.
pub fn minimal_partitions(s: usize, constraints: &[(usize, u64)]) -> Vec<Vec<u32>> {
    let mut cons: Vec<(usize, u64)> = constraints.iter().copied().filter(|&(_, t)| t > 0).collect();
    cons.sort_unstable();
    let Some(&(last, _)) = cons.last() else {
        return vec![vec![0; s]];
    };
    assert!(last <= s && cons[0].0 >= 1, "constraint positions must lie in 1..=s");
    let mut need = vec![0u64; last + 1];
    for &(c, t) in &cons {
        need[c] = need[c].max(t);
    }
    let mut search = Search {
        s,
        last,
        need,
        prefix: vec![0; last + 1],
        cur: Vec::with_capacity(last),
        out: Vec::new(),
    };
    search.place(0);
    search.out
}

struct Search {
    s: usize,
    last: usize,
    /// `need[c]` is the lower bound on the prefix sum at `c` (0 if none).
    need: Vec<u64>,
    prefix: Vec<u64>,
    cur: Vec<u32>,
    out: Vec<Vec<u32>>,
}

impl Search {
    fn place(&mut self, j: usize) {
        if j == self.last {
            self.emit();
            return;
        }
        let prev = self.cur.last().copied().unwrap_or(0);
        let p = self.prefix[j];
        // A new block starting at j + 1 needs a tight constraint at c > j,
        // which caps its value.
        let cap = (j + 1..=self.last)
            .filter(|&c| self.need[c] > 0 && self.need[c] >= p)
            .map(|c| (self.need[c] - p) / (c - j) as u64)
            .max()
            .unwrap_or(0);
        let hi = (cap as u32).max(prev);
        for x in prev..=hi {
            if x > prev && x as u64 > cap {
                break;
            }
            let q = p + x as u64;
            if q < self.need[j + 1] {
                continue;
            }
            self.prefix[j + 1] = q;
            self.cur.push(x);
            self.place(j + 1);
            self.cur.pop();
        }
    }

    fn emit(&mut self) {
        let top = *self.cur.last().expect("at least one position");
        if top == 0 {
            return;
        }
        let start = self.cur.iter().position(|&x| x == top).expect("top occurs") + 1;
        let tight = (start..=self.last).any(|c| self.need[c] > 0 && self.prefix[c] == self.need[c]);
        if tight {
            let mut v = self.cur.clone();
            v.resize(self.s, top);
            self.out.push(v);
        }
    }
}

/// All rearrangements of the given ascending exponent vectors as monomials of
/// the plain ring `K[z_1..z_s]`.
pub fn expand_plain(s: usize, parts: &[Vec<u32>]) -> Vec<Monomial> {
    let ring = RingDescriptor::plain(s).expect("s >= 1");
    parts
        .iter()
        .flat_map(|p| {
            expand_orbit(&Partition::new(p.clone()).expect("ascending"))
                .into_iter()
                .map(|f| Monomial::from_exponents(ring, f.levels()).expect("length s"))
        })
        .collect()
}

/// Whether the ascending rearrangement of `exps` meets every constraint.
pub fn meets_prefix_bounds(exps: &[u32], constraints: &[(usize, u64)]) -> bool {
    let mut sorted = exps.to_vec();
    sorted.sort_unstable();
    let mut prefix = vec![0u64; sorted.len() + 1];
    for (i, &e) in sorted.iter().enumerate() {
        prefix[i + 1] = prefix[i] + e as u64;
    }
    constraints.iter().all(|&(c, t)| prefix[c] >= t)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over all ascending vectors with entries `<= bound`.
    fn brute(s: usize, cons: &[(usize, u64)], bound: u32) -> Vec<Vec<u32>> {
        let mut all = vec![vec![]];
        for _ in 0..s {
            all = all
                .into_iter()
                .flat_map(|v: Vec<u32>| {
                    let lo = v.last().copied().unwrap_or(0);
                    (lo..=bound).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        let inside: Vec<Vec<u32>> = all.into_iter().filter(|v| meets_prefix_bounds(v, cons)).collect();
        let mut out: Vec<Vec<u32>> = inside
            .iter()
            .filter(|v| {
                (0..s).all(|i| {
                    if v[i] == 0 {
                        return true;
                    }
                    let mut w = v.to_vec();
                    w[i] -= 1;
                    !meets_prefix_bounds(&w, cons)
                })
            })
            .cloned()
            .collect();
        out.sort();
        out
    }

    #[test]
    fn matches_brute_force() {
        let cases: &[(usize, &[(usize, u64)])] = &[
            (4, &[(2, 2)]),
            (4, &[(2, 2), (3, 4)]),
            (4, &[(2, 4), (3, 8)]),
            (5, &[(1, 1), (2, 4), (3, 7)]),
            (3, &[(3, 3)]),
            (3, &[(1, 2)]),
            (5, &[(3, 5), (4, 9)]),
        ];
        for &(s, cons) in cases {
            let bound = cons.iter().map(|&(_, t)| t as u32).max().unwrap();
            let mut got = minimal_partitions(s, cons);
            got.sort();
            assert_eq!(got, brute(s, cons, bound), "s={s} cons={cons:?}");
        }
    }

    #[test]
    fn star_shapes() {
        // c = s: all exponent multisets of degree t.
        assert_eq!(minimal_partitions(2, &[(2, 2)]).len(), 2);
        // c = 1: a single generator (z_1 ... z_s)^t.
        assert_eq!(minimal_partitions(3, &[(1, 2)]), vec![vec![2, 2, 2]]);
    }
}
