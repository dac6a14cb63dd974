//! Monomial star configurations `I_c = ∩_{|S|=c} ⟨z_S⟩`, the uniform a-fold
//! product ideal `I_a(z_1^b ... z_s^b)` and its symbolic powers.

mod cas;
mod dual;
mod enumerate;
mod oracle;

use serde::Serialize;

pub use cas::macaulay2_snippet;
pub use dual::{pol_dual_sss, seqcm_certificate, SeqCmCertificate};
pub use enumerate::{expand_plain, meets_prefix_bounds, minimal_partitions};
pub use oracle::{symbolic_oracle, symbolic_oracle_literal};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, RingDescriptor};

/// The arithmetic of the fold ideal `I_a(F^b)` with `s` factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FoldParams {
    pub s: u32,
    pub b: u32,
    pub a: u32,
    /// `bs - a + 1`, the big height.
    pub h: u32,
    /// `s - floor((a-1)/b)`, the height.
    pub c0: u32,
    /// `a - b(s - c0)`
    pub mu0: u32,
    /// Degree of the forms; only `d = 1` is computed with.
    pub form_degree: u32,
}

impl FoldParams {
    /// Checks `(b-1)s + 1 < a <= bs`.
    pub fn new(s: u32, b: u32, a: u32) -> Result<Self> {
        let err = |inequality| Error::Setting { inequality, s, b, a };
        if s < 1 || b < 1 {
            return Err(err("s >= 1 and b >= 1"));
        }
        if a <= (b - 1) * s + 1 {
            return Err(err("(b-1)s + 1 < a"));
        }
        if a > b * s {
            return Err(err("a <= bs"));
        }
        let h = b * s - a + 1;
        let c0 = s - (a - 1) / b;
        let mu0 = a - b * (s - c0);
        Ok(Self {
            s,
            b,
            a,
            h,
            c0,
            mu0,
            form_degree: 1,
        })
    }

    pub fn with_form_degree(mut self, d: u32) -> Self {
        self.form_degree = d;
        self
    }

    /// `μ̂_c = μ_a^0 + b(c - c0)` for `c0 <= c <= h`.
    pub fn mu_hat(&self, c: u32) -> u32 {
        debug_assert!((self.c0..=self.h).contains(&c));
        self.mu0 + self.b * (c - self.c0)
    }

    /// `(c, μ̂_c)` for `c = c0..=h`.
    pub fn mu_hats(&self) -> Vec<(u32, u32)> {
        (self.c0..=self.h).map(|c| (c, self.mu_hat(c))).collect()
    }

    /// Set when `c0 = h`, i.e. `b = 1` or `a = bs`: the fold ideal is a single
    /// star configuration and the containment analysis degenerates.
    pub fn warning(&self) -> Option<&'static str> {
        if self.c0 != self.h {
            None
        } else if self.a == self.b * self.s {
            Some("a = bs: the fold ideal is principal")
        } else {
            Some("b = 1: the fold ideal is a star configuration")
        }
    }

    pub fn ring(&self) -> RingDescriptor {
        RingDescriptor::plain(self.s as usize).expect("s >= 1")
    }

    /// Prefix-sum constraints `(c, n μ̂_c)` describing `I^{(n)}`.
    pub fn symbolic_constraints(&self, n: u32) -> Vec<(usize, u64)> {
        self.mu_hats()
            .into_iter()
            .map(|(c, mu)| (c as usize, n as u64 * mu as u64))
            .collect()
    }
}

/// `I_c^{(t)} = ∩_{|S|=c} ⟨z_S⟩^t` in `K[z_1..z_s]`: the monomials whose `c`
/// smallest exponents sum to at least `t`.
pub fn star_symbolic(c: usize, t: u32, s: usize) -> Result<MonomialIdeal> {
    if c == 0 || c > s {
        return Err(Error::InvalidRing(format!("star configuration needs 1 <= c <= s, got c={c}, s={s}")));
    }
    let ring = RingDescriptor::plain(s)?;
    let parts = minimal_partitions(s, &[(c, t as u64)]);
    MonomialIdeal::new(ring, expand_plain(s, &parts))
}

/// `I_a(z_1^b ... z_s^b)`: all `z^n` with `0 <= n_i <= b` and `|n| = a`.
pub fn fold_ideal(params: &FoldParams) -> MonomialIdeal {
    let s = params.s as usize;
    let mut parts = Vec::new();
    let mut cur = Vec::with_capacity(s);
    compositions(s, params.a, params.b, 0, &mut cur, &mut parts);
    MonomialIdeal::new(params.ring(), expand_plain(s, &parts)).expect("plain ring")
}

/// Ascending vectors of length `len` with entries in `lo..=cap` summing to `total`.
fn compositions(len: usize, total: u32, cap: u32, lo: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == len {
        if total == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let left = (len - cur.len()) as u32;
    for x in lo..=cap {
        if x * left > total {
            break;
        }
        if total - x > cap * (left - 1) {
            continue;
        }
        cur.push(x);
        compositions(len, total - x, cap, x, cur, out);
        cur.pop();
    }
}

/// `I^{(m)} = ∩_{c=c0}^{h} I_c^{(m μ̂_c)}`, computed as that intersection.
pub fn fold_symbolic(params: &FoldParams, m: u32) -> Result<MonomialIdeal> {
    filtration_term(params, m, params.h)
}

/// `I^{(n)}` from the prefix-sum criterion: the orbit representatives of its
/// minimal generators, as ascending exponent vectors.
pub fn fold_symbolic_partitions(params: &FoldParams, n: u32) -> Vec<Vec<u32>> {
    minimal_partitions(params.s as usize, &params.symbolic_constraints(n))
}

/// `I^{(n)}` by direct enumeration of minimal generators.
pub fn fold_symbolic_by_criterion(params: &FoldParams, n: u32) -> MonomialIdeal {
    let parts = fold_symbolic_partitions(params, n);
    MonomialIdeal::new(params.ring(), expand_plain(params.s as usize, &parts)).expect("plain ring")
}

/// `f ∈ I^{(n)}` iff the ascending exponents satisfy `|λ_{≤c}| >= n μ̂_c`.
pub fn in_fold_symbolic(params: &FoldParams, n: u32, f: &Monomial) -> bool {
    meets_prefix_bounds(f.exponents(), &params.symbolic_constraints(n))
}

/// `∩_{c=c0}^{top} I_c^{(m μ̂_c)}`.
fn filtration_term(params: &FoldParams, m: u32, top: u32) -> Result<MonomialIdeal> {
    let s = params.s as usize;
    let parts = (params.c0..=top)
        .map(|c| star_symbolic(c as usize, m * params.mu_hat(c), s))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::intersect_all(params.ring(), &parts)
}

/// `K_0 ⊆ K_1 ⊆ ... ⊆ K_{h-c0+1} = T` with `K_j = ∩_{c=c0}^{h-j} I_c^{(m μ̂_c)}`.
pub fn filtration(params: &FoldParams, m: u32) -> Result<Vec<MonomialIdeal>> {
    let mut out = (0..=params.h - params.c0)
        .map(|j| filtration_term(params, m, params.h - j))
        .collect::<Result<Vec<_>>>()?;
    out.push(MonomialIdeal::unit(params.ring()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{big_height, height, irreducible_decomposition};

    fn fp(s: u32, b: u32, a: u32) -> FoldParams {
        FoldParams::new(s, b, a).unwrap()
    }

    #[test]
    fn params() {
        let p = fp(4, 2, 6);
        assert_eq!((p.h, p.c0, p.mu0), (3, 2, 2));
        assert_eq!(p.mu_hats(), vec![(2, 2), (3, 4)]);
        assert_eq!(p.mu_hat(p.h), p.b * p.h - (p.b * p.s - p.a));
        assert!(p.warning().is_none());
        let q = fp(4, 2, 8);
        assert_eq!((q.h, q.c0, q.mu0), (1, 1, 2));
        assert!(q.warning().is_some());
        assert!(fp(3, 1, 3).warning().is_some());
        let e = FoldParams::new(4, 2, 5).unwrap_err();
        assert!(e.to_string().contains("(b-1)s + 1 < a"));
        assert!(FoldParams::new(4, 2, 9).is_err());
    }

    #[test]
    fn star_symbolic_matches_intersection_of_prime_powers() {
        let s = 4;
        for c in 1..=s {
            for t in 1..=3 {
                let r = RingDescriptor::plain(s).unwrap();
                let primes: Vec<MonomialIdeal> = subsets(s, c)
                    .into_iter()
                    .map(|set| MonomialIdeal::prime(r, &set).power(t))
                    .collect();
                let want = MonomialIdeal::intersect_all(r, &primes).unwrap();
                assert_eq!(star_symbolic(c, t, s).unwrap(), want, "c={c} t={t}");
            }
        }
        assert_eq!(star_symbolic(4, 1, 4).unwrap(), MonomialIdeal::maximal(RingDescriptor::plain(4).unwrap()));
        assert_eq!(star_symbolic(1, 3, 3).unwrap().to_string(), "<z_1^3z_2^3z_3^3>");
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
            .collect()
    }

    #[test]
    fn fold_ideal_sizes() {
        assert_eq!(fold_ideal(&fp(4, 2, 6)).len(), 10);
        assert_eq!(fold_ideal(&fp(3, 1, 3)).to_string(), "<z_1z_2z_3>");
        assert_eq!(fold_ideal(&fp(4, 2, 8)).to_string(), "<z_1^2z_2^2z_3^2z_4^2>");
    }

    #[test]
    fn example_intersection_is_the_fold_ideal() {
        let p = fp(4, 2, 6);
        let i = fold_symbolic(&p, 1).unwrap();
        assert_eq!(i, fold_ideal(&p));
        assert_eq!(i, fold_symbolic_by_criterion(&p, 1));
        assert_eq!(i.alpha().unwrap(), 6);
        assert_eq!((height(&i).unwrap(), big_height(&i).unwrap()), (2, 3));
        let f = Monomial::plain(&[0, 2, 2, 2]).unwrap();
        assert!(in_fold_symbolic(&p, 1, &f));
        assert!(i.contains(&f));
    }

    #[test]
    fn criterion_and_intersection_agree() {
        for (s, b, a) in [(4, 2, 6), (5, 2, 9), (4, 3, 10), (3, 2, 5)] {
            let p = fp(s, b, a);
            for m in 1..=3 {
                assert_eq!(fold_symbolic(&p, m).unwrap(), fold_symbolic_by_criterion(&p, m));
            }
        }
    }

    #[test]
    fn filtration_chain() {
        let p = fp(4, 2, 6);
        let k = filtration(&p, 1).unwrap();
        assert_eq!(k.len(), 3);
        assert_eq!(k[0], fold_symbolic(&p, 1).unwrap());
        assert_eq!(k[1], star_symbolic(2, 2, 4).unwrap());
        assert!(k[2].is_unit());
        for w in k.windows(2) {
            assert!(w[1].contains_ideal(&w[0]));
        }
        for comp in irreducible_decomposition(&k[1]).unwrap() {
            assert_eq!(comp.support_size(), 2);
        }
    }
}
