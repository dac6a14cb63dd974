//! α-invariants, Waldschmidt brackets and the containments
//! `I^{(ℓ(h+m-1)-h+k)} ⊆ 𝔪^{d((ℓ-1)(h-1)+k-1)μ̂_h} (I^{(m)})^ℓ` for the fold
//! ideal `I = I_a(z_1^b ... z_s^b)`.

use std::fmt::Write as _;
use std::time::Instant;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::star_config::{fold_symbolic_partitions, expand_plain, FoldParams};

pub type Rational = Ratio<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentQuery {
    pub params: FoldParams,
    pub k: u32,
    pub l: u32,
    pub m: u32,
}

impl ContainmentQuery {
    pub fn new(params: FoldParams, k: u32, l: u32, m: u32) -> Result<Self> {
        if k == 0 || l == 0 || m == 0 {
            return Err(Error::Unsupported(format!(
                "containment needs k, l, m >= 1, got k={k}, l={l}, m={m}"
            )));
        }
        Ok(Self { params, k, l, m })
    }

    /// `ℓ(h+m-1) - h + k`
    pub fn lhs_order(&self) -> u32 {
        self.l * (self.params.h + self.m - 1) - self.params.h + self.k
    }

    /// `d((ℓ-1)(h-1) + k - 1) μ̂_h`
    pub fn maximal_power(&self) -> u32 {
        let p = &self.params;
        p.form_degree * ((self.l - 1) * (p.h - 1) + self.k - 1) * p.mu_hat(p.h)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentResult {
    pub holds: bool,
    /// Ascending exponents of a left-hand generator outside the right side.
    pub witness: Option<Vec<u32>>,
    /// Number of generator orbits of the left side that were checked.
    pub orbits_checked: usize,
    pub alpha_lhs: u32,
}

/// Checks every minimal generator of the left side against the right side.
///
/// Both sides are symmetric, so one generator per orbit suffices. A monomial
/// `f` lies in `𝔪^P (I^{(m)})^ℓ` iff some product `g_1 ... g_ℓ` of generators
/// of `I^{(m)}` divides `f` with `deg f - Σ deg g_i >= P`.
pub fn hh_containment_check(q: &ContainmentQuery) -> Result<ContainmentResult> {
    if q.params.form_degree != 1 {
        return Err(Error::Unsupported("only linear forms (d = 1) are computed with".into()));
    }
    let lhs = fold_symbolic_partitions(&q.params, q.lhs_order());
    let rhs = RhsFactors::new(&q.params, q.m, q.l, q.maximal_power());
    let witness = lhs.par_iter().find_first(|f| !rhs.contains(f)).cloned();
    let alpha_lhs = lhs
        .iter()
        .map(|f| f.iter().sum::<u32>())
        .min()
        .expect("symbolic powers are nonzero");
    Ok(ContainmentResult {
        holds: witness.is_none(),
        witness,
        orbits_checked: lhs.len(),
        alpha_lhs,
    })
}

struct RhsFactors {
    /// Generators of `I^{(m)}` sorted by degree.
    gens: Vec<(u32, Vec<u32>)>,
    l: u32,
    power: u32,
}

impl RhsFactors {
    fn new(params: &FoldParams, m: u32, l: u32, power: u32) -> Self {
        let s = params.s as usize;
        let mut gens: Vec<(u32, Vec<u32>)> = expand_plain(s, &fold_symbolic_partitions(params, m))
            .into_iter()
            .map(|g| (g.degree(), g.exponents().to_vec()))
            .collect();
        gens.sort();
        Self { gens, l, power }
    }

    fn contains(&self, f: &[u32]) -> bool {
        let deg: u32 = f.iter().sum();
        if deg < self.power {
            return false;
        }
        let mut rest = f.to_vec();
        self.search(0, 0, deg - self.power, &mut rest)
    }

    /// Picks the remaining factors from `gens[start..]` with total degree at
    /// most `budget`.
    fn search(&self, depth: u32, start: usize, budget: u32, rest: &mut [u32]) -> bool {
        if depth == self.l {
            return true;
        }
        let left = self.l - depth;
        for (idx, (d, g)) in self.gens.iter().enumerate().skip(start) {
            if d * left > budget {
                break;
            }
            if g.iter().zip(rest.iter()).all(|(a, b)| a <= b) {
                rest.iter_mut().zip(g).for_each(|(r, a)| *r -= a);
                let found = self.search(depth + 1, idx, budget - d, rest);
                rest.iter_mut().zip(g).for_each(|(r, a)| *r += a);
                if found {
                    return true;
                }
            }
        }
        false
    }
}

/// `𝔪^P (I^{(m)})^ℓ` built explicitly; only for small cases.
pub fn rhs_ideal(q: &ContainmentQuery, symbolic_m: &MonomialIdeal) -> Result<MonomialIdeal> {
    let ring = q.params.ring();
    MonomialIdeal::maximal(ring)
        .power(q.maximal_power())
        .product(&symbolic_m.power(q.l))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    /// `(h-1) μ̂_c >= c` for all `c0 <= c <= h`.
    pub first: bool,
    /// `(ℓ(h+m-1)-h+k) μ̂_c - c(ℓ-1) >= ℓ m μ̂_c` for all `c0 <= c <= h`.
    pub second: bool,
    /// `c0 = h`: the inequalities are not needed and reported as true.
    pub vacuous: bool,
}

impl LemmaCheck {
    pub fn holds(&self) -> bool {
        self.first && self.second
    }
}

pub fn lemma_inequalities(params: &FoldParams, k: u32, l: u32, m: u32) -> Result<LemmaCheck> {
    let q = ContainmentQuery::new(*params, k, l, m)?;
    if params.c0 == params.h {
        return Ok(LemmaCheck {
            first: true,
            second: true,
            vacuous: true,
        });
    }
    let lhs = q.lhs_order() as i64;
    let (h, l, m) = (params.h as i64, l as i64, m as i64);
    let mut check = LemmaCheck {
        first: true,
        second: true,
        vacuous: false,
    };
    for (c, mu) in params.mu_hats() {
        let (c, mu) = (c as i64, mu as i64);
        check.first &= (h - 1) * mu >= c;
        check.second &= lhs * mu - c * (l - 1) >= l * m * mu;
    }
    Ok(check)
}

/// `α(I^{(n)})`: the least `|λ|` over ascending `λ` with
/// `|λ_{≤c}| >= n μ̂_c` for `c0 <= c <= h`, by branch and bound with entries
/// at most `n μ̂_h`.
pub fn alpha_symbolic(params: &FoldParams, n: u32) -> u32 {
    let h = params.h as usize;
    let s = params.s as usize;
    let mut need = vec![0u64; h + 1];
    for (c, mu) in params.mu_hats() {
        need[c as usize] = n as u64 * mu as u64;
    }
    let cap = need[h] as u32;
    // λ_j = ... = λ_s = λ_h past position h, so the total is
    // prefix_h + (s - h) λ_h.
    let mut best = u64::MAX;
    alpha_search(&need, s, cap, 0, 0, 0, &mut best);
    best as u32
}

fn alpha_search(need: &[u64], s: usize, cap: u32, j: usize, prev: u32, prefix: u64, best: &mut u64) {
    let h = need.len() - 1;
    if j == h {
        let total = prefix + (s - h) as u64 * prev as u64;
        *best = (*best).min(total);
        return;
    }
    for x in prev..=cap {
        // Every later entry is at least x.
        if prefix + (s - j) as u64 * x as u64 >= *best {
            break;
        }
        let p = prefix + x as u64;
        if p < need[j + 1] {
            continue;
        }
        alpha_search(need, s, cap, j + 1, x, p, best);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DemaillyCheck {
    pub holds: bool,
    /// `α(I^{(ℓ)}) / ℓ`
    pub lhs: Rational,
    /// `(α(I^{(m)}) + h - 1) / (m + h - 1)`
    pub rhs: Rational,
}

pub fn demailly_check(params: &FoldParams, l: u32, m: u32) -> Result<DemaillyCheck> {
    if l == 0 || m == 0 {
        return Err(Error::Unsupported("Demailly bound needs l, m >= 1".into()));
    }
    let lhs = Rational::new(alpha_symbolic(params, l) as u64, l as u64);
    let rhs = Rational::new(
        (alpha_symbolic(params, m) + params.h - 1) as u64,
        (m + params.h - 1) as u64,
    );
    Ok(DemaillyCheck {
        holds: lhs >= rhs,
        lhs,
        rhs,
    })
}

/// `α(I^{(n)})` for `n = 1..=n_max` and the resulting bracket around the
/// Waldschmidt constant `α̂(I) = inf_n α(I^{(n)})/n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaProfile {
    pub params: FoldParams,
    pub alphas: Vec<u32>,
    pub ratios: Vec<Rational>,
    /// `max_m (α(I^{(m)}) + h - 1)/(m + h - 1)`
    pub demailly_lower: Rational,
    /// `min_n α(I^{(n)})/n`
    pub upper: Rational,
}

impl AlphaProfile {
    pub fn bracket_nonempty(&self) -> bool {
        self.demailly_lower <= self.upper
    }

    pub fn render(&self) -> String {
        let mut out = String::from("n  alpha  alpha/n\n");
        for (i, (a, r)) in self.alphas.iter().zip(&self.ratios).enumerate() {
            let _ = writeln!(out, "{:<2} {:<6} {}", i + 1, a, r);
        }
        let _ = writeln!(out, "waldschmidt in [{}, {}]", self.demailly_lower, self.upper);
        out
    }
}

pub fn waldschmidt_profile(params: &FoldParams, n_max: u32) -> Result<AlphaProfile> {
    if n_max == 0 {
        return Err(Error::Unsupported("n_max must be positive".into()));
    }
    let alphas: Vec<u32> = (1..=n_max).map(|n| alpha_symbolic(params, n)).collect();
    let ratios: Vec<Rational> = alphas
        .iter()
        .zip(1u64..)
        .map(|(&a, n)| Rational::new(a as u64, n))
        .collect();
    let demailly_lower = alphas
        .iter()
        .zip(1u32..)
        .map(|(&a, m)| Rational::new((a + params.h - 1) as u64, (m + params.h - 1) as u64))
        .max()
        .expect("n_max >= 1");
    let upper = *ratios.iter().min().expect("n_max >= 1");
    Ok(AlphaProfile {
        params: *params,
        alphas,
        ratios,
        demailly_lower,
        upper,
    })
}

/// One grid point of a containment sweep.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub s: u32,
    pub b: u32,
    pub a: u32,
    pub h: u32,
    pub c0: u32,
    pub k: u32,
    pub l: u32,
    pub m: u32,
    pub lhs_order: u32,
    pub mm_power: u32,
    pub holds: bool,
    pub alpha_lhs: u32,
    pub lemmas_hold: bool,
    pub runtime_ms: Option<f64>,
}

impl SweepRow {
    pub const CSV_HEADER: &'static str =
        "s,b,a,h,c0,k,l,m,lhs_order,mm_power,holds,alpha_lhs,runtime_ms";

    /// The runtime column stays empty unless `timings` is set, so that data
    /// output is reproducible byte for byte.
    pub fn csv_line(&self, timings: bool) -> String {
        let runtime = match (timings, self.runtime_ms) {
            (true, Some(ms)) => format!("{ms:.3}"),
            _ => String::new(),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.s,
            self.b,
            self.a,
            self.h,
            self.c0,
            self.k,
            self.l,
            self.m,
            self.lhs_order,
            self.mm_power,
            self.holds,
            self.alpha_lhs,
            runtime
        )
    }
}

/// Grid of a containment sweep. Only parameters with `c0 < h` are visited;
/// `k` runs over `1..=h`.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub s: Vec<u32>,
    pub b: Vec<u32>,
    pub l: Vec<u32>,
    pub m: Vec<u32>,
}

impl SweepSpec {
    pub fn params(&self) -> Vec<FoldParams> {
        let mut out = Vec::new();
        for &s in &self.s {
            for &b in &self.b {
                if s == 0 || b == 0 {
                    continue;
                }
                for a in (b - 1) * s + 2..=b * s {
                    if let Ok(p) = FoldParams::new(s, b, a) {
                        if p.c0 < p.h {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn queries(&self) -> Vec<ContainmentQuery> {
        let mut out = Vec::new();
        for p in self.params() {
            for k in 1..=p.h {
                for &l in &self.l {
                    for &m in &self.m {
                        if let Ok(q) = ContainmentQuery::new(p, k, l, m) {
                            out.push(q);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Runs every query in parallel; rows come back in grid order.
pub fn containment_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.queries()
        .par_iter()
        .map(|q| {
            let start = Instant::now();
            let res = hh_containment_check(q)?;
            let lemmas = lemma_inequalities(&q.params, q.k, q.l, q.m)?;
            let p = &q.params;
            Ok(SweepRow {
                s: p.s,
                b: p.b,
                a: p.a,
                h: p.h,
                c0: p.c0,
                k: q.k,
                l: q.l,
                m: q.m,
                lhs_order: q.lhs_order(),
                mm_power: q.maximal_power(),
                holds: res.holds,
                alpha_lhs: res.alpha_lhs,
                lemmas_hold: lemmas.holds(),
                runtime_ms: Some(start.elapsed().as_secs_f64() * 1e3),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::star_config::fold_symbolic;

    fn example() -> FoldParams {
        FoldParams::new(4, 2, 6).unwrap()
    }

    #[test]
    fn query_arithmetic() {
        let q = ContainmentQuery::new(example(), 3, 2, 1).unwrap();
        assert_eq!((q.lhs_order(), q.maximal_power()), (6, 16));
        let trivial = ContainmentQuery::new(example(), 1, 1, 4).unwrap();
        assert_eq!((trivial.lhs_order(), trivial.maximal_power()), (4, 0));
    }

    #[test]
    fn example_containment() {
        let q = ContainmentQuery::new(example(), 3, 2, 1).unwrap();
        let r = hh_containment_check(&q).unwrap();
        assert!(r.holds);
        assert_eq!(r.alpha_lhs, 32);
    }

    #[test]
    fn orbit_check_matches_explicit_rhs() {
        let p = example();
        for (k, l, m) in [(1, 2, 1), (2, 2, 1), (3, 2, 1), (1, 1, 2), (2, 1, 2)] {
            let q = ContainmentQuery::new(p, k, l, m).unwrap();
            let rhs = rhs_ideal(&q, &fold_symbolic(&p, m).unwrap()).unwrap();
            let lhs = fold_symbolic(&p, q.lhs_order()).unwrap();
            assert_eq!(rhs.contains_ideal(&lhs), hh_containment_check(&q).unwrap().holds);
            // A right side one degree too strong must fail somewhere.
            let strong = ContainmentQuery { k: k + 1, ..q };
            let rhs_strong = MonomialIdeal::maximal(p.ring())
                .power(strong.maximal_power())
                .product(&fold_symbolic(&p, m).unwrap().power(l))
                .unwrap();
            let factors = RhsFactors::new(&p, m, l, strong.maximal_power());
            for g in lhs.generators() {
                assert_eq!(rhs_strong.contains(g), factors.contains(g.exponents()));
            }
        }
    }

    #[test]
    fn lemmas() {
        let c = lemma_inequalities(&example(), 1, 2, 1).unwrap();
        assert!(c.holds() && !c.vacuous);
        let v = lemma_inequalities(&FoldParams::new(4, 2, 8).unwrap(), 1, 1, 1).unwrap();
        assert!(v.vacuous);
    }

    #[test]
    fn alpha_values() {
        let p = example();
        assert_eq!(alpha_symbolic(&p, 1), 6);
        assert_eq!(alpha_symbolic(&p, 2), 11);
        assert_eq!(alpha_symbolic(&p, 3), 16);
        assert_eq!(alpha_symbolic(&p, 6), 32);
        for n in 1..=3 {
            assert_eq!(alpha_symbolic(&p, n), fold_symbolic(&p, n).unwrap().alpha().unwrap());
        }
    }

    #[test]
    fn demailly_and_profile() {
        let p = example();
        let d = demailly_check(&p, 6, 1).unwrap();
        assert!(d.holds);
        assert_eq!((d.lhs, d.rhs), (Rational::new(32, 6), Rational::new(8, 3)));
        let prof = waldschmidt_profile(&p, 6).unwrap();
        assert!(prof.bracket_nonempty());
        assert!(prof.upper <= Rational::new(32, 6));
        assert!(prof.demailly_lower >= Rational::new(8, 3));
    }

    #[test]
    fn csv_is_reproducible() {
        let spec = SweepSpec {
            s: vec![4],
            b: vec![2],
            l: vec![1, 2],
            m: vec![1],
        };
        let rows = containment_sweep(&spec).unwrap();
        assert!(rows.iter().all(|r| r.holds && r.lemmas_hold));
        assert_eq!(rows[0].csv_line(false), "4,2,6,3,2,1,1,1,1,0,true,6,");
    }
}
