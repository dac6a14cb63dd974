use std::fmt;

use rayon::prelude::*;

use super::mono::Monomial;
use super::ring::RingDescriptor;
use crate::error::{Error, Result};

/// Below this many candidates the minimalization runs sequentially.
const PAR_THRESHOLD: usize = 4096;

/// A monomial ideal given by its minimal generators in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: RingDescriptor,
    gens: Vec<Monomial>,
}

/// Reduces `gens` to the divisibility antichain generating the same ideal,
/// in canonical order.
pub fn minimalize(ring: RingDescriptor, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    if let Some(g) = gens.iter().find(|g| g.ring() != ring) {
        return Err(Error::RingMismatch(ring, g.ring()));
    }
    Ok(MonomialIdeal {
        ring,
        gens: minimal_antichain(gens),
    })
}

/// Candidates are bucketed by degree. A candidate can only be divided by a
/// distinct monomial of strictly smaller degree, so each bucket is filtered
/// against the generators kept from earlier buckets.
fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    if gens.first().is_some_and(Monomial::is_one) {
        gens.truncate(1);
        return gens;
    }
    let mut kept: Vec<Monomial> = Vec::new();
    let mut kept_sigs: Vec<u64> = Vec::new();
    let mut rest = gens.as_slice();
    while let Some(first) = rest.first() {
        let deg = first.degree();
        let end = rest.iter().position(|g| g.degree() != deg).unwrap_or(rest.len());
        let (layer, tail) = rest.split_at(end);
        rest = tail;
        let survives = |g: &Monomial| {
            let sig = g.signature();
            !kept
                .iter()
                .zip(&kept_sigs)
                .any(|(k, &ks)| ks & !sig == 0 && k.divides(g))
        };
        let new: Vec<Monomial> = if layer.len() * kept.len().max(1) > PAR_THRESHOLD {
            layer.par_iter().filter(|g| survives(g)).cloned().collect()
        } else {
            layer.iter().filter(|g| survives(g)).cloned().collect()
        };
        kept_sigs.extend(new.iter().map(Monomial::signature));
        kept.extend(new);
    }
    kept
}

fn check_ring(a: RingDescriptor, b: RingDescriptor) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch(a, b))
    }
}

impl MonomialIdeal {
    pub fn new(ring: RingDescriptor, gens: Vec<Monomial>) -> Result<Self> {
        minimalize(ring, gens)
    }

    pub fn zero(ring: RingDescriptor) -> Self {
        Self {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: RingDescriptor) -> Self {
        Self {
            ring,
            gens: vec![Monomial::one(ring)],
        }
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: RingDescriptor) -> Self {
        let gens = (0..ring.num_vars())
            .map(|i| {
                let v = ring.var(i);
                Monomial::var(ring, v.row, v.level).expect("index in range")
            })
            .collect();
        Self {
            ring,
            gens: minimal_antichain(gens),
        }
    }

    /// `<z_v : v in vars>` given flat indices.
    pub fn prime(ring: RingDescriptor, vars: &[usize]) -> Self {
        let gens = vars
            .iter()
            .map(|&i| {
                let v = ring.var(i);
                Monomial::var(ring, v.row, v.level).expect("index in range")
            })
            .collect();
        Self {
            ring,
            gens: minimal_antichain(gens),
        }
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn into_generators(self) -> Vec<Monomial> {
        self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// True iff some generator divides `f`.
    pub fn contains(&self, f: &Monomial) -> bool {
        debug_assert_eq!(f.ring(), self.ring);
        self.gens.iter().any(|g| g.divides(f))
    }

    pub fn membership(&self, f: &Monomial) -> Result<bool> {
        check_ring(self.ring, f.ring())?;
        Ok(self.contains(f))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `I : f`, generated by `g / gcd(f, g)`.
    pub fn colon(&self, f: &Monomial) -> Result<MonomialIdeal> {
        check_ring(self.ring, f.ring())?;
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(f)).collect();
        Ok(MonomialIdeal {
            ring: self.ring,
            gens: minimal_antichain(gens),
        })
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_ring(self.ring, other.ring)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal {
            ring: self.ring,
            gens: minimal_antichain(gens),
        })
    }

    /// `I * J`.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_ring(self.ring, other.ring)?;
        let gens = if self.gens.len() * other.gens.len() > PAR_THRESHOLD {
            self.gens
                .par_iter()
                .flat_map_iter(|g| other.gens.iter().map(move |h| g.mul(h)))
                .collect()
        } else {
            self.gens
                .iter()
                .flat_map(|g| other.gens.iter().map(move |h| g.mul(h)))
                .collect()
        };
        Ok(MonomialIdeal {
            ring: self.ring,
            gens: minimal_antichain(gens),
        })
    }

    /// `I^n`; `n = 0` gives the unit ideal.
    pub fn power(&self, n: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.product(&base).expect("same ring");
            }
            n >>= 1;
            if n > 0 {
                base = base.product(&base).expect("same ring");
            }
        }
        acc
    }

    /// `I ∩ J`, as the sum over `g in G(I)` of `g * (J : g)`.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_ring(self.ring, other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.ring));
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let per_gen = |g: &Monomial| -> Vec<Monomial> {
            if large.contains(g) {
                return vec![g.clone()];
            }
            minimal_antichain(large.gens.iter().map(|h| h.lcm(g)).collect())
        };
        let gens: Vec<Monomial> = if small.len() * large.len() > PAR_THRESHOLD {
            small.gens.par_iter().flat_map_iter(per_gen).collect()
        } else {
            small.gens.iter().flat_map(per_gen).collect()
        };
        Ok(MonomialIdeal {
            ring: self.ring,
            gens: minimal_antichain(gens),
        })
    }

    /// N-ary intersection, folding the smallest ideals first. The empty
    /// intersection is the unit ideal.
    pub fn intersect_all(ring: RingDescriptor, ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
        for i in ideals {
            check_ring(ring, i.ring)?;
        }
        let mut order: Vec<&MonomialIdeal> = ideals.iter().collect();
        order.sort_by_key(|i| i.len());
        let mut acc = MonomialIdeal::unit(ring);
        for i in order {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    /// `I : (prod_{v in vars} z_v)^∞`: erase the exponents on `vars`.
    pub fn saturate(&self, vars: &[usize]) -> Result<MonomialIdeal> {
        if let Some(&v) = vars.iter().find(|&&v| v >= self.ring.num_vars()) {
            let var = self.ring.var(v);
            return Err(Error::VariableOutOfRange {
                ring: self.ring,
                row: var.row,
                level: var.level,
            });
        }
        let gens = self.gens.iter().map(|g| g.erase(vars)).collect();
        Ok(MonomialIdeal {
            ring: self.ring,
            gens: minimal_antichain(gens),
        })
    }

    /// Least generator degree.
    pub fn alpha(&self) -> Result<u32> {
        if !self.is_proper_nonzero() {
            return Err(Error::DegenerateIdeal { op: "alpha" });
        }
        Ok(self.gens[0].degree())
    }

    /// Re-embeds a grid ideal into a grid ring with more levels.
    pub fn embed(&self, target: RingDescriptor) -> Result<MonomialIdeal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal {
            ring: target,
            gens: minimal_antichain(gens),
        })
    }

    /// Largest level used by any generator.
    pub fn max_level(&self) -> usize {
        self.gens.iter().map(Monomial::max_level).max().unwrap_or(0)
    }

    pub fn max_exponent(&self) -> u32 {
        self.gens
            .iter()
            .flat_map(|g| g.exponents().iter().copied())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(s: usize) -> RingDescriptor {
        RingDescriptor::plain(s).unwrap()
    }

    fn ideal(s: usize, gens: &[&[u32]]) -> MonomialIdeal {
        let r = plain(s);
        let gens = gens
            .iter()
            .map(|e| Monomial::from_exponents(r, e).unwrap())
            .collect();
        MonomialIdeal::new(r, gens).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        assert_eq!(ideal(2, &[&[1, 0], &[1, 1]]), ideal(2, &[&[1, 0]]));
        assert!(ideal(2, &[]).is_zero());
        assert!(ideal(2, &[&[0, 0], &[3, 1]]).is_unit());
    }

    #[test]
    fn minimalize_rejects_mixed_rings() {
        let a = Monomial::plain(&[1, 0]).unwrap();
        let b = Monomial::plain(&[1, 0, 0]).unwrap();
        assert!(minimalize(plain(2), vec![a, b]).is_err());
    }

    #[test]
    fn colon_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let z2 = Monomial::plain(&[0, 1, 0]).unwrap();
        assert_eq!(i.colon(&z2).unwrap(), ideal(3, &[&[1, 0, 0], &[0, 0, 1]]));
        assert_eq!(i.colon(&Monomial::one(plain(3))).unwrap(), i);
    }

    #[test]
    fn intersect_examples() {
        let a = ideal(2, &[&[1, 0]]);
        let b = ideal(2, &[&[0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(2, &[&[1, 1]]));
        assert_eq!(a.intersect(&MonomialIdeal::unit(plain(2))).unwrap(), a);
        assert!(a.intersect(&MonomialIdeal::zero(plain(2))).unwrap().is_zero());
    }

    #[test]
    fn powers_and_products() {
        let m = MonomialIdeal::maximal(plain(2));
        assert_eq!(m.power(2), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(m.power(1), m);
        assert!(m.power(0).is_unit());
        assert_eq!(m.product(&MonomialIdeal::unit(plain(2))).unwrap(), m);
    }

    #[test]
    fn membership_examples() {
        let z1 = ideal(2, &[&[1, 0]]);
        assert!(z1.contains(&Monomial::plain(&[1, 1]).unwrap()));
        assert!(!z1.contains(&Monomial::one(plain(2))));
    }

    #[test]
    fn saturation_erases_exponents() {
        let i = ideal(3, &[&[1, 1, 0]]);
        assert_eq!(i.saturate(&[1]).unwrap(), ideal(3, &[&[1, 0, 0]]));
        assert_eq!(i.saturate(&[]).unwrap(), i);
        let j = ideal(3, &[&[2, 0, 1], &[0, 1, 2]]);
        assert_eq!(j.saturate(&[2]).unwrap(), ideal(3, &[&[2, 0, 0], &[0, 1, 0]]));
    }

    #[test]
    fn alpha_is_least_degree() {
        assert_eq!(ideal(3, &[&[1, 1, 0], &[0, 0, 1]]).alpha().unwrap(), 1);
        assert!(MonomialIdeal::unit(plain(2)).alpha().is_err());
    }
}
