use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::ring::{RingDescriptor, Var};
use crate::error::{Error, Result};

pub(crate) type Exps = SmallVec<[u32; 8]>;

/// A monomial `z^e` over a fixed ring, stored as a dense exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    ring: RingDescriptor,
    exps: Exps,
    degree: u32,
}

impl Monomial {
    pub fn one(ring: RingDescriptor) -> Self {
        Self {
            ring,
            exps: smallvec::smallvec![0; ring.num_vars()],
            degree: 0,
        }
    }

    pub fn from_exponents(ring: RingDescriptor, exps: &[u32]) -> Result<Self> {
        if exps.len() != ring.num_vars() {
            return Err(Error::LengthMismatch(exps.len(), ring.num_vars()));
        }
        Ok(Self::from_exps(ring, exps.iter().copied().collect()))
    }

    pub(crate) fn from_exps(ring: RingDescriptor, exps: Exps) -> Self {
        debug_assert_eq!(exps.len(), ring.num_vars());
        let degree = exps.iter().sum();
        Self { ring, exps, degree }
    }

    pub fn var(ring: RingDescriptor, row: usize, level: usize) -> Result<Self> {
        let mut m = Self::one(ring);
        m.exps[ring.index(row, level)?] = 1;
        m.degree = 1;
        Ok(m)
    }

    /// Builds `prod z_{row,level}^e` from `(row, level, e)` triples.
    pub fn from_terms(ring: RingDescriptor, terms: &[(usize, usize, u32)]) -> Result<Self> {
        let mut exps: Exps = smallvec::smallvec![0; ring.num_vars()];
        for &(row, level, e) in terms {
            exps[ring.index(row, level)?] += e;
        }
        Ok(Self::from_exps(ring, exps))
    }

    /// `z_1^{e_1} ... z_s^{e_s}` in a plain ring.
    pub fn plain(exps: &[u32]) -> Result<Self> {
        Self::from_exponents(RingDescriptor::plain(exps.len())?, exps)
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Flat indices of the variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn support_vars(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.support().map(move |i| (self.ring.var(i), self.exps[i]))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        debug_assert_eq!(self.ring, other.ring);
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Monomial::from_exps(self.ring, exps)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::min)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a + b)
    }

    /// `self / gcd(self, other)`: the generator of `<self> : other`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    /// Exact division, `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(self.quotient_by_gcd(other))
        } else {
            None
        }
    }

    /// Sets the exponents at `indices` to zero.
    pub fn erase(&self, indices: &[usize]) -> Monomial {
        let mut exps = self.exps.clone();
        for &i in indices {
            exps[i] = 0;
        }
        Monomial::from_exps(self.ring, exps)
    }

    /// Re-embeds a grid monomial into a grid ring with at least as many
    /// levels and the same number of rows.
    pub fn embed(&self, target: RingDescriptor) -> Result<Monomial> {
        if target == self.ring {
            return Ok(self.clone());
        }
        if target.kind() != self.ring.kind()
            || target.s() != self.ring.s()
            || target.levels() < self.ring.levels()
        {
            return Err(Error::RingMismatch(self.ring, target));
        }
        let mut exps: Exps = smallvec::smallvec![0; target.num_vars()];
        for i in self.support() {
            let v = self.ring.var(i);
            exps[target.index(v.row, v.level)?] = self.exps[i];
        }
        Ok(Monomial::from_exps(target, exps))
    }

    /// Largest level carrying a nonzero exponent (0 for the unit monomial).
    pub fn max_level(&self) -> usize {
        self.support().map(|i| self.ring.var(i).level).max().unwrap_or(0)
    }

    /// 64-bit support signature; `a | b` implies `sig(a) & !sig(b) == 0`.
    pub(crate) fn signature(&self) -> u64 {
        self.support().fold(0u64, |acc, i| acc | 1 << (i % 64))
    }
}

/// Canonical storage order: ascending total degree, then descending
/// lexicographic order of the flattened exponent vector.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
            .then_with(|| self.ring.cmp(&other.ring))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (v, e) in self.support_vars() {
            write!(f, "{}", self.ring.var_display(v))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
