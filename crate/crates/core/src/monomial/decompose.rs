use std::collections::HashMap;
use std::fmt;

use super::ideal::MonomialIdeal;
use super::mono::Monomial;
use super::ring::RingDescriptor;
use crate::error::{Error, Result};

/// The irreducible ideal `<z_v^{e_v} : v>`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    ring: RingDescriptor,
    /// `(flat variable index, exponent)`, sorted by index, exponents positive.
    entries: Vec<(usize, u32)>,
}

impl IrreducibleComponent {
    pub fn new(ring: RingDescriptor, mut entries: Vec<(usize, u32)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Parse("irreducible component must be nonempty".into()));
        }
        entries.sort_unstable();
        entries.dedup_by_key(|e| e.0);
        if entries.iter().any(|&(v, e)| e == 0 || v >= ring.num_vars()) {
            return Err(Error::Parse(format!("bad component entries {entries:?}")));
        }
        Ok(Self { ring, entries })
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn entries(&self) -> &[(usize, u32)] {
        &self.entries
    }

    /// Support size, i.e. the height of the associated prime.
    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    pub fn support(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.0).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.entries.iter().all(|e| e.1 == 1)
    }

    /// `self ⊆ other` as ideals.
    pub fn is_contained_in(&self, other: &IrreducibleComponent) -> bool {
        self.entries.iter().all(|&(v, e)| {
            other
                .entries
                .binary_search_by_key(&v, |x| x.0)
                .is_ok_and(|k| other.entries[k].1 <= e)
        })
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = self
            .entries
            .iter()
            .map(|&(v, e)| {
                let mut exps = vec![0; self.ring.num_vars()];
                exps[v] = e;
                Monomial::from_exponents(self.ring, &exps).expect("sized to ring")
            })
            .collect();
        MonomialIdeal::new(self.ring, gens).expect("same ring")
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_ideal(), f)
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Irredundant irreducible decomposition by the splitting algorithm:
/// a generator `z_v^e * w` with `w != 1` gives `I = (I + z_v^e) ∩ (I + w)`.
/// Results are memoized on the canonical generator list.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::DegenerateIdeal {
            op: "irreducible_decomposition",
        });
    }
    let mut memo = HashMap::new();
    let mut comps = split(ideal, &mut memo);
    comps.sort();
    Ok(comps)
}

type Memo = HashMap<Vec<Monomial>, Vec<IrreducibleComponent>>;

fn split(ideal: &MonomialIdeal, memo: &mut Memo) -> Vec<IrreducibleComponent> {
    if let Some(hit) = memo.get(ideal.generators()) {
        return hit.clone();
    }
    let ring = ideal.ring();
    let pivot = ideal
        .generators()
        .iter()
        .filter(|g| g.support().nth(1).is_some())
        .min_by_key(|g| (g.support().count(), g.degree()));
    let result = match pivot {
        None => {
            let entries = ideal
                .generators()
                .iter()
                .map(|g| {
                    let v = g.support().next().expect("proper ideal");
                    (v, g.exponent(v))
                })
                .collect();
            vec![IrreducibleComponent::new(ring, entries).expect("pure powers")]
        }
        Some(g) => {
            // Split off the variable with the largest exponent.
            let v = g
                .support()
                .max_by_key(|&v| (g.exponent(v), std::cmp::Reverse(v)))
                .expect("support of size >= 2");
            let mut exps = vec![0; ring.num_vars()];
            exps[v] = g.exponent(v);
            let pure = Monomial::from_exponents(ring, &exps).expect("sized to ring");
            let rest = g.erase(&[v]);
            let left = with_generator(ideal, pure);
            let right = with_generator(ideal, rest);
            let mut comps = split(&left, memo);
            comps.extend(split(&right, memo));
            prune_redundant(comps)
        }
    };
    memo.insert(ideal.generators().to_vec(), result.clone());
    result
}

fn with_generator(ideal: &MonomialIdeal, g: Monomial) -> MonomialIdeal {
    let mut gens = ideal.generators().to_vec();
    gens.push(g);
    MonomialIdeal::new(ideal.ring(), gens).expect("same ring")
}

/// Drops every component that contains another one.
fn prune_redundant(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(i, c)| {
            !comps
                .iter()
                .enumerate()
                .any(|(j, d)| i != j && d.is_contained_in(c))
        })
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// Associated primes, as sorted sets of flat variable indices.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    let mut primes: Vec<Vec<usize>> = irreducible_decomposition(ideal)?
        .iter()
        .map(IrreducibleComponent::support)
        .collect();
    primes.sort();
    primes.dedup();
    Ok(primes)
}

/// Minimum height of an associated prime.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    let h = irreducible_decomposition(ideal)?
        .iter()
        .map(IrreducibleComponent::support_size)
        .min()
        .expect("nonempty decomposition");
    Ok(h)
}

/// Maximum height of an associated prime.
pub fn big_height(ideal: &MonomialIdeal) -> Result<usize> {
    let h = irreducible_decomposition(ideal)?
        .iter()
        .map(IrreducibleComponent::support_size)
        .max()
        .expect("nonempty decomposition");
    Ok(h)
}
