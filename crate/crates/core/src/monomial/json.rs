//! JSON form of a monomial ideal:
//!
//! ```json
//! {"ring": {"kind": "grid", "s": 4, "levels": 2},
//!  "generators": [[[[1, 1], 1], [[2, 1], 1]], ...]}
//! ```
//!
//! Each generator is a list of `[[row, level?], exponent]` pairs (1-based,
//! `level` omitted for plain rings), generators in canonical order.

use serde::{Deserialize, Serialize};

use super::ideal::MonomialIdeal;
use super::mono::Monomial;
use super::ring::{RingDescriptor, RingKind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingJson {
    pub kind: RingKind,
    pub s: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<usize>,
}

pub type TermJson = (Vec<usize>, u32);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub ring: RingJson,
    pub generators: Vec<Vec<TermJson>>,
}

impl From<RingDescriptor> for RingJson {
    fn from(r: RingDescriptor) -> Self {
        Self {
            kind: r.kind(),
            s: r.s(),
            levels: r.is_grid().then_some(r.levels()),
        }
    }
}

impl TryFrom<&RingJson> for RingDescriptor {
    type Error = Error;

    fn try_from(r: &RingJson) -> Result<Self> {
        match (r.kind, r.levels) {
            (RingKind::Plain, None) => RingDescriptor::plain(r.s),
            (RingKind::Grid, Some(b)) => RingDescriptor::grid(r.s, b),
            (RingKind::Plain, Some(_)) => Err(Error::Parse("plain ring with levels".into())),
            (RingKind::Grid, None) => Err(Error::Parse("grid ring without levels".into())),
        }
    }
}

fn monomial_to_json(m: &Monomial) -> Vec<TermJson> {
    let grid = m.ring().is_grid();
    m.support_vars()
        .map(|(v, e)| {
            let idx = if grid { vec![v.row, v.level] } else { vec![v.row] };
            (idx, e)
        })
        .collect()
}

fn monomial_from_json(ring: RingDescriptor, terms: &[TermJson]) -> Result<Monomial> {
    let mut exps = vec![0u32; ring.num_vars()];
    for (idx, e) in terms {
        let (row, level) = match (ring.is_grid(), idx.as_slice()) {
            (true, &[row, level]) => (row, level),
            (false, &[row]) => (row, 1),
            _ => return Err(Error::Parse(format!("bad variable index {idx:?}"))),
        };
        if *e == 0 {
            return Err(Error::Parse(format!("zero exponent stored for {idx:?}")));
        }
        exps[ring.index(row, level)?] += e;
    }
    Monomial::from_exponents(ring, &exps)
}

impl MonomialIdeal {
    pub fn to_json_value(&self) -> IdealJson {
        IdealJson {
            ring: self.ring().into(),
            generators: self.generators().iter().map(monomial_to_json).collect(),
        }
    }

    pub fn from_json_value(value: &IdealJson) -> Result<Self> {
        let ring = RingDescriptor::try_from(&value.ring)?;
        let gens = value
            .generators
            .iter()
            .map(|g| monomial_from_json(ring, g))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(ring, gens)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: IdealJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_layout() {
        let r = RingDescriptor::plain(2).unwrap();
        let i = MonomialIdeal::new(
            r,
            vec![
                Monomial::plain(&[0, 2]).unwrap(),
                Monomial::plain(&[2, 1]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(
            i.to_json(),
            r#"{"ring":{"kind":"plain","s":2},"generators":[[[[2],2]],[[[1],2],[[2],1]]]}"#
        );
        assert_eq!(MonomialIdeal::from_json(&i.to_json()).unwrap(), i);
    }

    #[test]
    fn grid_layout() {
        let r = RingDescriptor::grid(2, 2).unwrap();
        let m = Monomial::from_terms(r, &[(1, 1, 1), (2, 2, 1)]).unwrap();
        let i = MonomialIdeal::new(r, vec![m]).unwrap();
        assert_eq!(
            i.to_json(),
            r#"{"ring":{"kind":"grid","s":2,"levels":2},"generators":[[[[1,1],1],[[2,2],1]]]}"#
        );
    }

    #[test]
    fn rejects_malformed() {
        assert!(MonomialIdeal::from_json(r#"{"ring":{"kind":"grid","s":2},"generators":[]}"#).is_err());
        assert!(MonomialIdeal::from_json(
            r#"{"ring":{"kind":"plain","s":2},"generators":[[[[3],1]]]}"#
        )
        .is_err());
        assert!(MonomialIdeal::from_json(
            r#"{"ring":{"kind":"plain","s":2},"generators":[[[[1,1],1]]]}"#
        )
        .is_err());
    }
}
