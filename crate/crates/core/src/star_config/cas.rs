use std::fmt::Write as _;

use crate::monomial::{Monomial, MonomialIdeal, RingKind};

/// A Macaulay2 input snippet declaring the ring and the ideal, followed by a
/// resolution so Betti tables can be compared by hand.
pub fn macaulay2_snippet(ideal: &MonomialIdeal) -> String {
    let ring = ideal.ring();
    let mut out = String::new();
    match ring.kind() {
        RingKind::Plain => {
            let _ = writeln!(out, "R = QQ[z_1..z_{}];", ring.s());
        }
        RingKind::Grid => {
            let _ = writeln!(out, "R = QQ[z_(1,1)..z_({},{})];", ring.s(), ring.levels());
        }
    }
    let gens: Vec<String> = ideal.generators().iter().map(m2_monomial).collect();
    let _ = writeln!(out, "I = monomialIdeal({});", gens.join(", "));
    out.push_str("numgens I\n");
    out.push_str("betti res I\n");
    out
}

fn m2_monomial(m: &Monomial) -> String {
    if m.is_one() {
        return "1_R".into();
    }
    let grid = m.ring().kind() == RingKind::Grid;
    m.support_vars()
        .map(|(v, e)| {
            let name = if grid {
                format!("z_({},{})", v.row, v.level)
            } else {
                format!("z_{}", v.row)
            };
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::RingDescriptor;

    #[test]
    fn plain_and_grid() {
        let r = RingDescriptor::plain(2).unwrap();
        let i = MonomialIdeal::new(r, vec![Monomial::plain(&[2, 1]).unwrap()]).unwrap();
        assert_eq!(
            macaulay2_snippet(&i),
            "R = QQ[z_1..z_2];\nI = monomialIdeal(z_1^2*z_2);\nnumgens I\nbetti res I\n"
        );
        let g = RingDescriptor::grid(2, 2).unwrap();
        let j = MonomialIdeal::new(g, vec![Monomial::from_terms(g, &[(1, 1, 1), (2, 2, 1)]).unwrap()]).unwrap();
        assert!(macaulay2_snippet(&j).contains("monomialIdeal(z_(1,1)*z_(2,2))"));
    }
}
