use std::cmp::Ordering;

use proptest::prelude::*;
use starconfig_core::betti::{betti_closed, betti_mapping_cone, table_stats};
use starconfig_core::sss::{
    compare_partitions, is_sss, orbit_size, shift_closure_member, verify_linear_quotients,
};
use starconfig_core::{Partition, SparseMonomial, SssIdeal};

/// SSS ideals with `s <= 5` and up to three levels, closed under shifts.
fn sss_ideal() -> impl Strategy<Value = SssIdeal> {
    (2usize..=5, 1u32..=3).prop_flat_map(|(s, levels)| {
        prop::collection::vec(prop::collection::vec(0..=levels, s), 1..=3)
            .prop_filter("nonzero seeds", |seeds| seeds.iter().all(|p| p.iter().any(|&x| x > 0)))
            .prop_map(move |seeds| {
                let parts = seeds.iter().map(|p| Partition::from_levels(p));
                SssIdeal::generated_by(s, levels as usize, parts).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_is_sss(j in sss_ideal()) {
        let check = is_sss(&j.to_ideal()).unwrap();
        prop_assert!(check.holds(), "{:?}", check.witness);
    }

    #[test]
    fn linear_quotients_hold(j in sss_ideal()) {
        let cert = verify_linear_quotients(&j).unwrap();
        prop_assert!(cert.holds());
        prop_assert_eq!(cert.rows.len(), j.num_generators());
    }

    #[test]
    fn betti_methods_agree(j in sss_ideal()) {
        let closed = betti_closed(&j).unwrap();
        prop_assert_eq!(&closed, &betti_mapping_cone(&j).unwrap());
        let beta0: u128 = closed.totals()[0];
        prop_assert_eq!(beta0, j.num_generators() as u128);
        let orbits: u64 = j.lambdas().iter().map(orbit_size).sum();
        prop_assert_eq!(orbits as u128, beta0);
        // Componentwise linear: regularity is the top generator degree.
        let top = j.lambdas().iter().map(|l| l.suppdeg()).max().unwrap();
        prop_assert_eq!(table_stats(&closed).unwrap().regularity, top);
    }

    #[test]
    fn closure_membership_matches_ideal(j in sss_ideal(), levels in prop::collection::vec(0u32..=3, 5)) {
        let s = j.s();
        let levels: Vec<u32> = levels[..s].iter().map(|&l| l.min(j.levels() as u32)).collect();
        let f = SparseMonomial::new(levels).to_monomial(j.ring()).unwrap();
        prop_assert_eq!(shift_closure_member(&j, &f).unwrap(), j.to_ideal().contains(&f));
    }

    #[test]
    fn partition_order_is_total(a in prop::collection::vec(0u32..4, 4), b in prop::collection::vec(0u32..4, 4), c in prop::collection::vec(0u32..4, 4)) {
        let ab = compare_partitions(&a, &b).unwrap();
        prop_assert_eq!(ab.reverse(), compare_partitions(&b, &a).unwrap());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        let bc = compare_partitions(&b, &c).unwrap();
        if ab != Ordering::Greater && bc != Ordering::Greater {
            prop_assert_ne!(compare_partitions(&a, &c).unwrap(), Ordering::Greater);
        }
    }
}

#[test]
fn raw_partitions_need_not_be_shift_closed() {
    let raw = SssIdeal::from_partitions(4, 2, [Partition::new(vec![0, 0, 2, 2]).unwrap()]).unwrap();
    assert_eq!(raw.num_generators(), 6);
    assert!(!is_sss(&raw.to_ideal()).unwrap().holds());
}

#[test]
fn mismatched_lengths_are_rejected() {
    assert!(compare_partitions(&[0, 1], &[0, 0, 1]).is_err());
}
