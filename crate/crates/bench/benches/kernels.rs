use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use starconfig_core::betti::{betti_closed, betti_homology_oracle};
use starconfig_core::containment::{hh_containment_check, ContainmentQuery};
use starconfig_core::monomial::{alexander_dual, polarize};
use starconfig_core::sss::verify_linear_quotients;
use starconfig_core::star_config::{fold_ideal, fold_symbolic, minimal_partitions, pol_dual_sss, symbolic_oracle};
use starconfig_core::FoldParams;

fn example() -> FoldParams {
    FoldParams::new(4, 2, 6).unwrap()
}

fn ideal_kernels(c: &mut Criterion) {
    let p = example();
    let sym = fold_symbolic(&p, 2).unwrap();
    let pol = polarize(&sym).unwrap();
    c.bench_function("fold_symbolic (4,2,6) m=2", |b| b.iter(|| fold_symbolic(black_box(&p), 2).unwrap()));
    c.bench_function("symbolic_oracle (4,2,6) m=2", |b| {
        let i = fold_ideal(&p);
        b.iter(|| symbolic_oracle(black_box(&i), 2).unwrap())
    });
    c.bench_function("alexander_dual Pol(I^(2))", |b| b.iter(|| alexander_dual(black_box(&pol)).unwrap()));
}

fn sss_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("linear_quotients");
    for m in 1..=3 {
        let j = pol_dual_sss(&example(), m).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(m), &j, |b, j| {
            b.iter(|| verify_linear_quotients(j).unwrap())
        });
    }
    group.finish();

    let j = pol_dual_sss(&example(), 1).unwrap();
    c.bench_function("betti_closed example", |b| b.iter(|| betti_closed(black_box(&j)).unwrap()));
    let ideal = j.to_ideal();
    c.bench_function("betti_homology example", |b| {
        b.iter(|| betti_homology_oracle(black_box(&ideal), 2).unwrap())
    });
}

fn containment_kernels(c: &mut Criterion) {
    let p = FoldParams::new(5, 3, 12).unwrap();
    c.bench_function("minimal_partitions (5,3,12) n=18", |b| {
        let cons = p.symbolic_constraints(18);
        b.iter(|| minimal_partitions(5, black_box(&cons)))
    });
    let q = ContainmentQuery::new(p, p.h, 3, 3).unwrap();
    c.bench_function("containment (5,3,12) k=h l=3 m=3", |b| {
        b.iter(|| hh_containment_check(black_box(&q)).unwrap())
    });
}

criterion_group!(benches, ideal_kernels, sss_kernels, containment_kernels);
criterion_main!(benches);
