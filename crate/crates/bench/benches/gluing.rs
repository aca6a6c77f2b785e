use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use semiglue::constructions::embed_and_glue;
use semiglue::gluing::{
    gluable_lattice_point, implication_chain_audit, verify_gluing, AuditOptions,
};
use semiglue::toric::toric_ideal;
use semiglue::GluingCandidate;
use semiglue_bench::{plane_curve, rational_normal_curve, twisted_pair};

fn toric(c: &mut Criterion) {
    let mut group = c.benchmark_group("toric_ideal");
    for d in [3, 4, 5, 6] {
        let a = rational_normal_curve(d);
        group.bench_with_input(BenchmarkId::new("rational_normal_curve", d), &a, |b, a| {
            b.iter(|| toric_ideal(black_box(a)).unwrap())
        });
    }
    group.finish();
}

fn gluing(c: &mut Criterion) {
    let (a, b) = twisted_pair();
    c.bench_function("lattice_point/twisted_pair", |bench| {
        bench.iter(|| gluable_lattice_point(black_box(&a), black_box(&b)).unwrap())
    });
    let cand = GluingCandidate::new(a.clone(), b.clone(), 1, 1).unwrap();
    c.bench_function("verify_gluing/twisted_pair", |bench| {
        bench.iter(|| verify_gluing(black_box(&cand)).unwrap())
    });
    let opts = AuditOptions::default();
    c.bench_function("audit/twisted_pair", |bench| {
        bench.iter(|| implication_chain_audit(black_box(&a), black_box(&b), &opts).unwrap())
    });
    let (p, q) = (plane_curve(&[1, 2], 5), plane_curve(&[1, 2], 3));
    c.bench_function("embed_and_glue/steps_12", |bench| {
        bench.iter(|| {
            let e = embed_and_glue(black_box(&p), black_box(&q), 1).unwrap();
            verify_gluing(&e.candidate).unwrap()
        })
    });
}

criterion_group!(benches, toric, gluing);
criterion_main!(benches);
