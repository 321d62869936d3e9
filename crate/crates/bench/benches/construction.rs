use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use clcc_bench::{pocsets, surface_pairs, tetrahedra_pair};
use clcc_core::homology::betti;
use clcc_core::pocset::sageev;
use clcc_core::{build_clcc, hyperbolicity};

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_clcc");
    for (name, (a, b)) in surface_pairs() {
        group.bench_with_input(BenchmarkId::new("surface", name), &(a, b), |bench, (a, b)| {
            bench.iter(|| build_clcc(black_box(a), black_box(b)).unwrap())
        });
    }
    let (a, b) = tetrahedra_pair();
    group.bench_function("tetrahedra", |bench| bench.iter(|| build_clcc(black_box(&a), black_box(&b)).unwrap()));
    group.finish();
}

fn homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti");
    for (name, (a, b)) in surface_pairs() {
        let x = build_clcc(&a, &b).unwrap();
        group.bench_function(BenchmarkId::new("surface", name), |bench| bench.iter(|| betti(black_box(&x), false)));
    }
    let (a, b) = tetrahedra_pair();
    let x = build_clcc(&a, &b).unwrap();
    group.sample_size(10);
    group.bench_function("tetrahedra", |bench| bench.iter(|| betti(black_box(&x), false)));
    group.finish();
}

fn pocset_and_certify(c: &mut Criterion) {
    for pairs in [4, 6] {
        let ps = pocsets(pairs, 10);
        c.bench_function(&format!("sageev/{pairs}-pairs"), |bench| {
            bench.iter(|| ps.iter().map(|p| sageev(black_box(p)).unwrap().complex.vertex_count()).sum::<usize>())
        });
    }
    let (a, b) = tetrahedra_pair();
    c.bench_function("certify/tetrahedra", |bench| bench.iter(|| hyperbolicity::certify(black_box(&a), black_box(&b)).unwrap()));
}

criterion_group!(benches, construction, homology, pocset_and_certify);
criterion_main!(benches);
