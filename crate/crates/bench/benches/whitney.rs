use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use hyperwhitney::corpus::{random_collection, random_planar, rng};
use hyperwhitney::medial::{circuit_partition_polynomial, medial_map};
use hyperwhitney::nc::{mobius, refinements};
use hyperwhitney::whitney::{whitney_bruteforce, whitney_phi, whitney_psi};
use hyperwhitney::{Hypermap, Permutation};

fn instances() -> Vec<(String, Hypermap)> {
    let mut r = rng(5);
    let mut out = Vec::new();
    for n in [6, 8, 10] {
        out.push((format!("planar-{n}"), random_planar(&mut r, n)));
        out.push((format!("random-{n}"), random_collection(&mut r, n, 4)));
    }
    out
}

fn methods(c: &mut Criterion) {
    let mut group = c.benchmark_group("whitney");
    for (name, h) in instances() {
        group.bench_with_input(BenchmarkId::new("brute", &name), &h, |b, h| b.iter(|| whitney_bruteforce(black_box(h))));
        group.bench_with_input(BenchmarkId::new("phi", &name), &h, |b, h| b.iter(|| whitney_phi(black_box(h))));
        group.bench_with_input(BenchmarkId::new("psi", &name), &h, |b, h| b.iter(|| whitney_psi(black_box(h))));
    }
    group.finish();
}

fn lattice(c: &mut Criterion) {
    let mut group = c.benchmark_group("nc");
    for m in [6, 8] {
        let gamma = Permutation::from_cycles(m, &[(1..=m).collect::<Vec<_>>()]).unwrap();
        group.bench_with_input(BenchmarkId::new("refinements", m), &gamma, |b, g| b.iter(|| refinements(g).count()));
        let id = Permutation::identity(m);
        group.bench_with_input(BenchmarkId::new("mobius", m), &gamma, |b, g| b.iter(|| mobius(&id, g).unwrap()));
    }
    group.finish();
}

fn medial(c: &mut Criterion) {
    let h = random_planar(&mut rng(9), 8);
    let m = medial_map(&h);
    c.bench_function("circuit-partition/planar-8", |b| b.iter(|| circuit_partition_polynomial(black_box(&m))));
}

criterion_group!(benches, methods, lattice, medial);
criterion_main!(benches);
