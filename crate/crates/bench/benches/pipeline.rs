use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use reeslin::graphs::minimal_vertex_covers;
use reeslin::monomials::power;
use reeslin::resolutions::{betti_table, find_linear_quotients_order};
use reeslin::{rees_presentation, standard_monomials, BettiConfig, GbConfig};
use reeslin_bench::{graph_corpus, ideal_corpus};

fn covers(c: &mut Criterion) {
    let mut group = c.benchmark_group("covers");
    for (name, g) in graph_corpus() {
        group.bench_function(&name, |b| b.iter(|| minimal_vertex_covers(black_box(&g))));
    }
    group.finish();
}

fn kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("rees_kernel");
    for (name, ideal) in ideal_corpus() {
        group.bench_function(&name, |b| {
            b.iter(|| rees_presentation(black_box(&ideal), GbConfig::default()).unwrap())
        });
    }
    group.finish();
}

fn betti(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti_square");
    group.sample_size(10);
    for (name, ideal) in ideal_corpus() {
        let square = power(&ideal, 2).unwrap();
        if square.len() > BettiConfig::default().max_gens {
            continue;
        }
        group.bench_function(&name, |b| {
            b.iter(|| betti_table(black_box(&square), BettiConfig::default()).unwrap())
        });
    }
    group.finish();
}

fn linear_quotients(c: &mut Criterion) {
    let mut group = c.benchmark_group("linear_quotients_square");
    for (name, ideal) in ideal_corpus() {
        let p = rees_presentation(&ideal, GbConfig::default()).unwrap();
        let std = standard_monomials(&p, 2);
        let gens = power(&ideal, 2).unwrap().generators().to_vec();
        group.bench_function(&name, |b| {
            b.iter(|| find_linear_quotients_order(black_box(&gens), Some(&std.mapped_generators), 24).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, covers, kernels, betti, linear_quotients);
criterion_main!(benches);
