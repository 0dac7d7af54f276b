use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use equilines::groebner::{grevlex_then_lex, BuchbergerConfig};
use equilines::par::Execution;
use equilines::sicgen::{gen_wh_system, overlap_polys, Equations};
use equilines::solver::{solve_triangular, zauner_fiducial, SolveConfig};
use equilines::verify::normalized_overlaps;

const MODES: [(&str, Execution); 2] = [("parallel", Execution::Parallel), ("sequential", Execution::Sequential)];

fn generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("overlap_polys");
    group.sample_size(10);
    for (name, mode) in MODES {
        group
            .bench_with_input(BenchmarkId::new(name, 5), &5usize, |b, &d| b.iter(|| overlap_polys(black_box(d), mode)));
    }
    group.finish();
}

fn groebner_and_solve(c: &mut Criterion) {
    let system = gen_wh_system(2, true).unwrap();
    let Equations::Rational(gens) = &system.equations else { panic!("d = 2 system is rational") };
    let mut group = c.benchmark_group("wh_d2");
    group.sample_size(10);
    for (name, mode) in MODES {
        let config = BuchbergerConfig { execution: mode, ..Default::default() };
        group.bench_function(BenchmarkId::new("groebner", name), |b| {
            b.iter(|| grevlex_then_lex(black_box(gens), &config).unwrap())
        });
        let gb = grevlex_then_lex(gens, &config).unwrap();
        let solve = SolveConfig { execution: mode, ..Default::default() };
        group.bench_function(BenchmarkId::new("solve", name), |b| {
            b.iter(|| solve_triangular(&gb, &system, &solve).unwrap())
        });
    }
    group.finish();
}

fn overlaps(c: &mut Criterion) {
    let v = zauner_fiducial(1, 256);
    let mut group = c.benchmark_group("overlaps_d4");
    for (name, mode) in MODES {
        group.bench_function(name, |b| b.iter(|| normalized_overlaps(black_box(&v), mode).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, generation, groebner_and_solve, overlaps);
criterion_main!(benches);
