use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use prelie::fixtures::{load, run_fixture_checks};
use prelie::search::{search, Execution, Grid, Target};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn grid_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("nijenhuis_grid");
    group.sample_size(10);
    let cases = [("a2_phn", Grid::range(-2, 2, &[1]).unwrap()), ("a3_phn", Grid::range(-1, 1, &[1]).unwrap())];
    for (name, grid) in &cases {
        let a = load(name).unwrap().algebra;
        for (label, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(label, name), &exec, |b, &exec| {
                b.iter(|| search(&a, &Target::Nijenhuis, grid, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn fixture_checks(c: &mut Criterion) {
    let mut group = c.benchmark_group("fixture_checks");
    group.sample_size(10);
    for (label, exec) in MODES {
        group.bench_function(label, |b| b.iter(|| run_fixture_checks(exec)));
    }
    group.finish();
}

criterion_group!(benches, grid_search, fixture_checks);
criterion_main!(benches);
