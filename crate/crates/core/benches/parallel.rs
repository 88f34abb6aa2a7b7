use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qtsym::par;
use qtsym::parking::{enumerate_parking_functions, enumerate_paths, statistics, RationalDyckPath};

fn dinv_total(path: &RationalDyckPath) -> i64 {
    enumerate_parking_functions(path)
        .iter()
        .map(|pf| statistics(pf).dinv)
        .sum()
}

fn per_path_statistics(c: &mut Criterion) {
    let mut group = c.benchmark_group("per-path statistics");
    group.sample_size(10);
    for (k, m, n) in [(1, 3, 4), (1, 3, 5), (2, 2, 3)] {
        let paths = enumerate_paths(k, m, n).unwrap();
        let label = format!("{k},{m},{n}");
        group.bench_with_input(BenchmarkId::new("par::map", &label), &paths, |b, p| {
            b.iter(|| par::map(p, dinv_total))
        });
        group.bench_with_input(BenchmarkId::new("sequential", &label), &paths, |b, p| {
            b.iter(|| par::map_sequential(p, dinv_total))
        });
    }
    group.finish();
}

criterion_group!(benches, per_path_statistics);
criterion_main!(benches);
