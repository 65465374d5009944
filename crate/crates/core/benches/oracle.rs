//! Sequential against parallel execution for the box sweep and for a
//! batch of tuples. Without the `parallel` feature both arms run
//! sequentially.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use monocurve::cmcheck::{herzog_oracle, Thresholds};
use monocurve::crosscheck::tuples_in_range;
use monocurve::par::Exec;
use monocurve::report::AnalyzeOptions;
use monocurve::semigroup::{GeneratorTuple, MembershipTables};
use monocurve::sweep::{sweep, SweepFilter};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("herzog_oracle");
    group.sample_size(10);
    for n in [[627, 1546, 1662, 3377], [813, 1032, 1240, 1835]] {
        let g = GeneratorTuple::new(n).unwrap();
        let tables = MembershipTables::for_tuple(&g).unwrap();
        let th = Thresholds::new(&g, &tables).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n[0]), &th, |b, th| {
                b.iter(|| herzog_oracle(th, exec, None).unwrap())
            });
        }
    }
    group.finish();
}

fn batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    let opts = AnalyzeOptions::default();
    let count = tuples_in_range(1, 20).len();
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, count), |b| {
            b.iter(|| sweep(1, 20, SweepFilter::default(), &opts, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, oracle, batch);
criterion_main!(benches);
