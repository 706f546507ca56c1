//! Sequential vs parallel execution on the data-parallel inner loops:
//! the partition sweep of the Lascoux term builder and the full invariant
//! sweep. Both modes produce identical output; this measures the fan-out.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use schur_resolve::cli::run_sweep;
use schur_resolve::lascoux::lascoux_resolution_with_mode;
use schur_resolve::par::ExecMode;
use schur_resolve::MorphismSpec;

fn bench_lascoux_terms(c: &mut Criterion) {
    let mut group = c.benchmark_group("lascoux_terms");
    for (t, cdim, i) in [(4u32, 3u32, 1u32), (3, 3, 1)] {
        let spec = MorphismSpec::linear(t, cdim, 4).unwrap();
        let label = format!("t{t}c{cdim}i{i}");
        for (name, mode) in [
            ("sequential", ExecMode::Sequential),
            ("parallel", ExecMode::Parallel),
        ] {
            group.bench_with_input(
                BenchmarkId::new(name, &label),
                &(spec.clone(), i),
                |b, (spec, i)| {
                    b.iter(|| lascoux_resolution_with_mode(spec, *i, mode).unwrap());
                },
            );
        }
    }
    group.finish();
}

fn bench_verification_jobs(c: &mut Criterion) {
    // independent (spec, i, seed) chains: the workload where fan-out pays
    let mut jobs = Vec::new();
    for t in 1..=3u32 {
        for cdim in 2..=3u32 {
            for i in -1..=i64::from(cdim) {
                jobs.push((MorphismSpec::linear(t, cdim, 3).unwrap(), i, 42u64));
            }
        }
    }
    let mut group = c.benchmark_group("verification_jobs");
    group.sample_size(10);
    for (name, mode) in [
        ("sequential", ExecMode::Sequential),
        ("parallel", ExecMode::Parallel),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| {
                let results = schur_resolve::par::map_collect(mode, jobs.clone(), |(sp, i, s)| {
                    schur_resolve::koszul::verify_koszul(&sp, i, s)
                        .unwrap()
                        .passed()
                });
                assert!(results.iter().all(|&p| p));
            });
        });
    }
    group.finish();
}

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariant_sweep");
    group.sample_size(10);
    for (name, mode) in [
        ("sequential", ExecMode::Sequential),
        ("parallel", ExecMode::Parallel),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| {
                let report = run_sweep(mode);
                assert!(report.all_passed());
                report.lines.len()
            });
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_lascoux_terms,
    bench_verification_jobs,
    bench_sweep
);
criterion_main!(benches);
