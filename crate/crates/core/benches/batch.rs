use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use batswarm::harness::{BatchRunner, Workers};
use batswarm::{problems, BaConfig};

fn bench_batch(c: &mut Criterion) {
    let mut group = c.benchmark_group("batch_rastrigin10");
    group.sample_size(10);
    let problem = problems::benchmark("rastrigin", 10).unwrap().problem();
    let config = BaConfig {
        max_iterations: 200,
        seed: 42,
        ..BaConfig::default()
    };
    for runs in [8usize, 32] {
        group.bench_with_input(BenchmarkId::new("sequential", runs), &runs, |b, &runs| {
            b.iter(|| {
                BatchRunner::new(&problem, config)
                    .runs(runs)
                    .workers(Workers::Sequential)
                    .execute()
                    .unwrap()
            })
        });
        group.bench_with_input(BenchmarkId::new("parallel", runs), &runs, |b, &runs| {
            b.iter(|| {
                BatchRunner::new(&problem, config)
                    .runs(runs)
                    .workers(Workers::Auto)
                    .execute()
                    .unwrap()
            })
        });
    }
    group.finish();
}

fn bench_single_run(c: &mut Criterion) {
    let problem = problems::benchmark("sphere", 10).unwrap().problem();
    let config = BaConfig {
        max_iterations: 200,
        ..BaConfig::default()
    };
    c.bench_function("single_run_sphere10", |b| {
        b.iter(|| batswarm::run(&problem, &config).unwrap())
    });
}

criterion_group!(benches, bench_batch, bench_single_run);
criterion_main!(benches);
