use std::f64::consts::FRAC_PI_2;
use std::hint::black_box;

use cfk_core::parallel::{chunked_sum, Execution};
use cfk_core::transform::{cft_apply, sphere_targets, SampledFunction};
use cfk_core::validation::validate;
use cfk_core::{Complex64, Multivector};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn reduction(c: &mut Criterion) {
    let mut g = c.benchmark_group("chunked_sum");
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| chunked_sum(exec, black_box(200_000), 0.0, |i| (i as f64 * 1e-3).sin()))
        });
    }
    g.finish();
}

fn cross_validation(c: &mut Criterion) {
    let mut g = c.benchmark_group("validate_m4_standard");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| validate(4, FRAC_PI_2, 40, 7, 3.0, 1e-8, exec)));
    }
    g.finish();
}

fn transform(c: &mut Criterion) {
    let mut g = c.benchmark_group("cft_apply");
    g.sample_size(10);
    for (m, order) in [(2, 32), (3, 10)] {
        let f = SampledFunction::tensor_hermite(m, order, |x| {
            let r2: f64 = x.iter().map(|c| c * c).sum();
            Multivector::scalar(m, Complex64::new((-0.5 * r2).exp(), 0.0))
        })
        .unwrap();
        let targets = sphere_targets(m, 2.0);
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, format!("m{m}_n{}", f.len())), &f, |b, f| {
                b.iter(|| cft_apply(f, FRAC_PI_2, &targets, exec).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, reduction, cross_validation, transform);
criterion_main!(benches);
