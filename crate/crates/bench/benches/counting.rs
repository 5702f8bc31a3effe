use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use treebound::{families, laplacian_spectrum, tau_brute_force, tau_exact};
use treebound_bench::fixtures;

fn exact_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("tau_exact");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| {
            b.iter(|| tau_exact(g))
        });
    }
    group.finish();
}

fn spectra(c: &mut Criterion) {
    let mut group = c.benchmark_group("laplacian_spectrum");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| {
            b.iter(|| laplacian_spectrum(g, 1e-10).unwrap())
        });
    }
    group.finish();
}

fn brute_force(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let graphs: Vec<_> = (0..8)
        .map(|_| families::random_connected_simple(6, 0.6, &mut rng))
        .collect();
    c.bench_function("tau_brute_force/random-6", |b| {
        b.iter(|| {
            for g in &graphs {
                std::hint::black_box(tau_brute_force(g).unwrap());
            }
        })
    });
    let k6 = families::complete(6, 1);
    c.bench_function("tau_brute_force/complete-6", |b| {
        b.iter(|| tau_brute_force(&k6).unwrap())
    });
}

criterion_group!(benches, exact_counts, spectra, brute_force);
criterion_main!(benches);
