use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use rand::{Rng, SeedableRng};

use buckle_core::bounds::fg_polys;
use buckle_core::numerics::{gauss_legendre, sym_eig, DenseSymMatrix};

fn random_sym(n: usize, seed: u64) -> DenseSymMatrix {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-1.0..1.0);
            data[i * n + j] = v;
            data[j * n + i] = v;
        }
    }
    DenseSymMatrix::new(n, data).unwrap()
}

fn bench_kernels(c: &mut Criterion) {
    c.bench_function("gauss_legendre_64", |b| {
        b.iter(|| gauss_legendre(64).unwrap())
    });
    let m = random_sym(60, 7);
    c.bench_function("jacobi_eig_60", |b| {
        b.iter_batched(|| m.clone(), |m| sym_eig(&m), BatchSize::SmallInput)
    });
    c.bench_function("fg_polys_l8_n4", |b| b.iter(|| fg_polys(8, 4).unwrap()));
}

criterion_group!(benches, bench_kernels);
criterion_main!(benches);
