use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qk_core::corpus::{exterior, quiver_spec, trivial_extension_dual};
use qk_core::linalg::{rref, Matrix};
use qk_core::resolution::minimal_resolution;
use qk_core::{cyclic_covering, AlgebraModel};

// Deterministic dense integer matrix with a rank deficit of one.
fn test_matrix(n: usize) -> Matrix {
    let mut rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| ((i * 7 + j * 13 + i * j) % 11) as i64 - 5).collect())
        .collect();
    rows[n - 1] = (0..n).map(|j| rows[0][j] + 2 * rows[1][j]).collect();
    Matrix::from_dense(&rows)
}

fn bench_rref(c: &mut Criterion) {
    let mut group = c.benchmark_group("rref");
    for n in [8, 16, 32] {
        let m = test_matrix(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| rref(black_box(m))));
    }
    group.finish();
}

fn bench_graded_basis(c: &mut Criterion) {
    let mut group = c.benchmark_group("graded_basis");
    for (m, n) in [(3, 2), (3, 4), (4, 2)] {
        let cover = cyclic_covering(&exterior(m).unwrap(), n).unwrap();
        group.bench_function(format!("exterior{m}_z{n}"), |b| {
            b.iter(|| AlgebraModel::new(black_box(cover.presentation()), 5))
        });
    }
    group.finish();
}

fn bench_resolution(c: &mut Criterion) {
    let mut group = c.benchmark_group("resolution");
    group.sample_size(10);
    let ext3 = AlgebraModel::new(&exterior(3).unwrap(), 5);
    group.bench_function("exterior3_i5", |b| b.iter(|| minimal_resolution(black_box(&ext3), 5, 5).unwrap()));
    let star = trivial_extension_dual(&quiver_spec("star:4").unwrap()).unwrap();
    let star = AlgebraModel::new(&star, 5);
    group.bench_function("star4_dual_i5", |b| b.iter(|| minimal_resolution(black_box(&star), 5, 5).unwrap()));
    group.finish();
}

criterion_group!(benches, bench_rref, bench_graded_basis, bench_resolution);
criterion_main!(benches);
