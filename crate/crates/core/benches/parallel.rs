//! Parallel-versus-sequential benchmarks on the crate's real hot loops:
//! Riordan matrix column extraction, batch dual transforms, and identity
//! grid sweeps. Requires the `parallel` feature (on by default) so that
//! both code paths are compiled.

#![allow(clippy::needless_range_loop)]
// The benchmarked closures are deliberately passed by reference so the same
// workload feeds both execution paths.
#![allow(clippy::needless_borrows_for_generic_args)]

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use riordan_duals::duality::DualRelation;
use riordan_duals::exec::{par_map_indexed, seq_map_indexed};
use riordan_duals::identity::{c_poly, random_sequence, Grid};
use riordan_duals::rational::{alt_sign, binom, rat, rat_int, rat_pow, Rat};
use riordan_duals::riordan::{BuiltinArray, RiordanArray};
use riordan_duals::sequences::harmonic_numbers;
use riordan_duals::series::PowerSeries;

/// d * h^k per column of a Pascal-type array, the inner loop of full matrix
/// extraction.
fn bench_matrix_columns(c: &mut Criterion) {
    let order = 96;
    let pascal = RiordanArray::builtin(BuiltinArray::Pascal, order);
    let mut h_powers = vec![PowerSeries::one(order)];
    for _ in 1..=order {
        let next = h_powers.last().unwrap().mul(pascal.h());
        h_powers.push(next);
    }

    let mut group = c.benchmark_group("matrix-columns");
    group.sample_size(20);
    let work = |k: usize| pascal.d().mul(&h_powers[k]).coeff(order).clone();
    group.bench_function(BenchmarkId::new("seq", order), |b| {
        b.iter(|| seq_map_indexed(order + 1, work))
    });
    group.bench_function(BenchmarkId::new("par", order), |b| {
        b.iter(|| par_map_indexed(order + 1, work))
    });
    group.finish();
}

/// Binomial dual transform of a length-193 harmonic-number prefix against
/// the precomputed transform matrix, one output row per index.
fn bench_dual_transform(c: &mut Criterion) {
    let n = 192;
    let values = harmonic_numbers(n).values;
    let matrix = DualRelation::D1.matrix(n).entries();

    let mut group = c.benchmark_group("dual-transform");
    group.sample_size(20);
    let work = |row: usize| {
        let mut acc = Rat::from_integer(0.into());
        for (k, v) in values.iter().enumerate().take(row + 1) {
            acc += &matrix[row][k] * v;
        }
        acc
    };
    group.bench_function(BenchmarkId::new("seq", n), |b| {
        b.iter(|| seq_map_indexed(n + 1, &work))
    });
    group.bench_function(BenchmarkId::new("par", n), |b| {
        b.iter(|| par_map_indexed(n + 1, &work))
    });
    group.finish();
}

/// One display of the two-variable identity family evaluated over a 14x14
/// rational grid.
fn bench_identity_grid(c: &mut Criterion) {
    let (k, l) = (3usize, 3usize);
    let alpha = rat(1, 2);
    let seq = random_sequence(42, k + l + 2);
    let top = k + l + 1;
    let c_family: Vec<_> =
        (0..=top).map(|n| c_poly(n, &alpha, &seq, DualRelation::D3, false)).collect();
    let cs_family: Vec<_> =
        (0..=top).map(|n| c_poly(n, &alpha, &seq, DualRelation::D3, true)).collect();
    let grid = Grid::auto(14, 14);
    let points = grid.points.clone();
    let a0 = seq.values[0].clone();
    let sum_target = rat_int(1) + &alpha + &alpha;

    let residual = |i: usize| {
        let (x, y) = &points[i];
        let z = &sum_target - x - y;
        let mut lhs = Rat::from_integer(0.into());
        for j in 0..=k {
            lhs += alt_sign(j) * rat_pow(x, (k - j) as i64) * binom(k as i64, j as i64)
                * c_family[l + j + 1].eval(y)
                / rat_int((l + j + 1) as i64);
        }
        for j in 0..=l {
            lhs += alt_sign(j) * rat_pow(x, (l - j) as i64) * binom(l as i64, j as i64)
                * cs_family[k + j + 1].eval(&z)
                / rat_int((k + j + 1) as i64);
        }
        lhs - &a0 * rat_pow(x, top as i64)
            / (rat_int(top as i64) * binom((k + l) as i64, k as i64))
    };

    let n_points = grid.len();
    let mut group = c.benchmark_group("identity-grid");
    group.sample_size(20);
    group.bench_function(BenchmarkId::new("seq", n_points), |b| {
        b.iter(|| seq_map_indexed(n_points, &residual))
    });
    group.bench_function(BenchmarkId::new("par", n_points), |b| {
        b.iter(|| par_map_indexed(n_points, &residual))
    });
    group.finish();
}

criterion_group!(benches, bench_matrix_columns, bench_dual_transform, bench_identity_grid);
criterion_main!(benches);
