use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use num_bigint::BigInt;

use zariski_core::field::{Field, NumberField, QQ};
use zariski_core::{
    fixtures, generated_subalgebra, multiplicative_jordan, relations, zariski_closure, ClosureConfig, IntegerLattice,
    Matrix,
};

fn lattice(c: &mut Criterion) {
    let gens: Vec<Vec<i64>> = (0..8).map(|i| (0..6).map(|j| ((i * 7 + j * 13) % 23) - 11).collect()).collect();
    c.bench_function("hnf 8x6", |b| b.iter(|| IntegerLattice::from_i64(6, black_box(&gens))));
    let l = IntegerLattice::from_i64(6, &gens[..4]);
    c.bench_function("saturate rank 4", |b| b.iter(|| black_box(&l).saturate()));
}

fn jordan(c: &mut Criterion) {
    let g = fixtures::g2();
    let p = g[0].mul(&g[1]);
    c.bench_function("jordan g2 product", |b| b.iter(|| multiplicative_jordan(black_box(&p)).unwrap()));
}

fn multrel(c: &mut Criterion) {
    // 1 + sqrt 2, 3 + sqrt 2 and -(1 + sqrt 2)^2 in Q(sqrt 2)
    let k = NumberField::from_i64(&[-2, 0, 1]);
    let e = |a: i64, b: i64| k.elem(vec![BigInt::from(a), BigInt::from(b)], BigInt::from(1));
    let u = e(1, 1);
    let alphas = vec![u.clone(), e(3, 1), k.neg(&k.mul(&u, &u))];
    c.bench_function("relations real quadratic", |b| b.iter(|| relations(&k, black_box(&alphas))));
    let i = NumberField::from_i64(&[1, 0, 1]);
    let roots = vec![i.generator(), i.neg(&i.generator()), i.from_int(-1)];
    c.bench_function("relations roots of unity", |b| b.iter(|| relations(&i, black_box(&roots))));
}

fn liealg(c: &mut Criterion) {
    let g = fixtures::a3();
    let logs: Vec<Matrix<_>> = g.iter().map(|m| m.sub(&Matrix::identity(QQ, 6))).collect();
    c.bench_function("generated subalgebra a3", |b| b.iter(|| generated_subalgebra(&QQ, 6, black_box(&logs))));
}

fn closure(c: &mut Criterion) {
    let cfg = ClosureConfig::default();
    let sl2 = [Matrix::from_ints(QQ, &[vec![1, 1], vec![0, 1]]), Matrix::from_ints(QQ, &[vec![1, 0], vec![1, 1]])];
    c.bench_function("closure sl2", |b| b.iter(|| zariski_closure(&QQ, 2, black_box(&sl2), &cfg).unwrap()));
    let b2 = fixtures::b2();
    let mut group = c.benchmark_group("fixtures");
    group.sample_size(10);
    group.bench_function("closure b2", |b| b.iter(|| zariski_closure(&QQ, 8, black_box(&b2), &cfg).unwrap()));
    group.finish();
}

criterion_group!(benches, lattice, jordan, multrel, liealg, closure);
criterion_main!(benches);
