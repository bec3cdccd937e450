use criterion::{black_box, criterion_group, criterion_main, Criterion};
use ordconf::kriz::{build_basis, BasisFilter};
use ordconf::linalg::{rank_mod_p, DEFAULT_PRIMES};
use ordconf::partitions::{lr_coefficient, top_graded_dim, Partition};
use ordconf::{Engine, RingPresentation};
use ordconf_bench::{full_matrix, quotient_matrix};

fn basis(c: &mut Criterion) {
    let e = RingPresentation::elliptic_curve();
    c.bench_function("build_basis E^{4,2}(C,6)", |b| {
        b.iter(|| build_basis(&e, black_box(6), 4, 2, BasisFilter::default()))
    });
}

fn matrices(c: &mut Criterion) {
    c.bench_function("assemble d out of E^{2,3}(C,6)_0", |b| {
        b.iter(|| full_matrix(black_box(6), 2, 3, 0))
    });
}

fn ranks(c: &mut Criterion) {
    let mut g = c.benchmark_group("rank_mod_p");
    g.sample_size(10);
    let m = full_matrix(6, 2, 3, 0);
    g.bench_function(
        format!("full n=6 (2,3) w=0 {}x{}", m.rows(), m.cols()),
        |b| b.iter(|| rank_mod_p(black_box(&m), DEFAULT_PRIMES[0])),
    );
    let m = quotient_matrix(7, 2, 4, 0);
    g.bench_function(
        format!("quotient r=7 (2,4) w=0 {}x{}", m.rows(), m.cols()),
        |b| b.iter(|| rank_mod_p(black_box(&m), DEFAULT_PRIMES[0])),
    );
    g.finish();
}

fn tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("tables");
    g.sample_size(10);
    g.bench_function("cohom_dims n=5", |b| {
        b.iter(|| Engine::elliptic().cohom_dims(5).unwrap())
    });
    g.bench_function("graded_coefficients r=6", |b| {
        b.iter(|| Engine::elliptic().graded_coefficients(6).unwrap())
    });
    g.finish();
}

fn combinatorics(c: &mut Criterion) {
    let l = Partition::new(vec![6, 5, 5]).unwrap();
    let mu = Partition::new(vec![4, 4, 4]).unwrap();
    let nu = Partition::new(vec![2, 1, 1]).unwrap();
    // the first call fills the memo table; this measures the cached lookup
    c.bench_function("lr_coefficient cached (6,5,5)/(4,4,4),(2,1,1)", |b| {
        b.iter(|| lr_coefficient(black_box(&l), &mu, &nu))
    });
    c.bench_function("top_graded_dim(2,3)", |b| {
        b.iter(|| top_graded_dim(black_box(2), 3))
    });
}

criterion_group!(benches, basis, matrices, ranks, tables, combinatorics);
criterion_main!(benches);
