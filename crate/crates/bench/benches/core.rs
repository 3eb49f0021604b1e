use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lutz_core::front::random::random_knot;
use lutz_core::linalg::smith_normal_form;
use lutz_core::{d3, lutz_pair, s3_overtwisted, IntMatrix, LutzSign};

fn random_matrix(rng: &mut StdRng, n: usize) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
    IntMatrix::from_rows(&rows).unwrap()
}

fn snf(c: &mut Criterion) {
    let mut group = c.benchmark_group("smith_normal_form");
    let mut rng = StdRng::seed_from_u64(7);
    for n in [4, 8, 16] {
        let m = random_matrix(&mut rng, n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| smith_normal_form(black_box(m))));
    }
    group.finish();
}

fn d3_family(c: &mut Criterion) {
    let mut group = c.benchmark_group("d3_s3_overtwisted");
    for n in [1, 5, 10] {
        let p = s3_overtwisted(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| b.iter(|| d3(black_box(p)).unwrap()));
    }
    group.finish();
}

fn pushoff(c: &mut Criterion) {
    let mut rng = StdRng::seed_from_u64(11);
    let knots: Vec<_> = (0..16).map(|_| random_knot(&mut rng, 40)).collect();
    c.bench_function("legendrian_pushoff", |b| {
        b.iter(|| knots.iter().map(|k| k.legendrian_pushoff(0).unwrap().events().len()).sum::<usize>())
    });
    c.bench_function("lutz_pair_and_d3", |b| {
        b.iter(|| knots.iter().map(|k| d3(&lutz_pair(k, 0, LutzSign::Positive).unwrap()).unwrap()).count())
    });
}

criterion_group!(benches, snf, d3_family, pushoff);
criterion_main!(benches);
