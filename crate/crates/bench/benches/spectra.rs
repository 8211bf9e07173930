use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use cospec::census::{census, CensusOptions};
use cospec::construct::{check_hypotheses, swap_construct, verify_similarity};
use cospec::fixtures::{self, K33_PRISM};
use cospec::linalg::faddeev_leverrier;
use cospec::spectra::{build_matrix, generalized_charpoly, spectral_polynomial};
use cospec::MatrixKind;
use cospec_bench::{graph6_stream, random_graph};

fn charpoly(c: &mut Criterion) {
    let mut group = c.benchmark_group("charpoly");
    for n in [8, 12, 16] {
        let g = random_graph(n as u64, n, 0.5);
        group.bench_with_input(BenchmarkId::new("laplacian", n), &g, |b, g| {
            b.iter(|| spectral_polynomial(black_box(g), MatrixKind::Laplacian).unwrap())
        });
        let m = build_matrix(&g, MatrixKind::Laplacian).unwrap();
        group.bench_with_input(BenchmarkId::new("faddeev-leverrier", n), &m, |b, m| {
            b.iter(|| faddeev_leverrier(black_box(m)))
        });
    }
    group.finish();
}

fn generalized(c: &mut Criterion) {
    let mut group = c.benchmark_group("generalized");
    for n in [6, 8, 10] {
        let g = random_graph(100 + n as u64, n, 0.5);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| generalized_charpoly(black_box(g)))
        });
    }
    group.finish();
}

fn construction(c: &mut Criterion) {
    let plan = fixtures::load(K33_PRISM);
    let (g1, g2) = swap_construct(&plan).unwrap();
    c.bench_function("construct/prism", |b| {
        b.iter(|| {
            let (g1, _) = swap_construct(black_box(&plan)).unwrap();
            check_hypotheses(&plan, &g1).unwrap()
        })
    });
    c.bench_function("similarity/prism-generalized", |b| {
        b.iter(|| verify_similarity(&g1, &g2, &plan.swap_order(), MatrixKind::Generalized).unwrap())
    });
}

fn census_stream(c: &mut Criterion) {
    let input = graph6_stream(7, 200, 8);
    let opts = CensusOptions::new(MatrixKind::Adjacency);
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    group.bench_function("adjacency/200x8", |b| b.iter(|| census(black_box(&input), &opts).unwrap()));
    group.finish();
}

criterion_group!(benches, charpoly, generalized, construction, census_stream);
criterion_main!(benches);
