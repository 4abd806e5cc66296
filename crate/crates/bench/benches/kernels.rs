use bbw_core::bbw::cohomology_ogr_schur_spinor;
use bbw_core::resolution::build_resolution;
use bbw_core::tensor::{lr_product, wedge_sym2};
use bbw_core::verify::{bondal_orlov_report, sweep, Lemma};
use bbw_core::{Rectangle, Sign, SpaceParams, YoungDiagram};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn lr(c: &mut Criterion) {
    let mut g = c.benchmark_group("lr_product");
    for rows in [&[2u32, 1][..], &[3, 2, 1], &[4, 3, 2, 1]] {
        let mu = YoungDiagram::from_rows(rows);
        g.bench_with_input(BenchmarkId::from_parameter(&mu), &mu, |b, mu| {
            b.iter(|| lr_product(black_box(mu), black_box(mu), usize::MAX))
        });
    }
    g.finish();
}

fn plethysm(c: &mut Criterion) {
    c.bench_function("wedge_sym2 k=4 all m", |b| {
        b.iter(|| {
            (0..=10)
                .map(|m| wedge_sym2(m, 4).unwrap().len())
                .sum::<usize>()
        })
    });
}

fn schur_spinor(c: &mut Criterion) {
    let sp = SpaceParams::new(10, 4).unwrap();
    let betas = Rectangle::new(6, 4).diagrams();
    c.bench_function("schur-spinor cohomology N=10 k=4", |b| {
        b.iter(|| {
            betas
                .iter()
                .filter(|beta| {
                    !cohomology_ogr_schur_spinor(sp, beta, Sign::Plus)
                        .unwrap()
                        .is_acyclic()
                })
                .count()
        })
    });
}

fn resolutions(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_resolution N=12");
    for k in 1..=4u32 {
        let sp = SpaceParams::new(12, k).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(k), &sp, |b, &sp| {
            b.iter(|| build_resolution(sp, Sign::Plus).unwrap())
        });
    }
    g.finish();
}

fn verification(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    g.bench_function("vanishing-terms N=6..10 k=1..3", |b| {
        b.iter(|| sweep(Lemma::VanishingTerms, &[6, 8, 10], &[1, 2, 3]).unwrap())
    });
    g.bench_function("report g=3 k=2", |b| {
        b.iter(|| bondal_orlov_report(3, 2).unwrap())
    });
    g.finish();
}

criterion_group!(
    benches,
    lr,
    plethysm,
    schur_spinor,
    resolutions,
    verification
);
criterion_main!(benches);
