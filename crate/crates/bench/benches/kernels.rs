use criterion::{criterion_group, criterion_main, Criterion};
use hgreg_bench::{ctx, model_24, spec_3f2};
use hgreg_core::ellcurve::{ap, conductor};
use hgreg_core::hyper::{g_primitive, gauss_2f1, pfq};
use hgreg_core::lfunc::l_value_for_model;
use hgreg_core::regulators::legendre_reg;
use hgreg_core::special::elliptic_dilog;
use hgreg_core::{Rational, XComplex};
use std::hint::black_box;

fn series(c: &mut Criterion) {
    let ctx = ctx();
    let spec = spec_3f2(&ctx);
    c.bench_function("pfq 3F2 z=1/4", |b| b.iter(|| pfq(black_box(&spec), &ctx).unwrap()));
    let (h, one) = (ctx.ratio(1, 2), ctx.int(1));
    let z = XComplex::new(ctx.ratio(-3, 1), ctx.ratio(1, 2));
    c.bench_function("2F1 continuation z=-3+i/2", |b| b.iter(|| gauss_2f1(&h, &h, &one, black_box(&z), &ctx).unwrap()));
    let x = ctx.ratio(-5, 2);
    c.bench_function("G_{1/2,1/2} quadrature x=-5/2", |b| b.iter(|| g_primitive(&h, &h, black_box(&x), &ctx).unwrap()));
    let q = XComplex::from_real(ctx.ratio(1, 10));
    let i = XComplex::i(ctx.bits());
    c.bench_function("elliptic dilog q=0.1 x=i", |b| b.iter(|| elliptic_dilog(black_box(&q), &i, &ctx).unwrap()));
}

fn curves(c: &mut Criterion) {
    let ctx = ctx();
    let m = model_24();
    c.bench_function("conductor X_-3", |b| b.iter(|| conductor(black_box(&m)).unwrap()));
    c.bench_function("a_p p=10007", |b| b.iter(|| ap(black_box(&m), 10007)));
    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    g.bench_function("L(X_-3, 2)", |b| b.iter(|| l_value_for_model(black_box(&m), &ctx).unwrap()));
    let t = Rational::new(15.into(), 16.into());
    g.bench_function("reg legendre t=15/16", |b| b.iter(|| legendre_reg(black_box(&t), &ctx).unwrap()));
    g.finish();
}

criterion_group!(benches, series, curves);
criterion_main!(benches);
