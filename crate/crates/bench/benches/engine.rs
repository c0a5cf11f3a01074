use criterion::{black_box, criterion_group, criterion_main, Criterion};
use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use orthorec_core::diffop::{DiffOp, XPoly};
use orthorec_core::engine::{main as main_algorithm, recurrence_for, Mode};
use orthorec_core::families::FamilySpec;
use orthorec_core::parse::parse_operator;

fn jacobi(c: &mut Criterion) {
    let l = parse_operator("(1-x)*Dx + m").unwrap();
    let spec = FamilySpec::parse("jacobi:alpha,beta").unwrap();
    c.bench_function("jacobi (1-x)Dx+m", |b| {
        b.iter(|| recurrence_for(black_box(&l), Some(&spec), Mode::Auto).unwrap())
    });
}

fn lommel(c: &mut Criterion) {
    let l = parse_operator("x^2*Dx^2 + x*(2*mu-1)*Dx + a^2*x^2 + mu^2 - nu^2 - 2*mu + 1").unwrap();
    let spec = FamilySpec::chebyshev();
    let mut g = c.benchmark_group("lommel");
    g.sample_size(10);
    g.bench_function("chebyshev", |b| {
        b.iter(|| recurrence_for(black_box(&l), Some(&spec), Mode::Auto).unwrap())
    });
    g.finish();
}

fn random_order_three(c: &mut Criterion) {
    let mut rng = SmallRng::seed_from_u64(3);
    let mut coeff = |deg: usize| {
        let cs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-3..=3)).collect();
        XPoly::from_ints(&cs)
    };
    let mut cs: Vec<XPoly> = (0..3).map(|_| coeff(3)).collect();
    let mut lead = coeff(2);
    while lead.is_zero() {
        lead = coeff(2);
    }
    cs.push(&XPoly::from_ints(&[1, 0, -1]) * &lead);
    let l = DiffOp::new(cs);
    let mut g = c.benchmark_group("random order 3");
    g.sample_size(10);
    for name in ["chebyshev", "gegenbauer:3/2", "jacobi:1/2,-1/3", "laguerre:1/2", "hermite"] {
        let spec = FamilySpec::parse(name).unwrap();
        g.bench_function(name, |b| b.iter(|| main_algorithm(black_box(&l), &spec).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, jacobi, lommel, random_order_three);
criterion_main!(benches);
