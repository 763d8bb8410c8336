use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qsuper_core::cache::set_cache_limit;
use qsuper_core::hopf::coproduct;
use qsuper_core::repn::{haar, matrix_coefficients};
use qsuper_core::superalg::{Element, Gen, Ring};

fn word(ring: Ring, n: u32) -> Element {
    // d^n a^n reverses the normal order as far as possible
    Element::g(ring, Gen::D).pow(n).mul(&Element::g(ring, Gen::A).pow(n))
}

fn normal_form(c: &mut Criterion) {
    set_cache_limit(0);
    let mut g = c.benchmark_group("normal_form");
    for ring in [Ring::B, Ring::Asigma] {
        for n in [2, 4, 6] {
            g.bench_with_input(BenchmarkId::new(ring.name(), n), &n, |bch, &n| bch.iter(|| word(ring, black_box(n))));
        }
    }
    g.finish();
}

fn coproducts(c: &mut Criterion) {
    set_cache_limit(0);
    let mut g = c.benchmark_group("coproduct");
    for n in [1, 2, 3] {
        let x = word(Ring::Asigma, n).mul(&Element::g(Ring::Asigma, Gen::B));
        g.bench_with_input(BenchmarkId::from_parameter(n), &x, |bch, x| bch.iter(|| coproduct(black_box(x))));
    }
    g.finish();
}

fn corep(c: &mut Criterion) {
    set_cache_limit(0);
    let mut g = c.benchmark_group("matrix_coefficients");
    g.sample_size(10);
    for two_l in [1, 3, 5] {
        g.bench_with_input(BenchmarkId::from_parameter(two_l), &two_l, |bch, &two_l| {
            bch.iter(|| matrix_coefficients(black_box(two_l), 1).expect("matrix"))
        });
    }
    g.finish();
}

fn haar_values(c: &mut Criterion) {
    set_cache_limit(0);
    let mut g = c.benchmark_group("haar");
    g.sample_size(10);
    for n in [1, 2, 3] {
        let r = Ring::Asigma;
        let x = Element::g(r, Gen::B).pow(n).mul(&Element::g(r, Gen::C).pow(n)).mul(&Element::g(r, Gen::Sigma));
        g.bench_with_input(BenchmarkId::from_parameter(n), &x, |bch, x| bch.iter(|| haar(black_box(x)).expect("haar")));
    }
    g.finish();
}

criterion_group!(benches, normal_form, coproducts, corep, haar_values);
criterion_main!(benches);
