use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use jacobi_mde::catalog::{eta_power, form};
use jacobi_mde::operators::iterate;

fn expansions(c: &mut Criterion) {
    let mut group = c.benchmark_group("expand");
    for q_order in [12i64, 20] {
        for name in ["phi_0_1", "phi_0_3", "phi_0_4", "theta_4th"] {
            group.bench_with_input(BenchmarkId::new(name, q_order), &q_order, |b, &n| {
                b.iter(|| form(black_box(name), 24 * n).unwrap())
            });
        }
    }
    group.finish();
}

fn arithmetic(c: &mut Criterion) {
    let t = 24 * 12;
    let phi01 = form("phi_0_1", t).unwrap();
    let phi02 = form("phi_0_2", t).unwrap();
    let eta12 = eta_power(12, t);
    let theta4 = form("theta_4th", t).unwrap();
    c.bench_function("mul phi_0_1 * phi_0_2", |b| {
        b.iter(|| black_box(&phi01).mul(black_box(&phi02)))
    });
    c.bench_function("div theta^4 / eta^12", |b| {
        b.iter(|| black_box(&theta4).div_exact(black_box(&eta12)).unwrap())
    });
    c.bench_function("heat chain of phi_0_3, length 4", |b| {
        let phi = form("phi_0_3", t).unwrap();
        b.iter(|| iterate(black_box(&phi), 0, 4).unwrap())
    });
}

criterion_group!(benches, expansions, arithmetic);
criterion_main!(benches);
