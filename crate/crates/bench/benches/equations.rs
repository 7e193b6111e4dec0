use criterion::{black_box, criterion_group, criterion_main, Criterion};
use jacobi_mde::mde::{discover, elliptic_genus, verify_all, verify_equation, GenusInput};
use jacobi_mde::series::int;

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("all entries, q-order 12", |b| {
        b.iter(|| verify_all(black_box(24 * 12)).unwrap())
    });
    group.bench_function("deq:phi03, q-order 12", |b| {
        b.iter(|| verify_equation(black_box("deq:phi03"), 24 * 12).unwrap())
    });
    group.finish();
}

fn discovery(c: &mut Criterion) {
    let mut group = c.benchmark_group("discover");
    group.sample_size(10);
    for name in ["phi_0_1", "phi_0_3", "theta_4th"] {
        group.bench_function(name, |b| b.iter(|| discover(black_box(name), 5, 24 * 6).unwrap()));
    }
    group.finish();
}

fn genera(c: &mut Criterion) {
    c.bench_function("genus d = 5, q-order 12", |b| {
        b.iter(|| elliptic_genus(&GenusInput::from_euler(5, int(black_box(48))), 24 * 12).unwrap())
    });
}

criterion_group!(benches, verification, discovery, genera);
criterion_main!(benches);
