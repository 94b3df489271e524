use criterion::{black_box, criterion_group, criterion_main, Criterion};

use khom_core::abgroups::FinAbGroup;
use khom_core::assemble::{pi_integral, pi_mod_p};
use khom_core::kcoeff::{kercoker, Method};
use khom_core::linalg::{snf, IntMatrix};
use khom_core::theta::pi_odd_assembly;

fn group(s: &str) -> FinAbGroup {
    FinAbGroup::parse(s).unwrap()
}

fn bench_snf(c: &mut Criterion) {
    let n = 24;
    // deterministic pseudo-random entries
    let entries: Vec<i64> = (0..n * n).map(|i| ((i as i64 * 7919 + 17) % 2001) - 1000).collect();
    let m = IntMatrix::from_i64(n, n, &entries);
    c.bench_function("snf 24x24", |b| b.iter(|| snf(black_box(&m))));
}

fn bench_kercoker(c: &mut Criterion) {
    let g = group("C2xC4");
    c.bench_function("kercoker closed C2xC4 n=6", |b| b.iter(|| kercoker(black_box(&g), 6, 2, Method::Closed).unwrap()));
    c.bench_function("kercoker oracle C2xC4 n=6", |b| b.iter(|| kercoker(black_box(&g), 6, 2, Method::Oracle).unwrap()));
}

fn bench_assembly(c: &mut Criterion) {
    let g = group("C4xC4");
    c.bench_function("pi_9 C4xC4", |b| b.iter(|| pi_odd_assembly(black_box(&g), 1).unwrap()));
    let h = group("C2xC6");
    c.bench_function("pi_0 mod 2 C2xC6", |b| b.iter(|| pi_mod_p(black_box(&h), 2, 0).unwrap()));
    let e = FinAbGroup::trivial();
    c.bench_function("pi_7 integral e", |b| b.iter(|| pi_integral(black_box(&e), 7).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_snf, bench_kercoker, bench_assembly
}
criterion_main!(benches);
