use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use hgs_bench::group;
use hgs_core::count::{e_brute_perm, e_byott, e_formula_self, BruteOptions};
use hgs_core::holomorph::EnumOptions;
use hgs_core::morphisms::HomSearch;
use hgs_core::{automorphism_group, Limits};

fn automorphisms(c: &mut Criterion) {
    let a5 = group("A5");
    c.bench_function("aut(A5)", |b| b.iter(|| automorphism_group(black_box(&a5), &Limits::default()).unwrap()));
    let s4 = group("S4");
    c.bench_function("hom(S4, S4)", |b| b.iter(|| HomSearch::new(black_box(&s4), &s4).collect()));
}

fn counting(c: &mut Criterion) {
    let mut g = c.benchmark_group("count");
    g.sample_size(10);
    let s5 = group("S5");
    let n = group("AxCp(A5,2)");
    let fast = EnumOptions {
        verify_pairs: false,
        ..EnumOptions::default()
    };
    g.bench_function("byott(S5, A5xC2)", |b| b.iter(|| e_byott(&s5, &n, &fast).unwrap()));
    g.bench_function("formula-self(S5)", |b| b.iter(|| e_formula_self(&s5, &Limits::default()).unwrap()));
    let d4 = group("D4");
    let q8 = group("Q8");
    g.bench_function("brute(D4)", |b| {
        b.iter(|| e_brute_perm(&d4, &[d4.clone(), q8.clone()], &BruteOptions::default()).unwrap())
    });
    g.finish();
}

criterion_group!(benches, automorphisms, counting);
criterion_main!(benches);
