use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use flagspin::cspace::{construct_spin_cspaces, make_cspace};
use flagspin::intlat::{hnf, kernel_lattice, member_mod2, smith_invariants};
use flagspin::{FlagSpec, LieType};
use flagspin_bench::{root_system, sample_matrices};

fn normal_forms(c: &mut Criterion) {
    let mats = sample_matrices(64, 6, 8);
    c.bench_function("hnf/6x8", |b| {
        b.iter(|| mats.iter().map(|m| hnf(black_box(m)).unwrap().rows()).sum::<usize>())
    });
    c.bench_function("kernel/6x8", |b| {
        b.iter(|| mats.iter().map(|m| kernel_lattice(m).unwrap().rank()).sum::<usize>())
    });
    c.bench_function("smith/6x8", |b| {
        b.iter(|| mats.iter().map(|m| smith_invariants(m).unwrap().len()).sum::<usize>())
    });
}

fn cspaces(c: &mut Criterion) {
    let e8 = root_system(LieType::E8);
    let full = FlagSpec::new(LieType::E8, &[]).unwrap().painting_in(&e8).unwrap();
    let rows = sample_matrices(1, 4, 8)[0].to_rows();
    c.bench_function("cspace/E8 full flag, 4 rows", |b| {
        b.iter(|| {
            let cs = make_cspace(&full, black_box(&rows)).unwrap();
            member_mod2(full.koszul_vector(), cs.p1()).unwrap()
        })
    });
    c.bench_function("cspace/construct over E8 full flag", |b| {
        b.iter(|| construct_spin_cspaces(&full).unwrap().len())
    });
}

criterion_group!(benches, normal_forms, cspaces);
criterion_main!(benches);
