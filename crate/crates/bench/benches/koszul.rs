use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use flagspin::classical::{koszul_closed_form, koszul_string_count, standard_painting_in};
use flagspin::flag::all_paintings;
use flagspin::LieType;
use flagspin_bench::{classical_sweep, root_system};

fn build_roots(c: &mut Criterion) {
    c.bench_function("root_system/E8", |b| {
        b.iter(|| root_system(black_box(LieType::E8)))
    });
    c.bench_function("root_system/D12", |b| {
        let lt: LieType = "D12".parse().unwrap();
        b.iter(|| root_system(black_box(lt)))
    });
}

fn exceptional_paintings(c: &mut Criterion) {
    let e8 = root_system(LieType::E8);
    c.bench_function("koszul/E8 all paintings", |b| {
        b.iter(|| {
            all_paintings(&e8)
                .iter()
                .filter(|p| p.is_spin())
                .count()
        })
    });
    let e7 = root_system(LieType::E7);
    c.bench_function("t_roots/E7 all paintings", |b| {
        b.iter(|| all_paintings(&e7).iter().map(|p| p.t_root_table().d()).sum::<usize>())
    });
}

fn classical(c: &mut Criterion) {
    let sweep = classical_sweep(8);
    c.bench_function("classical/closed form rank<=8", |b| {
        b.iter(|| sweep.iter().map(|p| koszul_closed_form(p).len()).sum::<usize>())
    });
    c.bench_function("classical/string count rank<=8", |b| {
        b.iter(|| sweep.iter().map(|p| koszul_string_count(p).len()).sum::<usize>())
    });
    let b8 = root_system("B8".parse().unwrap());
    let b8_params: Vec<_> = sweep
        .iter()
        .filter(|p| p.lie_type() == b8.lie_type())
        .cloned()
        .collect();
    c.bench_function("classical/general B8", |b| {
        b.iter(|| {
            b8_params
                .iter()
                .map(|p| standard_painting_in(p, &b8).unwrap().koszul_vector().len())
                .sum::<usize>()
        })
    });
}

criterion_group!(benches, build_roots, exceptional_paintings, classical);
criterion_main!(benches);
