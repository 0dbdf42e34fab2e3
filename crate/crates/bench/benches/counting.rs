use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use invseq::oracle::count_avoiders;
use invseq::series::{check_system_201_210, f_coefficients, iterate_fe};
use invseq::succession::counting_sequence;
use invseq::{Basis, SystemId};

fn rules(c: &mut Criterion) {
    let mut group = c.benchmark_group("rules");
    for n in [100, 400] {
        for id in SystemId::ALL {
            group.bench_with_input(BenchmarkId::new(id.name(), n), &n, |b, &n| {
                b.iter(|| counting_sequence(id, black_box(n)))
            });
        }
    }
    group.finish();
}

fn closed_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("closed_form");
    for n in [100, 1000] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| f_coefficients(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for words in [&["201", "210"][..], &["010", "102"][..]] {
        let basis = Basis::from_words(words).unwrap();
        group.bench_function(BenchmarkId::new(basis.to_string(), 10), |b| {
            b.iter(|| count_avoiders(&basis, black_box(10)))
        });
    }
    group.finish();
}

fn equations(c: &mut Criterion) {
    let mut group = c.benchmark_group("equations");
    group.sample_size(10);
    group.bench_function("system-201-210/40", |b| {
        b.iter(|| check_system_201_210(black_box(40)))
    });
    group.bench_function("fe-011-201/30", |b| {
        b.iter(|| iterate_fe(SystemId::Avoid011201, black_box(30)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, rules, closed_form, oracle, equations);
criterion_main!(benches);
