//! Sequential against rayon-backed evaluation of the same batches.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use weiljet::identities::run_suites;
use weiljet::jets::{check_second, check_second_tangential, SectionJet};
use weiljet::par::{self, Exec};
use weiljet::poly::int;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn identity_suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("identity_suite");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| black_box(run_suites(None, 3, exec).unwrap())));
    }
    g.finish();
}

fn jet_grid(c: &mut Criterion) {
    let grid: Vec<(usize, usize, usize)> =
        (1..=2).flat_map(|m| (1..=2).flat_map(move |e| (1..=3).map(move |n| (m, e, n)))).collect();
    let mut g = c.benchmark_group("holonomic_grid");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| {
                par::map(exec, &grid, |&(m, e, n)| {
                    let base: Vec<_> = (0..m).map(|i| int(i as i64)).collect();
                    let j = SectionJet::symbolic(m, e, n, &base).unwrap().second(n).unwrap();
                    check_second(&j).unwrap().all_passed() && check_second_tangential(&j).unwrap().all_passed()
                })
            })
        });
    }
    g.finish();
}

criterion_group!(benches, identity_suite, jet_grid);
criterion_main!(benches);
