use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wilson4::arith::{power_sums_seq, primes_in};
use wilson4::bernoulli::BernoulliTable;
use wilson4::formulas::wilson_formula;
use wilson4::sequences::{factorial_mod, PrimeContext};
use wilson4::verifier::{Selection, Verifier};

fn power_sums(c: &mut Criterion) {
    let mut g = c.benchmark_group("power_sums");
    for p in [1009u64, 10037] {
        let kmax = 4 * (p as usize - 1);
        g.bench_with_input(BenchmarkId::new("sequential", p), &p, |b, &p| {
            b.iter(|| power_sums_seq(black_box(p), 5, kmax, 1))
        });
        #[cfg(feature = "parallel")]
        g.bench_with_input(BenchmarkId::new("parallel", p), &p, |b, &p| {
            b.iter(|| wilson4::arith::power_sums_par(black_box(p), 5, kmax, 1))
        });
    }
    g.finish();
}

fn wilson(c: &mut Criterion) {
    let mut g = c.benchmark_group("wilson_mod_p4");
    for p in [1009u64, 10037] {
        g.bench_with_input(BenchmarkId::new("direct", p), &p, |b, &p| b.iter(|| factorial_mod(black_box(p), 4)));
        g.bench_with_input(BenchmarkId::new("table_and_formula", p), &p, |b, &p| {
            b.iter(|| {
                let table = BernoulliTable::build(p, 3 * (p as usize - 1), 4).unwrap();
                let ctx = PrimeContext::from_table(table).unwrap();
                wilson_formula(&ctx, 4).unwrap()
            })
        });
    }
    g.finish();
}

fn suite(c: &mut Criterion) {
    let primes = primes_in(7, 61);
    let mut g = c.benchmark_group("suite_7_61");
    g.sample_size(10);
    g.bench_function("one_thread", |b| {
        b.iter(|| Verifier::new().with_jobs(1).run_suite(&primes, &Selection::All).unwrap())
    });
    #[cfg(feature = "parallel")]
    g.bench_function("all_threads", |b| {
        b.iter(|| Verifier::new().run_suite(&primes, &Selection::All).unwrap())
    });
    g.finish();
}

criterion_group!(benches, power_sums, wilson, suite);
criterion_main!(benches);
