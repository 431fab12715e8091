//! Acceptance criteria, one printed line each. Run with `--nocapture` to see
//! the table; the test fails if any line fails.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::Zero;
use wilson4::arith::{int_valuation, primes_in, prime_power, rat, Rational};
use wilson4::bernoulli::{bernoulli_exact, divided_bernoulli_exact, von_staudt_denominator};
use wilson4::formulas::{mhs_formula, miki_sides, triple_p_minus_3, wilson_formula, Bern, MhsVariant};
use wilson4::padic::digits;
use wilson4::sequences::{factorial_mod, mhs, PrimeContext};
use wilson4::verifier::{golden_table, run_suite, Selection};

const GOLDEN_SMALL_BUDGET: Duration = Duration::from_secs(10);
const GOLDEN_LARGE_BUDGET: Duration = Duration::from_secs(600);
const SUITE_BUDGET: Duration = Duration::from_secs(300);

type Outcome = (bool, String);

fn wilson_ctx(p: u64) -> PrimeContext {
    PrimeContext::new(p, 3 * (p as usize - 1), 4).expect("context")
}

fn golden(primes: &[u64], budget: Duration) -> Outcome {
    let table = golden_table();
    let start = Instant::now();
    let mut bad = Vec::new();
    for &p in primes {
        let formula = wilson_formula(&wilson_ctx(p), 4).expect("formula");
        let direct = factorial_mod(p, 4);
        if formula != direct || formula != table[&p] {
            bad.push(format!("p={p}: formula {formula}, direct {direct}, table {}", table[&p]));
        }
    }
    let took = start.elapsed();
    let ok = bad.is_empty() && took <= budget;
    (ok, format!("{} primes in {took:.2?} (budget {budget:?}) {}", primes.len(), bad.join("; ")))
}

fn criterion_1() -> Outcome {
    golden(&[19, 47, 61, 173, 521, 877, 1009], GOLDEN_SMALL_BUDGET)
}

fn criterion_2() -> Outcome {
    golden(&[10037], GOLDEN_LARGE_BUDGET)
}

fn criterion_3() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for (p, want) in [(11u64, 3u32), (13, 2)] {
        let ctx = PrimeContext::new(p, 4 * (p as usize - 1), 5).expect("context");
        let direct = Bern::exact(p, 4 * (p as usize - 1)).bbb(p as usize - 3).residue(1).expect("residue");
        let formula = triple_p_minus_3(&ctx).and_then(|v| v.residue(1)).expect("formula");
        ok &= direct == BigUint::from(want) && formula == direct;
        detail.push(format!("p={p}: direct {direct}, formula {formula}"));
    }
    (ok, detail.join(", "))
}

fn criterion_4() -> Outcome {
    let ctx = PrimeContext::new(11, 40, 5).expect("context");
    let mut ok = true;
    let mut detail = Vec::new();
    for (k, want) in [(6usize, 2068u32), (8, 5456)] {
        let formula = mhs_formula(&ctx, k, 4, MhsVariant::Closed)
            .and_then(|v| v.residue(4))
            .expect("formula");
        let direct = mhs(11, k as u64, 4).expect("oracle").value().clone();
        ok &= formula == BigUint::from(want) && direct == formula;
        detail.push(format!("A*_{k} = {formula} (oracle {direct})"));
    }
    (ok, detail.join(", "))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let summary = run_suite(&primes_in(7, 101), &Selection::All).expect("suite");
    let took = start.elapsed();
    let fails: Vec<String> = summary
        .failures()
        .map(|r| {
            format!(
                "{} p={:?} {} [{}] {}",
                r.id,
                r.p,
                r.witness.as_deref().unwrap_or(""),
                r.lhs.as_ref().map(|v| v.to_string()).unwrap_or_default(),
                r.note.as_deref().unwrap_or("")
            )
        })
        .collect();
    let ok = fails.is_empty() && summary.passed() > 0 && took <= SUITE_BUDGET;
    let detail = format!(
        "{} pass, {} fail, {} skip in {took:.2?} (budget {SUITE_BUDGET:?}) {}",
        summary.passed(),
        summary.failed(),
        summary.skipped(),
        fails.join("; ")
    );
    (ok, detail)
}

fn criterion_6() -> Outcome {
    let miki_bad: Vec<usize> = (6..=40).step_by(2).filter(|&n| {
        let (l, r) = miki_sides(n);
        l != r
    }).collect();
    let vsc_bad: Vec<usize> = (2..=40)
        .step_by(2)
        .filter(|&n| *bernoulli_exact(n).denom() != von_staudt_denominator(n as u64).into())
        .collect();
    let ok = miki_bad.is_empty() && vsc_bad.is_empty();
    (ok, format!("Miki failures {miki_bad:?}, denominator failures {vsc_bad:?}"))
}

fn criterion_7() -> Outcome {
    let mut bad = Vec::new();
    for p in primes_in(7, 101) {
        let ctx = wilson_ctx(p);
        let w: Vec<BigUint> = (2..=4).map(|e| wilson_formula(&ctx, e).expect("formula")).collect();
        if &w[2] % prime_power(p, 3) != w[1] || &w[1] % prime_power(p, 2) != w[0] {
            bad.push(format!("ladder p={p}"));
        }
    }
    let t3 = run_suite(&primes_in(7, 101), &Selection::Ids(vec!["T3.R9".into()])).expect("suite");
    bad.extend(t3.failures().map(|r| format!("T3.R9 p={:?}", r.p)));
    let ok = bad.is_empty() && t3.passed() > 0;
    (ok, format!("T3.R9 passes at {} primes {}", t3.passed(), bad.join("; ")))
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    for p in primes_in(3, 101) {
        let mut samples: Vec<Rational> = vec![rat(1, 2), rat(-1, 2), rat(17, 4 * p as i64), rat(-5, 8 * p as i64)];
        if p >= 5 {
            samples.push(divided_bernoulli_exact(p as usize - 1));
            samples.push(divided_bernoulli_exact(2 * (p as usize - 1)));
        }
        for q in &samples {
            for count in 1..=5usize {
                let d = digits(q, p, count).expect("digits");
                let diff = d.reconstruct() - q;
                // Digits d_-1..d_{count-2} pin q down mod p^{count-1}.
                let ok = diff.is_zero() || {
                    let v = int_valuation(diff.numer(), p) as i64 - int_valuation(diff.denom(), p) as i64;
                    v >= count as i64 - 1
                };
                if !ok {
                    bad.push(format!("round trip p={p} q={q} count={count}"));
                }
            }
        }
    }
    let ids = ["L2", "C1", "C2"].map(String::from).to_vec();
    let s = run_suite(&primes_in(3, 101), &Selection::Ids(ids)).expect("suite");
    bad.extend(s.failures().map(|r| format!("{} p={:?}", r.id, r.p)));
    let ok = bad.is_empty() && s.passed() == 3 * primes_in(3, 101).len();
    (ok, format!("{} digit checks pass {}", s.passed(), bad.join("; ")))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("golden Wilson values up to 1009", criterion_1),
        ("golden Wilson value at 10037", criterion_2),
        ("BBB(p-3) mod p at 11 and 13", criterion_3),
        ("A*_6 and A*_8 mod 11^4", criterion_4),
        ("oracle suite over 7..101", criterion_5),
        ("Miki and von Staudt up to 40", criterion_6),
        ("Wilson ladder and T3 against R9", criterion_7),
        ("digit round trip and halves", criterion_8),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (ok, detail) = run();
        all &= ok;
        println!("criterion {}: {} {name}: {detail}", i + 1, if ok { "PASS" } else { "FAIL" });
    }
    assert!(all, "some acceptance criteria failed");
}
