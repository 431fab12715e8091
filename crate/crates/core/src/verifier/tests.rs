use std::collections::HashSet;

use super::*;

#[test]
fn wilson_at_19() {
    let r = run_check("MT3", 19).unwrap();
    assert!(r.pass(), "{r:?}");
    assert_eq!(r.lhs, Some(Value::Residue(BigUint::from(93175u32))));
    assert_eq!(r.rhs, r.lhs);
    assert_eq!(r.modulus(), Some(BigUint::from(19u32.pow(4))));
}

#[test]
fn wolstenholme_at_5() {
    let r = run_check("R4.wolstenholme1", 5).unwrap();
    assert!(r.pass());
    assert_eq!(r.lhs, Some(Value::Residue(BigUint::from(0u32))));
    assert_eq!(r.modulus(), Some(BigUint::from(25u32)));
}

#[test]
fn guards() {
    assert!(matches!(
        run_check("MT3", 3),
        Err(Error::PrimeTooSmall { min_prime: 13, .. })
    ));
    assert!(matches!(run_check("nope", 7), Err(Error::UnknownCheck(_))));
    assert!(matches!(run_check("R5", 9), Err(Error::InvalidArgument(_))));
    let sel = Selection::Ids(vec!["R5".into(), "bogus".into()]);
    assert!(matches!(run_suite(&[7], &sel), Err(Error::UnknownCheck(_))));
}

#[test]
fn empty_suite() {
    let s = run_suite(&[], &Selection::All).unwrap();
    assert!(s.reports.is_empty());
    assert!(s.is_success());
}

#[test]
fn wilson_suite_matches_goldens() {
    let s = run_suite(&[19, 61, 173], &Selection::Ids(vec!["MT3".into()])).unwrap();
    let golden = golden_table();
    assert_eq!(s.passed(), 3);
    for r in &s.reports {
        let want = Value::Residue(golden[&r.p.unwrap()].clone());
        assert_eq!(r.lhs.as_ref(), Some(&want));
    }
}

#[test]
fn golden_values() {
    let g = golden_table();
    assert_eq!(g.len(), 9);
    assert_eq!(g[&19], BigUint::from(93175u32));
    assert_eq!(g[&877], BigUint::from(557572214137u64));
    assert_eq!(g[&1009], BigUint::from(709347287962u64));
    for (p, v) in &g {
        assert!(*v < prime_power(*p, 4));
    }
}

#[test]
fn ids_are_unique() {
    let ids: HashSet<_> = REGISTRY.iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), REGISTRY.len());
}

#[test]
fn every_statement_has_a_check() {
    let mut items: Vec<String> = (1..=15).map(|i| format!("R{i}")).collect();
    items.extend((1..=6).map(|i| format!("T{i}")));
    items.extend(
        [
            "P1", "P2", "L1", "L2", "C1", "C2", "MT1.i", "MT1.ii", "MT2.Hp3", "MT2.Hp1", "MT3", "EQ60",
            "EQ70", "EQ73", "EQ89", "EQ90", "MIKI", "NEWTON",
        ]
        .map(String::from),
    );
    let aliases: &[(&str, &[&str])] = &[("R12", &["K1", "K2", "K3"]), ("R13", &["EM"]), ("R14", &["S2", "S3", "S4"])];
    for item in &items {
        let covered = REGISTRY.iter().any(|c| {
            c.id == item
                || c.id.strip_prefix(item.as_str()).is_some_and(|rest| rest.starts_with('.'))
                || aliases
                    .iter()
                    .any(|(a, ids)| a == item && ids.contains(&c.id))
        });
        assert!(covered, "no check for {item}");
    }
}

#[test]
fn suite_is_deterministic_and_order_independent() {
    let sel = Selection::Ids(vec!["R9".into(), "MT3".into(), "K2".into(), "L1".into(), "MIKI".into()]);
    let a = run_suite(&[7, 11, 13, 17], &sel).unwrap();
    let b = Verifier::new().with_jobs(1).run_suite(&[17, 13, 11, 7, 13], &sel).unwrap();
    let strip = |s: &Summary| s.reports.iter().map(|r| r.untimed()).collect::<Vec<_>>();
    assert_eq!(strip(&a), strip(&b));
    assert_eq!((a.passed(), a.failed(), a.skipped()), (b.passed(), b.failed(), b.skipped()));
    // MT3 at 7 and 11 is below its range; MIKI runs once.
    assert_eq!(a.skipped(), 2);
    assert_eq!(a.reports.iter().filter(|r| r.id == "MIKI").count(), 1);
    assert!(a.is_success(), "{:?}", a.failures().collect::<Vec<_>>());
}

#[test]
fn small_prime_plain_checks() {
    let s = run_suite(&[3, 5], &Selection::All).unwrap();
    assert!(s.is_success(), "{:?}", s.failures().collect::<Vec<_>>());
    for id in ["L2", "C1", "C2"] {
        assert!(s.reports.iter().any(|r| r.id == id && r.p == Some(3) && r.pass()));
    }
    assert!(s.reports.iter().any(|r| r.id == "EQ73" && r.p == Some(5) && r.pass()));
}

#[test]
fn newton_examples() {
    for (p, k) in [(7, 3), (11, 10), (13, 1)] {
        assert!(newton_check(p, k, 4).unwrap().pass());
    }
}

#[test]
fn kummer_example() {
    let ctx = PrimeContext::new(7, 24, 5).unwrap();
    let r = kummer_family_check(&ctx, KummerFamily::K1, 4, 1).unwrap();
    assert!(r.pass());
    assert_eq!(r.lhs, Some(Value::Residue(BigUint::from(6u32))));
}

#[test]
fn miki_examples() {
    for n in [6, 8, 10, 40] {
        assert!(miki_check(n).unwrap().pass());
    }
    assert!(miki_check(7).is_err());
}

#[test]
fn failing_report_keeps_the_witness() {
    let mut cases = Cases::new(Some(7), Some(1));
    cases.uint("a", BigUint::from(1u32), BigUint::from(1u32)).unwrap();
    cases.uint("b", BigUint::from(2u32), BigUint::from(3u32)).unwrap();
    let r = cases.into_report("X", Ok(()), 0.0);
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.witness.as_deref(), Some("b"));
    assert_eq!(r.cases, 2);
}

#[test]
fn report_json_shape() {
    let r = run_check("W2", 7).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["status"], "pass");
    assert!(v["lhs"].is_string());
}

#[test]
fn shared_context_is_reused() {
    let v = Verifier::new();
    let a = v.context(29, Needs::FULL).unwrap();
    let b = v.context(29, Needs::WILSON).unwrap();
    assert!(Arc::ptr_eq(&a, &b));
}
