use hgreg_core::ellcurve::Family;
use hgreg_core::verify::{compute_rt, golden_tables, rational_reconstruct, reproduce_tables, run_identity_suite, RowStatus};
use hgreg_core::{Context, Error, Rational, XReal};
use num_bigint::BigInt;
use proptest::prelude::*;

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

fn defaults(ctx: &Context) -> (BigInt, XReal) {
    (BigInt::from(100_000), XReal::from_f64(1e-8, ctx.bits()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn reconstruction_soundness(p in -1_000_000i64..1_000_000, q in 1i64..=10_000, eta in -1e-10f64..1e-10) {
        let c = Context::new(40);
        let (qmax, tol) = defaults(&c);
        let x = &c.ratio(p, q) + &XReal::from_f64(eta, c.bits());
        prop_assert_eq!(rational_reconstruct(&x, &qmax, &tol), Some(r(p, q)));
    }
}

#[test]
fn ratio_examples() {
    let c = Context::new(40);
    let (qmax, tol) = defaults(&c);
    for (f, t, want) in [
        (Family::Legendre, r(-7, 1), r(7, 2)),
        (Family::Legendre, r(15, 16), r(-165, 2)),
        (Family::Family2, r(12, 13), r(13689, 176)),
        (Family::Family3, r(1, 102), r(788103, 10172)),
    ] {
        let res = compute_rt(f, &t, &c, &qmax, &tol, true).unwrap();
        assert_eq!(res.r_rational, Some(want), "{f} t = {t}");
    }
}

#[test]
fn non_integral_symbol_is_refused_when_required() {
    let c = Context::new(30);
    let (qmax, tol) = defaults(&c);
    assert!(matches!(compute_rt(Family::Legendre, &r(1, 3), &c, &qmax, &tol, true), Err(Error::NotIntegral(_))));
}

#[test]
fn legendre_negative_rows_match() {
    let c = Context::new(40);
    let (qmax, tol) = defaults(&c);
    let rows: Vec<_> = golden_tables().into_iter().filter(|e| e.family == Family::Legendre && e.t < Rational::from_integer(0.into())).collect();
    assert_eq!(rows.len(), 4);
    let out = reproduce_tables(&rows, &c, &qmax, &tol, false);
    assert!(out.iter().all(|r| r.status == RowStatus::Match && r.runtime_ms.is_none()));
    let json = serde_json::to_value(&out[0]).unwrap();
    let keys: Vec<&str> = json.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys.len(), 8);
    for k in ["family", "t", "R_decimal", "R_rational", "expected", "status", "P", "runtime_ms"] {
        assert!(keys.contains(&k), "{k}");
    }
}

#[test]
fn identity_suite_is_deterministic_and_empty_at_zero() {
    let c = Context::new(30);
    let empty = run_identity_suite(1, 0, &c);
    assert!(empty.passed && empty.checks.is_empty());
    let a = serde_json::to_string(&run_identity_suite(9, 1, &c)).unwrap();
    let b = serde_json::to_string(&run_identity_suite(9, 1, &c)).unwrap();
    assert_eq!(a, b);
}
