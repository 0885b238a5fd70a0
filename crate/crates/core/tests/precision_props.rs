use hgreg_core::precision::{parse_rational, rational_to_string};
use hgreg_core::{Context, Rational, XComplex, XReal};
use num_bigint::BigInt;
use proptest::prelude::*;

fn ctx() -> Context {
    Context::new(40)
}

fn rel(a: &XReal, b: &XReal) -> f64 {
    let d = (a - b).abs();
    if b.is_zero() {
        d.to_f64()
    } else {
        (&d / &b.abs()).to_f64()
    }
}

proptest! {
    #[test]
    fn rational_arithmetic_is_exact_to_precision(p1 in -10_000i64..10_000, q1 in 1i64..10_000, p2 in -10_000i64..10_000, q2 in 1i64..10_000) {
        let c = ctx();
        let (a, b) = (c.ratio(p1, q1), c.ratio(p2, q2));
        let exact = Rational::new(p1.into(), q1.into()) * Rational::new(p2.into(), q2.into())
            + Rational::new(p1.into(), q1.into());
        let got = &(&a * &b) + &a;
        prop_assert!(rel(&got, &c.rational(&exact)) < 1e-45);
    }

    #[test]
    fn exp_ln_roundtrip(x in -50.0f64..50.0) {
        let c = ctx();
        let v = XReal::from_f64(x, c.bits());
        prop_assert!((&v.exp().ln() - &v).abs().to_f64() < 1e-40);
    }

    #[test]
    fn sqrt_squares_back(p in 1i64..1_000_000, q in 1i64..1_000) {
        let c = ctx();
        let v = c.ratio(p, q);
        prop_assert!(rel(&v.sqrt().sqr(), &v) < 1e-45);
    }

    #[test]
    fn complex_exp_ln_roundtrip(re in -5.0f64..5.0, im in -3.0f64..3.0) {
        let c = ctx();
        let z = XComplex::new(XReal::from_f64(re, c.bits()), XReal::from_f64(im, c.bits()));
        let back = z.exp().ln().unwrap();
        prop_assert!((&back - &z).abs().to_f64() < 1e-38);
    }

    #[test]
    fn rational_strings_roundtrip(p in any::<i64>(), q in 1i64..i64::MAX) {
        let r = Rational::new(BigInt::from(p), BigInt::from(q));
        prop_assert_eq!(parse_rational(&rational_to_string(&r)).unwrap(), r);
    }

    #[test]
    fn decimals_are_not_exact_input(ip in 0u32..1000, fp in 1u32..1000) {
        let s = format!("{ip}.{fp}");
        prop_assert!(parse_rational(&s).is_err());
    }
}

#[test]
fn pi_to_forty_digits() {
    // mpmath: +pi at 45 digits
    let c = ctx();
    let want = c.parse("3.14159265358979323846264338327950288419716939937").unwrap();
    assert!((&c.pi() - &want).abs().to_f64() < 1e-44);
}

#[test]
fn env_precision() {
    std::env::set_var("HGREG_PREC", "55");
    assert_eq!(Context::from_env().digits, 55);
    std::env::remove_var("HGREG_PREC");
    assert_eq!(Context::from_env().digits, 40);
}
