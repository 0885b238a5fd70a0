use hgreg_core::ellcurve::{ap, ap_naive, conductor, curve_data, family_model, integrality_check, invariants, minimal_model, Family, WeierstrassModel};
use hgreg_core::Rational;
use num_bigint::BigInt;
use proptest::prelude::*;

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

fn model(a: [i64; 5]) -> Option<WeierstrassModel> {
    WeierstrassModel::from_ints(a).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn syzygy(a in prop::array::uniform5(-50i64..50)) {
        if let Some(m) = model(a) {
            let i = invariants(&m);
            prop_assert_eq!(&i.c4 * &i.c4 * &i.c4 - &i.c6 * &i.c6, Rational::from_integer(1728.into()) * &i.disc);
        }
    }

    #[test]
    fn minimal_model_is_idempotent_and_keeps_j(a in prop::array::uniform5(-30i64..30), u in 1i64..4) {
        if let Some(m) = model(a) {
            // scale by u to get a non-minimal model
            let u = Rational::from_integer(u.into());
            let c = m.coeffs();
            let scaled = WeierstrassModel::new([
                &c[0] * &u,
                &c[1] * &u * &u,
                &c[2] * &u * &u * &u,
                &c[3] * &u * &u * &u * &u,
                &c[4] * &u * &u * &u * &u * &u * &u,
            ]).unwrap();
            let min = minimal_model(&scaled).unwrap();
            prop_assert_eq!(minimal_model(&min).unwrap(), min.clone());
            prop_assert_eq!(invariants(&min).j, invariants(&m).j);
            prop_assert_eq!(conductor(&min).unwrap(), conductor(&m).unwrap());
        }
    }

    #[test]
    fn hasse_bound_and_naive_count(a in prop::array::uniform5(-20i64..20), pi in 0usize..12) {
        let p = [5u64, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43][pi];
        if let Some(m) = model(a) {
            let min = minimal_model(&m).unwrap();
            let n = conductor(&min).unwrap();
            if &n % p != BigInt::from(0) {
                let v = ap(&min, p);
                prop_assert_eq!(v, ap_naive(&min, p));
                prop_assert!((v * v) as u64 <= 4 * p);
            }
        }
    }

    #[test]
    fn conductor_divides_into_bad_primes(t in 2i64..60) {
        let m = family_model(Family::Legendre, &Rational::from_integer((-t).into())).unwrap();
        let (_, data) = curve_data(&m).unwrap();
        let mut n = BigInt::from(1);
        for l in &data.local_data {
            n *= l.p.pow(l.f);
        }
        prop_assert_eq!(n, data.conductor);
    }
}

#[test]
fn known_conductors() {
    // y^2 = x^3 - x (32a), y^2 + y = x^3 - x (37a), y^2 + y = x^3 - x^2 (11a3)
    assert_eq!(conductor(&model([0, 0, 0, -1, 0]).unwrap()).unwrap(), BigInt::from(32));
    assert_eq!(conductor(&model([0, 0, 1, -1, 0]).unwrap()).unwrap(), BigInt::from(37));
    assert_eq!(conductor(&model([0, -1, 1, 0, 0]).unwrap()).unwrap(), BigInt::from(11));
    assert_eq!(conductor(&family_model(Family::Legendre, &r(-3, 1)).unwrap()).unwrap(), BigInt::from(24));
}

#[test]
fn singular_models_rejected() {
    assert!(WeierstrassModel::from_ints([0, 0, 0, 0, 0]).is_err());
    assert!(family_model(Family::Legendre, &r(1, 1)).is_err());
    assert!(family_model(Family::Legendre, &r(0, 1)).is_err());
}

#[test]
fn integrality_examples() {
    for t in [-1, -3, -7, -15, 2, 3, 5, 9, 17] {
        assert!(integrality_check(Family::Legendre, &r(t, 1)).unwrap(), "t = {t}");
    }
    assert!(!integrality_check(Family::Legendre, &r(1, 3)).unwrap());
    for n in 2..=21 {
        assert!(integrality_check(Family::Family2, &r(n - 1, n)).unwrap(), "n = {n}");
    }
    for n in 1..=20 {
        assert!(integrality_check(Family::Family3, &r(1, 6 * n)).unwrap(), "n = {n}");
    }
}
