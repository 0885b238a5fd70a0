use hgreg_core::hyper::{gauss_2f1, pfq, HGSpec};
use hgreg_core::special::{elliptic_dilog, gamma_real};
use hgreg_core::{Context, XComplex, XReal};
use proptest::prelude::*;

fn ctx() -> Context {
    Context::new(30)
}

fn x(v: f64, c: &Context) -> XReal {
    XReal::from_f64(v, c.bits())
}

fn zc(re: f64, im: f64, c: &Context) -> XComplex {
    XComplex::new(x(re, c), x(im, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pfq_symmetric_in_parameters(a in 0.1f64..3.0, b in 0.1f64..3.0, c0 in 0.5f64..4.0, r in 0.0f64..0.9, th in 0.0f64..6.28) {
        let c = ctx();
        let z = zc(r * th.cos(), r * th.sin(), &c);
        let s1 = HGSpec::new(vec![x(a, &c), x(b, &c)], vec![x(c0, &c)], z.clone()).unwrap();
        let s2 = HGSpec::new(vec![x(b, &c), x(a, &c)], vec![x(c0, &c)], z).unwrap();
        prop_assert!((&pfq(&s1, &c).unwrap() - &pfq(&s2, &c).unwrap()).abs().to_f64() < 1e-25);
    }

    /// Euler transformation `F(a,b;c;z) = (1-z)^(c-a-b) F(c-a,c-b;c;z)` off the cut.
    #[test]
    fn euler_transformation(a in 0.1f64..2.0, b in 0.1f64..2.0, c0 in 0.3f64..3.0, re in -6.0f64..3.0, im in 0.05f64..4.0) {
        let c = ctx();
        let z = zc(re, im, &c);
        let (a, b, cc) = (x(a, &c), x(b, &c), x(c0, &c));
        let lhs = gauss_2f1(&a, &b, &cc, &z, &c).unwrap();
        let omz = &XComplex::one(c.bits()) - &z;
        let rhs = &omz.pow_real(&(&(&cc - &a) - &b)).unwrap() * &gauss_2f1(&(&cc - &a), &(&cc - &b), &cc, &z, &c).unwrap();
        prop_assert!((&lhs - &rhs).abs().to_f64() < 1e-18 * (1.0 + lhs.abs().to_f64()));
    }

    /// `D_q(q x) = D_q(x)` and `D_q(1/x) = -D_q(x)`.
    #[test]
    fn elliptic_dilog_symmetries(qr in 0.05f64..0.6, qth in 0.0f64..6.28, xr in 0.2f64..3.0, xth in 0.1f64..6.2) {
        let c = ctx();
        let q = zc(qr * qth.cos(), qr * qth.sin(), &c);
        let xx = zc(xr * xth.cos(), xr * xth.sin(), &c);
        let d = elliptic_dilog(&q, &xx, &c).unwrap();
        let dq = elliptic_dilog(&q, &(&q * &xx), &c).unwrap();
        let di = elliptic_dilog(&q, &xx.recip(), &c).unwrap();
        prop_assert!((&d - &dq).abs().to_f64() < 1e-20);
        prop_assert!((&d + &di).abs().to_f64() < 1e-20);
    }

    #[test]
    fn gamma_recurrence(v in 0.05f64..30.0) {
        let c = ctx();
        let s = x(v, &c);
        let g1 = gamma_real(&(&s + &c.int(1)), &c).unwrap();
        let g0 = gamma_real(&s, &c).unwrap();
        prop_assert!(((&g1 - &(&g0 * &s)).abs() / g1.abs()).to_f64() < 1e-25);
    }
}

#[test]
fn gauss_sum_at_one_half() {
    // mpmath hyp2f1(0.5, 0.5, 1, 0.5)
    let c = ctx();
    let h = c.ratio(1, 2);
    let v = gauss_2f1(&h, &h, &c.int(1), &XComplex::from_real(h.clone()), &c).unwrap();
    let want = c.parse("1.1803405990160962260453379405584886").unwrap();
    assert!((&v.re - &want).abs().to_f64() < 1e-28);
}

#[test]
fn unit_circle_needs_positive_excess() {
    let c = ctx();
    let one = c.int(1);
    let s = HGSpec::new(vec![one.clone(), one.clone()], vec![c.int(2)], XComplex::from_real(c.int(-1))).unwrap();
    assert!(pfq(&s, &c).is_err());
}
