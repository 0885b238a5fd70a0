//! Hypergeometric series, Gauss 2F1 continuation, the 3F2/4F3 shapes of the
//! regulator formulas, and quadrature/AGM oracles.

mod gauss;
mod oracles;
mod pfq;
mod primitive;
pub mod quad;

pub use gauss::{gauss_2f1, gauss_2f1_cut, CutSide};
pub use oracles::{agm_oracle, euler_integral_oracle};
pub use pfq::{pfq, pfq_terms, HGSpec};
pub use primitive::{g_primitive, g_primitive_quadrature, g_primitive_series};

use crate::error::{Error, Result};
use crate::precision::{Context, XComplex, XReal};
use crate::special::cap_c;

fn integer_difference(a: &XReal, b: &XReal) -> bool {
    (a - b).is_integer()
}

/// `F_{a,b}(z) = 3F2(a, a, a; 1+a-b, a+1; z)`.
pub fn f_ab(a: &XReal, b: &XReal, z: &XComplex, ctx: &Context) -> Result<XComplex> {
    if integer_difference(a, b) {
        return Err(Error::Degenerate("F_{a,b} needs a - b not an integer".into()));
    }
    let bits = ctx.bits();
    let (a, b) = (a.with_bits(bits), b.with_bits(bits));
    let one = ctx.int(1);
    let spec = HGSpec::new(
        vec![a.clone(), a.clone(), a.clone()],
        vec![&(&one + &a) - &b, &a + &one],
        z.with_bits(bits),
    )?;
    pfq(&spec, ctx)
}

/// Right-hand side of
/// `F(a,b;1;1-t) = C_{a,b} (-z)^a F(a,a;1+a-b;z) + C_{b,a} (-z)^b F(b,b;1-a+b;z)`,
/// `z = 1/(1-t)`, principal powers.
pub fn connection_15_8_2(a: &XReal, b: &XReal, t: &XComplex, ctx: &Context) -> Result<XComplex> {
    if integer_difference(a, b) {
        return Err(Error::Degenerate("connection formula needs a - b not an integer".into()));
    }
    let bits = ctx.bits();
    let one = XComplex::one(bits);
    let omt = &one - &t.with_bits(bits);
    if omt.is_zero() {
        return Err(Error::Domain("t = 1".into()));
    }
    let z = omt.recip();
    if z.abs() >= XReal::one(bits) {
        return Err(Error::Divergence("connection formula needs |1 - t| > 1".into()));
    }
    let (a, b) = (a.with_bits(bits), b.with_bits(bits));
    let r1 = ctx.int(1);
    let mz = -&z;
    let t1 = gauss_2f1(&a, &a, &(&(&r1 + &a) - &b), &z, ctx)?;
    let t2 = gauss_2f1(&b, &b, &(&(&r1 + &b) - &a), &z, ctx)?;
    let c1 = cap_c(&a, &b, ctx)?;
    let c2 = cap_c(&b, &a, ctx)?;
    Ok(&(&mz.pow_real(&a)? * &t1).scale(&c1) + &(&mz.pow_real(&b)? * &t2).scale(&c2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::beta;

    fn ctx() -> Context {
        Context::new(40)
    }

    fn r(c: &Context, s: &str) -> XReal {
        c.parse(s).unwrap()
    }

    fn near(x: &XReal, y: &XReal, k: i64, c: &Context) {
        let d = (x - y).abs();
        assert!(d < c.ten_pow_neg(k), "{x} vs {y} (diff {})", d.to_string_digits(5));
    }

    #[test]
    fn pfq_basics() {
        let c = ctx();
        let spec = HGSpec::new(vec![c.ratio(1, 3)], vec![], XComplex::zero(c.bits())).unwrap();
        assert_eq!(pfq(&spec, &c).unwrap().re, c.int(1));
        // 2F1(a, b; b; z) = (1 - z)^(-a)
        let (a, b, z) = (c.ratio(1, 3), c.ratio(7, 5), r(&c, "0.4"));
        let spec = HGSpec::new(vec![a.clone(), b.clone()], vec![b], XComplex::from_real(z.clone())).unwrap();
        let v = pfq(&spec, &c).unwrap();
        near(&v.re, &(c.int(1) - z).powf(&-a), 43, &c);
        // Rogers-Zudilin 3F2 value
        let spec = HGSpec::new(
            vec![c.ratio(1, 2), c.ratio(1, 2), c.ratio(1, 2)],
            vec![c.ratio(3, 2), c.int(1)],
            XComplex::from_real(c.ratio(1, 4)),
        )
        .unwrap();
        near(&pfq(&spec, &c).unwrap().re, &r(&c, "1.0228481341070074445665488529518128923710504811695"), 45, &c);
    }

    #[test]
    fn pfq_errors() {
        let c = ctx();
        assert!(HGSpec::new(vec![c.int(1)], vec![c.int(-2)], XComplex::zero(c.bits())).is_err());
        let spec = HGSpec::new(vec![c.int(1), c.int(1)], vec![c.int(2)], XComplex::from_real(c.int(2))).unwrap();
        assert!(matches!(pfq(&spec, &c), Err(Error::Divergence(_))));
        // |z| = 1 with zero parameter excess diverges
        let spec = HGSpec::new(vec![c.int(1), c.int(1)], vec![c.int(2)], XComplex::from_real(c.int(1))).unwrap();
        assert!(matches!(pfq(&spec, &c), Err(Error::Divergence(_))));
        // slowly convergent boundary case exceeds the cap
        let small = c.with_max_terms(1000);
        let spec = HGSpec::new(
            vec![c.ratio(1, 2), c.ratio(1, 2), c.ratio(1, 2)],
            vec![c.int(1), c.ratio(3, 2)],
            XComplex::from_real(c.int(1)),
        )
        .unwrap();
        assert!(matches!(pfq(&spec, &small), Err(Error::MaxTermsExceeded(_))));
        // terminating series anywhere
        let spec = HGSpec::new(vec![c.int(-2), c.int(1)], vec![c.int(1)], XComplex::from_real(c.int(5))).unwrap();
        near(&pfq(&spec, &c).unwrap().re, &c.int(16), 45, &c);
    }

    #[test]
    fn gauss_continuation() {
        let c = ctx();
        let h = c.ratio(1, 2);
        let v = gauss_2f1(&h, &h, &c.int(1), &XComplex::from_real(c.int(-5)), &c).unwrap();
        near(&v.re, &r(&c, "0.60829269254384169531837564865057460005935366968999"), 44, &c);
        let v = gauss_2f1(&c.ratio(1, 3), &c.ratio(2, 3), &c.int(1), &XComplex::from_real(c.int(-4)), &c).unwrap();
        near(&v.re, &r(&c, "0.67811672549916246043887656266855657232384451855207"), 44, &c);
        let v = gauss_2f1(&c.ratio(1, 6), &c.ratio(5, 6), &c.int(1), &XComplex::from_real(r(&c, "-16.5")), &c).unwrap();
        near(&v.re, &r(&c, "0.65056755150834879287516897256792678778780025493149"), 44, &c);
        assert!(gauss_2f1(&h, &h, &c.int(1), &XComplex::from_real(c.int(2)), &c).is_err());
        let v = gauss_2f1_cut(&c.ratio(1, 3), &c.ratio(2, 3), &c.int(1), &c.int(5), CutSide::Above, &c).unwrap();
        near(&v.re, &r(&c, "0.5473447527943555105310375291819147939593930627732"), 44, &c);
        near(&v.im, &r(&c, "0.58726631101339351246245976239181116343275531814484"), 44, &c);
    }

    #[test]
    fn connection_formula() {
        let c = ctx();
        let v = connection_15_8_2(&c.ratio(1, 3), &c.ratio(2, 3), &XComplex::from_real(c.int(-4)), &c).unwrap();
        let w = gauss_2f1_cut(&c.ratio(1, 3), &c.ratio(2, 3), &c.int(1), &c.int(5), CutSide::Above, &c).unwrap();
        near(&v.re, &w.re, 44, &c);
        near(&v.im, &w.im, 44, &c);
        let v = connection_15_8_2(&c.ratio(1, 2), &c.ratio(1, 3), &XComplex::from_real(c.int(3)), &c).unwrap();
        let w = gauss_2f1(&c.ratio(1, 2), &c.ratio(1, 3), &c.int(1), &XComplex::from_real(c.int(-2)), &c).unwrap();
        near(&v.re, &w.re, 44, &c);
        assert!(v.im.abs() < c.ten_pow_neg(44));
        let h = c.ratio(1, 2);
        assert!(connection_15_8_2(&h, &h, &XComplex::from_real(c.int(3)), &c).is_err());
    }

    #[test]
    fn f_ab_shape() {
        let c = ctx();
        assert_eq!(f_ab(&c.ratio(1, 2), &c.ratio(1, 3), &XComplex::zero(c.bits()), &c).unwrap().re, c.int(1));
        let z = XComplex::from_real(c.ratio(1, 4));
        let v = f_ab(&c.ratio(1, 2), &c.ratio(1, 3), &z, &c).unwrap();
        let h = c.ratio(1, 2);
        let spec = HGSpec::new(vec![h.clone(), h.clone(), h], vec![c.ratio(7, 6), c.ratio(3, 2)], z).unwrap();
        near(&v.re, &pfq(&spec, &c).unwrap().re, 48, &c);
        assert!(f_ab(&c.ratio(1, 2), &c.ratio(3, 2), &XComplex::zero(c.bits()), &c).is_err());
    }

    #[test]
    fn f_ab_terms_match_pochhammer_products() {
        let c = ctx();
        let (a, b, z) = (c.ratio(1, 6), c.ratio(5, 6), c.parse("0.3").unwrap());
        let spec = HGSpec::new(
            vec![a.clone(), a.clone(), a.clone()],
            vec![&(&c.int(1) + &a) - &b, &a + &c.int(1)],
            XComplex::from_real(z.clone()),
        )
        .unwrap();
        let terms = pfq_terms(&spec, 20, &c);
        let poch = |x: &XReal, n: usize| (0..n).fold(c.int(1), |acc, k| &acc * &x.add_i(k as i64));
        let l1 = &(&c.int(1) + &a) - &b;
        let l2 = &a + &c.int(1);
        for (n, t) in terms.iter().enumerate() {
            let fact = (1..=n as i64).fold(c.int(1), |acc, k| acc.mul_i(k));
            let expect = &(&poch(&a, n).powi(3) * &z.powi(n as i64)) / &(&(&poch(&l1, n) * &poch(&l2, n)) * &fact);
            near(&t.re, &expect, 45, &c);
        }
    }

    #[test]
    fn primitive_paths() {
        let c = ctx();
        let h = c.ratio(1, 2);
        assert!(g_primitive(&h, &h, &c.int(0), &c).unwrap().is_zero());
        let s = g_primitive_series(&h, &h, &h, &c).unwrap();
        let q = g_primitive_quadrature(&h, &h, &h, &c).unwrap();
        near(&s, &r(&c, "0.14840690603589836898716822097191643730373813010483"), 44, &c);
        near(&s, &q, 44, &c);
        let v = g_primitive(&h, &h, &c.int(-1), &c).unwrap();
        near(&v, &r(&c, "-0.20074426433442570025173088083780711730377533833153"), 44, &c);
        let v = g_primitive(&h, &h, &c.int(-16), &c).unwrap();
        near(&v, &r(&c, "-1.1974223475316615602151989907601258025189438237797"), 44, &c);
        assert!(g_primitive(&h, &h, &c.int(1), &c).is_err());
    }

    #[test]
    fn primitive_derivative() {
        let c = ctx();
        let (a, b) = (c.ratio(1, 3), c.ratio(2, 3));
        let x = c.parse("-0.3").unwrap();
        let step = c.ten_pow_neg(6);
        let gp = g_primitive(&a, &b, &(&x + &step), &c).unwrap();
        let gm = g_primitive(&a, &b, &(&x - &step), &c).unwrap();
        let deriv = (&gp - &gm) / &step.ldexp(1);
        let f = gauss_2f1(&a, &b, &c.int(1), &XComplex::from_real(x.clone()), &c).unwrap();
        near(&(&x * &deriv), &(&f.re - &c.int(1)), 8, &c);
    }

    #[test]
    fn oracles() {
        let c = ctx();
        let (a, b) = (c.ratio(1, 3), c.ratio(2, 3));
        let v = euler_integral_oracle(&a, &b, &c.int(0), &c).unwrap();
        near(&v, &beta(&a, &b, &c).unwrap(), 20, &c);
        let v = euler_integral_oracle(&a, &b, &c.ratio(1, 2), &c).unwrap();
        let f = gauss_2f1(&a, &b, &c.int(1), &XComplex::from_real(c.ratio(1, 2)), &c).unwrap();
        near(&v, &(&beta(&a, &b, &c).unwrap() * &f.re), 20, &c);
        let h = c.ratio(1, 2);
        let v = euler_integral_oracle(&h, &h, &c.int(-3), &c).unwrap();
        near(&v, &r(&c, "2.1565156474996432354386749988003220288641102164928"), 20, &c);
        assert!(euler_integral_oracle(&h, &h, &c.int(1), &c).is_err());
        let z = XComplex::from_real(r(&c, "0.37"));
        let g = gauss_2f1(&h, &h, &c.int(1), &z, &c).unwrap();
        near(&agm_oracle(&z, &c).unwrap().re, &g.re, 44, &c);
        assert_eq!(agm_oracle(&XComplex::zero(c.bits()), &c).unwrap().re, c.int(1));
        let z = XComplex::new(r(&c, "-0.5"), r(&c, "0.6"));
        let g = gauss_2f1(&h, &h, &c.int(1), &z, &c).unwrap();
        let o = agm_oracle(&z, &c).unwrap();
        near(&o.re, &g.re, 44, &c);
        near(&o.im, &g.im, 44, &c);
    }
}
