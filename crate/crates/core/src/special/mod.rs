//! Gamma-family functions and dilogarithms.
//!
//! Gamma uses the Stirling series after an upward shift whose size grows
//! with the precision (so the Bernoulli tail reaches the working accuracy),
//! plus reflection for `Re z < 1/2`.

mod dilog;
mod gamma;

pub use dilog::{bloch_wigner, elliptic_dilog, li2};
pub use gamma::{bernoulli, beta, cap_b, cap_c, digamma, gamma, gamma_real, rgamma_real};

/// Value of the (real-valued) Bloch–Wigner function.
pub type DilogValue = crate::precision::XReal;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::{Context, XComplex, XReal};

    fn ctx() -> Context {
        Context::new(40)
    }

    fn tol(c: &Context, k: i64) -> XReal {
        c.ten_pow_neg(k)
    }

    fn real(c: &Context, s: &str) -> XReal {
        c.parse(s).unwrap()
    }

    fn cx(c: &Context, re: &str, im: &str) -> XComplex {
        XComplex::new(real(c, re), real(c, im))
    }

    #[test]
    fn bernoulli_numbers() {
        assert_eq!(bernoulli(1).to_string(), "-1/2");
        assert_eq!(bernoulli(2).to_string(), "1/6");
        assert_eq!(bernoulli(12).to_string(), "-691/2730");
        assert_eq!(bernoulli(13).to_string(), "0");
    }

    #[test]
    fn gamma_values() {
        let c = ctx();
        assert!((gamma_real(&c.int(1), &c).unwrap() - c.int(1)).abs() < tol(&c, 45));
        assert!((gamma_real(&c.int(5), &c).unwrap() - c.int(24)).abs() < tol(&c, 43));
        let rp = c.pi().sqrt();
        assert!((gamma_real(&c.ratio(1, 2), &c).unwrap() - rp).abs() < tol(&c, 45));
        // Gamma(-1/2) = -2 sqrt(pi)
        let g = gamma_real(&c.ratio(-1, 2), &c).unwrap();
        assert!((g + c.pi().sqrt().mul_i(2)).abs() < tol(&c, 45));
        assert!(gamma_real(&c.int(0), &c).is_err());
        assert!(gamma_real(&c.int(-3), &c).is_err());
    }

    #[test]
    fn gamma_complex_reflection() {
        let c = ctx();
        let z = cx(&c, "0.3", "1.7");
        let one = XComplex::one(c.bits());
        let g1 = gamma(&z, &c).unwrap();
        let g2 = gamma(&(&one - &z), &c).unwrap();
        // Gamma(z) Gamma(1-z) sin(pi z) = pi
        let pz = z.scale(&c.pi());
        let (s, co) = pz.re.sin_cos();
        let e = pz.im.exp();
        let sinpz = XComplex::new(&s * &(&e + &e.recip()).ldexp(-1), &co * &(&e - &e.recip()).ldexp(-1));
        let prod = &(&g1 * &g2) * &sinpz;
        assert!((&prod.re - &c.pi()).abs() < tol(&c, 42));
        assert!(prod.im.abs() < tol(&c, 42));
        // 1/Gamma(1+i) known modulus: |Gamma(1+i)|^2 = pi / sinh(pi)
        let g = gamma(&cx(&c, "1", "1"), &c).unwrap();
        let ep = c.pi().exp();
        let sinh = (&ep - &ep.recip()).ldexp(-1);
        assert!((g.norm_sqr() - c.pi() / sinh).abs() < tol(&c, 42));
    }

    #[test]
    fn digamma_values() {
        let c = ctx();
        let g = c.euler_gamma();
        assert!((digamma(&c.int(1), &c).unwrap() + &g).abs() < tol(&c, 45));
        assert!((digamma(&c.int(2), &c).unwrap() - (c.int(1) - &g)).abs() < tol(&c, 45));
        let ln2 = c.int(2).ln();
        let v = digamma(&c.ratio(1, 2), &c).unwrap();
        assert!((v + &g + ln2.mul_i(2)).abs() < tol(&c, 45));
        assert!(digamma(&c.int(-2), &c).is_err());
        let x = c.parse("-2.7").unwrap();
        let d = digamma(&x.add_i(1), &c).unwrap() - digamma(&x, &c).unwrap();
        assert!((d - x.recip()).abs() < tol(&c, 43));
    }

    #[test]
    fn beta_family() {
        let c = ctx();
        assert!((beta(&c.int(1), &c.int(1), &c).unwrap() - c.int(1)).abs() < tol(&c, 45));
        let (a, b) = (c.ratio(1, 3), c.ratio(2, 3));
        let cb = cap_b(&a, &b, &c).unwrap();
        let cc = cap_c(&a, &b, &c).unwrap();
        let s = (&a * &c.pi()).sin();
        assert!((&cb - &(&cc * &c.pi() / &s)).abs() < tol(&c, 42));
        assert!(cap_b(&a, &a, &c).is_err());
        // B_{1/2,5/6} = Gamma(1/2) Gamma(1/3) / Gamma(5/6)
        let v = cap_b(&c.ratio(1, 2), &c.ratio(5, 6), &c).unwrap();
        let w = gamma_real(&c.ratio(1, 2), &c).unwrap() * gamma_real(&c.ratio(1, 3), &c).unwrap()
            / gamma_real(&c.ratio(5, 6), &c).unwrap();
        assert!((v - w).abs() < tol(&c, 42));
    }

    #[test]
    fn li2_values() {
        let c = ctx();
        assert!(li2(&XComplex::zero(c.bits()), &c).is_zero());
        let v = li2(&XComplex::one(c.bits()), &c);
        assert!((v.re - c.pi().sqr().div_i(6)).abs() < tol(&c, 45));
        // li2(-1) = -pi^2/12
        let v = li2(&XComplex::from_real(c.int(-1)), &c);
        assert!((v.re + c.pi().sqr().div_i(12)).abs() < tol(&c, 45));
        // li2(1/2) = pi^2/12 - log(2)^2/2
        let v = li2(&XComplex::from_real(c.ratio(1, 2)), &c);
        let e = c.pi().sqr().div_i(12) - c.int(2).ln().sqr().ldexp(-1);
        assert!((v.re - e).abs() < tol(&c, 45));
        let z = cx(&c, "0.3", "0.1");
        let one = XComplex::one(c.bits());
        let w = &one - &z;
        let lhs = &li2(&z, &c) + &li2(&w, &c);
        let mut rhs = -(&z.ln().unwrap() * &w.ln().unwrap());
        rhs.re = &rhs.re + &c.pi().sqr().div_i(6);
        assert!((&lhs - &rhs).abs() < tol(&c, 44));
        // li2(2) from below: pi^2/4 - i pi log 2
        let v = li2(&XComplex::from_real(c.int(2)), &c);
        assert!((&v.re - &c.pi().sqr().div_i(4)).abs() < tol(&c, 44));
        assert!((&v.im + &(c.pi() * c.int(2).ln())).abs() < tol(&c, 44));
    }

    #[test]
    fn bloch_wigner_values() {
        let c = ctx();
        for s in ["0.3", "-2", "5", "0.999", "-0.5"] {
            let d = bloch_wigner(&XComplex::from_real(real(&c, s)), &c).unwrap();
            assert!(d.abs() < tol(&c, 44), "{s}: {d}");
        }
        let z = cx(&c, "0.2", "0.7");
        let a = bloch_wigner(&z, &c).unwrap();
        let b = bloch_wigner(&z.conj(), &c).unwrap();
        assert!((&a + &b).abs() < tol(&c, 44));
        let catalan = real(&c, "0.91596559417721901505460351493238411077414937428167");
        let d = bloch_wigner(&XComplex::i(c.bits()), &c).unwrap();
        assert!((d - catalan).abs() < tol(&c, 44));
        assert!(bloch_wigner(&XComplex::zero(c.bits()), &c).is_err());
        assert!(bloch_wigner(&XComplex::one(c.bits()), &c).is_err());
    }

    #[test]
    fn elliptic_dilog_identities() {
        let c = ctx();
        let q = XComplex::from_real(real(&c, "0.1"));
        let x = cx(&c, "0.3", "0.4");
        let base = elliptic_dilog(&q, &x, &c).unwrap();
        let shifted = elliptic_dilog(&q, &(&q * &x), &c).unwrap();
        assert!((&base - &shifted).abs() < tol(&c, 32));
        let inv = elliptic_dilog(&q, &x.recip(), &c).unwrap();
        assert!((&base + &inv).abs() < tol(&c, 32));
        assert!(elliptic_dilog(&XComplex::one(c.bits()), &x, &c).is_err());
    }

    #[test]
    fn elliptic_dilog_brute_force() {
        let c = Context::new(30);
        let q = XComplex::from_real(c.parse("0.05").unwrap());
        let x = XComplex::i(c.bits());
        let v = elliptic_dilog(&q, &x, &c).unwrap();
        let mut s = XReal::zero(c.bits());
        let mut y = x.clone();
        let mut w = x.clone();
        s = &s + &bloch_wigner(&x, &c).unwrap();
        for _ in 0..60 {
            y = &y * &q;
            w = &w / &q;
            s = &s + &bloch_wigner(&y, &c).unwrap() + bloch_wigner(&w, &c).unwrap();
        }
        assert!((v - s).abs() < tol(&c, 30));
    }
}
