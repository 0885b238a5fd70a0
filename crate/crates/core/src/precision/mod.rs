//! Extended-precision scalars and the evaluation context.
//!
//! [`XReal`] is an arbitrary-precision binary float (BigInt mantissa,
//! i64 exponent). The decimal precision `P` lives in [`Context`]; every
//! computation runs at `P + 10` guard digits and results are reported at
//! `P` digits.

pub mod consts;
mod xcomplex;
mod xreal;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use xcomplex::XComplex;
pub use xreal::XReal;

use crate::error::{Error, Result};

/// Exact rational number (reduced, positive denominator).
pub type Rational = num_rational::BigRational;

pub const DEFAULT_DIGITS: u32 = 40;
pub const DEFAULT_MAX_TERMS: u64 = 10_000_000;

/// Precision and series limits passed to every evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Context {
    /// Reported decimal digits `P`.
    pub digits: u32,
    /// Cap on the number of series terms.
    pub max_terms: u64,
}

impl Default for Context {
    fn default() -> Self {
        Context { digits: DEFAULT_DIGITS, max_terms: DEFAULT_MAX_TERMS }
    }
}

impl Context {
    pub const GUARD_DIGITS: u32 = 10;

    pub fn new(digits: u32) -> Context {
        Context { digits, ..Context::default() }
    }

    /// Default context, with `HGREG_PREC` overriding the digit count.
    pub fn from_env() -> Context {
        let digits = std::env::var("HGREG_PREC")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_DIGITS);
        Context::new(digits)
    }

    pub fn with_max_terms(self, max_terms: u64) -> Context {
        Context { max_terms, ..self }
    }

    /// Same limits, `extra` more digits.
    pub fn raised(self, extra: u32) -> Context {
        Context { digits: self.digits + extra, ..self }
    }

    pub fn with_digits(self, digits: u32) -> Context {
        Context { digits, ..self }
    }

    /// Working precision in bits (`P` plus guard digits).
    pub fn bits(&self) -> u32 {
        digits_to_bits(self.digits + Self::GUARD_DIGITS)
    }

    pub fn int(&self, k: i64) -> XReal {
        XReal::from_i64(k, self.bits())
    }

    pub fn ratio(&self, p: i64, q: i64) -> XReal {
        XReal::from_i64(p, self.bits() + 2) .div_i(q).with_bits(self.bits())
    }

    pub fn rational(&self, r: &Rational) -> XReal {
        rational_to_xreal(r, self.bits())
    }

    pub fn pi(&self) -> XReal {
        consts::pi(self.bits())
    }

    pub fn euler_gamma(&self) -> XReal {
        consts::euler_gamma(self.bits())
    }

    /// `10^(-k)` at working precision.
    pub fn ten_pow_neg(&self, k: i64) -> XReal {
        ten_pow(-k, self.bits())
    }

    pub fn parse(&self, s: &str) -> Result<XReal> {
        XReal::parse(s, self.bits())
    }

    pub fn parse_complex(&self, s: &str) -> Result<XComplex> {
        XComplex::parse(s, self.bits())
    }

    pub fn complex(&self, re: XReal, im: XReal) -> XComplex {
        XComplex::new(re.with_bits(self.bits()), im.with_bits(self.bits()))
    }
}

pub fn digits_to_bits(d: u32) -> u32 {
    (d as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 4
}

/// `10^k` (`k` may be negative).
pub fn ten_pow(k: i64, bits: u32) -> XReal {
    let p = BigInt::from(10).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        XReal::from_bigint(&p, bits)
    } else {
        XReal::from_ratio(&BigInt::from(1), &p, bits)
    }
}

/// `pow_principal(z, a) = exp(a log z)` with `arg z` in `(-pi, pi]`.
pub fn pow_principal(z: &XComplex, a: &XReal) -> Result<XComplex> {
    z.pow_real(a)
}

pub fn rational_to_xreal(r: &Rational, bits: u32) -> XReal {
    XReal::from_ratio(r.numer(), r.denom(), bits)
}

/// Exact `p/q` or integer; decimals are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("expected an exact rational p/q or integer, got {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Exact rational from a decimal or fraction string ("0.25" allowed).
pub fn parse_exact(s: &str) -> Result<Rational> {
    if let Ok(r) = parse_rational(s) {
        return Ok(r);
    }
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (ip, fp) = body.split_once('.').ok_or_else(|| Error::Parse(s.to_string()))?;
    let digits: BigInt = format!("{ip}{fp}").parse().map_err(|_| Error::Parse(s.to_string()))?;
    let r = Rational::new(digits, BigInt::from(10).pow(fp.len() as u32));
    Ok(if neg { -r } else { r })
}

pub fn rational_to_string(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `|x - y| <= tol * max(1, |y|)`.
pub fn close(x: &XReal, y: &XReal, tol: &XReal) -> bool {
    let scale = y.abs().max(XReal::one(y.bits()));
    (x - y).abs() <= tol * &scale
}

pub fn rational_abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: &str = "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803";
    const GAMMA: &str = "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467";
    const LN2: &str = "0.69314718055994530941723212145817656807550013436025525412068000949339362196969471560586";
    const E: &str = "2.71828182845904523536028747135266249775724709369995957496696762772407663035354759457138";

    fn ctx() -> Context {
        Context::new(60)
    }

    fn agree(x: &XReal, s: &str, digits: i64) {
        let y = XReal::parse(s, x.bits()).unwrap();
        let err = (x - &y).abs();
        assert!(err.log2_abs() < -(digits as f64) * 3.3219, "{x} vs {s}");
    }

    #[test]
    fn constants() {
        let c = ctx();
        agree(&c.pi(), PI, 62);
        agree(&c.euler_gamma(), GAMMA, 62);
        agree(&consts::ln2(c.bits()), LN2, 62);
        agree(&c.int(1).exp(), E, 62);
        assert_eq!(Context::new(15).pi().to_string_digits(15), "3.14159265358979");
        assert_eq!(Context::new(10).euler_gamma().to_string_digits(10), "0.5772156649");
    }

    #[test]
    fn pi_truncation_is_stable() {
        let a = Context::new(40).pi().to_string_digits(40);
        let b = Context::new(60).pi().to_string_digits(60);
        assert_eq!(&a[..38], &b[..38]);
    }

    #[test]
    fn exp_ln_roundtrip() {
        let c = ctx();
        for s in ["0.001", "0.5", "1", "2.5", "37", "1e-30", "12345.678"] {
            let x = c.parse(s).unwrap();
            let y = x.ln().exp();
            assert!((&y - &x).abs() <= &x.abs() * &c.ten_pow_neg(62), "{s}");
        }
        let x = c.parse("-3.75").unwrap();
        assert!((x.exp().ln() - &x).abs() < c.ten_pow_neg(62));
    }

    #[test]
    fn trig() {
        let c = ctx();
        for s in ["0.1", "1", "-2.5", "10", "100.25"] {
            let x = c.parse(s).unwrap();
            let (sn, cs) = x.sin_cos();
            assert!((sn.sqr() + cs.sqr() - c.int(1)).abs() < c.ten_pow_neg(62));
        }
        let q = c.pi().ldexp(-2);
        agree(&q.sin(), "0.70710678118654752440084436210484903928483593768847403658833986899536623923105351942519", 62);
        agree(&c.int(1).atan(), &(c.pi().ldexp(-2)).to_string_digits(70), 62);
        agree(&c.int(-3).atan(), "-1.249045772398254425829917077281090123077829404129896719054669236797152", 62);
        let a = XReal::atan2(&c.int(0), &c.int(-1));
        agree(&a, PI, 62);
    }

    #[test]
    fn sqrt_and_pow() {
        let c = ctx();
        agree(&c.int(2).sqrt(), "1.41421356237309504880168872420969807856967187537694807317667973799", 62);
        let z = XComplex::from_real(c.int(-1));
        let r = pow_principal(&z, &c.ratio(1, 2)).unwrap();
        assert!(r.re.abs() < c.ten_pow_neg(60));
        assert!((&r.im - &c.int(1)).abs() < c.ten_pow_neg(60));
        let r = pow_principal(&XComplex::from_real(c.ratio(1, 4)), &c.ratio(1, 2)).unwrap();
        agree(&r.re, "0.5", 62);
        let r = pow_principal(&XComplex::one(c.bits()), &c.ratio(1, 2)).unwrap();
        assert_eq!(r.re, c.int(1));
        assert!(pow_principal(&XComplex::zero(c.bits()), &c.int(0)).is_err());
        assert!(pow_principal(&XComplex::zero(c.bits()), &c.int(-1)).is_err());
    }

    #[test]
    fn complex_sqrt_branch() {
        let c = ctx();
        let z = XComplex::new(c.int(-4), c.int(0));
        let s = z.sqrt();
        assert_eq!(s.im, c.int(2));
        let w = XComplex::new(c.int(-4), c.parse("-1e-30").unwrap()).sqrt();
        assert!(w.im.is_negative());
    }

    #[test]
    fn decimal_roundtrip() {
        let c = ctx();
        let x = c.pi().mul_i(-12345).ldexp(-40);
        let s = x.to_string_digits(70);
        let y = c.parse(&s).unwrap();
        assert!((&x - &y).abs() <= &x.abs() * &c.ten_pow_neg(68));
        assert_eq!(c.parse("0.875").unwrap().to_string_digits(5), "0.87500");
        assert_eq!(c.parse("-1.5e3").unwrap().to_string_digits(4), "-1500");
        assert_eq!(c.parse("7/8").unwrap(), c.parse("0.875").unwrap());
        assert!(c.parse("abc").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(rational_to_string(&parse_rational("-15/16").unwrap()), "-15/16");
        assert_eq!(rational_to_string(&parse_rational("6/4").unwrap()), "3/2");
        assert!(parse_rational("0.5").is_err());
        assert_eq!(rational_to_string(&parse_exact("-0.25").unwrap()), "-1/4");
    }

    #[test]
    fn parse_complex() {
        let c = ctx();
        let z = c.parse_complex("0.3-0.1i").unwrap();
        assert_eq!(z.im, -c.parse("0.1").unwrap());
        let z = c.parse_complex("-2e-3+1e2i").unwrap();
        assert_eq!(z.re, c.parse("-0.002").unwrap());
        assert_eq!(c.parse_complex("i").unwrap().im, c.int(1));
    }
}
