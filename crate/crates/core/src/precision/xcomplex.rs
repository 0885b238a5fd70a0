use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{consts, XReal};
use crate::error::{Error, Result};

/// Complex number over [`XReal`]. `log`, `pow` and `sqrt` use the principal
/// branch with `arg z` in `(-pi, pi]`.
#[derive(Clone, PartialEq)]
pub struct XComplex {
    pub re: XReal,
    pub im: XReal,
}

impl XComplex {
    pub fn new(re: XReal, im: XReal) -> XComplex {
        XComplex { re, im }
    }

    pub fn from_real(re: XReal) -> XComplex {
        let bits = re.bits();
        XComplex { re, im: XReal::zero(bits) }
    }

    pub fn zero(bits: u32) -> XComplex {
        XComplex::from_real(XReal::zero(bits))
    }

    pub fn one(bits: u32) -> XComplex {
        XComplex::from_real(XReal::one(bits))
    }

    pub fn i(bits: u32) -> XComplex {
        XComplex { re: XReal::zero(bits), im: XReal::one(bits) }
    }

    pub fn bits(&self) -> u32 {
        self.re.bits().max(self.im.bits())
    }

    pub fn with_bits(&self, bits: u32) -> XComplex {
        XComplex { re: self.re.with_bits(bits), im: self.im.with_bits(bits) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> XComplex {
        XComplex { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm_sqr(&self) -> XReal {
        &self.re.sqr() + &self.im.sqr()
    }

    pub fn abs(&self) -> XReal {
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        self.norm_sqr().sqrt()
    }

    pub fn arg(&self) -> XReal {
        XReal::atan2(&self.im, &self.re)
    }

    pub fn scale(&self, k: &XReal) -> XComplex {
        XComplex { re: &self.re * k, im: &self.im * k }
    }

    pub fn mul_i(&self, k: i64) -> XComplex {
        XComplex { re: self.re.mul_i(k), im: self.im.mul_i(k) }
    }

    pub fn div_i(&self, k: i64) -> XComplex {
        XComplex { re: self.re.div_i(k), im: self.im.div_i(k) }
    }

    pub fn ldexp(&self, k: i64) -> XComplex {
        XComplex { re: self.re.ldexp(k), im: self.im.ldexp(k) }
    }

    /// Multiply by `i`.
    pub fn times_i(&self) -> XComplex {
        XComplex { re: -&self.im, im: self.re.clone() }
    }

    pub fn recip(&self) -> XComplex {
        let d = self.norm_sqr();
        XComplex { re: &self.re / &d, im: -(&self.im / &d) }
    }

    pub fn sqr(&self) -> XComplex {
        self * self
    }

    pub fn exp(&self) -> XComplex {
        let r = self.re.exp();
        if self.im.is_zero() {
            return XComplex::from_real(r);
        }
        let (s, c) = self.im.sin_cos();
        XComplex { re: &r * &c, im: &r * &s }
    }

    /// Principal logarithm; error at zero.
    pub fn ln(&self) -> Result<XComplex> {
        if self.is_zero() {
            return Err(Error::Domain("log(0)".into()));
        }
        let bits = self.bits();
        let re = if self.im.is_zero() {
            self.re.abs().ln()
        } else {
            self.norm_sqr().with_bits(bits + 4).ln().ldexp(-1).with_bits(bits)
        };
        Ok(XComplex { re, im: self.arg() })
    }

    /// `exp(a log z)` on the principal branch.
    pub fn pow_real(&self, a: &XReal) -> Result<XComplex> {
        if self.is_zero() {
            if a.is_positive() {
                return Ok(XComplex::zero(self.bits()));
            }
            return Err(Error::Domain("0^a with a <= 0".into()));
        }
        if self.im.is_zero() && self.re.is_positive() {
            return Ok(XComplex::from_real(self.re.powf(a)));
        }
        let bits = self.bits().max(a.bits());
        let l = self.with_bits(bits + 10).ln()?;
        Ok(l.scale(&a.with_bits(bits + 10)).exp().with_bits(bits))
    }

    pub fn pow_complex(&self, a: &XComplex) -> Result<XComplex> {
        if self.is_zero() {
            if a.re.is_positive() {
                return Ok(XComplex::zero(self.bits()));
            }
            return Err(Error::Domain("0^a with Re a <= 0".into()));
        }
        let bits = self.bits().max(a.bits());
        let l = self.with_bits(bits + 10).ln()?;
        Ok((&l * &a.with_bits(bits + 10)).exp().with_bits(bits))
    }

    pub fn powi(&self, n: i64) -> XComplex {
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut result = XComplex::one(self.bits());
        let mut base = self.clone();
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = base.sqr();
            }
        }
        result
    }

    /// Principal square root (`sqrt(-1) = i`).
    pub fn sqrt(&self) -> XComplex {
        let bits = self.bits();
        if self.is_zero() {
            return XComplex::zero(bits);
        }
        if self.im.is_zero() {
            return if self.re.is_negative() {
                XComplex { re: XReal::zero(bits), im: (-&self.re).sqrt() }
            } else {
                XComplex::from_real(self.re.sqrt())
            };
        }
        let r = self.abs();
        if !self.re.is_negative() {
            let u = (&r + &self.re).ldexp(-1).sqrt();
            let v = &self.im / &u.ldexp(1);
            XComplex { re: u, im: v }
        } else {
            let mut v = (&r - &self.re).ldexp(-1).sqrt();
            if self.im.is_negative() {
                v = -v;
            }
            let u = &self.im / &v.ldexp(1);
            XComplex { re: u, im: v }
        }
    }

    /// `exp(2 pi i k / n)` with exact values at multiples of `1/4`.
    pub fn root_of_unity(k: i64, n: i64, bits: u32) -> XComplex {
        let k = k.rem_euclid(n);
        if 4 * k % n == 0 {
            let (re, im) = match 4 * k / n {
                0 => (1, 0),
                1 => (0, 1),
                2 => (-1, 0),
                _ => (0, -1),
            };
            return XComplex::new(XReal::from_i64(re, bits), XReal::from_i64(im, bits));
        }
        let theta = (consts::pi(bits + 8).ldexp(1).mul_i(k)).div_i(n);
        let (s, c) = theta.sin_cos();
        XComplex { re: c.with_bits(bits), im: s.with_bits(bits) }
    }

    pub fn to_string_digits(&self, digits: u32) -> String {
        let re = self.re.to_string_digits(digits);
        if self.im.is_zero() {
            return re;
        }
        let im = self.im.abs().to_string_digits(digits);
        let sign = if self.im.is_negative() { '-' } else { '+' };
        format!("{re}{sign}{im}i")
    }

    /// Parses `x`, `yi`, `x+yi`, `x-yi` with real parts as in [`XReal::parse`].
    pub fn parse(s: &str, bits: u32) -> Result<XComplex> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(body) = s.strip_suffix('i') {
            let bytes = body.as_bytes();
            let mut split = None;
            for k in (1..bytes.len()).rev() {
                if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
                    split = Some(k);
                    break;
                }
            }
            let (re, im) = match split {
                Some(k) => (&body[..k], &body[k..]),
                None => ("0", body),
            };
            let im = match im {
                "" | "+" => "1",
                "-" => "-1",
                v => v,
            };
            Ok(XComplex::new(XReal::parse(re, bits)?, XReal::parse(im, bits)?))
        } else {
            Ok(XComplex::from_real(XReal::parse(&s, bits)?))
        }
    }
}

impl fmt::Display for XComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = ((self.bits() as f64 * std::f64::consts::LOG10_2) as u32).saturating_sub(10).max(6);
        write!(f, "{}", self.to_string_digits(f.precision().map_or(d, |p| p as u32)))
    }
}

impl fmt::Debug for XComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XComplex({})", self.to_string_digits(20))
    }
}

impl From<XReal> for XComplex {
    fn from(x: XReal) -> XComplex {
        XComplex::from_real(x)
    }
}

impl Neg for XComplex {
    type Output = XComplex;
    fn neg(self) -> XComplex {
        XComplex { re: -self.re, im: -self.im }
    }
}

impl Neg for &XComplex {
    type Output = XComplex;
    fn neg(self) -> XComplex {
        XComplex { re: -&self.re, im: -&self.im }
    }
}

fn cmul(a: &XComplex, b: &XComplex) -> XComplex {
    if a.im.is_zero() {
        return XComplex { re: &a.re * &b.re, im: &a.re * &b.im };
    }
    if b.im.is_zero() {
        return XComplex { re: &a.re * &b.re, im: &a.im * &b.re };
    }
    XComplex {
        re: &(&a.re * &b.re) - &(&a.im * &b.im),
        im: &(&a.re * &b.im) + &(&a.im * &b.re),
    }
}

fn cdiv(a: &XComplex, b: &XComplex) -> XComplex {
    if b.im.is_zero() {
        return XComplex { re: &a.re / &b.re, im: &a.im / &b.re };
    }
    let d = b.norm_sqr();
    XComplex {
        re: &(&(&a.re * &b.re) + &(&a.im * &b.im)) / &d,
        im: &(&(&a.im * &b.re) - &(&a.re * &b.im)) / &d,
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&XComplex> for &XComplex {
            type Output = XComplex;
            fn $m(self, o: &XComplex) -> XComplex {
                $body(self, o)
            }
        }
        impl $tr<XComplex> for &XComplex {
            type Output = XComplex;
            fn $m(self, o: XComplex) -> XComplex {
                $body(self, &o)
            }
        }
        impl $tr<&XComplex> for XComplex {
            type Output = XComplex;
            fn $m(self, o: &XComplex) -> XComplex {
                $body(&self, o)
            }
        }
        impl $tr<XComplex> for XComplex {
            type Output = XComplex;
            fn $m(self, o: XComplex) -> XComplex {
                $body(&self, &o)
            }
        }
    };
}

binop!(Add, add, |a: &XComplex, b: &XComplex| XComplex {
    re: &a.re + &b.re,
    im: &a.im + &b.im
});
binop!(Sub, sub, |a: &XComplex, b: &XComplex| XComplex {
    re: &a.re - &b.re,
    im: &a.im - &b.im
});
binop!(Mul, mul, cmul);
binop!(Div, div, cdiv);
