use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::consts;
use crate::error::{Error, Result};

/// Binary floating point number `man * 2^exp` whose mantissa is kept to at
/// most `bits` bits.
///
/// Binary operations run at the larger of the two operand precisions and
/// round half away from zero.
#[derive(Clone)]
pub struct XReal {
    man: BigInt,
    exp: i64,
    bits: u32,
}

fn round_shr(m: &BigInt, k: u64) -> BigInt {
    if k == 0 {
        return m.clone();
    }
    let mag: BigUint = (m.magnitude() + (BigUint::one() << (k - 1))) >> k;
    BigInt::from_biguint(m.sign(), mag)
}

impl XReal {
    fn norm(man: BigInt, exp: i64, bits: u32) -> XReal {
        if man.is_zero() {
            return XReal { man, exp: 0, bits };
        }
        let len = man.bits();
        if len > bits as u64 {
            let k = len - bits as u64;
            let mut m = round_shr(&man, k);
            let mut e = exp + k as i64;
            if m.bits() > bits as u64 {
                m >>= 1u32;
                e += 1;
            }
            XReal { man: m, exp: e, bits }
        } else {
            XReal { man, exp, bits }
        }
    }

    pub fn zero(bits: u32) -> XReal {
        XReal { man: BigInt::zero(), exp: 0, bits }
    }

    pub fn one(bits: u32) -> XReal {
        XReal { man: BigInt::one(), exp: 0, bits }
    }

    pub fn from_i64(v: i64, bits: u32) -> XReal {
        XReal::norm(BigInt::from(v), 0, bits)
    }

    pub fn from_bigint(v: &BigInt, bits: u32) -> XReal {
        XReal::norm(v.clone(), 0, bits)
    }

    /// `man * 2^exp` rounded to `bits`.
    pub fn from_parts(man: BigInt, exp: i64, bits: u32) -> XReal {
        XReal::norm(man, exp, bits)
    }

    pub fn from_ratio(num: &BigInt, den: &BigInt, bits: u32) -> XReal {
        XReal::from_bigint(num, bits + 2) / XReal::from_bigint(den, bits + 2)
    }

    /// Exact conversion of a finite double.
    pub fn from_f64(v: f64, bits: u32) -> XReal {
        assert!(v.is_finite(), "non-finite f64");
        if v == 0.0 {
            return XReal::zero(bits);
        }
        let raw = v.to_bits();
        let sign = if raw >> 63 == 1 { -1i64 } else { 1 };
        let e = ((raw >> 52) & 0x7ff) as i64;
        let frac = raw & ((1u64 << 52) - 1);
        let (m, e) = if e == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), e - 1075)
        };
        XReal::norm(BigInt::from(m) * sign, e, bits)
    }

    /// Same value at a new precision (rounds when shortening).
    pub fn with_bits(&self, bits: u32) -> XReal {
        if self.man.bits() <= bits as u64 {
            XReal { man: self.man.clone(), exp: self.exp, bits }
        } else {
            XReal::norm(self.man.clone(), self.exp, bits)
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.man.is_positive()
    }

    pub fn signum(&self) -> i32 {
        match self.man.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> XReal {
        XReal { man: self.man.abs(), exp: self.exp, bits: self.bits }
    }

    /// Multiply by `2^k` (exact).
    pub fn ldexp(&self, k: i64) -> XReal {
        if self.is_zero() {
            return self.clone();
        }
        XReal { man: self.man.clone(), exp: self.exp + k, bits: self.bits }
    }

    /// Position of the leading bit: `2^(top-1) <= |x| < 2^top`.
    pub fn top(&self) -> i64 {
        if self.is_zero() {
            i64::MIN / 4
        } else {
            self.exp + self.man.bits() as i64
        }
    }

    /// Approximate `log2 |x|` (`-inf` for zero).
    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let len = self.man.bits() as i64;
        let shift = (len - 60).max(0);
        let head = (self.man.magnitude() >> shift as u64).to_f64().unwrap();
        head.log2() + (self.exp + shift) as f64
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let len = self.man.bits() as i64;
        let shift = (len - 64).max(0);
        let head = round_shr(&self.man, shift as u64).to_f64().unwrap();
        let mut e = self.exp + shift;
        let mut v = head;
        while e > 0 {
            let step = e.min(1000);
            v *= 2f64.powi(step as i32);
            e -= step;
        }
        while e < 0 {
            let step = (-e).min(1000);
            v *= 2f64.powi(-(step as i32));
            e += step;
        }
        v
    }

    /// `floor(x)` as an integer.
    pub fn floor_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.man << self.exp as u64
        } else {
            self.man.div_floor(&(BigInt::one() << (-self.exp) as u64))
        }
    }

    /// Nearest integer (half away from zero).
    pub fn round_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.man << self.exp as u64
        } else {
            round_shr(&self.man, (-self.exp) as u64)
        }
    }

    pub fn floor(&self) -> XReal {
        XReal::norm(self.floor_int(), 0, self.bits)
    }

    pub fn is_integer(&self) -> bool {
        if self.exp >= 0 || self.is_zero() {
            return true;
        }
        let k = (-self.exp) as u64;
        self.man.trailing_zeros().map_or(true, |z| z >= k)
    }

    /// Exact rational value.
    pub fn to_ratio(&self) -> (BigInt, BigInt) {
        if self.exp >= 0 {
            (&self.man << self.exp as u64, BigInt::one())
        } else {
            (self.man.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    fn max_bits(&self, o: &XReal) -> u32 {
        self.bits.max(o.bits)
    }

    fn add_ref(&self, o: &XReal) -> XReal {
        self.add_signed(o, false)
    }

    fn sub_ref(&self, o: &XReal) -> XReal {
        self.add_signed(o, true)
    }

    fn add_signed(&self, o: &XReal, negate: bool) -> XReal {
        let bits = self.max_bits(o);
        if o.is_zero() {
            return self.with_bits(bits);
        }
        if self.is_zero() {
            let r = o.with_bits(bits);
            return if negate { -r } else { r };
        }
        let (ta, tb) = (self.top(), o.top());
        if ta - tb > bits as i64 + 2 {
            return self.with_bits(bits);
        }
        if tb - ta > bits as i64 + 2 {
            let r = o.with_bits(bits);
            return if negate { -r } else { r };
        }
        let e = self.exp.min(o.exp);
        let ma = &self.man << (self.exp - e) as u64;
        let mb = &o.man << (o.exp - e) as u64;
        let m = if negate { ma - mb } else { ma + mb };
        XReal::norm(m, e, bits)
    }

    fn mul_ref(&self, o: &XReal) -> XReal {
        XReal::norm(&self.man * &o.man, self.exp + o.exp, self.max_bits(o))
    }

    fn div_ref(&self, o: &XReal) -> XReal {
        assert!(!o.is_zero(), "XReal division by zero");
        let bits = self.max_bits(o);
        if self.is_zero() {
            return XReal::zero(bits);
        }
        let s = (bits as i64 + 2 + o.man.bits() as i64 - self.man.bits() as i64).max(0);
        let q = (&self.man << s as u64) / &o.man;
        XReal::norm(q, self.exp - o.exp - s, bits)
    }

    pub fn mul_i(&self, k: i64) -> XReal {
        XReal::norm(&self.man * k, self.exp, self.bits)
    }

    pub fn div_i(&self, k: i64) -> XReal {
        self.div_ref(&XReal::from_i64(k, self.bits))
    }

    pub fn add_i(&self, k: i64) -> XReal {
        self.add_ref(&XReal::from_i64(k, self.bits))
    }

    pub fn recip(&self) -> XReal {
        XReal::one(self.bits).div_ref(self)
    }

    pub fn sqr(&self) -> XReal {
        self.mul_ref(self)
    }

    /// Literal in this number's precision.
    pub fn lit(&self, k: i64) -> XReal {
        XReal::from_i64(k, self.bits)
    }

    pub fn sqrt(&self) -> XReal {
        assert!(!self.is_negative(), "sqrt of negative XReal");
        if self.is_zero() {
            return self.clone();
        }
        let bits = self.bits;
        let len = self.man.bits() as i64;
        let mut s = (2 * bits as i64 + 4 - len).max(0);
        if (self.exp - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let m2 = self.man.magnitude() << s as u64;
        let r = m2.sqrt();
        XReal::norm(BigInt::from(r), (self.exp - s) / 2, bits)
    }

    pub fn powi(&self, n: i64) -> XReal {
        if n < 0 {
            return self.powi(-n).recip();
        }
        let mut result = XReal::one(self.bits);
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

    pub fn exp(&self) -> XReal {
        let bits = self.bits;
        if self.is_zero() {
            return XReal::one(bits);
        }
        let xf = self.to_f64();
        assert!(xf.abs() < 1e15, "exp argument out of range");
        let k = (xf / std::f64::consts::LN_2).round() as i64;
        let kbits = 64 - k.unsigned_abs().leading_zeros();
        let half = ((bits as f64).sqrt() / 2.0) as i64 + 4;
        let w = bits + 20 + half as u32;
        let r = if k == 0 {
            self.with_bits(w)
        } else {
            let l2 = consts::ln2(w + kbits);
            (self.with_bits(w + kbits) - l2.mul_i(k)).with_bits(w)
        };
        let r = r.ldexp(-half);
        let mut sum = XReal::one(w);
        let mut term = XReal::one(w);
        let mut n = 1i64;
        loop {
            term = (&term * &r).div_i(n);
            if term.is_zero() || term.top() < -(w as i64) {
                break;
            }
            sum = &sum + &term;
            n += 1;
        }
        for _ in 0..half {
            sum = sum.sqr();
        }
        sum.ldexp(k).with_bits(bits)
    }

    /// Natural logarithm; panics for `x <= 0`.
    pub fn ln(&self) -> XReal {
        assert!(self.is_positive(), "ln of non-positive XReal");
        let bits = self.bits;
        let w = bits + 20;
        let mut e2 = self.top();
        let mut y = self.with_bits(w).ldexp(-e2);
        // y in [1/2, 1): move to [1/sqrt2, sqrt2)
        if y.to_f64() < std::f64::consts::FRAC_1_SQRT_2 {
            y = y.ldexp(1);
            e2 -= 1;
        }
        let one = XReal::one(w);
        let u = (&y - &one) / (&y + &one);
        let u2 = u.sqr();
        let mut sum = u.clone();
        let mut pw = u;
        let mut n = 1i64;
        loop {
            pw = &pw * &u2;
            let term = pw.div_i(2 * n + 1);
            if term.is_zero() || term.top() < sum.top() - w as i64 - 2 {
                break;
            }
            sum = &sum + &term;
            n += 1;
        }
        let mut r = sum.ldexp(1);
        if e2 != 0 {
            let eb = 64 - e2.unsigned_abs().leading_zeros();
            r = (r.with_bits(w + eb) + consts::ln2(w + eb).mul_i(e2)).with_bits(w);
        }
        r.with_bits(bits)
    }

    /// `(sin x, cos x)`.
    pub fn sin_cos(&self) -> (XReal, XReal) {
        let bits = self.bits;
        if self.is_zero() {
            return (XReal::zero(bits), XReal::one(bits));
        }
        let xf = self.to_f64();
        assert!(xf.abs() < 1e15, "trig argument out of range");
        let k = (xf / std::f64::consts::FRAC_PI_2).round() as i64;
        let kbits = 64 - k.unsigned_abs().leading_zeros();
        let w = bits + 20;
        let r = if k == 0 {
            self.with_bits(w)
        } else {
            let half_pi = consts::pi(w + kbits).ldexp(-1);
            (self.with_bits(w + kbits) - half_pi.mul_i(k)).with_bits(w)
        };
        let r2 = r.sqr();
        let mut s = r.clone();
        let mut term = r.clone();
        let mut n = 1i64;
        loop {
            term = -(&term * &r2).div_i((2 * n) * (2 * n + 1));
            if term.is_zero() || term.top() < -(w as i64) {
                break;
            }
            s = &s + &term;
            n += 1;
        }
        let mut c = XReal::one(w);
        let mut term = XReal::one(w);
        let mut n = 1i64;
        loop {
            term = -(&term * &r2).div_i((2 * n - 1) * (2 * n));
            if term.is_zero() || term.top() < -(w as i64) {
                break;
            }
            c = &c + &term;
            n += 1;
        }
        let (s, c) = match k.rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        };
        (s.with_bits(bits), c.with_bits(bits))
    }

    pub fn sin(&self) -> XReal {
        self.sin_cos().0
    }

    pub fn cos(&self) -> XReal {
        self.sin_cos().1
    }

    pub fn atan(&self) -> XReal {
        let bits = self.bits;
        if self.is_zero() {
            return XReal::zero(bits);
        }
        let w = bits + 20;
        let x = self.with_bits(w);
        let one = XReal::one(w);
        if x.abs() > one {
            let half_pi = consts::pi(w).ldexp(-1);
            let base = x.recip().atan();
            let r = if x.is_negative() { -half_pi - base } else { half_pi - base };
            return r.with_bits(bits);
        }
        // two argument halvings: |x| <= tan(pi/16)
        let mut y = x;
        for _ in 0..2 {
            y = &y / &(&one + &(&one + &y.sqr()).sqrt());
        }
        let y2 = y.sqr();
        let mut sum = y.clone();
        let mut pw = y;
        let mut n = 1i64;
        loop {
            pw = -(&pw * &y2);
            let term = pw.div_i(2 * n + 1);
            if term.is_zero() || term.top() < sum.top() - w as i64 - 2 {
                break;
            }
            sum = &sum + &term;
            n += 1;
        }
        sum.ldexp(2).with_bits(bits)
    }

    /// Principal `atan2(y, x)` in `(-pi, pi]`; `atan2(0, 0) = 0`.
    pub fn atan2(y: &XReal, x: &XReal) -> XReal {
        let bits = y.bits.max(x.bits);
        if x.is_zero() {
            return match y.signum() {
                0 => XReal::zero(bits),
                1 => consts::pi(bits).ldexp(-1),
                _ => -consts::pi(bits).ldexp(-1),
            };
        }
        if y.is_zero() {
            return if x.is_negative() { consts::pi(bits) } else { XReal::zero(bits) };
        }
        let base = (y / x).atan();
        if x.is_positive() {
            base
        } else if y.is_negative() {
            base - consts::pi(bits)
        } else {
            base + consts::pi(bits)
        }
    }

    /// `x^a` for `x > 0` (and `0^a = 0` for `a > 0`).
    pub fn powf(&self, a: &XReal) -> XReal {
        if self.is_zero() {
            assert!(a.is_positive(), "0^a with a <= 0");
            return XReal::zero(self.bits.max(a.bits));
        }
        let bits = self.bits.max(a.bits);
        let w = bits + 10;
        (&a.with_bits(w) * &self.with_bits(w).ln()).exp().with_bits(bits)
    }

    pub fn max(self, o: XReal) -> XReal {
        if o > self {
            o
        } else {
            self
        }
    }

    pub fn min(self, o: XReal) -> XReal {
        if o < self {
            o
        } else {
            self
        }
    }

    /// Decimal digits with `digits` significant figures:
    /// returns `(negative, digit string, decimal exponent of first digit)`.
    pub fn to_decimal_parts(&self, digits: u32) -> (bool, String, i64) {
        let digits = digits.max(1);
        let neg = self.is_negative();
        let mag = self.man.magnitude().clone();
        let mut k = (self.log2_abs() * std::f64::consts::LOG10_2).floor() as i64;
        let lo = BigUint::from(10u32).pow(digits - 1);
        let hi = &lo * 10u32;
        loop {
            let s = digits as i64 - 1 - k;
            let (mut num, mut den) = (mag.clone(), BigUint::one());
            if s >= 0 {
                num *= BigUint::from(10u32).pow(s as u32);
            } else {
                den *= BigUint::from(10u32).pow((-s) as u32);
            }
            if self.exp >= 0 {
                num <<= self.exp as u64;
            } else {
                den <<= (-self.exp) as u64;
            }
            let n = (num * 2u32 + &den) / (den * 2u32);
            if n >= hi {
                k += 1;
                continue;
            }
            if n < lo {
                k -= 1;
                continue;
            }
            return (neg, n.to_string(), k);
        }
    }

    /// Decimal rendering with `digits` significant figures; positional
    /// notation for moderate magnitudes, scientific otherwise.
    pub fn to_string_digits(&self, digits: u32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (neg, ds, k) = self.to_decimal_parts(digits);
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        let n = ds.len() as i64;
        if (-6..=24).contains(&k) {
            if k < 0 {
                out.push_str("0.");
                for _ in 0..(-k - 1) {
                    out.push('0');
                }
                out.push_str(&ds);
            } else if k + 1 >= n {
                out.push_str(&ds);
                for _ in 0..(k + 1 - n) {
                    out.push('0');
                }
            } else {
                out.push_str(&ds[..(k + 1) as usize]);
                out.push('.');
                out.push_str(&ds[(k + 1) as usize..]);
            }
        } else {
            out.push_str(&ds[..1]);
            if n > 1 {
                out.push('.');
                out.push_str(&ds[1..]);
            }
            out.push_str(&format!("e{}", k));
        }
        out
    }

    /// Parses `[-]digits[.digits][e[-]digits]` or an exact `p/q`.
    pub fn parse(s: &str, bits: u32) -> Result<XReal> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            let q: BigInt = q.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s}")));
            }
            return Ok(XReal::from_ratio(&p, &q, bits));
        }
        let (body, e10) = match s.find(['e', 'E']) {
            Some(i) => {
                let e: i64 = s[i + 1..].parse().map_err(|_| Error::Parse(s.to_string()))?;
                (&s[..i], e)
            }
            None => (s, 0),
        };
        let (neg, body) = match body.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, body.strip_prefix('+').unwrap_or(body)),
        };
        let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
        if ip.is_empty() && fp.is_empty()
            || !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit())
        {
            return Err(Error::Parse(s.to_string()));
        }
        let digits = format!("{ip}{fp}");
        let mut d: BigInt = digits.parse().map_err(|_| Error::Parse(s.to_string()))?;
        if neg {
            d = -d;
        }
        let e = e10 - fp.len() as i64;
        if e >= 0 {
            Ok(XReal::from_bigint(&(d * BigInt::from(10).pow(e as u32)), bits))
        } else {
            Ok(XReal::from_ratio(&d, &BigInt::from(10).pow((-e) as u32), bits))
        }
    }
}

impl fmt::Display for XReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = ((self.bits as f64 * std::f64::consts::LOG10_2) as u32).saturating_sub(10).max(6);
        write!(f, "{}", self.to_string_digits(f.precision().map_or(d, |p| p as u32)))
    }
}

impl fmt::Debug for XReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XReal({}, {} bits)", self.to_string_digits(20), self.bits)
    }
}

impl PartialEq for XReal {
    fn eq(&self, o: &XReal) -> bool {
        self.cmp_value(o) == Ordering::Equal
    }
}

impl PartialOrd for XReal {
    fn partial_cmp(&self, o: &XReal) -> Option<Ordering> {
        Some(self.cmp_value(o))
    }
}

impl XReal {
    /// Exact value comparison.
    pub fn cmp_value(&self, o: &XReal) -> Ordering {
        let (sa, sb) = (self.signum(), o.signum());
        if sa != sb || sa == 0 {
            return sa.cmp(&sb);
        }
        let (ta, tb) = (self.top(), o.top());
        if ta != tb {
            return if sa > 0 { ta.cmp(&tb) } else { tb.cmp(&ta) };
        }
        let e = self.exp.min(o.exp);
        let ma = &self.man << (self.exp - e) as u64;
        let mb = &o.man << (o.exp - e) as u64;
        ma.cmp(&mb)
    }
}

impl Neg for XReal {
    type Output = XReal;
    fn neg(self) -> XReal {
        XReal { man: -self.man, exp: self.exp, bits: self.bits }
    }
}

impl Neg for &XReal {
    type Output = XReal;
    fn neg(self) -> XReal {
        XReal { man: -&self.man, exp: self.exp, bits: self.bits }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&XReal> for &XReal {
            type Output = XReal;
            fn $m(self, o: &XReal) -> XReal {
                $body(self, o)
            }
        }
        impl $tr<XReal> for &XReal {
            type Output = XReal;
            fn $m(self, o: XReal) -> XReal {
                $body(self, &o)
            }
        }
        impl $tr<&XReal> for XReal {
            type Output = XReal;
            fn $m(self, o: &XReal) -> XReal {
                $body(&self, o)
            }
        }
        impl $tr<XReal> for XReal {
            type Output = XReal;
            fn $m(self, o: XReal) -> XReal {
                $body(&self, &o)
            }
        }
    };
}

binop!(Add, add, |a: &XReal, b: &XReal| a.add_ref(b));
binop!(Sub, sub, |a: &XReal, b: &XReal| a.sub_ref(b));
binop!(Mul, mul, |a: &XReal, b: &XReal| a.mul_ref(b));
binop!(Div, div, |a: &XReal, b: &XReal| a.div_ref(b));
