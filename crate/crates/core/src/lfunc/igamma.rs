use crate::error::{Error, Result};
use crate::precision::{Context, XReal};
use crate::special::gamma_real;

/// `Gamma(s, .)` for a fixed `s`, with `Gamma(s)` computed once.
pub struct UpperGamma {
    s: XReal,
    gamma_s: Option<XReal>,
    max_terms: u64,
}

impl UpperGamma {
    pub fn new(s: &XReal, ctx: &Context) -> Result<UpperGamma> {
        let w = ctx.bits() + 16;
        let s = s.with_bits(w);
        let gamma_s = if s.is_zero() {
            None
        } else if !s.is_positive() && s.is_integer() {
            return Err(Error::Pole("Gamma(s, x) series at non-positive integer s"));
        } else {
            Some(gamma_real(&s, &ctx.raised(5))?.with_bits(w))
        };
        Ok(UpperGamma { s, gamma_s, max_terms: ctx.max_terms })
    }

    /// `Gamma(s, x)` to `bits` bits, `x > 0`.
    pub fn eval(&self, x: &XReal, bits: u32) -> Result<XReal> {
        if !x.is_positive() {
            return Err(Error::Domain(format!("Gamma(s, x) needs x > 0, got {x}")));
        }
        let w = bits + 16;
        let (s, x) = (self.s.with_bits(w), x.with_bits(w));
        if x >= s.add_i(1) {
            return Ok(upper_cf(&s, &x, w)?.with_bits(bits));
        }
        let g = match &self.gamma_s {
            None => return Ok(e1_series(&x, w).with_bits(bits)),
            Some(g) => g.with_bits(w),
        };
        // gamma(s, x) = x^s e^-x sum x^k / (s (s+1) ... (s+k))
        let mut term = s.recip();
        let mut sum = term.clone();
        let mut k = 1i64;
        loop {
            term = &(&term * &x) / &s.add_i(k);
            sum = &sum + &term;
            if term.is_zero() || term.top() < sum.top() - w as i64 - 2 {
                break;
            }
            k += 1;
            if k as u64 > self.max_terms {
                return Err(Error::MaxTermsExceeded(self.max_terms));
            }
        }
        let lower = &(&x.powf(&s) * &(-&x).exp()) * &sum;
        Ok((&g - &lower).with_bits(bits))
    }
}

/// Upper incomplete gamma `Gamma(s, x) = int_x^inf u^(s-1) e^(-u) du`, `x > 0`.
///
/// Continued fraction (modified Lentz) for `x >= s + 1`, otherwise
/// `Gamma(s) - gamma(s, x)` with the power series for the lower function.
/// `s = 0` uses the exponential-integral series.
pub fn incomplete_gamma_upper(s: &XReal, x: &XReal, ctx: &Context) -> Result<XReal> {
    UpperGamma::new(s, ctx)?.eval(x, ctx.bits())
}

fn upper_cf(s: &XReal, x: &XReal, w: u32) -> Result<XReal> {
    // Gamma(s,x) = e^-x x^s / (x+1-s - 1(1-s)/(x+3-s - 2(2-s)/(x+5-s - ...)))
    let one = XReal::one(w);
    let tiny = one.ldexp(-(2 * w as i64));
    let mut b = &(x + &one) - s;
    let mut c = one.ldexp(2 * w as i64);
    let mut d = b.recip();
    let mut h = d.clone();
    let eps_top = -(w as i64) + 2;
    for i in 1..100_000i64 {
        // -i (i - s)
        let an = s.add_i(-i).mul_i(i);
        b = b.add_i(2);
        d = &(&an * &d) + &b;
        if d.is_zero() {
            d = tiny.clone();
        }
        c = &b + &(&an / &c);
        if c.is_zero() {
            c = tiny.clone();
        }
        d = d.recip();
        let del = &d * &c;
        h = &h * &del;
        let dev = &del - &one;
        if dev.is_zero() || dev.top() < eps_top {
            let pre = if s.is_zero() { (-x).exp() } else { &x.powf(s) * &(-x).exp() };
            return Ok(&pre * &h);
        }
    }
    Err(Error::Divergence("incomplete gamma continued fraction".into()))
}

/// `E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)`.
fn e1_series(x: &XReal, w: u32) -> XReal {
    // alternating terms grow to about e^x; carry extra bits
    let extra = (x.to_f64() * std::f64::consts::LOG2_E) as u32 + 8;
    let wb = w + extra;
    let x = x.with_bits(wb);
    let mut term = XReal::one(wb);
    let mut sum = XReal::zero(wb);
    let mut k = 1i64;
    loop {
        term = (-&(&term * &x)).div_i(k);
        let add = term.div_i(k);
        sum = &sum + &add;
        if add.is_zero() || add.top() < -(wb as i64) - 4 {
            break;
        }
        k += 1;
    }
    let g = crate::precision::consts::euler_gamma(wb);
    (&(-&g) - &x.ln()) - &sum
}

/// Exponential integral `E1(x) = Gamma(0, x)`, `x > 0`.
pub fn e1(x: &XReal, ctx: &Context) -> Result<XReal> {
    incomplete_gamma_upper(&XReal::zero(x.bits()), x, ctx)
}
