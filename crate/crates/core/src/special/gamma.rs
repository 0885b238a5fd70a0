use std::cell::RefCell;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::precision::{rational_to_xreal, Context, Rational, XComplex, XReal};

thread_local! {
    static BERNOULLI: RefCell<Vec<Rational>> = RefCell::new(vec![Rational::one()]);
}

/// Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rational {
    BERNOULLI.with(|cell| {
        let mut b = cell.borrow_mut();
        while b.len() <= n {
            let m = b.len();
            // B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k
            let mut binom = BigInt::one();
            let mut acc = Rational::zero();
            for (k, bk) in b.iter().enumerate() {
                if k > 0 {
                    binom = binom * BigInt::from(m + 2 - k) / BigInt::from(k);
                }
                if !bk.is_zero() {
                    acc += bk * Rational::from_integer(binom.clone());
                }
            }
            b.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
        }
        b[n].clone()
    })
}

/// Radius beyond which the asymptotic series reach `bits` of accuracy.
fn asymptotic_radius(bits: u32) -> f64 {
    0.12 * bits as f64 + 6.0
}

fn is_nonpositive_integer(x: &XReal) -> bool {
    !x.is_positive() && x.is_integer()
}

/// Stirling series for `log Gamma(w)`, `|w|` large, `Re w > 0`.
fn ln_gamma_stirling(w: &XComplex) -> XComplex {
    let bits = w.bits();
    let ln_w = w.ln().expect("nonzero");
    let half = XComplex::from_real(XReal::one(bits).ldexp(-1));
    let ln_2pi = crate::precision::consts::pi(bits).ldexp(1).ln();
    let mut s = &(&(w - &half) * &ln_w) - w;
    s.re = &s.re + &ln_2pi.ldexp(-1);
    let inv = w.recip();
    let inv2 = inv.sqr();
    let mut cur = inv;
    let eps_top = -(bits as i64) - 4;
    for k in 1.. {
        let b = bernoulli(2 * k);
        let coef = rational_to_xreal(&b, bits).div_i((2 * k * (2 * k - 1)) as i64);
        let term = cur.scale(&coef);
        s = &s + &term;
        if term.re.top().max(term.im.top()) < eps_top {
            break;
        }
        cur = &cur * &inv2;
    }
    s
}

/// `sin(pi z)` for complex `z`.
fn sin_pi(z: &XComplex) -> XComplex {
    let bits = z.bits();
    let pi = crate::precision::consts::pi(bits);
    let x = &z.re * &pi;
    let (s, c) = x.sin_cos();
    if z.im.is_zero() {
        return XComplex::from_real(s);
    }
    let y = &z.im * &pi;
    let ey = y.exp();
    let emy = ey.recip();
    let cosh = (&ey + &emy).ldexp(-1);
    let sinh = (&ey - &emy).ldexp(-1);
    XComplex::new(&s * &cosh, &c * &sinh)
}

fn gamma_inner(z: &XComplex) -> Result<XComplex> {
    let bits = z.bits();
    if z.im.is_zero() && is_nonpositive_integer(&z.re) {
        return Err(Error::Pole("Gamma"));
    }
    let half = XReal::one(bits).ldexp(-1);
    if z.re < half {
        let one = XComplex::one(bits);
        let pi = crate::precision::consts::pi(bits);
        let g = gamma_inner(&(&one - z))?;
        let d = &sin_pi(z) * &g;
        return Ok(XComplex::from_real(pi) / d);
    }
    let r = asymptotic_radius(bits);
    let shift = (r - z.re.to_f64()).ceil().max(0.0) as i64;
    let mut w = z.clone();
    let mut prod = XComplex::one(bits);
    for _ in 0..shift {
        prod = &prod * &w;
        w.re = w.re.add_i(1);
    }
    Ok(&ln_gamma_stirling(&w).exp() / &prod)
}

/// `Gamma(z)`; error at the poles `0, -1, -2, ...`.
pub fn gamma(z: &XComplex, ctx: &Context) -> Result<XComplex> {
    let bits = ctx.bits();
    Ok(gamma_inner(&z.with_bits(bits + 24))?.with_bits(bits))
}

pub fn gamma_real(x: &XReal, ctx: &Context) -> Result<XReal> {
    Ok(gamma(&XComplex::from_real(x.clone()), ctx)?.re)
}

/// `1/Gamma(x)`, zero at the poles.
pub fn rgamma_real(x: &XReal, ctx: &Context) -> XReal {
    match gamma_real(x, ctx) {
        Ok(g) => g.recip(),
        Err(_) => XReal::zero(ctx.bits()),
    }
}

/// `psi(x) = Gamma'(x)/Gamma(x)`.
pub fn digamma(x: &XReal, ctx: &Context) -> Result<XReal> {
    let bits = ctx.bits();
    Ok(digamma_inner(&x.with_bits(bits + 24))?.with_bits(bits))
}

fn digamma_inner(x: &XReal) -> Result<XReal> {
    let bits = x.bits();
    if is_nonpositive_integer(x) {
        return Err(Error::Pole("digamma"));
    }
    let half = XReal::one(bits).ldexp(-1);
    if *x < half {
        let pi = crate::precision::consts::pi(bits);
        let (s, c) = (x * &pi).sin_cos();
        let one = XReal::one(bits);
        return Ok(digamma_inner(&(&one - x))? - &pi * &c / &s);
    }
    let r = asymptotic_radius(bits);
    let shift = (r - x.to_f64()).ceil().max(0.0) as i64;
    let mut w = x.clone();
    let mut acc = XReal::zero(bits);
    for _ in 0..shift {
        acc = &acc + &w.recip();
        w = w.add_i(1);
    }
    let inv = w.recip();
    let inv2 = inv.sqr();
    let mut s = &w.ln() - &inv.ldexp(-1);
    let mut cur = inv2.clone();
    let eps_top = -(bits as i64) - 4;
    for k in 1.. {
        let b = bernoulli(2 * k);
        let term = &cur * &rational_to_xreal(&b, bits).div_i(2 * k as i64);
        s = &s - &term;
        if term.top() < eps_top {
            break;
        }
        cur = &cur * &inv2;
    }
    Ok(s - acc)
}

/// `B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)`.
pub fn beta(a: &XReal, b: &XReal, ctx: &Context) -> Result<XReal> {
    let c = ctx.raised(4);
    let v = gamma_real(a, &c)? * gamma_real(b, &c)? * rgamma_real(&(a + b), &c);
    Ok(v.with_bits(ctx.bits()))
}

/// `B_{a,b} = Gamma(a) Gamma(b - a) / Gamma(b)`.
pub fn cap_b(a: &XReal, b: &XReal, ctx: &Context) -> Result<XReal> {
    let c = ctx.raised(4);
    let v = gamma_real(a, &c)? * gamma_real(&(b - a), &c)? * rgamma_real(b, &c);
    Ok(v.with_bits(ctx.bits()))
}

/// `C_{a,b} = Gamma(b - a) / (Gamma(1 - a) Gamma(b)) = sin(pi a)/pi * B_{a,b}`.
pub fn cap_c(a: &XReal, b: &XReal, ctx: &Context) -> Result<XReal> {
    let c = ctx.raised(4);
    let one = c.int(1);
    let v = gamma_real(&(b - a), &c)? * rgamma_real(&(&one - a), &c) * rgamma_real(b, &c);
    Ok(v.with_bits(ctx.bits()))
}
