use num_traits::Zero;

use super::gamma::bernoulli;
use crate::error::{Error, Result};
use crate::precision::{consts, rational_to_xreal, Context, XComplex, XReal};

fn li2_direct(z: &XComplex) -> XComplex {
    let bits = z.bits();
    let eps_top = -(bits as i64) - 4;
    let mut pw = z.clone();
    let mut s = z.clone();
    for k in 2i64.. {
        pw = &pw * z;
        let term = pw.div_i(k * k);
        s = &s + &term;
        if term.re.top().max(term.im.top()) < eps_top {
            break;
        }
    }
    s
}

/// `sum B_n u^(n+1) / (n+1)!` with `u = -log(1 - z)`.
fn li2_bernoulli(z: &XComplex) -> XComplex {
    let bits = z.bits();
    let one = XComplex::one(bits);
    let u = -(&one - z).ln().expect("z != 1");
    let eps_top = -(bits as i64) - 4;
    let mut pw = u.clone();
    let mut fact = XReal::one(bits);
    let mut s = u.clone();
    let mut small = 0;
    for n in 1usize.. {
        pw = &pw * &u;
        fact = fact.mul_i(n as i64 + 1);
        let b = bernoulli(n);
        if b.is_zero() {
            continue;
        }
        let term = pw.scale(&(rational_to_xreal(&b, bits) / &fact));
        s = &s + &term;
        if term.re.top().max(term.im.top()) < eps_top {
            small += 1;
            if small >= 2 {
                break;
            }
        } else {
            small = 0;
        }
    }
    s
}

fn li2_unit_disk(z: &XComplex, reflect: bool) -> XComplex {
    let bits = z.bits();
    let half = XReal::one(bits).ldexp(-1);
    if z.norm_sqr() <= half.sqr() {
        return li2_direct(z);
    }
    if reflect && z.re > half {
        // li2(z) = pi^2/6 - log z log(1-z) - li2(1-z)
        let one = XComplex::one(bits);
        let w = &one - z;
        let pi2_6 = consts::pi(bits).sqr().div_i(6);
        let lz = z.ln().expect("nonzero");
        let lw = w.ln().expect("nonzero");
        let mut r = -(&(&lz * &lw) + &li2_unit_disk(&w, false));
        r.re = &r.re + &pi2_6;
        return r;
    }
    li2_bernoulli(z)
}

/// Principal dilogarithm, cut `[1, inf)`, continuous from below on the cut.
pub fn li2(z: &XComplex, ctx: &Context) -> XComplex {
    let bits = ctx.bits();
    let w = bits + 16;
    let z = z.with_bits(w);
    let one = XReal::one(w);
    if z.is_zero() {
        return XComplex::zero(bits);
    }
    if z.im.is_zero() && z.re == one {
        return XComplex::from_real(consts::pi(bits).sqr().div_i(6));
    }
    let r = if z.norm_sqr() > one {
        // li2(z) = -pi^2/6 - log(-z)^2/2 - li2(1/z)
        let lm = (-&z).ln().expect("nonzero");
        let pi2_6 = consts::pi(w).sqr().div_i(6);
        let mut r = -(&lm.sqr().ldexp(-1) + &li2_unit_disk(&z.recip(), true));
        r.re = &r.re - &pi2_6;
        r
    } else {
        li2_unit_disk(&z, true)
    };
    r.with_bits(bits)
}

/// `D(x) = Im li2(x) + log|x| arg(1 - x)`.
pub fn bloch_wigner(x: &XComplex, ctx: &Context) -> Result<XReal> {
    let bits = ctx.bits();
    let one = XReal::one(bits);
    if x.is_zero() || (x.im.is_zero() && x.re == one) {
        return Err(Error::Domain("Bloch-Wigner D at 0 or 1".into()));
    }
    let c = ctx.raised(4);
    let x = x.with_bits(c.bits());
    let l = li2(&x, &c);
    let lnabs = x.norm_sqr().ln().ldexp(-1);
    let w = &XComplex::one(c.bits()) - &x;
    Ok((&l.im + &(&lnabs * &w.arg())).with_bits(bits))
}

/// Elliptic dilogarithm `D_q(x) = sum_{n in Z} D(x q^n)`.
///
/// Terms with `|y| < 1` are dropped once `2|y|(1 + |log|y||)` falls below
/// `10^(-P-5) (1 - |q|)`; negative `n` use `D(x q^-n) = -D(q^n / x)`.
pub fn elliptic_dilog(q: &XComplex, x: &XComplex, ctx: &Context) -> Result<XReal> {
    let bits = ctx.bits();
    let c = ctx.raised(4);
    let wb = c.bits();
    let q = q.with_bits(wb);
    let x = x.with_bits(wb);
    if x.is_zero() {
        return Err(Error::Domain("elliptic dilog at x = 0".into()));
    }
    let qa = q.abs().to_f64();
    if qa >= 1.0 {
        return Err(Error::Divergence(format!("|q| = {qa} >= 1")));
    }
    if q.is_zero() {
        return Err(Error::Domain("q = 0".into()));
    }
    let log2_eps = -((ctx.digits + 5) as f64) * std::f64::consts::LOG2_10 + (1.0 - qa).log2();
    let negligible = |y: &XComplex| {
        let l = y.abs().log2_abs();
        if l >= 0.0 {
            return false;
        }
        let r_ln = (-l) * std::f64::consts::LN_2;
        l + 1.0 + (1.0 + r_ln).log2() < log2_eps
    };
    let cap = 1_000_000;
    let mut sum = XReal::zero(wb);
    let mut y = x.clone();
    let mut n = 0;
    while !negligible(&y) {
        sum = &sum + &bloch_wigner(&y, &c)?;
        y = &y * &q;
        n += 1;
        if n > cap {
            return Err(Error::MaxTermsExceeded(cap));
        }
    }
    let mut v = &q / &x;
    while !negligible(&v) {
        sum = &sum - &bloch_wigner(&v, &c)?;
        v = &v * &q;
        n += 1;
        if n > cap {
            return Err(Error::MaxTermsExceeded(cap));
        }
    }
    Ok(sum.with_bits(bits))
}
