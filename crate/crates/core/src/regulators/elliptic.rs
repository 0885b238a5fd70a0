//! Real regulators `reg_R(xi_t)` of the three elliptic families.

use num_traits::{One, Signed, Zero};

use super::frac;
use crate::ellcurve::Family;
use crate::error::{Error, Result};
use crate::hyper::{g_primitive, pfq, HGSpec};
use crate::precision::{rational_to_string, Context, Rational, XComplex, XReal};
use crate::special::beta;

fn check_fiber(t: &Rational) -> Result<()> {
    if t.is_zero() || t.is_one() {
        return Err(Error::SingularFiber(rational_to_string(t)));
    }
    Ok(())
}

/// `w^s 3F2(a, a, a; l1, l2; w)` at principal `w^s`.
fn power_3f2(s: &XReal, a: &XReal, l1: &XReal, l2: &XReal, w: &XComplex, ctx: &Context) -> Result<XComplex> {
    let spec = HGSpec::new(vec![a.clone(), a.clone(), a.clone()], vec![l1.clone(), l2.clone()], w.clone())?;
    Ok(&w.pow_real(s)? * &pfq(&spec, ctx)?)
}

/// Legendre family `y^2 = x(1-x)(1-tx)`:
///
/// - `t < 0`: `z^(1/2) 3F2(1/2,1/2,1/2; 1,3/2; z)`, `z = 1/(1-t)`;
/// - `t > 0`: `-log 16 + log|1-t| + G_{1/2,1/2}(1-t)`.
pub fn legendre_reg(t: &Rational, ctx: &Context) -> Result<XReal> {
    check_fiber(t)?;
    let c = ctx.raised(5);
    let half = frac(1, 2, &c);
    let one_minus = Rational::one() - t;
    let v = if t.is_negative() {
        let z = XComplex::from_real(c.rational(&one_minus.recip()));
        power_3f2(&half, &half, &c.int(1), &frac(3, 2, &c), &z, &c)?.re
    } else {
        let x = c.rational(&one_minus);
        let g = g_primitive(&half, &half, &x, &c)?;
        &(&x.abs().ln() - &c.int(16).ln()) + &g
    };
    Ok(v.with_bits(ctx.bits()))
}

/// Family `3y^2 = 2x^3 - 3x^2 + t`:
///
/// - `|t-1| < 1`: `log 432 - log|1-t| - G_{1/6,5/6}(1-t)`;
/// - `|t-1| > 1`: `pi^-1 [3/2 B(1/6,1/6) z^(1/6) 3F2(1/6,1/6,1/6; 1/3,7/6; z)
///   + 3/10 B(5/6,5/6) z^(5/6) 3F2(5/6,5/6,5/6; 5/3,11/6; z)]`, real part.
pub fn family2_reg(t: &Rational, ctx: &Context) -> Result<XReal> {
    check_fiber(t)?;
    let c = ctx.raised(5);
    let one_minus = Rational::one() - t;
    let d = one_minus.abs();
    if d.is_one() {
        return Err(Error::BranchBoundary(rational_to_string(t)));
    }
    let v = if d < Rational::one() {
        let x = c.rational(&one_minus);
        let g = g_primitive(&frac(1, 6, &c), &frac(5, 6, &c), &x, &c)?;
        &(&c.int(432).ln() - &x.abs().ln()) - &g
    } else {
        let z = XComplex::from_real(c.rational(&one_minus.recip()));
        let (s1, s5) = (frac(1, 6, &c), frac(5, 6, &c));
        let p1 = power_3f2(&s1, &s1, &frac(1, 3, &c), &frac(7, 6, &c), &z, &c)?;
        let p5 = power_3f2(&s5, &s5, &frac(5, 3, &c), &frac(11, 6, &c), &z, &c)?;
        let k1 = &beta(&s1, &s1, &c)? * &frac(3, 2, &c);
        let k5 = &beta(&s5, &s5, &c)? * &frac(3, 10, &c);
        &(&(&p1.re * &k1) + &(&p5.re * &k5)) / &c.pi()
    };
    Ok(v.with_bits(ctx.bits()))
}

/// Family `y^2 = x^3 + (3x + 4t)^2`:
///
/// - `0 < |t| < 1`: `log 27 - log|t| - G_{1/3,2/3}(t)`;
/// - `|t| > 1`: `sqrt(3)/pi [B(1/3,1/3) t^(-1/3) 3F2(1/3,1/3,1/3; 2/3,4/3; 1/t)
///   + 1/2 B(2/3,2/3) t^(-2/3) 3F2(2/3,2/3,2/3; 4/3,5/3; 1/t)]`, real part.
pub fn family3_reg(t: &Rational, ctx: &Context) -> Result<XReal> {
    check_fiber(t)?;
    let c = ctx.raised(5);
    let d = t.abs();
    if d.is_one() {
        return Err(Error::BranchBoundary(rational_to_string(t)));
    }
    let v = if d < Rational::one() {
        let x = c.rational(t);
        let g = g_primitive(&frac(1, 3, &c), &frac(2, 3, &c), &x, &c)?;
        &(&c.int(27).ln() - &x.abs().ln()) - &g
    } else {
        let w = XComplex::from_real(c.rational(&t.recip()));
        let (s1, s2) = (frac(1, 3, &c), frac(2, 3, &c));
        let p1 = power_3f2(&s1, &s1, &s2, &frac(4, 3, &c), &w, &c)?;
        let p2 = power_3f2(&s2, &s2, &frac(4, 3, &c), &frac(5, 3, &c), &w, &c)?;
        let k1 = beta(&s1, &s1, &c)?;
        let k2 = beta(&s2, &s2, &c)?.ldexp(-1);
        let sum = &(&p1.re * &k1) + &(&p2.re * &k2);
        &(&sum * &c.int(3).sqrt()) / &c.pi()
    };
    Ok(v.with_bits(ctx.bits()))
}

pub fn family_reg(family: Family, t: &Rational, ctx: &Context) -> Result<XReal> {
    match family {
        Family::Legendre => legendre_reg(t, ctx),
        Family::Family2 => family2_reg(t, ctx),
        Family::Family3 => family3_reg(t, ctx),
    }
}
