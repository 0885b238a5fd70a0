use super::gauss::gauss_2f1;
use super::pfq::{pfq, HGSpec};
use super::quad::adaptive_gl;
use crate::error::{Error, Result};
use crate::precision::{Context, XComplex, XReal};

/// `G(x) = sum_{n>=1} (a)_n (b)_n x^n / (n!^2 n) = a b x 4F3(a+1, b+1, 1, 1; 2, 2, 2; x)`.
///
/// Series for `|x| < 1`, quadrature of `int_0^x (F(a,b;1;u) - 1)/u du`
/// for `x <= -1`.
pub fn g_primitive(a: &XReal, b: &XReal, x: &XReal, ctx: &Context) -> Result<XReal> {
    let one = XReal::one(ctx.bits());
    if *x >= one {
        return Err(Error::Domain(format!("G(x) needs x < 1, got {x}")));
    }
    if x.abs() < one {
        g_primitive_series(a, b, x, ctx)
    } else {
        g_primitive_quadrature(a, b, x, ctx)
    }
}

pub fn g_primitive_series(a: &XReal, b: &XReal, x: &XReal, ctx: &Context) -> Result<XReal> {
    let bits = ctx.bits();
    if x.is_zero() {
        return Ok(XReal::zero(bits));
    }
    let (a, b) = (a.with_bits(bits), b.with_bits(bits));
    let one = ctx.int(1);
    let two = ctx.int(2);
    let spec = HGSpec::new(
        vec![&a + &one, &b + &one, one.clone(), one.clone()],
        vec![two.clone(), two.clone(), two],
        XComplex::from_real(x.with_bits(bits)),
    )?;
    let f = pfq(&spec, ctx)?;
    Ok(&(&a * &b) * &(x * &f.re))
}

/// Breakpoints `0 -> x` refined geometrically towards the far end.
fn breakpoints(x: &XReal) -> Vec<XReal> {
    let bits = x.bits();
    let mut pts = vec![XReal::zero(bits)];
    if x.is_negative() {
        let mut p = XReal::one(bits).ldexp(-1);
        while -&p > *x {
            pts.push(-&p);
            p = p.ldexp(1);
        }
    } else {
        // towards the singular point 1
        let one = XReal::one(bits);
        let mut gap = one.ldexp(-1);
        while &one - &gap < *x {
            pts.push(&one - &gap);
            gap = gap.ldexp(-1);
        }
    }
    pts.push(x.clone());
    pts
}

pub fn g_primitive_quadrature(a: &XReal, b: &XReal, x: &XReal, ctx: &Context) -> Result<XReal> {
    let bits = ctx.bits();
    if *x >= XReal::one(bits) {
        return Err(Error::Domain(format!("G(x) needs x < 1, got {x}")));
    }
    if x.is_zero() {
        return Ok(XReal::zero(bits));
    }
    let inner = ctx.raised(10);
    let wb = inner.bits();
    let (a, b) = (a.with_bits(wb), b.with_bits(wb));
    let c = XReal::one(wb);
    let mut f = |u: &XReal| -> Result<XReal> {
        if u.is_zero() {
            return Ok(&a * &b);
        }
        let v = gauss_2f1(&a, &b, &c, &XComplex::from_real(u.clone()), &inner)?;
        Ok(&(&v.re - &c) / u)
    };
    let pts = breakpoints(&x.with_bits(wb));
    let tol = ctx.ten_pow_neg((ctx.digits + Context::GUARD_DIGITS - 2) as i64).with_bits(wb);
    let mut total = XReal::zero(wb);
    for seg in pts.windows(2) {
        total = &total + &adaptive_gl(&mut f, &seg[0], &seg[1], 32, &tol, 10)?;
    }
    Ok(total.with_bits(bits))
}
