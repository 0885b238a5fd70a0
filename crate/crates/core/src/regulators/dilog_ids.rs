//! Nomes of the Legendre and cubic families and the identities between the
//! real regulators and elliptic dilogarithms at torsion points.

use super::frac;
use crate::error::{Error, Result};
use crate::hyper::{gauss_2f1, gauss_2f1_cut, g_primitive, pfq, CutSide, HGSpec};
use crate::precision::{Context, XComplex, XReal};
use crate::special::{beta, elliptic_dilog};

fn open_interval(t: &XReal, lo: i64, hi: i64, what: &str) -> Result<()> {
    if *t <= t.lit(lo) || *t >= t.lit(hi) {
        return Err(Error::Domain(format!("{what} needs {lo} < t < {hi}, got {t}")));
    }
    Ok(())
}

/// Nome of `y^2 = x(1-x)(1-tx)`.
///
/// For `0 < t < 1`: `q = exp(-2 pi F(1/2,1/2;1;1-t) / F(1/2,1/2;1;t))`.
/// For `-1 < t < 0` the ratio is taken with `F(1/2,1/2;1;1-t+i0)`, which is
/// `R + i`; then `q = exp(-pi (R + i)) = -exp(-pi R)`, the value for which the
/// dilogarithm identity holds.
pub fn nome_legendre(t: &XReal, ctx: &Context) -> Result<XReal> {
    let c = ctx.raised(5);
    let t = t.with_bits(c.bits());
    let half = frac(1, 2, &c);
    let one = c.int(1);
    if t.is_zero() {
        return Err(Error::SingularFiber("0".into()));
    }
    open_interval(&t, -1, 1, "Legendre nome")?;
    let ft = gauss_2f1(&half, &half, &one, &XComplex::from_real(t.clone()), &c)?;
    let fs = gauss_2f1_cut(&half, &half, &one, &(&one - &t), CutSide::Above, &c)?;
    let ratio = &fs / &ft;
    let q = if t.is_positive() {
        (-&(&ratio.re * &c.pi().ldexp(1))).exp()
    } else {
        -&(-&(&ratio.re * &c.pi())).exp()
    };
    Ok(q.with_bits(ctx.bits()))
}

/// Nome of the cubic family for `1 < t < 2`:
/// `q = exp(-2 pi/sqrt(3) F(1/3,2/3;1;t+i0) / F(1/3,2/3;1;1-t))`.
/// The ratio is `R + i sqrt(3)/2`, so `q = -exp(-2 pi R/sqrt(3))`.
pub fn nome_cubic(t: &XReal, ctx: &Context) -> Result<XReal> {
    let c = ctx.raised(5);
    let t = t.with_bits(c.bits());
    open_interval(&t, 1, 2, "cubic nome")?;
    let (a, b, one) = (frac(1, 3, &c), frac(2, 3, &c), c.int(1));
    let num = gauss_2f1_cut(&a, &b, &one, &t, CutSide::Above, &c)?;
    let den = gauss_2f1(&a, &b, &one, &XComplex::from_real(&one - &t), &c)?;
    let r = (&num / &den).re;
    let q = -&(-&(&(&r * &c.pi().ldexp(1)) / &c.int(3).sqrt())).exp();
    Ok(q.with_bits(ctx.bits()))
}

/// Both sides of the Legendre identity
/// `reg-side = D_q(i) + D_q(i q^(1/2))`:
///
/// - `-1 < t < 0`: left side `pi/4 (1-t)^(-1/2) 3F2(1/2,1/2,1/2; 1,3/2; 1/(1-t))`;
/// - `0 < t < 1`: left side `-pi/8 (log((1-t)/16) + G_{1/2,1/2}(1-t))`.
pub fn dilog_identity_56(t: &XReal, ctx: &Context) -> Result<(XReal, XReal)> {
    let c = ctx.raised(5);
    let t = t.with_bits(c.bits());
    let q = nome_legendre(&t, &c)?;
    let one = c.int(1);
    let half = frac(1, 2, &c);
    let pi = c.pi();
    let lhs = if t.is_negative() {
        let z = (&one - &t).recip();
        let spec = HGSpec::new(vec![half.clone(), half.clone(), half.clone()], vec![one.clone(), frac(3, 2, &c)], XComplex::from_real(z.clone()))?;
        let f = pfq(&spec, &c)?.re;
        &(&pi.ldexp(-2) * &z.sqrt()) * &f
    } else {
        let x = &one - &t;
        let g = g_primitive(&half, &half, &x, &c)?;
        -&(&pi.ldexp(-3) * &(&x.div_i(16).ln() + &g))
    };
    let qc = XComplex::from_real(q);
    let i = XComplex::i(c.bits());
    let rhs = &elliptic_dilog(&qc, &i, &c)? + &elliptic_dilog(&qc, &(&i * &qc.sqrt()), &c)?;
    Ok((lhs.with_bits(ctx.bits()), rhs.with_bits(ctx.bits())))
}

/// Both sides of the cubic identity for `1 < t < 2`:
/// `B(1/3,1/3) t^(-1/3) 3F2(1/3,1/3,1/3; 2/3,4/3; 1/t)
///  + 1/2 B(2/3,2/3) t^(-2/3) 3F2(2/3,2/3,2/3; 4/3,5/3; 1/t) = 6 sqrt(3) D_q(e^(2 pi i/3))`.
pub fn dilog_identity_57(t: &XReal, ctx: &Context) -> Result<(XReal, XReal)> {
    let c = ctx.raised(5);
    let t = t.with_bits(c.bits());
    let q = nome_cubic(&t, &c)?;
    let (s1, s2) = (frac(1, 3, &c), frac(2, 3, &c));
    let w = XComplex::from_real(t.recip());
    let f1 = pfq(&HGSpec::new(vec![s1.clone(), s1.clone(), s1.clone()], vec![s2.clone(), frac(4, 3, &c)], w.clone())?, &c)?.re;
    let f2 = pfq(&HGSpec::new(vec![s2.clone(), s2.clone(), s2.clone()], vec![frac(4, 3, &c), frac(5, 3, &c)], w)?, &c)?.re;
    let lt = t.ln();
    let p1 = (-&lt.div_i(3)).exp();
    let p2 = (-&lt.mul_i(2).div_i(3)).exp();
    let lhs = &(&(&beta(&s1, &s1, &c)? * &p1) * &f1) + &(&(&beta(&s2, &s2, &c)?.ldexp(-1) * &p2) * &f2);
    let omega = XComplex::root_of_unity(1, 3, c.bits());
    let d = elliptic_dilog(&XComplex::from_real(q), &omega, &c)?;
    let rhs = (&d * &c.int(3).sqrt()).mul_i(6);
    Ok((lhs.with_bits(ctx.bits()), rhs.with_bits(ctx.bits())))
}
