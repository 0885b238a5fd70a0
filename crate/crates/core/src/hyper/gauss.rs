use super::pfq::{pfq, HGSpec};
use crate::error::{Error, Result};
use crate::precision::{Context, XComplex, XReal};
use crate::special::{gamma_real, rgamma_real};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Transform {
    Direct,
    Pfaff,
    OneMinus,
    Inverse,
    InverseOneMinus,
    OneMinusInverse,
}

fn near_integer(x: &XReal, ctx: &Context) -> bool {
    let r = XReal::from_bigint(&x.round_int(), x.bits());
    (x - &r).abs() < ctx.ten_pow_neg((ctx.digits + Context::GUARD_DIGITS) as i64 / 2)
}

fn f21(a: &XReal, b: &XReal, c: &XReal, w: &XComplex, ctx: &Context) -> Result<XComplex> {
    pfq(&HGSpec::new(vec![a.clone(), b.clone()], vec![c.clone()], w.clone())?, ctx)
}

/// `Gamma(x) * prod 1/Gamma(y)` with poles in the denominator giving 0.
fn gamma_ratio(num: &[&XReal], den: &[&XReal], ctx: &Context) -> Result<XReal> {
    let mut v = ctx.int(1);
    for y in den {
        let r = rgamma_real(y, ctx);
        if r.is_zero() {
            return Ok(r);
        }
        v = &v * &r;
    }
    for x in num {
        v = &v * &gamma_real(x, ctx)?;
    }
    Ok(v)
}

/// Gauss hypergeometric function `F(a, b; c; z)` on the cut plane
/// `C \ [1, inf)`.
///
/// Picks the argument map (identity, Pfaff `z/(z-1)`, `1-z`, `1/z`,
/// `1/(1-z)`, `1-1/z`) with the smallest image. When the chosen connection
/// formula is degenerate (`a-b` or `c-a-b` within `10^(-P/2)` of an
/// integer) the result is the average of the values at `a +- h` with
/// `h = 10^(-P/2-3)`, computed at raised precision; the error is `O(h^2)`.
pub fn gauss_2f1(a: &XReal, b: &XReal, c: &XReal, z: &XComplex, ctx: &Context) -> Result<XComplex> {
    let bits = ctx.bits();
    if !c.is_positive() && c.is_integer() {
        return Err(Error::Domain("c is a non-positive integer".into()));
    }
    let z = z.with_bits(bits);
    if z.is_zero() {
        return Ok(XComplex::one(bits));
    }
    let one = XReal::one(bits);
    if z.im.is_zero() && z.re >= one {
        return Err(Error::BranchCut(format!("F(a,b;c;z) at real z = {} >= 1", z.re)));
    }
    let (a, b, c) = (a.with_bits(bits), b.with_bits(bits), c.with_bits(bits));
    let terminating = |x: &XReal| !x.is_positive() && x.is_integer();
    if terminating(&a) || terminating(&b) {
        return f21(&a, &b, &c, &z, ctx);
    }
    let onec = XComplex::one(bits);
    let omz = &onec - &z;
    let cands = [
        (Transform::Direct, z.abs().to_f64()),
        (Transform::Pfaff, (&z / &(&z - &onec)).abs().to_f64()),
        (Transform::OneMinus, omz.abs().to_f64()),
        (Transform::Inverse, 1.0 / z.abs().to_f64()),
        (Transform::InverseOneMinus, 1.0 / omz.abs().to_f64()),
        (Transform::OneMinusInverse, (&onec - &z.recip()).abs().to_f64()),
    ];
    let deg_ab = near_integer(&(&a - &b), ctx);
    let deg_cab = near_integer(&(&(&c - &a) - &b), ctx);
    let degenerate = |t: Transform| match t {
        Transform::Direct | Transform::Pfaff => false,
        Transform::OneMinus | Transform::OneMinusInverse => deg_cab,
        Transform::Inverse | Transform::InverseOneMinus => deg_ab,
    };
    let best = |allow_deg: bool| {
        cands
            .iter()
            .filter(|(t, _)| allow_deg || !degenerate(*t))
            .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .copied()
            .unwrap()
    };
    let (t_nd, r_nd) = best(false);
    let (t_any, r_any) = best(true);
    let choice = if r_nd <= 0.75 || r_any >= r_nd * 0.9 { t_nd } else { t_any };
    if degenerate(choice) {
        let wd = ctx.digits + Context::GUARD_DIGITS;
        let raised = ctx.raised(wd / 2 + 8);
        let h = raised.ten_pow_neg(wd as i64 / 2 + 3);
        let ar = a.with_bits(raised.bits());
        let (br, cr) = (b.with_bits(raised.bits()), c.with_bits(raised.bits()));
        let zr = z.with_bits(raised.bits());
        let lo = gauss_2f1(&(&ar - &h), &br, &cr, &zr, &raised)?;
        let hi = gauss_2f1(&(&ar + &h), &br, &cr, &zr, &raised)?;
        return Ok((&lo + &hi).ldexp(-1).with_bits(bits));
    }
    apply_transform(choice, &a, &b, &c, &z, ctx)
}

fn apply_transform(
    t: Transform,
    a: &XReal,
    b: &XReal,
    c: &XReal,
    z: &XComplex,
    ctx: &Context,
) -> Result<XComplex> {
    let g = ctx.raised(4);
    let bits = ctx.bits();
    let one = XReal::one(bits);
    let onec = XComplex::one(bits);
    let omz = &onec - z;
    let cab = &(c - a) - b;
    let (ca, cb) = (c - a, c - b);
    match t {
        Transform::Direct => f21(a, b, c, z, ctx),
        Transform::Pfaff => {
            let w = z / &(z - &onec);
            let f = f21(a, &cb, c, &w, ctx)?;
            Ok(&omz.pow_real(&-a)? * &f)
        }
        Transform::OneMinus => {
            let k1 = gamma_ratio(&[c, &cab], &[&ca, &cb], &g)?;
            let k2 = gamma_ratio(&[c, &-&cab], &[a, b], &g)?;
            let f1 = f21(a, b, &(&one - &cab), &omz, ctx)?;
            let f2 = f21(&ca, &cb, &(&one + &cab), &omz, ctx)?;
            let p = omz.pow_real(&cab)?;
            Ok(&f1.scale(&k1) + &(&p * &f2).scale(&k2))
        }
        Transform::Inverse => {
            let w = z.recip();
            let mz = -z;
            let k1 = gamma_ratio(&[c, &(b - a)], &[b, &ca], &g)?;
            let k2 = gamma_ratio(&[c, &(a - b)], &[a, &cb], &g)?;
            let f1 = f21(a, &(&(&one - c) + a), &(&(&one - b) + a), &w, ctx)?;
            let f2 = f21(b, &(&(&one - c) + b), &(&(&one - a) + b), &w, ctx)?;
            let p1 = mz.pow_real(&-a)?;
            let p2 = mz.pow_real(&-b)?;
            Ok(&(&p1 * &f1).scale(&k1) + &(&p2 * &f2).scale(&k2))
        }
        Transform::InverseOneMinus => {
            let w = omz.recip();
            let k1 = gamma_ratio(&[c, &(b - a)], &[b, &ca], &g)?;
            let k2 = gamma_ratio(&[c, &(a - b)], &[a, &cb], &g)?;
            let f1 = f21(a, &cb, &(&(a - b) + &one), &w, ctx)?;
            let f2 = f21(b, &ca, &(&(b - a) + &one), &w, ctx)?;
            let p1 = omz.pow_real(&-a)?;
            let p2 = omz.pow_real(&-b)?;
            Ok(&(&p1 * &f1).scale(&k1) + &(&p2 * &f2).scale(&k2))
        }
        Transform::OneMinusInverse => {
            let w = &onec - &z.recip();
            let k1 = gamma_ratio(&[c, &cab], &[&ca, &cb], &g)?;
            let k2 = gamma_ratio(&[c, &-&cab], &[a, b], &g)?;
            let f1 = f21(a, &(&(a - c) + &one), &(&one - &cab), &w, ctx)?;
            let f2 = f21(&ca, &(&one - a), &(&one + &cab), &w, ctx)?;
            let p1 = z.pow_real(&-a)?;
            let p2 = &omz.pow_real(&cab)? * &z.pow_real(&(a - c))?;
            Ok(&(&p1 * &f1).scale(&k1) + &(&p2 * &f2).scale(&k2))
        }
    }
}

/// Which side of the cut `[1, inf)` a boundary value is taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutSide {
    Above,
    Below,
}

/// Boundary value `F(a, b; c; x +- i0)` for real `x > 1`.
pub fn gauss_2f1_cut(a: &XReal, b: &XReal, c: &XReal, x: &XReal, side: CutSide, ctx: &Context) -> Result<XComplex> {
    let bits = ctx.bits();
    if *x <= XReal::one(bits) {
        return gauss_2f1(a, b, c, &XComplex::from_real(x.clone()), ctx);
    }
    let eps = x.ldexp(-(bits as i64) - 40);
    let im = match side {
        CutSide::Above => eps,
        CutSide::Below => -eps,
    };
    gauss_2f1(a, b, c, &XComplex::new(x.with_bits(bits), im), ctx)
}
