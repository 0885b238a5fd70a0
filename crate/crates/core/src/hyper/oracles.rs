//! Independent evaluations used to cross-check the series code.

use super::quad::tanh_sinh_01;
use crate::error::{Error, Result};
use crate::precision::{Context, XComplex, XReal};

/// `int_0^1 x^(a-1) (1-x)^(b-1) (1-tx)^(-b) dx = B(a,b) F(a, b; a+b; t)`
/// by tanh-sinh quadrature, converged to `10^(-P/2)`.
pub fn euler_integral_oracle(a: &XReal, b: &XReal, t: &XReal, ctx: &Context) -> Result<XReal> {
    let bits = ctx.bits();
    let one = XReal::one(bits);
    if *t >= one {
        return Err(Error::Domain(format!("Euler integral singular for t = {t} >= 1")));
    }
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::Domain("Euler integral needs a, b > 0".into()));
    }
    let (a, b, t) = (a.with_bits(bits), b.with_bits(bits), t.with_bits(bits));
    let one_minus_t = &one - &t;
    let am1 = &a - &one;
    let bm1 = &b - &one;
    let mb = -&b;
    let mut f = |x: &XReal, omx: &XReal| -> Result<XReal> {
        // 1 - t x = (1 - t) + t (1 - x)
        let base = &one_minus_t + &(&t * omx);
        Ok(&(&x.powf(&am1) * &omx.powf(&bm1)) * &base.powf(&mb))
    };
    let tol = ctx.ten_pow_neg(ctx.digits as i64 / 2 + 2);
    tanh_sinh_01(&mut f, bits, &tol, 12)
}

/// `1 / AGM(1, sqrt(1 - z)) = F(1/2, 1/2; 1; z)`, choosing at each step
/// the square root closer to the arithmetic mean.
pub fn agm_oracle(z: &XComplex, ctx: &Context) -> Result<XComplex> {
    let bits = ctx.bits();
    let w = bits + 16;
    let z = z.with_bits(w);
    let one = XReal::one(w);
    if z.im.is_zero() && z.re >= one {
        return Err(Error::BranchCut("AGM oracle needs z outside [1, inf)".into()));
    }
    let mut a = XComplex::one(w);
    let mut b = (&XComplex::one(w) - &z).sqrt();
    for _ in 0..200 {
        let diff = (&a - &b).abs();
        if diff.is_zero() || diff.top() < a.abs().top() - w as i64 + 2 {
            return Ok(a.recip().with_bits(bits));
        }
        let m = (&a + &b).ldexp(-1);
        let g = (&a * &b).sqrt();
        let alt = -&g;
        let g = if (&m - &g).norm_sqr() <= (&m - &alt).norm_sqr() { g } else { alt };
        a = m;
        b = g;
    }
    Err(Error::Divergence("AGM iteration did not converge".into()))
}
