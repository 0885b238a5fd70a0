//! Gauss–Legendre and tanh-sinh quadrature at working precision.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::precision::{consts, XReal};

type Rule = Rc<Vec<(XReal, XReal)>>;

thread_local! {
    static GL_CACHE: RefCell<HashMap<(usize, u32), Rule>> = RefCell::new(HashMap::new());
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: &XReal) -> (XReal, XReal) {
    let bits = x.bits();
    let mut p0 = XReal::one(bits);
    let mut p1 = x.clone();
    for k in 2..=n as i64 {
        let p2 = (&(x * &p1).mul_i(2 * k - 1) - &p0.mul_i(k - 1)).div_i(k);
        p0 = p1;
        p1 = p2;
    }
    let one = XReal::one(bits);
    let d = (&(x * &p1) - &p0).mul_i(n as i64) / &(&x.sqr() - &one);
    (p1, d)
}

/// Nodes and weights of the `n`-point rule on `[-1, 1]` (positive nodes and
/// the centre, if any; the rule is symmetric).
pub fn gauss_legendre_rule(n: usize, bits: u32) -> Rule {
    let key = (n, bits);
    if let Some(r) = GL_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return r;
    }
    let w = bits + 16;
    let mut out = Vec::new();
    let tol_top = -(w as i64) + 4;
    for i in 1..=n.div_ceil(2) {
        let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut x = XReal::from_f64(guess, w);
        if n % 2 == 1 && i == n.div_ceil(2) {
            x = XReal::zero(w);
        } else {
            for _ in 0..100 {
                let (p, d) = legendre(n, &x);
                let dx = &p / &d;
                x = &x - &dx;
                if dx.is_zero() || dx.top() < tol_top {
                    break;
                }
            }
        }
        let (_, d) = legendre(n, &x);
        let one = XReal::one(w);
        let weight = XReal::from_i64(2, w) / &(&(&one - &x.sqr()) * &d.sqr());
        out.push((x.with_bits(bits), weight.with_bits(bits)));
    }
    let rule = Rc::new(out);
    GL_CACHE.with(|c| c.borrow_mut().insert(key, rule.clone()));
    rule
}

/// `n`-point Gauss–Legendre on `[lo, hi]`.
pub fn gauss_legendre<F>(f: &mut F, lo: &XReal, hi: &XReal, n: usize) -> Result<XReal>
where
    F: FnMut(&XReal) -> Result<XReal>,
{
    let bits = lo.bits().max(hi.bits());
    let rule = gauss_legendre_rule(n, bits);
    let mid = (lo + hi).ldexp(-1);
    let half = (hi - lo).ldexp(-1);
    let mut s = XReal::zero(bits);
    for (x, w) in rule.iter() {
        if x.is_zero() {
            s = &s + &(w * &f(&mid)?);
        } else {
            let dx = &half * x;
            let v = &f(&(&mid + &dx))? + &f(&(&mid - &dx))?;
            s = &s + &(w * &v);
        }
    }
    Ok(&s * &half)
}

/// Adaptive Gauss–Legendre: accept the `2n` rule when it agrees with the
/// `n` rule to `tol`, otherwise bisect (up to `depth` levels).
pub fn adaptive_gl<F>(f: &mut F, lo: &XReal, hi: &XReal, n: usize, tol: &XReal, depth: u32) -> Result<XReal>
where
    F: FnMut(&XReal) -> Result<XReal>,
{
    let coarse = gauss_legendre(f, lo, hi, n)?;
    let fine = gauss_legendre(f, lo, hi, 2 * n)?;
    if (&coarse - &fine).abs() <= *tol {
        return Ok(fine);
    }
    if depth == 0 {
        return Err(Error::Quadrature(format!("Gauss-Legendre on [{lo}, {hi}] did not settle")));
    }
    let mid = (lo + hi).ldexp(-1);
    let half_tol = tol.ldexp(-1);
    Ok(adaptive_gl(f, lo, &mid, n, &half_tol, depth - 1)? + adaptive_gl(f, &mid, hi, n, &half_tol, depth - 1)?)
}

/// Tanh-sinh quadrature on `[0, 1]` for integrands with endpoint
/// singularities.
///
/// The integrand receives `(x, 1 - x)` computed separately so both
/// endpoints keep full relative accuracy. The step is halved until two
/// successive levels agree to `tol` (at most `max_level` halvings).
pub fn tanh_sinh_01<F>(f: &mut F, bits: u32, tol: &XReal, max_level: u32) -> Result<XReal>
where
    F: FnMut(&XReal, &XReal) -> Result<XReal>,
{
    let w = bits;
    let pi = consts::pi(w);
    let eps_top = -(w as i64) - 10;
    // contribution at s: pi cosh(s) x (1-x) f(x, 1-x) with x = E/(1+E), E = exp(pi sinh s)
    let mut point = |s: &XReal| -> Result<XReal> {
        let es = s.exp();
        let ems = es.recip();
        let sinh = (&es - &ems).ldexp(-1);
        let cosh = (&es + &ems).ldexp(-1);
        let e = (&pi * &sinh).exp();
        let one = XReal::one(w);
        let den = &one + &e;
        let x = &e / &den;
        let omx = den.recip();
        if x.is_zero() || omx.is_zero() {
            return Ok(XReal::zero(w));
        }
        let jac = &(&(&pi * &cosh) * &x) * &omx;
        Ok(&jac * &f(&x, &omx)?)
    };
    // sum over s = k h for all k, truncating each tail once terms vanish
    let sum_level = |h: &XReal, odd_only: bool, point: &mut dyn FnMut(&XReal) -> Result<XReal>| -> Result<XReal> {
        let mut s = XReal::zero(w);
        if !odd_only {
            s = point(&XReal::zero(w))?;
        }
        for sign in [1i64, -1] {
            let mut k: i64 = 1;
            let mut small = 0;
            loop {
                let v = point(&h.mul_i(sign * k))?;
                let negligible = v.is_zero() || v.top() < eps_top;
                s = &s + &v;
                if negligible {
                    small += 1;
                    if small >= 2 {
                        break;
                    }
                } else {
                    small = 0;
                }
                k += if odd_only { 2 } else { 1 };
                if k > 1 << 20 {
                    return Err(Error::Quadrature("tanh-sinh tail did not decay".into()));
                }
            }
        }
        Ok(s)
    };
    let mut h = XReal::one(w);
    let mut total = sum_level(&h, false, &mut point)?;
    let mut est = &total * &h;
    for _ in 0..max_level {
        h = h.ldexp(-1);
        total = &total + &sum_level(&h, true, &mut point)?;
        let next = &total * &h;
        let diff = (&next - &est).abs();
        est = next;
        if diff <= *tol {
            return Ok(est);
        }
    }
    Err(Error::Quadrature("tanh-sinh did not converge".into()))
}
