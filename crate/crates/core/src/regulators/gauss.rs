//! Fibrations `y^N = x^a (1-x)^b (1-tx)^(N-b)` with
//! `dlog(xi) = sum_{n in I_e} lambda_n dt/(t-1) omega_n`.

use num_bigint::BigInt;
use num_integer::Integer;

use super::{g_complex, gamma_bracket, z_of, zudilin_rhs, Ambiguity, EPartIndexSet, RegResult};
use crate::error::{Error, Result};
use crate::precision::{Context, Rational, XComplex, XReal};
use crate::special::digamma;
use crate::verify::rational_reconstruct;

#[derive(Clone, Debug, PartialEq)]
pub struct GaussFibration {
    pub big_n: u32,
    pub a: u32,
    pub b: u32,
    /// `#ker(e: mu_N -> E^x)`
    pub d: u32,
    /// `I_e` in increasing order
    pub index: Vec<u32>,
    /// `lambda_n`, aligned with `index`
    pub lambda: Vec<Rational>,
}

impl GaussFibration {
    pub fn new(big_n: u32, a: u32, b: u32, d: u32, lambda: Vec<Rational>) -> Result<GaussFibration> {
        if big_n < 2 || a == 0 || b == 0 || a >= big_n || b >= big_n {
            return Err(Error::Domain(format!("need 1 <= a, b < N, got N = {big_n}, a = {a}, b = {b}")));
        }
        if big_n.gcd(&a).gcd(&b) != 1 {
            return Err(Error::Domain("gcd(N, a, b) must be 1".into()));
        }
        if d == 0 || big_n % d != 0 {
            return Err(Error::Domain(format!("d = {d} does not divide N = {big_n}")));
        }
        if (a * d) % big_n == 0 || (b * d) % big_n == 0 {
            return Err(Error::Degenerate("ad/N or bd/N is an integer".into()));
        }
        let EPartIndexSet::Gauss(index) = gauss_index_set(big_n, d)? else { unreachable!() };
        if lambda.len() != index.len() {
            return Err(Error::Domain(format!("expected {} lambda values, got {}", index.len(), lambda.len())));
        }
        Ok(GaussFibration { big_n, a, b, d, index, lambda })
    }

    /// `a_n = {an/N}`
    pub fn a_n(&self, n: u32) -> Rational {
        Rational::new(((self.a * n) % self.big_n).into(), self.big_n.into())
    }

    /// `b_n = {bn/N}`
    pub fn b_n(&self, n: u32) -> Rational {
        Rational::new(((self.b * n) % self.big_n).into(), self.big_n.into())
    }

    /// `(1 - zeta_N^n) lambda_n` for each `n` of `I_e`.
    fn coefs(&self, ctx: &Context) -> Vec<(u32, XComplex)> {
        let bits = ctx.bits();
        let one = XComplex::one(bits);
        self.index
            .iter()
            .zip(&self.lambda)
            .map(|(&n, l)| {
                let z = XComplex::root_of_unity(n as i64, self.big_n as i64, bits);
                (n, (&one - &z).scale(&ctx.rational(l)))
            })
            .collect()
    }
}

/// `I_e = {n : 1 <= n <= N-1, d | n, gcd(n/d, N/d) = 1}`.
pub fn gauss_index_set(big_n: u32, d: u32) -> Result<EPartIndexSet> {
    if d == 0 || big_n % d != 0 {
        return Err(Error::Domain(format!("d = {d} does not divide N = {big_n}")));
    }
    let nd = big_n / d;
    let v = (1..big_n).filter(|&n| n % d == 0 && (n / d).gcd(&nd) == 1).collect();
    Ok(EPartIndexSet::Gauss(v))
}

/// `sum_{n in I_e} lambda_n zeta^n in Q` for every `zeta in mu_N`.
///
/// Numerical at precision `P`: the imaginary part must be below
/// `10^(-P/2)` and the real part must reconstruct to a rational with
/// denominator at most `10^6` within the same tolerance.
pub fn lambda_constraint_check(big_n: u32, index: &EPartIndexSet, lambda: &[Rational], ctx: &Context) -> bool {
    let EPartIndexSet::Gauss(ns) = index else { return false };
    if ns.len() != lambda.len() {
        return false;
    }
    let bits = ctx.bits();
    let tol = ctx.ten_pow_neg((ctx.digits / 2) as i64);
    let qmax = BigInt::from(1_000_000);
    (0..big_n as i64).all(|k| {
        let mut s = XComplex::zero(bits);
        for (&n, l) in ns.iter().zip(lambda) {
            s = &s + &XComplex::root_of_unity(k * n as i64, big_n as i64, bits).scale(&ctx.rational(l));
        }
        s.im.abs() < tol && rational_reconstruct(&s.re, &qmax, &tol).is_some()
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaussCycle {
    Gamma0,
    Gamma1,
}

/// The two closed forms of `(1/2 pi i) <reg(xi) | gamma_1>`: the digamma/4F3
/// form (real `t > 0` or `|1-t| < 1`) and the 3F2 form (`|1-t| > 1`).
/// Each is `None` outside its region.
pub fn gauss_gamma1_forms(fib: &GaussFibration, t: &XComplex, ctx: &Context) -> Result<(Option<XComplex>, Option<XComplex>)> {
    check_gauss(fib, ctx)?;
    let bits = ctx.bits();
    let one = XComplex::one(bits);
    let x = &one - t;
    if x.is_zero() {
        return Err(Error::SingularFiber("1".into()));
    }
    let series_ok = if t.im.is_zero() { t.re.is_positive() } else { x.abs() < XReal::one(bits) };
    let z_ok = x.abs() > XReal::one(bits);

    let coefs = fib.coefs(ctx);
    let form_a = if series_ok {
        let psi1 = digamma(&ctx.int(1), ctx)?;
        let lg = x.ln()?;
        let mut acc = XComplex::zero(bits);
        for (n, c) in &coefs {
            let (an, bn) = (ctx.rational(&fib.a_n(*n)), ctx.rational(&fib.b_n(*n)));
            let k = &(&psi1.ldexp(1) - &digamma(&an, ctx)?) - &digamma(&bn, ctx)?;
            let br = &(&XComplex::from_real(k) - &lg) - &g_complex(&an, &bn, &x, ctx)?;
            acc = &acc + &(c * &br);
        }
        Some(acc)
    } else {
        None
    };
    let form_b = if z_ok {
        let z = z_of(t, ctx)?;
        let mut acc = XComplex::zero(bits);
        for (n, c) in &coefs {
            let (an, bn) = (ctx.rational(&fib.a_n(*n)), ctx.rational(&fib.b_n(*n)));
            acc = &acc + &(c * &zudilin_rhs(&an, &bn, &z, ctx)?);
        }
        Some(acc)
    } else {
        None
    };
    Ok((form_a, form_b))
}

fn check_gauss(fib: &GaussFibration, ctx: &Context) -> Result<()> {
    if fib.a == fib.b {
        return Err(Error::ConjecturalCase);
    }
    let index = EPartIndexSet::Gauss(fib.index.clone());
    if !lambda_constraint_check(fib.big_n, &index, &fib.lambda, ctx) {
        return Err(Error::LambdaConstraint);
    }
    for &n in &fib.index {
        if fib.a_n(n) == fib.b_n(n) {
            return Err(Error::Degenerate(format!("a_{n} = b_{n}")));
        }
    }
    Ok(())
}

/// Regulator of `xi` on `gamma_1` (normalized by `1/(2 pi i)`, mod `Q(1)`)
/// or on `gamma_0` (mod `Q(2)`).
pub fn gauss_reg(fib: &GaussFibration, t: &XComplex, cycle: GaussCycle, ctx: &Context) -> Result<RegResult> {
    match cycle {
        GaussCycle::Gamma1 => {
            let (a, b) = gauss_gamma1_forms(fib, t, ctx)?;
            let (value, note) = match (a, b) {
                (Some(a), Some(b)) => {
                    // the forms differ by pi i sum (1 - zeta^n) lambda_n, a rational multiple of 2 pi i
                    let two_pi = ctx.pi().ldexp(1);
                    let q = (&b.im - &a.im) / &two_pi;
                    let tol = ctx.ten_pow_neg((ctx.digits / 2) as i64);
                    let agree = (&b.re - &a.re).abs() < tol
                        && rational_reconstruct(&q, &BigInt::from(1000), &tol).is_some();
                    if !agree {
                        return Err(Error::Divergence("gamma_1 closed forms disagree mod Q(1)".into()));
                    }
                    (a, "digamma/4F3 form; 3F2 form agrees mod Q(1)")
                }
                (Some(a), None) => (a, "digamma/4F3 form"),
                (None, Some(b)) => (b, "3F2 form, |1-t| > 1"),
                (None, None) => return Err(Error::Domain(format!("no gamma_1 formula converges at t = {t}"))),
            };
            Ok(RegResult { value, ambiguity: Ambiguity::ModQ1, branch_note: format!("value / (2 pi i); {note}") })
        }
        GaussCycle::Gamma0 => {
            check_gauss(fib, ctx)?;
            if t.abs() >= XReal::one(ctx.bits()) {
                return Err(Error::Domain(format!("gamma_0 formula needs |t| < 1, got {t}")));
            }
            let z = z_of(t, ctx)?;
            let mut acc = XComplex::zero(ctx.bits());
            for (n, c) in fib.coefs(ctx) {
                let (an, bn) = (ctx.rational(&fib.a_n(n)), ctx.rational(&fib.b_n(n)));
                acc = &acc + &(&c * &gamma_bracket(&an, &bn, &z, ctx)?);
            }
            Ok(RegResult {
                value: acc,
                ambiguity: Ambiguity::ModQ2,
                branch_note: "|t| < 1 < |1-t|, principal powers of z".into(),
            })
        }
    }
}
