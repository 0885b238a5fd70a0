//! `L(E, 2)` for elliptic curves over Q by the smoothed approximate
//! functional equation.
//!
//! With `A = sqrt(N)/(2 pi)`, `x_n = 2 pi n / sqrt(N)` and any `tau > 0`,
//!
//! ```text
//! Lambda(s) = sum a_n [ (A/n)^s Gamma(s, x_n tau) + eps (A/n)^(2-s) Gamma(2-s, x_n/tau) ]
//! ```
//!
//! At `s = 2`, `tau = 1` this is
//! `L(2) = sum a_n [ Gamma(2, x_n)/n^2 + eps (2 pi)^2/N E1(x_n) ]`.

mod igamma;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::ellcurve::{self, arith, ReductionKind, WeierstrassModel};
use crate::error::{Error, Result};
use crate::precision::{Context, XReal};

pub use igamma::{e1, incomplete_gamma_upper, UpperGamma};

/// Dirichlet coefficients of `L(E, s)` with conductor and root number.
#[derive(Clone, Debug)]
pub struct LSeries {
    pub conductor: u64,
    /// `a[n]` for `1 <= n <= n_max`; `a[0]` is unused.
    pub a: Vec<i64>,
    pub root_number: Option<i32>,
}

/// Compensated accumulator (Kahan–Babuska) over `XReal`.
struct KahanSum {
    sum: XReal,
    comp: XReal,
}

impl KahanSum {
    fn new(bits: u32) -> KahanSum {
        KahanSum { sum: XReal::zero(bits), comp: XReal::zero(bits) }
    }

    fn add(&mut self, x: &XReal) {
        let t = &self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp = &self.comp + &(&(&self.sum - &t) + x);
        } else {
            self.comp = &self.comp + &(&(x - &t) + &self.sum);
        }
        self.sum = t;
    }

    fn value(&self) -> XReal {
        &self.sum + &self.comp
    }
}

/// Number of terms making the `exp(-2 pi n / sqrt(N) / tau)` tail smaller
/// than `10^-(digits + 8)`.
pub fn terms_needed(conductor: u64, digits: u32, tau: f64) -> usize {
    let sq = (conductor as f64).sqrt();
    (((digits + 8) as f64) * std::f64::consts::LN_10 * sq * tau / (2.0 * std::f64::consts::PI)).ceil() as usize + 10
}

impl LSeries {
    /// Coefficients up to `n_max` for the curve (any model; the global
    /// minimal model is used).
    pub fn from_model(model: &WeierstrassModel, n_max: usize) -> Result<LSeries> {
        let (min, data) = ellcurve::curve_data(model)?;
        let conductor = data
            .conductor
            .to_u64()
            .ok_or_else(|| Error::Domain("conductor does not fit in 64 bits".into()))?;
        let bad: Vec<(u64, ReductionKind)> =
            data.local_data.iter().map(|l| (l.p.to_u64().unwrap_or(u64::MAX), l.kind)).collect();
        let primes = arith::primes_up_to(n_max);
        let aps: Vec<i64> = primes
            .par_iter()
            .map(|&p| {
                let p = p as u64;
                match bad.iter().find(|(q, _)| *q == p) {
                    Some((_, kind)) => kind.ap().unwrap(),
                    None => p as i64 + 1 - ellcurve::count_points(&min, p) as i64,
                }
            })
            .collect();
        let mut a = vec![0i64; n_max + 1];
        if n_max >= 1 {
            a[1] = 1;
        }
        for (&p, &ap) in primes.iter().zip(&aps) {
            a[p] = ap;
        }
        let spf = arith::spf_table(n_max);
        for n in 2..=n_max {
            let p = spf[n] as usize;
            if p == n {
                continue;
            }
            let mut m = n;
            let mut pk = 1;
            while m % p == 0 {
                m /= p;
                pk *= p;
            }
            a[n] = if m > 1 {
                a[pk] * a[m]
            } else {
                // a_{p^k} = a_p a_{p^(k-1)} - [p good] p a_{p^(k-2)}
                let good = conductor % p as u64 != 0;
                let prev2 = if n / p / p >= 1 { a[n / p / p] } else { 0 };
                a[p] * a[n / p] - if good { p as i64 * prev2 } else { 0 }
            };
        }
        Ok(LSeries { conductor, a, root_number: None })
    }

    pub fn n_max(&self) -> usize {
        self.a.len().saturating_sub(1)
    }

    fn x_step(&self, bits: u32) -> XReal {
        // 2 pi / sqrt(N)
        let n = XReal::from_bigint(&BigInt::from(self.conductor), bits);
        crate::precision::consts::pi(bits).ldexp(1) / &n.sqrt()
    }

    /// The two smoothed sums of `Lambda(s) = S1 + eps S2` with split point `tau`:
    /// `S1 = sum a_n (A/n)^s Gamma(s, x_n tau)`,
    /// `S2 = sum a_n (A/n)^(2-s) Gamma(2-s, x_n/tau)`.
    pub fn lambda_parts(&self, s: &XReal, tau: &XReal, ctx: &Context) -> Result<(XReal, XReal)> {
        let bits = ctx.bits();
        let tf = tau.to_f64();
        let need = terms_needed(self.conductor, ctx.digits, tf.max(1.0 / tf));
        if need > self.n_max() {
            return Err(Error::Domain(format!("need {need} coefficients, have {}", self.n_max())));
        }
        let step = self.x_step(bits);
        let step_f = step.to_f64();
        let a_const = step.recip();
        let s2 = &XReal::from_i64(2, bits) - s;
        let tau_inv = tau.recip();
        let g_s = UpperGamma::new(s, ctx)?;
        let g_s2 = UpperGamma::new(&s2, ctx)?;
        let mut acc1 = KahanSum::new(bits);
        let mut acc2 = KahanSum::new(bits);
        for n in 1..=need {
            let an = self.a[n];
            if an == 0 {
                continue;
            }
            let wb = term_bits(bits, step_f * n as f64 / tf.max(1.0 / tf));
            let xn = step.with_bits(wb).mul_i(n as i64);
            let an_over = a_const.with_bits(wb).div_i(n as i64);
            let log_ratio = an_over.ln();
            let g1 = g_s.eval(&(&xn * &tau.with_bits(wb)), wb)?;
            let g2 = g_s2.eval(&(&xn * &tau_inv.with_bits(wb)), wb)?;
            let t1 = &(&log_ratio * &s.with_bits(wb)).exp() * &g1;
            let t2 = &(&log_ratio * &s2.with_bits(wb)).exp() * &g2;
            acc1.add(&t1.mul_i(an).with_bits(bits));
            acc2.add(&t2.mul_i(an).with_bits(bits));
        }
        Ok((acc1.value(), acc2.value()))
    }

    /// `Lambda(s)` by the smoothed sum with split point `tau` and sign `eps`.
    pub fn lambda(&self, s: &XReal, tau: &XReal, eps: i32, ctx: &Context) -> Result<XReal> {
        let (s1, s2) = self.lambda_parts(s, tau, ctx)?;
        Ok(&s1 + &s2.mul_i(eps as i64))
    }
}

/// Working bits for a term of size about `exp(-x)`.
fn term_bits(bits: u32, x: f64) -> u32 {
    let drop = (x * std::f64::consts::LOG2_E) as i64 - 16;
    (bits as i64 - drop.max(0)).max(64) as u32
}

const SIGN_DELTA: (i64, i64) = (1, 10);
const SIGN_TAU: (i64, i64) = (6, 5);

/// Digits used by the sign test on attempt `k` (0 or 1).
fn sign_digits(ctx: &Context, k: u32) -> u32 {
    ctx.digits / 2 + 6 + 6 * k
}

/// Residuals `|Lambda_1(1 + d) - eps Lambda_1.2(1 - d)|` for `eps = +1, -1`.
fn sign_residuals(series: &LSeries, c: &Context) -> Result<[f64; 2]> {
    let bits = c.bits();
    let one = XReal::one(bits);
    let delta = XReal::from_i64(SIGN_DELTA.0, bits).div_i(SIGN_DELTA.1);
    let tau2 = XReal::from_i64(SIGN_TAU.0, bits).div_i(SIGN_TAU.1);
    let (l1, l2) = series.lambda_parts(&(&one + &delta), &one, c)?;
    let (r1, r2) = series.lambda_parts(&(&one - &delta), &tau2, c)?;
    let mut out = [0.0; 2];
    for (k, eps) in [1i64, -1].into_iter().enumerate() {
        let lhs = &l1 + &l2.mul_i(eps);
        let rhs = &r1 + &r2.mul_i(eps);
        out[k] = (&lhs - &rhs.mul_i(eps)).abs().to_f64();
    }
    Ok(out)
}

/// Root number by the functional-equation residual
/// `|Lambda_1(1 + d) - eps Lambda_1.2(1 - d)|`, `d = 0.1`, evaluated at
/// roughly half the working precision. Exactly one sign must pass
/// `10^(-P/2)`; otherwise the test is retried once at higher precision.
pub fn root_number(series: &LSeries, ctx: &Context) -> Result<i32> {
    let tol = 10f64.powi(-((ctx.digits / 2) as i32));
    let mut last = String::new();
    for attempt in 0..2 {
        let c = ctx.with_digits(sign_digits(ctx, attempt));
        let res = sign_residuals(series, &c)?;
        let pass: Vec<i32> = [1, -1].into_iter().zip(res).filter(|(_, r)| *r <= tol).map(|(e, _)| e).collect();
        if pass.len() == 1 {
            return Ok(pass[0]);
        }
        last = format!("residuals {res:?} at {} digits", c.digits);
    }
    Err(Error::RootNumber(last))
}

/// Residual of the sign test for a given `eps` (diagnostics, negative controls).
pub fn root_number_residual(series: &LSeries, eps: i32, ctx: &Context) -> Result<f64> {
    let res = sign_residuals(series, &ctx.with_digits(sign_digits(ctx, 0)))?;
    Ok(if eps == 1 { res[0] } else { res[1] })
}

/// `L(E, 2) = sum a_n [ (1 + x_n) e^(-x_n) / n^2 + eps (2 pi)^2/N E1(x_n) ]`.
pub fn l_value_2(series: &LSeries, ctx: &Context) -> Result<XReal> {
    let eps = series.root_number.ok_or_else(|| Error::RootNumber("root number not determined".into()))?;
    let wctx = ctx.raised(5);
    let bits = wctx.bits();
    let need = terms_needed(series.conductor, ctx.digits, 1.0);
    if need > series.n_max() {
        return Err(Error::Domain(format!("need {need} coefficients, have {}", series.n_max())));
    }
    let step = series.x_step(bits);
    let step_f = step.to_f64();
    let nbig = XReal::from_bigint(&BigInt::from(series.conductor), bits);
    let dual = &crate::precision::consts::pi(bits).sqr().ldexp(2) / &nbig;
    let dual = if eps == 1 { dual } else { -&dual };
    let e1 = UpperGamma::new(&XReal::zero(bits), &wctx)?;
    let mut acc = KahanSum::new(bits);
    for n in 1..=need {
        let an = series.a[n];
        if an == 0 {
            continue;
        }
        let wb = term_bits(bits, step_f * n as f64);
        let x = step.with_bits(wb).mul_i(n as i64);
        let ex = (-&x).exp();
        let n2 = (n as i64) * (n as i64);
        let g2 = (&(&x + &XReal::one(wb)) * &ex).div_i(n2);
        let term = &g2 + &(&dual.with_bits(wb) * &e1.eval(&x, wb)?);
        acc.add(&term.mul_i(an).with_bits(bits));
    }
    Ok(acc.value().with_bits(ctx.bits()))
}

/// Coefficient count covering both `l_value_2` and the sign test.
pub fn series_length(conductor: u64, ctx: &Context) -> usize {
    let tau = SIGN_TAU.0 as f64 / SIGN_TAU.1 as f64;
    terms_needed(conductor, ctx.digits, 1.0).max(terms_needed(conductor, sign_digits(ctx, 1), tau))
}

/// Coefficients, root number and `L(E, 2)` for a curve.
pub fn l_value_for_model(model: &WeierstrassModel, ctx: &Context) -> Result<(LSeries, XReal)> {
    let n = ellcurve::conductor(model)?
        .to_u64()
        .ok_or_else(|| Error::Domain("conductor does not fit in 64 bits".into()))?;
    let mut series = LSeries::from_model(model, series_length(n, ctx))?;
    series.root_number = Some(root_number(&series, ctx)?);
    let v = l_value_2(&series, ctx)?;
    Ok((series, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ellcurve::legendre_model;
    use crate::hyper::{pfq, HGSpec};
    use crate::precision::{parse_rational, XComplex};

    #[test]
    fn incomplete_gamma_closed_forms() {
        let c = Context::new(40);
        let tol = c.ten_pow_neg(45);
        for xs in ["0.3", "1", "2.5", "7", "30"] {
            let x = c.parse(xs).unwrap();
            let g1 = incomplete_gamma_upper(&c.int(1), &x, &c).unwrap();
            assert!((&g1 - &(-&x).exp()).abs() < tol, "x = {xs}");
            let g2 = incomplete_gamma_upper(&c.int(2), &x, &c).unwrap();
            let want = &(&x + &c.int(1)) * &(-&x).exp();
            assert!((&g2 - &want).abs() < tol, "x = {xs}");
        }
        // E1 on both sides of the switch
        let e = e1(&c.parse("0.5").unwrap(), &c).unwrap();
        let want = c.parse("0.5597735947761608117467959393150852352268468903163").unwrap();
        assert!((&e - &want).abs() < tol);
        let e = e1(&c.parse("3").unwrap(), &c).unwrap();
        let want = c.parse("0.013048381094197037412500745828645022948477634080224").unwrap();
        assert!((&e - &want).abs() < tol);
    }

    #[test]
    fn coefficients_conductor_24() {
        let m = legendre_model(&parse_rational("-3").unwrap()).unwrap();
        let s = LSeries::from_model(&m, 200).unwrap();
        assert_eq!(s.conductor, 24);
        assert_eq!(s.a[1], 1);
        // multiplicativity on coprime pairs
        for (m1, m2) in [(5usize, 7usize), (4, 9), (11, 13), (8, 25), (3, 49)] {
            assert_eq!(s.a[m1 * m2], s.a[m1] * s.a[m2]);
        }
        // 24a: a_5 = -2, a_7 = 0, a_11 = 4, a_13 = -2
        assert_eq!((s.a[5], s.a[7], s.a[11], s.a[13]), (-2, 0, 4, -2));
    }

    #[test]
    fn rogers_zudilin_value() {
        let c = Context::new(30);
        let m = legendre_model(&parse_rational("-3").unwrap()).unwrap();
        let (series, l) = l_value_for_model(&m, &c).unwrap();
        assert_eq!(series.root_number, Some(1));
        let h = c.ratio(1, 2);
        let spec = HGSpec::new(
            vec![h.clone(), h.clone(), h],
            vec![c.ratio(3, 2), c.int(1)],
            XComplex::from_real(c.ratio(1, 4)),
        )
        .unwrap();
        let f = pfq(&spec, &c).unwrap().re;
        let want = &(&c.pi().sqr() / &c.int(12)) * &f;
        assert!((&l - &want).abs() < c.ten_pow_neg(28), "{l} vs {want}");
        let wrong = root_number_residual(&series, -1, &c).unwrap();
        assert!(wrong > 1e-2, "flipped sign residual {wrong}");
    }
}
