use crate::error::{Error, Result};
use crate::precision::{Context, XComplex, XReal};

/// One instance of `pFq(upper; lower; z)`.
#[derive(Clone, Debug)]
pub struct HGSpec {
    pub upper: Vec<XReal>,
    pub lower: Vec<XReal>,
    pub z: XComplex,
}

impl HGSpec {
    pub fn new(upper: Vec<XReal>, lower: Vec<XReal>, z: XComplex) -> Result<HGSpec> {
        for b in &lower {
            if !b.is_positive() && b.is_integer() {
                return Err(Error::Domain(format!("lower parameter {b} is a non-positive integer")));
            }
        }
        Ok(HGSpec { upper, lower, z })
    }

    /// Index of an upper parameter that truncates the series, if any.
    fn terminating_degree(&self) -> Option<u64> {
        self.upper
            .iter()
            .filter(|a| !a.is_positive() && a.is_integer())
            .map(|a| a.to_f64().abs().round() as u64)
            .min()
    }
}

/// Majorant for the term ratios `|t_{k+1}/t_k|`, `k >= n`.
///
/// Upper parameters are paired with lower ones (the `n!` supplies a lower
/// `1`); each factor `(a+k)/(b+k)` is monotone in `k` once `k + min(a,b) > 0`,
/// so `max(factor(n), 1)` bounds it from `n` on. Leftover lower factors only
/// decrease.
struct RatioBound {
    pairs: Vec<(f64, f64)>,
    extra_lower: Vec<f64>,
    zabs: f64,
    start: f64,
}

impl RatioBound {
    fn new(spec: &HGSpec, zabs: f64) -> RatioBound {
        let ups: Vec<f64> = spec.upper.iter().map(|x| x.to_f64()).collect();
        let mut lows: Vec<f64> = spec.lower.iter().map(|x| x.to_f64()).collect();
        lows.push(1.0);
        let k = ups.len().min(lows.len());
        let pairs: Vec<(f64, f64)> = ups[..k].iter().cloned().zip(lows[..k].iter().cloned()).collect();
        let extra_lower = lows[k..].to_vec();
        let start = ups
            .iter()
            .chain(lows.iter())
            .fold(0f64, |m, &v| m.max(-v))
            .ceil()
            + 1.0;
        RatioBound { pairs, extra_lower, zabs, start }
    }

    fn rho(&self, n: f64) -> Option<f64> {
        if n < self.start {
            return None;
        }
        let mut r = self.zabs;
        for &(a, b) in &self.pairs {
            r *= ((a + n) / (b + n)).abs().max(1.0);
        }
        for &b in &self.extra_lower {
            r /= (b + n).abs();
        }
        Some(r)
    }
}

/// Generalized hypergeometric series.
///
/// Stops when a rigorous tail bound drops below `10^(-P-5) |partial sum|`:
/// a geometric majorant inside the disk, and the `n^(-1-s)` integral bound
/// on `|z| = 1` with `s = Re(sum lower - sum upper)`.
pub fn pfq(spec: &HGSpec, ctx: &Context) -> Result<XComplex> {
    let bits = ctx.bits();
    let w = bits + 24;
    let z = spec.z.with_bits(w);
    if z.is_zero() {
        return Ok(XComplex::one(bits));
    }
    let upper: Vec<XReal> = spec.upper.iter().map(|x| x.with_bits(w)).collect();
    let lower: Vec<XReal> = spec.lower.iter().map(|x| x.with_bits(w)).collect();
    let p = upper.len();
    let q = lower.len();
    let terminating = spec.terminating_degree();
    let log2_tol = -((ctx.digits + 5) as f64) * std::f64::consts::LOG2_10;

    let zabs2 = z.norm_sqr();
    let dist = (&zabs2 - &XReal::one(w)).to_f64();
    let on_circle = dist.abs() < 2f64.powi(-(w as i32) / 2);
    let zabs = zabs2.to_f64().sqrt();
    let mut boundary_s = None;
    if terminating.is_none() {
        if p > q + 1 {
            return Err(Error::Divergence(format!("{p}F{q} series with z != 0")));
        }
        if p == q + 1 {
            if on_circle {
                let s: f64 = lower.iter().map(|b| b.to_f64()).sum::<f64>()
                    - upper.iter().map(|a| a.to_f64()).sum::<f64>();
                if s <= 0.0 {
                    return Err(Error::Divergence(format!("|z| = 1 with parameter excess {s} <= 0")));
                }
                // n^(-s)/s < 10^(-P-5) needs n > (10^(P+5)/s)^(1/s)
                let need = (-log2_tol - s.log2()) / s;
                if need > (ctx.max_terms as f64).log2() {
                    return Err(Error::MaxTermsExceeded(ctx.max_terms));
                }
                boundary_s = Some(s);
            } else if dist > 0.0 {
                return Err(Error::Divergence(format!("|z| = {zabs} > 1")));
            } else {
                let need = -log2_tol / -zabs.log2();
                if need > ctx.max_terms as f64 {
                    return Err(Error::MaxTermsExceeded(ctx.max_terms));
                }
            }
        }
    }

    let bound = RatioBound::new(spec, if on_circle { 1.0 } else { zabs });
    let mut term = XComplex::one(w);
    let mut sum = XComplex::one(w);
    let mut n: u64 = 0;
    loop {
        // term_{n+1} = term_n * z * prod(a+n) / (prod(b+n) (n+1))
        let mut num = XReal::one(w);
        for a in &upper {
            num = &num * &a.add_i(n as i64);
        }
        let mut den = XReal::from_i64(n as i64 + 1, w);
        for b in &lower {
            den = &den * &b.add_i(n as i64);
        }
        let r = &num / &den;
        term = (&term * &z).scale(&r);
        n += 1;
        if term.is_zero() {
            break;
        }
        sum = &sum + &term;
        if let Some(deg) = terminating {
            if n >= deg {
                break;
            }
            continue;
        }
        let log2_term = term.re.log2_abs().max(term.im.log2_abs());
        let log2_sum = sum.re.log2_abs().max(sum.im.log2_abs());
        let tail = match boundary_s {
            Some(s) => {
                if (n as f64) < bound.start * 10.0 {
                    None
                } else {
                    Some(log2_term + 1.0 + (n as f64 / s).log2())
                }
            }
            None => bound.rho(n as f64).and_then(|rho| {
                if rho < 1.0 {
                    Some(log2_term + (rho / (1.0 - rho)).log2())
                } else {
                    None
                }
            }),
        };
        if let Some(t) = tail {
            if t < log2_tol + log2_sum || t < -(w as f64) - 8.0 {
                break;
            }
        }
        if n >= ctx.max_terms {
            return Err(Error::MaxTermsExceeded(ctx.max_terms));
        }
    }
    Ok(sum.with_bits(bits))
}

/// Term list `t_0..t_{count-1}` of the series (for tests and diagnostics).
pub fn pfq_terms(spec: &HGSpec, count: usize, ctx: &Context) -> Vec<XComplex> {
    let w = ctx.bits() + 24;
    let z = spec.z.with_bits(w);
    let mut out = Vec::with_capacity(count);
    let mut term = XComplex::one(w);
    for n in 0..count {
        out.push(term.with_bits(ctx.bits()));
        let mut r = XReal::one(w);
        for a in &spec.upper {
            r = &r * &a.add_i(n as i64);
        }
        for b in &spec.lower {
            r = &r / &b.add_i(n as i64);
        }
        r = r.div_i(n as i64 + 1);
        term = (&term * &z).scale(&r);
    }
    out
}
