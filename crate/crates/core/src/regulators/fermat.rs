//! Fibrations `(x^n - 1)(y^m - 1) = 1 - t` with the symbol
//! `{(x-1)/(x-nu1), (y-1)/(y-nu2)}`.

use num_integer::Integer;

use super::{g_complex, gamma_bracket, z_of, zudilin_rhs, Ambiguity, EPartIndexSet, RegResult};
use crate::error::{Error, Result};
use crate::hyper::gauss_2f1;
use crate::precision::{Context, Rational, XComplex, XReal};
use crate::special::{beta, digamma};

/// Fermat-type fibration together with the symbol (`nu1`, `nu2`) and the
/// cycle label (`eps1`, `eps2`), all as exponents of `exp(2 pi i/n)` and
/// `exp(2 pi i/m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FermatFibration {
    pub n: u32,
    pub m: u32,
    pub nu1: u32,
    pub nu2: u32,
    pub eps1: u32,
    pub eps2: u32,
}

impl FermatFibration {
    pub fn new(n: u32, m: u32, nu1: u32, nu2: u32, eps1: u32, eps2: u32) -> Result<FermatFibration> {
        if n < 2 || m < 2 {
            return Err(Error::Domain(format!("need n, m >= 2, got n = {n}, m = {m}")));
        }
        if nu1 == 0 || nu1 >= n || nu2 == 0 || nu2 >= m {
            return Err(Error::Domain("nu1, nu2 must be nontrivial roots of unity".into()));
        }
        if eps1 >= n || eps2 >= m {
            return Err(Error::Domain("eps exponents out of range".into()));
        }
        Ok(FermatFibration { n, m, nu1, nu2, eps1, eps2 })
    }

    /// Same fibration and symbol, another cycle label.
    pub fn with_eps(&self, eps1: u32, eps2: u32) -> FermatFibration {
        FermatFibration { eps1: eps1 % self.n, eps2: eps2 % self.m, ..*self }
    }

    /// `a_i = 1 - i/n`
    pub fn a(&self, i: u32) -> Rational {
        Rational::new((self.n - i).into(), self.n.into())
    }

    /// `b_j = 1 - j/m`
    pub fn b(&self, j: u32) -> Rational {
        Rational::new((self.m - j).into(), self.m.into())
    }

    /// `(1 - nu1^-i)(1 - nu2^-j) eps1^i eps2^j / (nm)`, `None` when a factor
    /// `1 - nu^-k` vanishes exactly.
    pub fn coef(&self, i: u32, j: u32, bits: u32) -> Option<XComplex> {
        let (n, m) = (self.n as i64, self.m as i64);
        let (i, j) = (i as i64, j as i64);
        if (self.nu1 as i64 * i) % n == 0 || (self.nu2 as i64 * j) % m == 0 {
            return None;
        }
        let one = XComplex::one(bits);
        let f1 = &one - &XComplex::root_of_unity(-(self.nu1 as i64) * i, n, bits);
        let f2 = &one - &XComplex::root_of_unity(-(self.nu2 as i64) * j, m, bits);
        let e = &XComplex::root_of_unity(self.eps1 as i64 * i, n, bits)
            * &XComplex::root_of_unity(self.eps2 as i64 * j, m, bits);
        Some((&(&f1 * &f2) * &e).div_i(n * m))
    }

    fn all_pairs(&self) -> Vec<(u32, u32)> {
        (1..self.n).flat_map(|i| (1..self.m).map(move |j| (i, j))).collect()
    }
}

/// Orbit `{([s i0]_n, [s j0]_m) : s in (Z/nmZ)^x}`, first occurrence order
/// in ascending `s`.
pub fn fermat_index_set(n: u32, m: u32, i0: u32, j0: u32) -> Result<EPartIndexSet> {
    if n < 2 || m < 2 {
        return Err(Error::Domain(format!("need n, m >= 2, got n = {n}, m = {m}")));
    }
    if i0 % n == 0 || j0 % m == 0 {
        return Err(Error::Degenerate("e factors through a projection (i0 = 0 or j0 = 0)".into()));
    }
    let nm = n as u64 * m as u64;
    let mut out: Vec<(u32, u32)> = Vec::new();
    for s in 1..nm {
        if s.gcd(&nm) != 1 {
            continue;
        }
        let p = ((s * i0 as u64 % n as u64) as u32, (s * j0 as u64 % m as u64) as u32);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(EPartIndexSet::Fermat(out))
}

/// Constant term `C0` (a representative mod `2 pi i Q`) and log coefficient
/// `C1` of the delta-cycle regulator.
pub fn fermat_c0_c1(fib: &FermatFibration, ctx: &Context) -> Result<(XComplex, Rational)> {
    let bits = ctx.bits();
    let (n, m) = (fib.n as i64, fib.m as i64);
    let (e1, e2, k1, k2) = (fib.eps1, fib.eps2, fib.nu1, fib.nu2);
    let one = XComplex::one(bits);
    let root1 = |k: u32| XComplex::root_of_unity(k as i64, n, bits);
    let root2 = |k: u32| XComplex::root_of_unity(k as i64, m, bits);
    let big = || -> Result<XComplex> {
        let v = (&(&one - &root1(k1)) * &(&one - &root2(k2))).mul_i(n * m);
        v.ln()
    };
    let r1 = || -> Result<XComplex> { (&(&root1(e1) - &one) / &(&root1(e1) - &root1(k1))).ln() };
    let r2 = || -> Result<XComplex> { (&(&root2(e2) - &one) / &(&root2(e2) - &root2(k2))).ln() };

    let ind = |e: u32, k: u32| -> i64 {
        if e == 0 {
            1
        } else if e == k {
            -1
        } else {
            0
        }
    };
    let c1 = Rational::from_integer((ind(e1, k1) * ind(e2, k2)).into());

    let generic1 = e1 != 0 && e1 != k1;
    let generic2 = e2 != 0 && e2 != k2;
    let c0 = if (e1 == 0 && e2 == 0) || (e1 == k1 && e2 == k2) {
        -big()?
    } else if (e1 == 0 && e2 == k2) || (e1 == k1 && e2 == 0) {
        big()?
    } else if e1 == 0 && generic2 {
        r2()?
    } else if generic1 && e2 == 0 {
        r1()?
    } else if e1 == k1 && generic2 {
        -r2()?
    } else if generic1 && e2 == k2 {
        -r1()?
    } else {
        XComplex::zero(bits)
    };
    Ok((c0, c1))
}

fn log_one_minus(t: &XComplex, ctx: &Context) -> Result<XComplex> {
    (&XComplex::one(ctx.bits()) - t).ln()
}

/// `sum_{i,j} coef(i,j) G_{a_i,b_j}(1 - t)`.
fn g_sum(fib: &FermatFibration, t: &XComplex, ctx: &Context) -> Result<XComplex> {
    let bits = ctx.bits();
    let x = &XComplex::one(bits) - t;
    let mut acc = XComplex::zero(bits);
    for (i, j) in fib.all_pairs() {
        let Some(c) = fib.coef(i, j, bits) else { continue };
        let g = g_complex(&ctx.rational(&fib.a(i)), &ctx.rational(&fib.b(j)), &x, ctx)?;
        acc = &acc + &(&c * &g);
    }
    Ok(acc)
}

fn delta_note(t: &XComplex) -> String {
    if t.im.is_zero() {
        "t real, log(1-t) principal, G by series or quadrature on (-inf, 1)".into()
    } else {
        "|1-t| < 1, principal log".into()
    }
}

/// `(1/2 pi i) <reg(xi) | delta(eps1, eps2)>` as
/// `C0 + C1 log(1-t) + sum coef(i,j) G_{a_i,b_j}(1-t)`, mod `2 pi i Q`.
///
/// `t` complex with `|1 - t| < 1`, or real `t > 0`.
pub fn fermat_reg_delta(fib: &FermatFibration, t: &XComplex, ctx: &Context) -> Result<RegResult> {
    let (c0, c1) = fermat_c0_c1(fib, ctx)?;
    let lg = log_one_minus(t, ctx)?.scale(&ctx.rational(&c1));
    let value = &(&c0 + &lg) + &g_sum(fib, t, ctx)?;
    Ok(RegResult { value, ambiguity: Ambiguity::ModQ1, branch_note: delta_note(t) })
}

/// Same quantity with the constant written through digamma values:
/// `sum coef(i,j) (psi(a_i) + psi(b_j) - 2 psi(1) + G_{a_i,b_j}(1-t)) + C1 log(1-t)`.
pub fn fermat_reg_delta_digamma(fib: &FermatFibration, t: &XComplex, ctx: &Context) -> Result<RegResult> {
    let bits = ctx.bits();
    let psi1 = digamma(&ctx.int(1), ctx)?;
    let mut acc = XComplex::zero(bits);
    for (i, j) in fib.all_pairs() {
        let Some(c) = fib.coef(i, j, bits) else { continue };
        let k = &(&digamma(&ctx.rational(&fib.a(i)), ctx)? + &digamma(&ctx.rational(&fib.b(j)), ctx)?)
            - &psi1.ldexp(1);
        acc = &acc + &c.scale(&k);
    }
    let (_, c1) = fermat_c0_c1(fib, ctx)?;
    let lg = log_one_minus(t, ctx)?.scale(&ctx.rational(&c1));
    let value = &(&acc + &lg) + &g_sum(fib, t, ctx)?;
    Ok(RegResult { value, ambiguity: Ambiguity::ModQ1, branch_note: delta_note(t) })
}

fn check_distinct(fib: &FermatFibration, pairs: &[(u32, u32)]) -> Result<()> {
    for &(i, j) in pairs {
        if fib.a(i) == fib.b(j) {
            return Err(Error::Degenerate(format!("a_{i} = b_{j} = {}", fib.a(i))));
        }
    }
    Ok(())
}

/// `-sum coef(i,j) (a^-1 C_{a,b} (-z)^a F_{a,b}(z) + b^-1 C_{b,a} (-z)^b F_{b,a}(z))`,
/// `z = 1/(1-t)`, `|z| < 1`.
pub fn fermat_reg_delta_alt(fib: &FermatFibration, t: &XComplex, ctx: &Context) -> Result<RegResult> {
    let bits = ctx.bits();
    let pairs: Vec<(u32, u32)> = fib.all_pairs().into_iter().filter(|&(i, j)| fib.coef(i, j, 8).is_some()).collect();
    check_distinct(fib, &pairs)?;
    let z = z_of(t, ctx)?;
    let mut acc = XComplex::zero(bits);
    for (i, j) in pairs {
        let c = fib.coef(i, j, bits).unwrap();
        let r = zudilin_rhs(&ctx.rational(&fib.a(i)), &ctx.rational(&fib.b(j)), &z, ctx)?;
        acc = &acc - &(&c * &r);
    }
    Ok(RegResult {
        value: acc,
        ambiguity: Ambiguity::ModQ1,
        branch_note: "|z| < 1, principal powers of -z".into(),
    })
}

/// `<reg(xi)(e) | gamma(eps1, eps2)(e)>` as
/// `sum_{I_e} coef(i,j) (a^-1 B_{a,b} z^a F_{a,b}(z) + b^-1 B_{b,a} z^b F_{b,a}(z))`, mod `Q(2)`.
///
/// Valid on `|t| < 1 < |1 - t|`. The overall sign is the one for which
/// `(t-1) dF/dt = -sum coef(i,j) B(a,b) F(a,b;a+b;t)`.
pub fn fermat_reg_gamma(fib: &FermatFibration, index: &EPartIndexSet, t: &XComplex, ctx: &Context) -> Result<RegResult> {
    let EPartIndexSet::Fermat(pairs) = index else {
        return Err(Error::Domain("expected a Fermat index set".into()));
    };
    if pairs.iter().any(|&(i, j)| i == 0 || j == 0 || i >= fib.n || j >= fib.m) {
        return Err(Error::Domain("index pair out of range".into()));
    }
    check_distinct(fib, pairs)?;
    let bits = ctx.bits();
    let one = XReal::one(bits);
    if t.abs() >= one {
        return Err(Error::Domain(format!("needs |t| < 1, got {t}")));
    }
    let z = z_of(t, ctx)?;
    let mut acc = XComplex::zero(bits);
    for &(i, j) in pairs {
        let Some(c) = fib.coef(i, j, bits) else { continue };
        let r = gamma_bracket(&ctx.rational(&fib.a(i)), &ctx.rational(&fib.b(j)), &z, ctx)?;
        acc = &acc + &(&c * &r);
    }
    Ok(RegResult {
        value: acc,
        ambiguity: Ambiguity::ModQ2,
        branch_note: "|t| < 1 < |1-t|, principal powers of z".into(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cycle {
    Delta,
    Gamma,
}

/// Period of `omega_{i,j}` over `delta(eps)` (`|1-t| < 1`) or `gamma(eps)` (`|t| < 1`).
pub fn fermat_periods(fib: &FermatFibration, i: u32, j: u32, t: &XComplex, cycle: Cycle, ctx: &Context) -> Result<XComplex> {
    if i == 0 || i >= fib.n || j == 0 || j >= fib.m {
        return Err(Error::Domain(format!("need 1 <= i < n, 1 <= j < m, got ({i}, {j})")));
    }
    let bits = ctx.bits();
    let (n, m) = (fib.n as i64, fib.m as i64);
    let e = (&XComplex::root_of_unity(fib.eps1 as i64 * i as i64, n, bits)
        * &XComplex::root_of_unity(fib.eps2 as i64 * j as i64, m, bits))
        .div_i(n * m);
    let (a, b) = (ctx.rational(&fib.a(i)), ctx.rational(&fib.b(j)));
    let one = XReal::one(bits);
    match cycle {
        Cycle::Delta => {
            let x = &XComplex::one(bits) - t;
            if x.abs() >= one {
                return Err(Error::Domain(format!("delta period needs |1-t| < 1, got t = {t}")));
            }
            let f = gauss_2f1(&a, &b, &one, &x, ctx)?;
            let two_pi_i = XComplex::new(XReal::zero(bits), ctx.pi().ldexp(1));
            Ok(-&(&(&e * &two_pi_i) * &f))
        }
        Cycle::Gamma => {
            if t.abs() >= one {
                return Err(Error::Domain(format!("gamma period needs |t| < 1, got t = {t}")));
            }
            let f = gauss_2f1(&a, &b, &(&a + &b), t, ctx)?;
            Ok((&e * &f).scale(&beta(&a, &b, ctx)?))
        }
    }
}

