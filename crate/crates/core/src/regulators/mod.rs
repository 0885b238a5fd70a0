//! Regulator formulas for HG fibrations of Fermat and Gauss type, the
//! real regulators of three elliptic families, and the elliptic
//! dilogarithm identities.
//!
//! Roots of unity are carried as integer exponents (`nu = exp(2 pi i k/n)`
//! is stored as `k`) and only turned into numbers inside the sums.

mod dilog_ids;
mod elliptic;
mod fermat;
mod gauss;

pub use dilog_ids::{dilog_identity_56, dilog_identity_57, nome_cubic, nome_legendre};
pub use elliptic::{family2_reg, family3_reg, family_reg, legendre_reg};
pub use fermat::{
    fermat_c0_c1, fermat_index_set, fermat_periods, fermat_reg_delta, fermat_reg_delta_alt,
    fermat_reg_delta_digamma, fermat_reg_gamma, Cycle, FermatFibration,
};
pub use gauss::{gauss_gamma1_forms, gauss_index_set, gauss_reg, lambda_constraint_check, GaussCycle, GaussFibration};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hyper::{f_ab, g_primitive, pfq, HGSpec};
use crate::precision::{Context, XComplex, XReal};
use crate::special::{cap_b, cap_c};

/// What a regulator value is determined up to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Ambiguity {
    Exact,
    /// modulo `2 pi i Q`
    ModQ1,
    /// modulo `(2 pi i)^2 Q`
    ModQ2,
}

#[derive(Clone, Debug)]
pub struct RegResult {
    pub value: XComplex,
    pub ambiguity: Ambiguity,
    pub branch_note: String,
}

/// Index sets of an `e`-part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EPartIndexSet {
    Fermat(Vec<(u32, u32)>),
    Gauss(Vec<u32>),
}

impl EPartIndexSet {
    pub fn len(&self) -> usize {
        match self {
            EPartIndexSet::Fermat(v) => v.len(),
            EPartIndexSet::Gauss(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub(crate) fn frac(p: i64, q: i64, ctx: &Context) -> XReal {
    ctx.ratio(p, q)
}

/// `G_{a,b}(x) = sum_{n>=1} (a)_n (b)_n x^n / (n!^2 n)` for real `x < 1`
/// or complex `|x| < 1`.
pub(crate) fn g_complex(a: &XReal, b: &XReal, x: &XComplex, ctx: &Context) -> Result<XComplex> {
    if x.im.is_zero() {
        return Ok(XComplex::from_real(g_primitive(a, b, &x.re, ctx)?));
    }
    if x.abs() >= XReal::one(ctx.bits()) {
        return Err(Error::Domain(format!("G(x) needs |x| < 1 off the real axis, got {x}")));
    }
    let one = ctx.int(1);
    let two = ctx.int(2);
    let spec = HGSpec::new(
        vec![a + &one, b + &one, one.clone(), one.clone()],
        vec![two.clone(), two.clone(), two],
        x.clone(),
    )?;
    let f = pfq(&spec, ctx)?;
    Ok((&f * x).scale(&(a * b)))
}

/// `a^-1 C_{a,b} (-z)^a F_{a,b}(z) + b^-1 C_{b,a} (-z)^b F_{b,a}(z)`.
pub(crate) fn zudilin_rhs(a: &XReal, b: &XReal, z: &XComplex, ctx: &Context) -> Result<XComplex> {
    let mz = -z;
    let ta = (&mz.pow_real(a)? * &f_ab(a, b, z, ctx)?).scale(&(&cap_c(a, b, ctx)? / a));
    let tb = (&mz.pow_real(b)? * &f_ab(b, a, z, ctx)?).scale(&(&cap_c(b, a, ctx)? / b));
    Ok(&ta + &tb)
}

/// `a^-1 B_{a,b} z^a F_{a,b}(z) + b^-1 B_{b,a} z^b F_{b,a}(z)`.
pub(crate) fn gamma_bracket(a: &XReal, b: &XReal, z: &XComplex, ctx: &Context) -> Result<XComplex> {
    let ta = (&z.pow_real(a)? * &f_ab(a, b, z, ctx)?).scale(&(&cap_b(a, b, ctx)? / a));
    let tb = (&z.pow_real(b)? * &f_ab(b, a, z, ctx)?).scale(&(&cap_b(b, a, ctx)? / b));
    Ok(&ta + &tb)
}

/// `z = 1/(1 - t)` with `|z| < 1`.
pub(crate) fn z_of(t: &XComplex, ctx: &Context) -> Result<XComplex> {
    let omt = &XComplex::one(ctx.bits()) - t;
    if omt.is_zero() {
        return Err(Error::SingularFiber("1".into()));
    }
    let z = omt.recip();
    if z.abs() >= XReal::one(ctx.bits()) {
        return Err(Error::Divergence(format!("|1/(1-t)| >= 1 at t = {t}")));
    }
    Ok(z)
}
