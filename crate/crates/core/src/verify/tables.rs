use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::rational_reconstruct;
use crate::ellcurve::{family_model, integrality_check, Family};
use crate::error::{Error, Result};
use crate::lfunc::l_value_for_model;
use crate::precision::{parse_rational, rational_to_string, Context, Rational, XReal};
use crate::regulators::family_reg;

const GOLDEN: &str = include_str!("../../data/golden_tables.csv");

/// One reference ratio.
#[derive(Clone, Debug, PartialEq)]
pub struct TableEntry {
    pub family: Family,
    pub t: Rational,
    pub expected: Rational,
}

/// The 17 + 20 + 20 reference ratios, in table order.
pub fn golden_tables() -> Vec<TableEntry> {
    GOLDEN
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split(',').map(str::trim).collect();
            TableEntry {
                family: Family::parse(f[0]).expect("family in golden table"),
                t: parse_rational(f[1]).expect("t in golden table"),
                expected: parse_rational(f[2]).expect("R in golden table"),
            }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct RtResult {
    pub family: Family,
    pub t: Rational,
    pub regulator: XReal,
    pub l_value: XReal,
    pub conductor: u64,
    pub root_number: i32,
    pub r: XReal,
    pub r_rational: Option<Rational>,
}

/// `R_t = pi^2 reg_R(xi_t) / L(X_t, 2)` and its rational reconstruction.
///
/// With `require_integral` the family's integrality criterion must hold.
pub fn compute_rt(family: Family, t: &Rational, ctx: &Context, qmax: &BigInt, tol: &XReal, require_integral: bool) -> Result<RtResult> {
    if require_integral && !integrality_check(family, t)? {
        return Err(Error::NotIntegral(rational_to_string(t)));
    }
    let model = family_model(family, t)?;
    let regulator = family_reg(family, t, ctx)?;
    let (series, l_value) = l_value_for_model(&model, ctx)?;
    let pi = ctx.pi();
    let r = &(&regulator * &pi.sqr()) / &l_value;
    let r_rational = rational_reconstruct(&r, qmax, tol);
    Ok(RtResult {
        family,
        t: t.clone(),
        regulator,
        l_value,
        conductor: series.conductor,
        root_number: series.root_number.unwrap_or(0),
        r,
        r_rational,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Match,
    Mismatch,
    Failed,
}

/// One report row: `{family, t, R_decimal, R_rational, expected, status, P, runtime_ms}`.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub family: Family,
    pub t: String,
    #[serde(rename = "R_decimal")]
    pub r_decimal: Option<String>,
    #[serde(rename = "R_rational")]
    pub r_rational: Option<String>,
    pub expected: String,
    pub status: RowStatus,
    #[serde(rename = "P")]
    pub p: u32,
    pub runtime_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn row(entry: &TableEntry, ctx: &Context, qmax: &BigInt, tol: &XReal, timing: bool) -> TableRow {
    let start = Instant::now();
    let res = compute_rt(entry.family, &entry.t, ctx, qmax, tol, false);
    let runtime_ms = timing.then(|| start.elapsed().as_millis() as u64);
    let mut out = TableRow {
        family: entry.family,
        t: rational_to_string(&entry.t),
        r_decimal: None,
        r_rational: None,
        expected: rational_to_string(&entry.expected),
        status: RowStatus::Failed,
        p: ctx.digits,
        runtime_ms,
        error: None,
    };
    match res {
        Ok(r) => {
            out.r_decimal = Some(r.r.to_string_digits(ctx.digits));
            out.r_rational = r.r_rational.as_ref().map(rational_to_string);
            out.status = if r.r_rational.as_ref() == Some(&entry.expected) {
                RowStatus::Match
            } else {
                RowStatus::Mismatch
            };
        }
        Err(e) => out.error = Some(e.to_string()),
    }
    out
}

/// Recomputes every entry (rows in parallel on the current rayon pool).
pub fn reproduce_tables(entries: &[TableEntry], ctx: &Context, qmax: &BigInt, tol: &XReal, timing: bool) -> Vec<TableRow> {
    entries.par_iter().map(|e| row(e, ctx, qmax, tol, timing)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_sizes() {
        let g = golden_tables();
        assert_eq!(g.len(), 57);
        let count = |f: Family| g.iter().filter(|e| e.family == f).count();
        assert_eq!((count(Family::Legendre), count(Family::Family2), count(Family::Family3)), (17, 20, 20));
        let f3 = g.iter().find(|e| e.family == Family::Family3 && e.t == Rational::new(1.into(), 102.into())).unwrap();
        assert_eq!(f3.expected, Rational::new(788103.into(), 10172.into()));
    }
}
