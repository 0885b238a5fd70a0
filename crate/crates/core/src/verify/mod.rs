//! Rational reconstruction, the ratios `R_t = reg_R(xi_t) / (pi^-2 L(X_t, 2))`,
//! golden tables and the identity suite.

mod identities;
mod tables;

pub use identities::{run_identity_suite, run_identity_suite_perturbed, IdentityCheck, IdentityReport};
pub use tables::{compute_rt, golden_tables, reproduce_tables, RowStatus, RtResult, TableEntry, TableRow};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::precision::{Rational, XReal};

pub const DEFAULT_QMAX: u64 = 100_000;
pub const DEFAULT_TOL: f64 = 1e-8;

/// Continued-fraction reconstruction of `x`.
///
/// Takes the last convergent `p/q` with `q <= qmax` (so the next one, if
/// any, has denominator above `qmax`) and returns it when `|x - p/q| <= tol`.
pub fn rational_reconstruct(x: &XReal, qmax: &BigInt, tol: &XReal) -> Option<Rational> {
    let (mut num, mut den) = x.to_ratio();
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::from(1));
    let (mut k0, mut k1) = (BigInt::from(1), BigInt::zero());
    while !den.is_zero() {
        let (a, r) = num.div_mod_floor(&den);
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if &k2 > qmax {
            break;
        }
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        num = std::mem::replace(&mut den, r);
    }
    if k1.is_zero() {
        return None;
    }
    let err = (x - &XReal::from_ratio(&h1, &k1, x.bits() + 8)).abs();
    (err <= *tol).then(|| Rational::new(h1, k1))
}

/// `|x - r|` as a float, for reports.
pub fn residual(x: &XReal, r: &Rational) -> f64 {
    let v = XReal::from_ratio(r.numer(), r.denom(), x.bits());
    (x - &v).abs().to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::Context;

    fn rr(s: &str, qmax: u64, tol: f64) -> Option<Rational> {
        let ctx = Context::new(40);
        let x = ctx.parse(s).unwrap();
        rational_reconstruct(&x, &BigInt::from(qmax), &XReal::from_f64(tol, ctx.bits()))
    }

    #[test]
    fn small_fractions() {
        assert_eq!(rr("0.875", 100, 1e-9), Some(Rational::new(7.into(), 8.into())));
        assert_eq!(rr("3.14159265358979323846", 10, 1e-9), None);
        assert_eq!(rr("-82.5000000000000000000001", 100_000, 1e-8), Some(Rational::new((-165).into(), 2.into())));
        assert_eq!(rr("0", 10, 1e-9), Some(Rational::zero()));
        assert_eq!(rr("77.4768570624648283624085537423", 100_000, 1e-8), Some(Rational::new(1101411.into(), 14216.into())));
    }

    #[test]
    fn best_convergent_under_qmax_wins() {
        // 758266/9787 is within 1e-8 of this value, the exact 1101411/14216 is a later convergent
        assert_eq!(rr("77.47685706246482836240855374226223972988", 100_000, 1e-8), Some(Rational::new(1101411.into(), 14216.into())));
        assert_eq!(rr("77.47685706246482836240855374226223972988", 10_000, 1e-8), Some(Rational::new(758266.into(), 9787.into())));
        assert_eq!(rr("77.47685706246482836240855374226223972988", 5_000, 1e-8), None);
        assert_eq!(rr("0.3333334333333333333", 1000, 1e-6), Some(Rational::new(1.into(), 3.into())));
        assert_ne!(rr("0.3333334333333333333", 100_000_000, 1e-6), Some(Rational::new(1.into(), 3.into())));
    }
}
