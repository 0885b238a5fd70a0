//! Tate's algorithm over `Z_p`, all primes including 2 and 3.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::arith::{divides, inv_mod, legendre_symbol, modp, val};
use super::{b_invariants, c_invariants, transform, WeierstrassModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Kodaira {
    I(u32),
    II,
    III,
    IV,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I(n) => write!(f, "I{n}"),
            Kodaira::II => f.write_str("II"),
            Kodaira::III => f.write_str("III"),
            Kodaira::IV => f.write_str("IV"),
            Kodaira::IStar(n) => write!(f, "I{n}*"),
            Kodaira::IVStar => f.write_str("IV*"),
            Kodaira::IIIStar => f.write_str("III*"),
            Kodaira::IIStar => f.write_str("II*"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionKind {
    Good,
    SplitMultiplicative,
    NonsplitMultiplicative,
    Additive,
}

impl ReductionKind {
    /// `a_p` at a bad prime.
    pub fn ap(self) -> Option<i64> {
        match self {
            ReductionKind::Good => None,
            ReductionKind::SplitMultiplicative => Some(1),
            ReductionKind::NonsplitMultiplicative => Some(-1),
            ReductionKind::Additive => Some(0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalData {
    pub p: BigInt,
    pub kodaira: Kodaira,
    /// Conductor exponent.
    pub f: u32,
    pub kind: ReductionKind,
    /// `ord_p` of the minimal discriminant.
    pub ord_disc: i64,
}

enum CubicRoots {
    Distinct,
    Double(BigInt),
    Triple(BigInt),
}

/// Root pattern of `T^3 + b T^2 + c T + d` over the algebraic closure of `F_p`.
fn cubic_roots(b: &BigInt, c: &BigInt, d: &BigInt, p: &BigInt) -> CubicRoots {
    if *p <= BigInt::from(3) {
        let mut pt = BigInt::zero();
        while pt < *p {
            // coefficients of P(T + pt)
            let b1 = b + 3 * &pt;
            let c1 = c + 2 * b * &pt + 3 * &pt * &pt;
            let d1 = d + c * &pt + b * &pt * &pt + &pt * &pt * &pt;
            if divides(p, &c1) && divides(p, &d1) {
                return if divides(p, &b1) { CubicRoots::Triple(pt) } else { CubicRoots::Double(pt) };
            }
            pt += 1;
        }
        return CubicRoots::Distinct;
    }
    let disc = b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
    if !divides(p, &disc) {
        return CubicRoots::Distinct;
    }
    let e = b * b - 3 * c;
    if divides(p, &e) {
        let inv3 = inv_mod(&BigInt::from(3), p).unwrap();
        return CubicRoots::Triple(modp(&(-b * inv3), p));
    }
    let den = inv_mod(&(2 * &e), p).unwrap();
    CubicRoots::Double(modp(&((9 * d - b * c) * den), p))
}

/// A point of `F_p^2` where the reduction is singular, by search (`p` small).
fn singular_point_search(a: &[BigInt; 5], p: &BigInt) -> (BigInt, BigInt) {
    let [a1, a2, a3, a4, a6] = a;
    let mut x = BigInt::zero();
    while x < *p {
        let mut y = BigInt::zero();
        while y < *p {
            let f = &y * &y + a1 * &x * &y + a3 * &y - &x * &x * &x - a2 * &x * &x - a4 * &x - a6;
            let fx = a1 * &y - 3 * &x * &x - 2 * a2 * &x - a4;
            let fy = 2 * &y + a1 * &x + a3;
            if divides(p, &f) && divides(p, &fx) && divides(p, &fy) {
                return (x, y);
            }
            y += 1;
        }
        x += 1;
    }
    unreachable!("reduction is singular but no singular point found")
}

/// Local data at `p` and a model minimal at `p` (integral, isomorphic over Z
/// away from `p`).
pub(crate) fn tate(a: &[BigInt; 5], p: &BigInt) -> (LocalData, [BigInt; 5]) {
    let one = BigInt::one();
    let zero = BigInt::zero();
    let two = BigInt::from(2);
    let p2 = p * p;
    let p3 = &p2 * p;
    let p4 = &p2 * &p2;
    let odd = *p != two;
    let inv2 = if odd { inv_mod(&two, p) } else { None };
    let mut a = a.clone();
    loop {
        let (c4, _c6, disc) = c_invariants(&a);
        let vd = val(&disc, p);
        let done = |kodaira, f: i64, kind, a: [BigInt; 5]| {
            (LocalData { p: p.clone(), kodaira, f: f as u32, kind, ord_disc: vd }, a)
        };
        if vd == 0 {
            return done(Kodaira::I(0), 0, ReductionKind::Good, a);
        }
        if !divides(p, &c4) {
            let split = if odd {
                let [b2, b4, b6, _] = b_invariants(&a);
                let i2 = inv2.clone().unwrap();
                let i4 = &i2 * &i2;
                // node of x^3 + (b2/4) x^2 + (b4/2) x + b6/4
                let (b, c, d) = (modp(&(&b2 * &i4), p), modp(&(&b4 * &i2), p), modp(&(&b6 * &i4), p));
                let x0 = match cubic_roots(&b, &c, &d, p) {
                    CubicRoots::Double(x0) => x0,
                    _ => unreachable!("multiplicative reduction without a node"),
                };
                legendre_symbol(&(3 * x0 + b), p) == 1
            } else {
                let (x0, y0) = singular_point_search(&a, p);
                let m = transform(&a, &one, &x0, &zero, &y0);
                // tangent cone y^2 + a1 xy - a2 x^2 with a1 odd
                m[1].is_even()
            };
            let kind = if split { ReductionKind::SplitMultiplicative } else { ReductionKind::NonsplitMultiplicative };
            return done(Kodaira::I(vd as u32), 1, kind, a);
        }
        // additive: move the cusp to the origin
        let (r0, t0) = if *p <= BigInt::from(3) {
            singular_point_search(&a, p)
        } else {
            let b2 = b_invariants(&a)[0].clone();
            let inv12 = inv_mod(&BigInt::from(12), p).unwrap();
            let x0 = modp(&(-&b2 * inv12), p);
            let y0 = modp(&(-(&a[0] * &x0 + &a[2]) * inv2.clone().unwrap()), p);
            (x0, y0)
        };
        a = transform(&a, &one, &r0, &zero, &t0);
        debug_assert!(divides(p, &a[2]) && divides(p, &a[3]) && divides(p, &a[4]));
        let [_, _, b6, b8] = b_invariants(&a);
        if !divides(&p2, &a[4]) {
            return done(Kodaira::II, vd, ReductionKind::Additive, a);
        }
        if !divides(&p3, &b8) {
            return done(Kodaira::III, vd - 1, ReductionKind::Additive, a);
        }
        if !divides(&p3, &b6) {
            return done(Kodaira::IV, vd - 2, ReductionKind::Additive, a);
        }
        // p | a1, a2; p^2 | a3, a4; p^3 | a6
        let (s, t) = if odd {
            let i2 = inv2.clone().unwrap();
            (modp(&(-&a[0] * &i2), p), p * modp(&(-(&a[2] / p) * &i2), p))
        } else {
            (a[1].mod_floor(&two), 2 * (&a[4] / 4u32).mod_floor(&two))
        };
        a = transform(&a, &one, &zero, &s, &t);
        debug_assert!(divides(p, &a[0]) && divides(p, &a[1]));
        debug_assert!(divides(&p2, &a[2]) && divides(&p2, &a[3]) && divides(&p3, &a[4]));
        let (b, c, d) = (&a[1] / p, &a[3] / &p2, &a[4] / &p3);
        match cubic_roots(&b, &c, &d, p) {
            CubicRoots::Distinct => return done(Kodaira::IStar(0), vd - 4, ReductionKind::Additive, a),
            CubicRoots::Double(alpha) => {
                a = transform(&a, &one, &(p * alpha), &zero, &zero);
                let (mut mx, mut my) = (p2.clone(), p2.clone());
                let (mut ix, mut iy) = (3i64, 3i64);
                loop {
                    let a2t = &a[1] / p;
                    let a3t = &a[2] / &my;
                    let a6t = &a[4] / (&mx * &my);
                    if !divides(p, &(&a3t * &a3t + 4 * &a6t)) {
                        break;
                    }
                    let root = if odd { modp(&(-&a3t * inv2.clone().unwrap()), p) } else { a6t.mod_floor(&two) };
                    a = transform(&a, &one, &zero, &zero, &(&my * root));
                    my *= p;
                    iy += 1;
                    let a4t = &a[3] / (p * &mx);
                    let a6t = &a[4] / (&mx * &my);
                    if !divides(p, &(&a4t * &a4t - 4 * &a6t * &a2t)) {
                        break;
                    }
                    let root = if odd {
                        modp(&(-&a4t * inv_mod(&(2 * &a2t), p).unwrap()), p)
                    } else {
                        (&a6t * &a2t).mod_floor(&two)
                    };
                    a = transform(&a, &one, &(&mx * root), &zero, &zero);
                    mx *= p;
                    ix += 1;
                }
                let m = ix + iy - 5;
                return done(Kodaira::IStar(m as u32), vd - ix - iy + 1, ReductionKind::Additive, a);
            }
            CubicRoots::Triple(alpha) => {
                a = transform(&a, &one, &(p * alpha), &zero, &zero);
                let a3t = &a[2] / &p2;
                let a6t = &a[4] / &p4;
                if !divides(p, &(&a3t * &a3t + 4 * &a6t)) {
                    return done(Kodaira::IVStar, vd - 6, ReductionKind::Additive, a);
                }
                let root = if odd { modp(&(-&a3t * inv2.clone().unwrap()), p) } else { a6t.mod_floor(&two) };
                a = transform(&a, &one, &zero, &zero, &(&p2 * root));
                if !divides(&p4, &a[3]) {
                    return done(Kodaira::IIIStar, vd - 7, ReductionKind::Additive, a);
                }
                if !divides(&(&p3 * &p3), &a[4]) {
                    return done(Kodaira::IIStar, vd - 8, ReductionKind::Additive, a);
                }
                // not minimal at p
                a = transform(&a, p, &zero, &zero, &zero);
            }
        }
    }
}

/// Local data at `p` for any nonsingular model (made integral first).
pub fn tate_local(model: &WeierstrassModel, p: &BigInt) -> LocalData {
    tate(&model.integral_model().int_coeffs(), p).0
}
