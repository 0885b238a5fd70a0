//! Elliptic curves over Q in exact arithmetic: the three family models,
//! invariants, Tate's algorithm, minimal models and `a_p`.

pub mod arith;
mod points;
mod tate;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Num, One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::precision::{rational_to_string, Rational};

pub use points::{ap, ap_naive, count_points};
pub use tate::{tate_local, Kodaira, LocalData, ReductionKind};

/// The three one-parameter families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Legendre,
    Family2,
    Family3,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Legendre, Family::Family2, Family::Family3];

    pub fn name(self) -> &'static str {
        match self {
            Family::Legendre => "legendre",
            Family::Family2 => "family2",
            Family::Family3 => "family3",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s.to_ascii_lowercase().as_str() {
            "legendre" => Ok(Family::Legendre),
            "family2" => Ok(Family::Family2),
            "family3" => Ok(Family::Family3),
            _ => Err(Error::Parse(format!("unknown family '{s}'"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassModel {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a6: Rational,
}

/// `c4, c6, Delta, j` of a model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub c4: Rational,
    pub c6: Rational,
    pub disc: Rational,
    pub j: Rational,
}

/// Invariants together with the conductor and the local data at each bad prime.
#[derive(Clone, Debug)]
pub struct CurveInvariants {
    pub c4: Rational,
    pub c6: Rational,
    pub disc: Rational,
    pub j: Rational,
    pub conductor: BigInt,
    pub local_data: Vec<LocalData>,
}

pub(crate) fn b_invariants<T: Num + Clone>(a: &[T; 5]) -> [T; 4] {
    let [a1, a2, a3, a4, a6] = a.clone();
    let two = T::one() + T::one();
    let four = two.clone() + two.clone();
    let b2 = a1.clone() * a1.clone() + four.clone() * a2.clone();
    let b4 = two * a4.clone() + a1.clone() * a3.clone();
    let b6 = a3.clone() * a3.clone() + four.clone() * a6.clone();
    let b8 = a1.clone() * a1.clone() * a6.clone() + four * a2.clone() * a6 - a1 * a3.clone() * a4.clone()
        + a2 * a3.clone() * a3
        - a4.clone() * a4;
    [b2, b4, b6, b8]
}

fn k<T: Num>(n: u32) -> T {
    (0..n).fold(T::zero(), |acc, _| acc + T::one())
}

/// `(c4, c6, Delta)`.
pub(crate) fn c_invariants<T: Num + Clone>(a: &[T; 5]) -> (T, T, T) {
    let [b2, b4, b6, b8] = b_invariants(a);
    let c4 = b2.clone() * b2.clone() - k::<T>(24) * b4.clone();
    let c6 = T::zero() - b2.clone() * b2.clone() * b2.clone() + k::<T>(36) * b2.clone() * b4.clone() - k::<T>(216) * b6.clone();
    let disc = T::zero() - b2.clone() * b2.clone() * b8 - k::<T>(8) * b4.clone() * b4.clone() * b4.clone()
        - k::<T>(27) * b6.clone() * b6.clone()
        + k::<T>(9) * b2 * b4 * b6;
    (c4, c6, disc)
}

/// Change of variables `x = u^2 x' + r`, `y = u^3 y' + s u^2 x' + t`.
pub(crate) fn transform<T: Num + Clone>(a: &[T; 5], u: &T, r: &T, s: &T, t: &T) -> [T; 5] {
    let [a1, a2, a3, a4, a6] = a.clone();
    let (r, s, t) = (r.clone(), s.clone(), t.clone());
    let two: T = k(2);
    let three: T = k(3);
    let n1 = a1.clone() + two.clone() * s.clone();
    let n2 = a2.clone() - s.clone() * a1.clone() + three.clone() * r.clone() - s.clone() * s.clone();
    let n3 = a3.clone() + r.clone() * a1.clone() + two.clone() * t.clone();
    let n4 = a4.clone() - s.clone() * a3.clone() + two.clone() * r.clone() * a2.clone()
        - (t.clone() + r.clone() * s.clone()) * a1.clone()
        + three * r.clone() * r.clone()
        - two * s * t.clone();
    let n6 = a6 + r.clone() * a4 + r.clone() * r.clone() * a2 + r.clone() * r.clone() * r.clone()
        - t.clone() * a3
        - t.clone() * t.clone()
        - r * t * a1;
    let u2 = u.clone() * u.clone();
    let u3 = u2.clone() * u.clone();
    let u4 = u2.clone() * u2.clone();
    let u6 = u3.clone() * u3.clone();
    [n1 / u.clone(), n2 / u2, n3 / u3, n4 / u4, n6 / u6]
}

impl WeierstrassModel {
    pub fn new(a: [Rational; 5]) -> Result<WeierstrassModel> {
        let [a1, a2, a3, a4, a6] = a;
        let m = WeierstrassModel { a1, a2, a3, a4, a6 };
        if c_invariants(&m.coeffs()).2.is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(m)
    }

    pub fn from_ints(a: [i64; 5]) -> Result<WeierstrassModel> {
        WeierstrassModel::new(a.map(|x| Rational::from_integer(BigInt::from(x))))
    }

    pub fn coeffs(&self) -> [Rational; 5] {
        [self.a1.clone(), self.a2.clone(), self.a3.clone(), self.a4.clone(), self.a6.clone()]
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs().iter().all(|x| x.is_integer())
    }

    /// Integer coefficients; panics on a non-integral model.
    pub fn int_coeffs(&self) -> [BigInt; 5] {
        self.coeffs().map(|x| {
            assert!(x.is_integer(), "model is not integral");
            x.to_integer()
        })
    }

    fn from_int_coeffs(a: &[BigInt; 5]) -> WeierstrassModel {
        let [a1, a2, a3, a4, a6] = a.clone().map(Rational::from_integer);
        WeierstrassModel { a1, a2, a3, a4, a6 }
    }

    /// `y^2 = A x^3 + B x^2 + C x + D` rewritten as `Y^2 = X^3 + B X^2 + AC X + A^2 D`
    /// with `X = Ax`, `Y = Ay`.
    pub fn from_cubic(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Result<WeierstrassModel> {
        if a.is_zero() {
            return Err(Error::Domain("leading coefficient is zero".into()));
        }
        let z = Rational::zero();
        WeierstrassModel::new([z.clone(), b.clone(), z, a * c, a * a * d])
    }

    /// Scale `x -> x/u^2`, `y -> y/u^3` with the least `u` clearing all denominators.
    pub fn integral_model(&self) -> WeierstrassModel {
        let a = self.coeffs();
        // least u with den(a_i) | u^i
        let mut u = BigInt::one();
        let dens: Vec<BigInt> = a.iter().map(|x| x.denom().clone()).collect();
        let all = dens.iter().fold(BigInt::one(), |acc, d| acc.lcm(d));
        for p in arith::primes_dividing(&all) {
            let mut e = 0i64;
            for (i, d) in [1i64, 2, 3, 4, 6].iter().zip(&dens) {
                let v = arith::val(d, &p);
                e = e.max((v + i - 1) / i);
            }
            u *= p.pow(e as u32);
        }
        let inv = Rational::new(BigInt::one(), u);
        let z = Rational::zero();
        let out = transform(&a, &inv, &z, &z, &z);
        let [a1, a2, a3, a4, a6] = out;
        WeierstrassModel { a1, a2, a3, a4, a6 }
    }

    pub fn invariants(&self) -> Invariants {
        invariants(self)
    }

    pub fn disc(&self) -> Rational {
        c_invariants(&self.coeffs()).2
    }
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs().iter().map(rational_to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn check_t(t: &Rational) -> Result<()> {
    if t.is_zero() || t.is_one() {
        return Err(Error::SingularFiber(format!("t = {} is a singular fibre", rational_to_string(t))));
    }
    Ok(())
}

fn r(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `y^2 = x(1-x)(1-tx) = t x^3 - (1+t) x^2 + x`.
pub fn legendre_model(t: &Rational) -> Result<WeierstrassModel> {
    check_t(t)?;
    WeierstrassModel::from_cubic(t, &-(r(1) + t), &r(1), &r(0)).map(|m| m.integral_model())
}

/// `3y^2 = 2x^3 - 3x^2 + t`.
pub fn family2_model(t: &Rational) -> Result<WeierstrassModel> {
    check_t(t)?;
    let third = Rational::new(BigInt::one(), BigInt::from(3));
    WeierstrassModel::from_cubic(&(r(2) * &third), &r(-1), &r(0), &(t * &third)).map(|m| m.integral_model())
}

/// `y^2 = x^3 + (3x + 4t)^2`.
pub fn family3_model(t: &Rational) -> Result<WeierstrassModel> {
    check_t(t)?;
    WeierstrassModel::from_cubic(&r(1), &r(9), &(r(24) * t), &(r(16) * t * t)).map(|m| m.integral_model())
}

pub fn family_model(family: Family, t: &Rational) -> Result<WeierstrassModel> {
    match family {
        Family::Legendre => legendre_model(t),
        Family::Family2 => family2_model(t),
        Family::Family3 => family3_model(t),
    }
}

pub fn invariants(model: &WeierstrassModel) -> Invariants {
    let (c4, c6, disc) = c_invariants(&model.coeffs());
    debug_assert_eq!(&c4 * &c4 * &c4 - &c6 * &c6, r(1728) * &disc);
    let j = if disc.is_zero() { Rational::zero() } else { &c4 * &c4 * &c4 / &disc };
    Invariants { c4, c6, disc, j }
}

/// Reduce `a1, a3` to `{0, 1}` and `a2` to `{-1, 0, 1}` by an integral
/// change of variables with `u = 1`.
fn normalize(a: &[BigInt; 5]) -> [BigInt; 5] {
    let z = BigInt::zero();
    let one = BigInt::one();
    let s = (a[0].mod_floor(&BigInt::from(2)) - &a[0]) / 2;
    let a = transform(a, &one, &z, &s, &z);
    let b = a[1].clone();
    let m = (&b + BigInt::one()).mod_floor(&BigInt::from(3)) - 1;
    let rr = (m - &b) / 3;
    let a = transform(&a, &one, &rr, &z, &z);
    let t = (a[2].mod_floor(&BigInt::from(2)) - &a[2]) / 2;
    transform(&a, &one, &z, &z, &t)
}

/// Global minimal model in reduced form.
pub fn minimal_model(model: &WeierstrassModel) -> Result<WeierstrassModel> {
    Ok(minimal_with_data(model)?.0)
}

fn minimal_with_data(model: &WeierstrassModel) -> Result<(WeierstrassModel, Vec<LocalData>)> {
    if model.disc().is_zero() {
        return Err(Error::SingularCurve);
    }
    let mut a = model.integral_model().int_coeffs();
    let disc = c_invariants(&a).2;
    let mut local = Vec::new();
    for p in arith::primes_dividing(&disc) {
        let (ld, am) = tate::tate(&a, &p);
        a = am;
        local.push(ld);
    }
    let a = normalize(&a);
    local.retain(|l| l.kind != ReductionKind::Good);
    Ok((WeierstrassModel::from_int_coeffs(&a), local))
}

/// Full reduction data: minimal-model invariants, conductor, local data.
pub fn curve_data(model: &WeierstrassModel) -> Result<(WeierstrassModel, CurveInvariants)> {
    let (min, local_data) = minimal_with_data(model)?;
    let inv = invariants(&min);
    let conductor = local_data.iter().fold(BigInt::one(), |acc, l| acc * l.p.pow(l.f));
    Ok((
        min,
        CurveInvariants { c4: inv.c4, c6: inv.c6, disc: inv.disc, j: inv.j, conductor, local_data },
    ))
}

pub fn conductor(model: &WeierstrassModel) -> Result<BigInt> {
    Ok(curve_data(model)?.1.conductor)
}

/// Whether the symbol at `t` is integral, by the valuation criterion for
/// the family.
///
/// Legendre: `ord_p j >= 0` at every `p` with `ord_p(1-t) != 0`.
/// Family 2: `ord_p j >= 0` at every `p | 6 num(1-t) den(1-t)`.
/// Family 3: `ord_p j >= 0` at every `p | 6 num(t) den(t)`.
pub fn integrality_check(family: Family, t: &Rational) -> Result<bool> {
    let model = family_model(family, t)?;
    let j = invariants(&model).j;
    let one_minus_t = r(1) - t;
    let primes_of = |x: &Rational, six: bool| {
        let mut n = x.numer() * x.denom();
        if six {
            n *= 6;
        }
        arith::primes_dividing(&n)
    };
    let primes = match family {
        Family::Legendre => primes_of(&one_minus_t, false),
        Family::Family2 => primes_of(&one_minus_t, true),
        Family::Family3 => primes_of(t, true),
    };
    Ok(primes.iter().all(|p| j.is_zero() || arith::val_rat(&j, p) >= 0))
}

/// `|x|` for rationals (used by sanity checks on discriminants).
pub fn rat_abs(x: &Rational) -> Rational {
    if x.is_negative() {
        -x
    } else {
        x.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::parse_rational;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn invariants_by_hand() {
        let m = WeierstrassModel::from_ints([0, 0, 0, 0, 1]).unwrap();
        assert_eq!(m.disc(), r(-432));
        assert!(WeierstrassModel::from_ints([0, 0, 0, 0, 0]).is_err());
        let j = legendre_model(&r(-1)).unwrap().invariants().j;
        assert_eq!(j, r(1728));
    }

    #[test]
    fn family_j_invariants() {
        for n in 2..30i64 {
            let t = r(1) - Rational::new(BigInt::one(), BigInt::from(n));
            let j = family2_model(&t).unwrap().invariants().j;
            assert_eq!(j, Rational::new(BigInt::from(432 * n * n), BigInt::from(n - 1)));
        }
        for n in 1..30i64 {
            let t = Rational::new(BigInt::one(), BigInt::from(6 * n));
            let j = family3_model(&t).unwrap().invariants().j;
            let num = BigInt::from(1296) * BigInt::from(27 * n - 4).pow(3) * n;
            assert_eq!(j, Rational::new(num, BigInt::from(6 * n - 1)));
        }
        for s in ["-3", "2/7", "15/16"] {
            let t = q(s);
            let j = legendre_model(&t).unwrap().invariants().j;
            let one = r(1);
            let tt = &t * &t - &t + &one;
            let expect = r(256) * &tt * &tt * &tt / (&t * &t * (&one - &t) * (&one - &t));
            assert_eq!(j, expect);
        }
    }

    #[test]
    fn singular_fibres_rejected() {
        for f in Family::ALL {
            assert!(matches!(family_model(f, &r(0)), Err(Error::SingularFiber(_))));
            assert!(matches!(family_model(f, &r(1)), Err(Error::SingularFiber(_))));
        }
    }

    #[test]
    fn integral_scaling() {
        let m = legendre_model(&q("7/8")).unwrap();
        assert!(m.is_integral());
        let m = family3_model(&q("1/120")).unwrap();
        assert!(m.is_integral());
        let src = WeierstrassModel::new([r(0), q("1/2"), r(0), q("1/3"), q("1/5")]).unwrap();
        let m = src.integral_model();
        assert!(m.is_integral());
        assert_eq!(m.invariants().j, src.invariants().j);
    }

    #[test]
    fn conductor_24() {
        let m = legendre_model(&r(-3)).unwrap();
        let (min, data) = curve_data(&m).unwrap();
        assert_eq!(data.conductor, BigInt::from(24));
        assert_eq!(minimal_model(&min).unwrap(), min);
    }

    #[test]
    fn legendre_integrality_set() {
        let mut accepted = Vec::new();
        for den in 1..=17i64 {
            for num in -17..=17i64 {
                if num.gcd(&den) != 1 {
                    continue;
                }
                let t = Rational::new(BigInt::from(num), BigInt::from(den));
                if t.is_zero() || t.is_one() {
                    continue;
                }
                if integrality_check(Family::Legendre, &t).unwrap() {
                    accepted.push(t);
                }
            }
        }
        let mut expected: Vec<Rational> = [
            "-1", "-3", "-7", "-15", "2", "3", "5", "9", "17", "1/2", "3/2", "7/8", "9/8", "3/4", "5/4", "15/16", "17/16",
        ]
        .iter()
        .map(|s| q(s))
        .collect();
        accepted.sort();
        expected.sort();
        assert_eq!(accepted, expected);
    }

    #[test]
    fn family_integrality() {
        for n in 2..=21i64 {
            let t = r(1) - Rational::new(BigInt::one(), BigInt::from(n));
            assert!(integrality_check(Family::Family2, &t).unwrap(), "n = {n}");
        }
        for n in 1..=40i64 {
            let t = Rational::new(BigInt::one(), BigInt::from(6 * n));
            assert!(integrality_check(Family::Family3, &t).unwrap(), "n = {n}");
        }
    }
}
