use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{b_invariants, tate, WeierstrassModel};

fn coeffs_mod(model: &WeierstrassModel, p: u64) -> [u64; 5] {
    let pb = BigInt::from(p);
    model.int_coeffs().map(|a| a.mod_floor(&pb).to_u64().unwrap())
}

/// `#E(F_p)` including the point at infinity, for a model with good
/// reduction at `p`.
///
/// Odd `p`: `1 + sum_x (1 + chi(4x^3 + b2 x^2 + 2 b4 x + b6))`, the cubic
/// stepped by finite differences and `chi` read from a table of squares.
pub fn count_points(model: &WeierstrassModel, p: u64) -> u64 {
    if p == 2 {
        return count_naive(model, p);
    }
    let pb = BigInt::from(p);
    let [b2, b4, b6, _] = b_invariants(&model.int_coeffs());
    let m = |x: BigInt| x.mod_floor(&pb).to_u64().unwrap();
    let (b2, b4, b6) = (m(b2), m(b4), m(b6));
    let mut chi = vec![-1i8; p as usize];
    chi[0] = 0;
    for x in 1..=(p / 2) {
        chi[((x * x) % p) as usize] = 1;
    }
    let pm = |v: u64| v % p;
    // f(x) = 4x^3 + b2 x^2 + 2 b4 x + b6; forward differences at x = 0
    let f0 = b6;
    let f1 = pm(4 + b2 + 2 * b4 + b6);
    let f2 = pm(32 + 4 * b2 + 4 * b4 + b6);
    let d1 = (f1 + p - f0) % p;
    let d2 = (f2 + 2 * p - 2 * f1 + f0) % p;
    let d3 = 24 % p;
    let (mut v, mut d1, mut d2) = (f0, d1, d2);
    let mut total: i64 = 0;
    let step = |a: u64, b: u64| {
        let s = a + b;
        if s >= p {
            s - p
        } else {
            s
        }
    };
    for _ in 0..p {
        total += chi[v as usize] as i64;
        v = step(v, d1);
        d1 = step(d1, d2);
        d2 = step(d2, d3);
    }
    (p as i64 + 1 + total) as u64
}

/// Affine solutions counted by brute force over `F_p^2` (y outer, x inner),
/// plus the point at infinity.
pub fn count_naive(model: &WeierstrassModel, p: u64) -> u64 {
    let [a1, a2, a3, a4, a6] = coeffs_mod(model, p);
    let mut n = 1;
    for y in 0..p {
        for x in 0..p {
            let lhs = (y * y % p + a1 * x % p * y + a3 * y) % p;
            let rhs = (x * x % p * x + a2 * x % p * x + a4 * x + a6) % p;
            if lhs == rhs {
                n += 1;
            }
        }
    }
    n
}

/// `a_p` for a model minimal at `p`: `p + 1 - #E(F_p)` at good primes and
/// `1, -1, 0` for split, nonsplit and additive reduction.
pub fn ap(model: &WeierstrassModel, p: u64) -> i64 {
    let pb = BigInt::from(p);
    let ld = tate::tate(&model.integral_model().int_coeffs(), &pb).0;
    match ld.kind.ap() {
        Some(a) => a,
        None => p as i64 + 1 - count_points(model, p) as i64,
    }
}

/// `a_p` at a good prime by naive enumeration.
pub fn ap_naive(model: &WeierstrassModel, p: u64) -> i64 {
    p as i64 + 1 - count_naive(model, p) as i64
}
