//! Mathematical constants, cached per thread and per precision.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::XReal;

thread_local! {
    static CACHE: RefCell<HashMap<(u8, u32), XReal>> = RefCell::new(HashMap::new());
}

fn cached(tag: u8, bits: u32, f: fn(u32) -> XReal) -> XReal {
    let key_bits = bits.div_ceil(64) * 64;
    let v = CACHE.with(|c| c.borrow().get(&(tag, key_bits)).cloned());
    let v = match v {
        Some(v) => v,
        None => {
            let v = f(key_bits);
            CACHE.with(|c| c.borrow_mut().insert((tag, key_bits), v.clone()));
            v
        }
    };
    v.with_bits(bits)
}

/// `atan(1/k)` or `atanh(1/k)` scaled by `2^fbits`.
fn arc_inv(k: u64, fbits: u64, hyperbolic: bool) -> BigInt {
    let k2 = BigInt::from(k * k);
    let mut term = (BigInt::one() << fbits) / BigInt::from(k);
    let mut sum = term.clone();
    let mut n = 1u64;
    loop {
        term /= &k2;
        if term.is_zero() {
            break;
        }
        let t = &term / BigInt::from(2 * n + 1);
        if hyperbolic || n % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        n += 1;
    }
    sum
}

fn compute_pi(bits: u32) -> XReal {
    let f = bits as u64 + 32;
    let v = arc_inv(5, f, false) * 16 - arc_inv(239, f, false) * 4;
    XReal::from_parts(v, -(f as i64), bits)
}

fn compute_ln2(bits: u32) -> XReal {
    let f = bits as u64 + 32;
    XReal::from_parts(arc_inv(3, f, true) * 2, -(f as i64), bits)
}

/// Brent–McMillan with `n = 2^k`, so `log n = k log 2`.
fn compute_euler_gamma(bits: u32) -> XReal {
    let target = bits as f64 * std::f64::consts::LN_2 / 4.0 + 2.0;
    let k = target.log2().ceil() as u32;
    let n = 1u64 << k;
    let f = bits as u64 + 40 + k as u64;
    let one = BigInt::one() << f;
    let ln2 = compute_ln2(f as u32 + 8);
    let (m, e) = (ln2.mantissa().clone(), ln2.exponent());
    let ln2_fixed = if e + (f as i64) >= 0 {
        m << (e + f as i64) as u64
    } else {
        m >> (-(e + f as i64)) as u64
    };
    let n2 = BigInt::from(n) * BigInt::from(n);
    let mut a = -(ln2_fixed * BigInt::from(k));
    let mut b = one;
    let mut u = a.clone();
    let mut v = b.clone();
    let mut j = 1u64;
    loop {
        let jb = BigInt::from(j);
        b = &b * &n2 / (&jb * &jb);
        a = (&a * &n2 / &jb + &b) / &jb;
        if b.is_zero() && a.is_zero() {
            break;
        }
        u += &a;
        v += &b;
        j += 1;
    }
    XReal::from_bigint(&u, bits + 8) / XReal::from_bigint(&v, bits + 8)
}

pub fn pi(bits: u32) -> XReal {
    cached(0, bits, compute_pi)
}

pub fn ln2(bits: u32) -> XReal {
    cached(1, bits, compute_ln2)
}

pub fn euler_gamma(bits: u32) -> XReal {
    cached(2, bits, compute_euler_gamma).with_bits(bits)
}
