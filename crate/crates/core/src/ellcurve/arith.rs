//! Integer helpers: valuations, modular arithmetic, factorization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::precision::Rational;

/// `p`-adic valuation of a nonzero integer (`i64::MAX` for zero).
pub fn val(x: &BigInt, p: &BigInt) -> i64 {
    if x.is_zero() {
        return i64::MAX;
    }
    let mut v = 0;
    let mut y = x.clone();
    loop {
        let (q, r) = y.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        y = q;
        v += 1;
    }
}

pub fn val_rat(x: &Rational, p: &BigInt) -> i64 {
    if x.is_zero() {
        return i64::MAX;
    }
    val(x.numer(), p) - val(x.denom(), p)
}

/// Least nonnegative residue.
pub fn modp(x: &BigInt, p: &BigInt) -> BigInt {
    x.mod_floor(p)
}

pub fn divides(p: &BigInt, x: &BigInt) -> bool {
    x.is_multiple_of(p)
}

/// `a^{-1} mod p`, `None` if not invertible.
pub fn inv_mod(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(p).extended_gcd(p);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(p))
    } else {
        None
    }
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
pub fn legendre_symbol(a: &BigInt, p: &BigInt) -> i32 {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return 0;
    }
    let e = (p - 1u32) >> 1;
    if a.modpow(&e, p).is_one() {
        1
    } else {
        -1
    }
}

fn is_probable_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // deterministic for n < 3.3e24 with these bases
    'base: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Miller–Rabin; deterministic below `3.3e24`, 24 fixed bases beyond.
pub fn is_prime(n: &BigInt) -> bool {
    if let Some(m) = n.to_u64() {
        return is_probable_prime_u64(m);
    }
    if n.is_negative() || n.is_even() {
        return false;
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    let bases = [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89];
    'base: for a in bases {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho; returns a nontrivial factor of composite `n`.
fn rho(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let one = BigInt::one();
    for c in 1u32.. {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut r: u64 = 1;
        let mut q = one.clone();
        let mut g = one.clone();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..(128u64).min(r - k) {
                    y = f(&y);
                    q = (&q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += 128;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
    unreachable!()
}

/// Prime factorization of `|n|` as sorted `(p, e)` pairs.
pub fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    if n.is_zero() {
        return out;
    }
    let push = |p: BigInt, out: &mut Vec<(BigInt, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
        Some(e) => e.1 += 1,
        None => out.push((p, 1)),
    };
    for p in 2u32..10_000 {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        while n.is_multiple_of(&bp) {
            n /= &bp;
            push(bp.clone(), &mut out);
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            push(m, &mut out);
            continue;
        }
        let d = rho(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    out.sort();
    out
}

pub fn primes_dividing(n: &BigInt) -> Vec<BigInt> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

/// Primes up to `n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: usize) -> Vec<usize> {
    if n < 2 {
        return vec![];
    }
    let mut comp = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !comp[i] {
            out.push(i);
            let mut j = i * i;
            while j <= n {
                comp[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Smallest prime factor table for `0..=n`.
pub fn spf_table(n: usize) -> Vec<u32> {
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization() {
        let n = BigInt::from(2u64.pow(10) * 3 * 1_000_003u64) * BigInt::from(998_244_353u64);
        let f = factor(&n);
        assert_eq!(f, vec![
            (BigInt::from(2), 10),
            (BigInt::from(3), 1),
            (BigInt::from(1_000_003), 1),
            (BigInt::from(998_244_353), 1)
        ]);
        let big: BigInt = "1000000000000000000117".parse().unwrap();
        assert!(is_prime(&big));
        let semi = &big * BigInt::from(1_000_000_007u64);
        assert_eq!(factor(&semi).len(), 2);
        assert!(factor(&BigInt::from(-12)).iter().map(|(_, e)| e).sum::<u32>() == 3);
    }

    #[test]
    fn residues() {
        let p = BigInt::from(23);
        let squares: Vec<i32> = (0..23).map(|a| legendre_symbol(&BigInt::from(a), &p)).collect();
        for a in 1..23i64 {
            let is_sq = (1..23i64).any(|x| (x * x - a) % 23 == 0);
            assert_eq!(squares[a as usize] == 1, is_sq);
        }
        assert_eq!(inv_mod(&BigInt::from(5), &p).unwrap() * 5 % &p, BigInt::one());
        assert_eq!(val(&BigInt::from(96), &BigInt::from(2)), 5);
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(spf_table(12)[12], 2);
        assert_eq!(spf_table(49)[49], 7);
    }
}
