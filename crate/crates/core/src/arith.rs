//! Integer-side utilities: trial factorization with an honest failure mode,
//! divisor lists, square-free parts, and quadratic residue symbols.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Default trial-division ceiling. Everything this crate factors is of desk
/// scale (discriminants, root bounds, field radicands), so a fixed small
/// bound with an explicit error beyond it beats pulling in real factoring.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// Factor `n >= 1` by trial division with candidates up to `bound`,
/// returning `(prime, exponent)` pairs in ascending order.
///
/// A leftover cofactor smaller than the square of the last candidate tried
/// is prime and is included, even when it exceeds `bound`. A cofactor that
/// is not certified prime that way aborts with `UnfactoredCofactor` rather
/// than returning a partial answer.
pub fn factor_smooth(n: &BigInt, bound: u64) -> Result<Vec<(BigInt, u32)>, Error> {
    assert!(n.is_positive(), "factor_smooth requires n >= 1");
    let mut rem = n.clone();
    let mut out: Vec<(BigInt, u32)> = Vec::new();

    let strip = |rem: &mut BigInt, d: u64, out: &mut Vec<(BigInt, u32)>| {
        let db = BigInt::from(d);
        let mut e = 0u32;
        while (&*rem % &db).is_zero() {
            *rem /= &db;
            e += 1;
        }
        if e > 0 {
            out.push((db, e));
        }
    };

    let mut exceeded = false;
    let mut d: u64 = 2;
    if bound >= 2 {
        strip(&mut rem, 2, &mut out);
    }
    if bound >= 3 {
        d = 3;
        strip(&mut rem, 3, &mut out);
    }
    // remaining candidates: 6k +- 1
    let mut k: u64 = 5;
    while !rem.is_one() {
        if k > bound {
            exceeded = true;
            break;
        }
        if BigInt::from(k).pow(2) > rem {
            break;
        }
        d = k;
        strip(&mut rem, k, &mut out);
        if k % 6 == 5 {
            k += 2;
        } else {
            k += 4;
        }
    }

    if !rem.is_one() {
        // cofactor below d^2 has no divisor in [2, d], hence is prime
        if !exceeded || BigInt::from(d).pow(2) > rem {
            out.push((rem, 1));
        } else {
            return Err(Error::UnfactoredCofactor {
                cofactor: rem,
                bound,
            });
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// All positive divisors of the factored integer, ascending.
pub fn divisors(factors: &[(BigInt, u32)]) -> Vec<BigInt> {
    let mut ds = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(ds.len() * (*e as usize + 1));
        let mut pk = BigInt::one();
        for _ in 0..=*e {
            for d in &ds {
                next.push(d * &pk);
            }
            pk *= p;
        }
        ds = next;
    }
    ds.sort();
    ds
}

/// Square-free part of `n != 0`, keeping the sign: the unique square-free
/// `m` with `n = m * t^2`.
pub fn square_free_part(n: &BigInt, bound: u64) -> Result<BigInt, Error> {
    assert!(!n.is_zero(), "square_free_part requires n != 0");
    let factors = factor_smooth(&n.abs(), bound)?;
    let mut m = BigInt::one();
    for (p, e) in &factors {
        if e % 2 == 1 {
            m *= p;
        }
    }
    if n.is_negative() {
        m = -m;
    }
    Ok(m)
}

/// Companion to [`square_free_part`]: `(m, t)` with `n = m * t^2`, `m`
/// square-free carrying the sign of `n`, `t > 0`.
pub fn square_free_split(n: &BigInt, bound: u64) -> Result<(BigInt, BigInt), Error> {
    let m = square_free_part(n, bound)?;
    let t = crate::rational::sqrt_exact_int(&(n / &m)).expect("n/m is a square by construction");
    Ok((m, t))
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut k = 5u64;
    while k.checked_mul(k).map(|s| s <= n).unwrap_or(false) {
        if n % k == 0 {
            return false;
        }
        k += if k % 6 == 5 { 2 } else { 4 };
    }
    true
}

/// `base^exp mod modulus` for `modulus >= 1`, by square and multiply.
pub fn modpow_u64(base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus >= 1);
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b: u128 = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Euler's criterion: is `a` a nonzero square modulo the odd prime `p`?
///
/// `a` divisible by `p` reports `false`: zero is not counted as a residue
/// here, which keeps "false" synonymous with "no invertible square root".
pub fn qr_mod_p(a: i64, p: u64) -> Result<bool, Error> {
    if p == 2 || !is_prime_u64(p) {
        return Err(Error::NotOddPrime(p));
    }
    let am = a.rem_euclid(p as i64) as u64;
    if am == 0 {
        return Ok(false);
    }
    Ok(modpow_u64(am, (p - 1) / 2, p) == 1)
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Convenience: factor an `i64 != 0` by absolute value with the default bound.
pub fn factor_i64(n: i64) -> Result<Vec<(BigInt, u32)>, Error> {
    factor_smooth(&BigInt::from(n.unsigned_abs()), DEFAULT_FACTOR_BOUND)
}

/// Is `n` square-free? Zero is not.
pub fn is_square_free_i64(n: i64) -> Result<bool, Error> {
    if n == 0 {
        return Ok(false);
    }
    Ok(factor_i64(n)?.iter().all(|(_, e)| *e == 1))
}
