//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`: arbitrary precision, always
//! reduced, denominator positive. Every ratio in this crate is carried in
//! that normal form; nothing downstream ever rounds.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub type Rational = num_rational::BigRational;

/// An integer as a `Rational`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a `Rational`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact integer square root: `Some(r)` with `r >= 0` and `r*r == n`.
pub fn sqrt_exact_int(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational square root: `Some(y)` with `y >= 0` and `y*y == q`.
///
/// A reduced fraction is a square exactly when numerator and denominator
/// both are, so this never needs to refactor anything.
pub fn is_square_rational(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rational::zero());
    }
    let num = sqrt_exact_int(q.numer())?;
    let den = sqrt_exact_int(q.denom())?;
    Some(Rational::new(num, den))
}

/// Parse `"a"` or `"a/b"` into a reduced `Rational`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((num, den)) => {
            let num = num.trim().parse::<BigInt>().ok()?;
            let den = den.trim().parse::<BigInt>().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(Rational::new(num, den))
            }
        }
    }
}

/// Canonical display form: `"a/b"`, or just `"a"` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_square_roots() {
        assert_eq!(sqrt_exact_int(&BigInt::from(0)), Some(BigInt::from(0)));
        assert_eq!(sqrt_exact_int(&BigInt::from(144)), Some(BigInt::from(12)));
        assert_eq!(sqrt_exact_int(&BigInt::from(145)), None);
        assert_eq!(sqrt_exact_int(&BigInt::from(-4)), None);
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(is_square_rational(&frac(1225, 64)), Some(frac(35, 8)));
        assert_eq!(is_square_rational(&frac(2, 1)), None);
        assert_eq!(is_square_rational(&frac(-9, 4)), None);
        assert_eq!(is_square_rational(&frac(0, 5)), Some(rat(0)));
        // reduced form is what makes the componentwise test sound: 18/8 = 9/4
        assert_eq!(is_square_rational(&frac(18, 8)), Some(frac(3, 2)));
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3", "5/8", "-22/7", "100/25"] {
            let q = parse_rational(s).unwrap();
            let t = format_rational(&q);
            assert_eq!(parse_rational(&t).unwrap(), q);
        }
        assert_eq!(format_rational(&parse_rational("100/25").unwrap()), "4");
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
        assert!(parse_rational("1/2/3").is_none());
    }
}
