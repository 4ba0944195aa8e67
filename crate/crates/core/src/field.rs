//! Real quadratic field elements with exact arithmetic.
//!
//! An element is `a + b*sqrt(d)` with rational `a`, `b` and square-free
//! `d >= 2`. The embedding is pinned once and for all by `sqrt(d) > 0`,
//! which gives every element a well-defined sign; square roots always
//! return the branch that is non-negative under that embedding.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{square_free_split, DEFAULT_FACTOR_BOUND};
use crate::error::Error;
use crate::rational::{is_square_rational, rat, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldDesc {
    Rationals,
    RealQuadratic { d: i64 },
}

impl FieldDesc {
    /// The field `Q(sqrt(d))`, after stripping any square part of `d`.
    ///
    /// Inputs whose square-free part drops below 2 (so the "extension"
    /// would just be `Q` again, or imaginary) are rejected.
    pub fn real_quadratic(d: i64) -> Result<FieldDesc, Error> {
        Ok(Self::real_quadratic_scaled(d)?.0)
    }

    /// As [`Self::real_quadratic`], also returning `t` with
    /// `sqrt(d) = t * sqrt(d0)` so callers can rescale coefficients.
    pub fn real_quadratic_scaled(d: i64) -> Result<(FieldDesc, BigInt), Error> {
        if d < 2 {
            return Err(Error::NotRealQuadratic(d));
        }
        let (d0, t) = square_free_split(&BigInt::from(d), DEFAULT_FACTOR_BOUND)?;
        let d0 = d0.to_i64().expect("square-free part of an i64 fits");
        if d0 < 2 {
            return Err(Error::NotRealQuadratic(d));
        }
        Ok((FieldDesc::RealQuadratic { d: d0 }, t))
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self, FieldDesc::Rationals)
    }

    /// The square-free radicand, if this is a quadratic field.
    pub fn radicand(&self) -> Option<i64> {
        match self {
            FieldDesc::Rationals => None,
            FieldDesc::RealQuadratic { d } => Some(*d),
        }
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDesc::Rationals => write!(f, "Q"),
            FieldDesc::RealQuadratic { d } => write!(f, "Q(sqrt({d}))"),
        }
    }
}

/// `a + b*sqrt(d)`, tagged with its field. Elements of `Q` always carry
/// `b = 0`; the constructors enforce that.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    a: Rational,
    b: Rational,
    field: FieldDesc,
}

impl QuadElem {
    pub fn rational(a: Rational) -> QuadElem {
        QuadElem {
            a,
            b: Rational::zero(),
            field: FieldDesc::Rationals,
        }
    }

    /// A rational value viewed inside `field`.
    pub fn in_field(a: Rational, field: FieldDesc) -> QuadElem {
        QuadElem {
            a,
            b: Rational::zero(),
            field,
        }
    }

    pub fn new(a: Rational, b: Rational, field: FieldDesc) -> Result<QuadElem, Error> {
        if field.is_rationals() && !b.is_zero() {
            return Err(Error::FieldMismatch);
        }
        Ok(QuadElem { a, b, field })
    }

    /// `a + b*sqrt(d_raw)` for any `d_raw >= 2`: the radicand is reduced to
    /// its square-free core and `b` rescaled to match.
    pub fn from_radicand(a: Rational, b: Rational, d_raw: i64) -> Result<QuadElem, Error> {
        let (field, t) = FieldDesc::real_quadratic_scaled(d_raw)?;
        Ok(QuadElem {
            a,
            b: b * Rational::from_integer(t),
            field,
        })
    }

    pub fn zero(field: FieldDesc) -> QuadElem {
        QuadElem::in_field(Rational::zero(), field)
    }

    pub fn one(field: FieldDesc) -> QuadElem {
        QuadElem::in_field(rat(1), field)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Is the value rational (irrational coefficient zero)?
    pub fn is_rational_value(&self) -> bool {
        self.b.is_zero()
    }

    /// Retag into `target`. Allowed when the fields agree or the value is
    /// rational; a genuinely irrational element refuses to move.
    pub fn into_field(self, target: FieldDesc) -> Result<QuadElem, Error> {
        if self.field == target {
            return Ok(self);
        }
        if self.b.is_zero() {
            return Ok(QuadElem::in_field(self.a, target));
        }
        Err(Error::FieldMismatch)
    }

    pub fn conj(&self) -> QuadElem {
        QuadElem {
            a: self.a.clone(),
            b: -self.b.clone(),
            field: self.field,
        }
    }

    /// Field norm `a^2 - d*b^2` (just `a^2` over `Q`).
    pub fn norm(&self) -> Rational {
        let d = self.field.radicand().unwrap_or(0);
        &self.a * &self.a - rat(d) * &self.b * &self.b
    }

    fn assert_same_field(&self, other: &QuadElem) {
        assert_eq!(
            self.field, other.field,
            "field mismatch in quadratic arithmetic"
        );
    }

    pub fn try_add(&self, rhs: &QuadElem) -> Result<QuadElem, Error> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self + rhs)
    }

    pub fn try_sub(&self, rhs: &QuadElem) -> Result<QuadElem, Error> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self - rhs)
    }

    pub fn try_mul(&self, rhs: &QuadElem) -> Result<QuadElem, Error> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self * rhs)
    }

    pub fn try_div(&self, rhs: &QuadElem) -> Result<QuadElem, Error> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self * &rhs.inv()?)
    }

    /// Multiplicative inverse via the conjugate: `1/x = conj(x)/norm(x)`.
    /// The norm of a nonzero element is nonzero because `d` is not a square.
    pub fn inv(&self) -> Result<QuadElem, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        debug_assert!(!n.is_zero());
        Ok(QuadElem {
            a: &self.a / &n,
            b: -&self.b / &n,
            field: self.field,
        })
    }

    pub fn scale(&self, c: &Rational) -> QuadElem {
        QuadElem {
            a: &self.a * c,
            b: &self.b * c,
            field: self.field,
        }
    }

    /// Sign of the element under the canonical embedding `sqrt(d) > 0`.
    pub fn sign_embedded(&self) -> Ordering {
        if self.b.is_zero() {
            return self.a.cmp(&Rational::zero());
        }
        if self.a.is_zero() {
            return self.b.cmp(&Rational::zero());
        }
        let d = rat(self
            .field
            .radicand()
            .expect("irrational coefficient implies a quadratic field"));
        match (self.a.is_positive(), self.b.is_positive()) {
            (true, true) => Ordering::Greater,
            (false, false) => Ordering::Less,
            // a > 0 > b: sign decided by |a| vs |b|*sqrt(d)
            (true, false) => (&self.a * &self.a).cmp(&(d * &self.b * &self.b)),
            (false, true) => (d * &self.b * &self.b).cmp(&(&self.a * &self.a)),
        }
    }

    pub fn is_positive_embedded(&self) -> bool {
        self.sign_embedded() == Ordering::Greater
    }

    pub fn is_negative_embedded(&self) -> bool {
        self.sign_embedded() == Ordering::Less
    }

    /// Compare two same-field elements under the embedding.
    pub fn cmp_embedded(&self, other: &QuadElem) -> Ordering {
        self.assert_same_field(other);
        (self - other).sign_embedded()
    }

    pub fn abs_embedded(&self) -> QuadElem {
        if self.is_negative_embedded() {
            -self
        } else {
            self.clone()
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<QuadElem> for QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: QuadElem) -> QuadElem {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadElem> for QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: &QuadElem) -> QuadElem {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadElem> for &QuadElem {
            type Output = QuadElem;
            fn $method(self, rhs: QuadElem) -> QuadElem {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &QuadElem) -> QuadElem {
        self.assert_same_field(rhs);
        QuadElem {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            field: self.field,
        }
    }
}

impl Sub<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &QuadElem) -> QuadElem {
        self.assert_same_field(rhs);
        QuadElem {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            field: self.field,
        }
    }
}

impl Mul<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        self.assert_same_field(rhs);
        let d = rat(self.field.radicand().unwrap_or(0));
        QuadElem {
            a: &self.a * &rhs.a + d * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            field: self.field,
        }
    }
}

impl Div<&QuadElem> for &QuadElem {
    type Output = QuadElem;
    fn div(self, rhs: &QuadElem) -> QuadElem {
        self * &rhs.inv().expect("division by zero")
    }
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem {
            a: -&self.a,
            b: -&self.b,
            field: self.field,
        }
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        -&self
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.field.radicand().unwrap_or(0);
        if self.b.is_zero() {
            return write!(f, "{}", crate::rational::format_rational(&self.a));
        }
        let root = |b: &Rational| -> String {
            let babs = b.abs();
            if babs == rat(1) {
                format!("sqrt({d})")
            } else {
                format!("{}*sqrt({d})", crate::rational::format_rational(&babs))
            }
        };
        if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            return write!(f, "{}{}", sign, root(&self.b));
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        write!(
            f,
            "{} {} {}",
            crate::rational::format_rational(&self.a),
            sign,
            root(&self.b)
        )
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadElem({self} in {})", self.field)
    }
}

/// Square root of `x` inside `k`, canonical non-negative branch, or `None`
/// when no such element exists (including every negatively embedded `x`).
///
/// For `x = a + b*sqrt(d)` with `b != 0`, a root `p + q*sqrt(d)` forces
/// `p^2 + d*q^2 = a` and `2pq = b`, so `norm(x) = (p^2 - d*q^2)^2` must be a
/// rational square `N^2`, and `p^2` is one of `(a + N)/2`, `(a - N)/2`. At
/// most one of those branches is a rational square: if both were, their
/// difference `N` and product `d*q^2*p^2` would make `d` a square.
pub fn sqrt_in_field(x: &QuadElem, k: FieldDesc) -> Option<QuadElem> {
    let x = x
        .clone()
        .into_field(k)
        .expect("sqrt_in_field: element does not embed in the requested field");
    match x.sign_embedded() {
        Ordering::Less => return None,
        Ordering::Equal => return Some(QuadElem::zero(k)),
        Ordering::Greater => {}
    }
    let d = match k {
        FieldDesc::Rationals => {
            return is_square_rational(x.a()).map(QuadElem::rational);
        }
        FieldDesc::RealQuadratic { d } => d,
    };
    let dr = rat(d);
    if x.b().is_zero() {
        // rational radicand: either a = p^2 or a = d*q^2 can occur, never both
        if let Some(p) = is_square_rational(x.a()) {
            return Some(QuadElem::in_field(p, k));
        }
        if let Some(q) = is_square_rational(&(x.a() / &dr)) {
            return QuadElem::new(Rational::zero(), q, k).ok();
        }
        return None;
    }
    let norm = x.norm();
    let n_root = is_square_rational(&norm)?;
    for p2 in [
        (x.a() + &n_root) / rat(2),
        (x.a() - &n_root) / rat(2),
    ] {
        if let Some(p) = is_square_rational(&p2) {
            if p.is_zero() {
                continue;
            }
            let q = x.b() / (rat(2) * &p);
            let y = QuadElem::new(p, q, k).ok()?;
            debug_assert_eq!(&y * &y, x);
            return Some(y.abs_embedded());
        }
    }
    None
}

/// [`sqrt_in_field`] for a rational radicand.
pub fn sqrt_rational_in(q: &Rational, k: FieldDesc) -> Option<QuadElem> {
    sqrt_in_field(&QuadElem::in_field(q.clone(), k), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn qf(d: i64) -> FieldDesc {
        FieldDesc::real_quadratic(d).unwrap()
    }

    fn el(a: i64, b: i64, d: i64) -> QuadElem {
        QuadElem::new(rat(a), rat(b), qf(d)).unwrap()
    }

    #[test]
    fn field_constructor_reduces_radicands() {
        assert_eq!(qf(12), FieldDesc::RealQuadratic { d: 3 });
        assert_eq!(qf(5), FieldDesc::RealQuadratic { d: 5 });
        assert!(matches!(
            FieldDesc::real_quadratic(9),
            Err(Error::NotRealQuadratic(9))
        ));
        assert!(matches!(
            FieldDesc::real_quadratic(1),
            Err(Error::NotRealQuadratic(1))
        ));
        assert!(matches!(
            FieldDesc::real_quadratic(-5),
            Err(Error::NotRealQuadratic(-5))
        ));
    }

    #[test]
    fn radicand_rescaling() {
        // sqrt(12) = 2*sqrt(3)
        let x = QuadElem::from_radicand(rat(1), rat(1), 12).unwrap();
        assert_eq!(x, el(1, 2, 3));
    }

    #[test]
    fn arithmetic_in_sqrt5() {
        let x = el(1, 2, 5); // 1 + 2*sqrt(5)
        let y = el(3, -1, 5); // 3 - sqrt(5)
        assert_eq!(&x + &y, el(4, 1, 5));
        assert_eq!(&x - &y, el(-2, 3, 5));
        // (1 + 2r)(3 - r) = 3 - r + 6r - 2*5 = -7 + 5r
        assert_eq!(&x * &y, el(-7, 5, 5));
        let q = &x / &y;
        assert_eq!(&q * &y, x);
        assert_eq!(x.norm(), rat(1 - 20));
        assert!(matches!(
            el(1, 1, 5).try_add(&el(1, 1, 3)),
            Err(Error::FieldMismatch)
        ));
        assert!(matches!(
            QuadElem::zero(qf(5)).inv(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn embedding_signs() {
        assert!(el(3, 2, 3).is_positive_embedded());
        assert!(el(-3, -2, 3).is_negative_embedded());
        // 3 - 2*sqrt(3) < 0 < 4 - 2*sqrt(3)
        assert!(el(3, -2, 3).is_negative_embedded());
        assert!(el(4, -2, 3).is_positive_embedded());
        // -3 + 2*sqrt(3) > 0 > -4 + 2*sqrt(3)
        assert!(el(-3, 2, 3).is_positive_embedded());
        assert!(el(-4, 2, 3).is_negative_embedded());
        assert_eq!(QuadElem::zero(qf(3)).sign_embedded(), Ordering::Equal);

        let smaller = el(0, 1, 2); // sqrt(2)
        let bigger = QuadElem::in_field(frac(3, 2), qf(2));
        assert_eq!(smaller.cmp_embedded(&bigger), Ordering::Less);
        assert_eq!(el(3, -2, 3).abs_embedded(), el(-3, 2, 3));
    }

    #[test]
    fn square_roots_with_rational_radicand() {
        let k = qf(5);
        assert_eq!(sqrt_rational_in(&rat(4), k), Some(QuadElem::in_field(rat(2), k)));
        // 20 = (2*sqrt(5))^2
        assert_eq!(sqrt_rational_in(&rat(20), k), Some(el(0, 2, 5)));
        assert_eq!(sqrt_rational_in(&rat(3), k), None);
        assert_eq!(sqrt_rational_in(&rat(-4), k), None);
        assert_eq!(
            sqrt_rational_in(&rat(0), k),
            Some(QuadElem::zero(k))
        );
        // over Q itself
        assert_eq!(
            sqrt_in_field(&QuadElem::rational(frac(49, 9)), FieldDesc::Rationals),
            Some(QuadElem::rational(frac(7, 3)))
        );
        assert_eq!(
            sqrt_in_field(&QuadElem::rational(rat(8)), FieldDesc::Rationals),
            None
        );
    }

    #[test]
    fn square_roots_with_irrational_radicand() {
        // (6 + 4*sqrt(3))^2 = 84 + 48*sqrt(3)
        assert_eq!(sqrt_in_field(&el(84, 48, 3), qf(3)), Some(el(6, 4, 3)));
        // (1 - sqrt(2))^2 = 3 - 2*sqrt(2); canonical root is sqrt(2) - 1
        assert_eq!(sqrt_in_field(&el(3, -2, 2), qf(2)), Some(el(-1, 1, 2)));
        // positive but not a square: norm of 1 + sqrt(5) is negative
        assert_eq!(sqrt_in_field(&el(1, 1, 5), qf(5)), None);
        // norm square but neither half-branch is one
        assert_eq!(sqrt_in_field(&el(96, 48, 3), qf(3)), None);
        // negatively embedded values have no real root at all
        assert_eq!(sqrt_in_field(&el(3, -2, 3), qf(3)), None);
    }

    #[test]
    fn sqrt_lifts_rationals_into_the_field() {
        let x = QuadElem::rational(rat(12));
        assert_eq!(sqrt_in_field(&x, qf(3)), Some(el(0, 2, 3)));
    }

    #[test]
    fn display_forms() {
        assert_eq!(el(3, 2, 3).to_string(), "3 + 2*sqrt(3)");
        assert_eq!(el(3, -1, 3).to_string(), "3 - sqrt(3)");
        assert_eq!(el(0, -2, 7).to_string(), "-2*sqrt(7)");
        assert_eq!(
            QuadElem::in_field(frac(-1, 2), qf(7)).to_string(),
            "-1/2"
        );
    }
}
