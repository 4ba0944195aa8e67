//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored ascending with no trailing zeros, so `deg` is
//! just `len - 1` and the zero polynomial is the empty vector (degree
//! `None`). Everything here is small (degree at most 4 in practice), so
//! the quadratic-time algorithms are deliberate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::QuadElem;
use crate::rational::{format_rational, rat, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

impl PolyQ {
    /// Build from ascending coefficients; trailing zeros are stripped.
    pub fn new(mut coeffs: Vec<Rational>) -> PolyQ {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> PolyQ {
        PolyQ::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> PolyQ {
        PolyQ { coeffs: vec![] }
    }

    pub fn one() -> PolyQ {
        PolyQ::from_ints(&[1])
    }

    /// The monomial `x`.
    pub fn x() -> PolyQ {
        PolyQ::from_ints(&[0, 1])
    }

    /// `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^i`, zero-padded beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a quadratic field element.
    pub fn eval_quad(&self, x: &QuadElem) -> QuadElem {
        let mut acc = QuadElem::zero(x.field());
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + QuadElem::in_field(c.clone(), x.field());
        }
        acc
    }

    pub fn derivative(&self) -> PolyQ {
        PolyQ::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| rat(i as i64) * c)
                .collect(),
        )
    }

    pub fn mul_scalar(&self, c: &Rational) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn make_monic(&self) -> PolyQ {
        match self.leading() {
            None => PolyQ::zero(),
            Some(l) => self.mul_scalar(&(rat(1) / l)),
        }
    }

    /// Euclidean division: `(quotient, remainder)`. Panics on a zero divisor.
    pub fn divrem(&self, divisor: &PolyQ) -> (PolyQ, PolyQ) {
        let dd = divisor.deg().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for i in 0..=dd {
                let t = &divisor.coeffs[i] * &factor;
                rem[k + i] -= t;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            quot[k] = factor;
        }
        (PolyQ::new(quot), PolyQ::new(rem))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd_monic(&self, other: &PolyQ) -> PolyQ {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Composition `p(x + c)`.
    pub fn shift(&self, c: &Rational) -> PolyQ {
        let lin = PolyQ::new(vec![c.clone(), rat(1)]);
        let mut acc = PolyQ::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &PolyQ::new(vec![coeff.clone()]);
        }
        acc
    }

    /// Primitive integer coefficients: multiply by the denominator lcm,
    /// divide by the content. The root set is unchanged.
    pub fn clear_denominators(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let content = ints
            .iter()
            .filter(|c| !c.is_zero())
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        for c in ints.iter_mut() {
            *c /= &content;
        }
        ints
    }
}

impl Add<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyQ::new(out)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", format_rational(&mag))?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ({self})")
    }
}
