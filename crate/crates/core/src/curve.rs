//! The curve family attached to an area and a rational cosine, together
//! with a validated group law over `Q` and real quadratic fields.
//!
//! For area `n` and cosine `s/r` the curve is
//! `y^2 = x * (x + (r+s)n) * (x - (r-s)n) = x^3 + 2sn*x^2 - (r^2-s^2)n^2*x`,
//! which has full rational 2-torsion by construction: the right-hand side
//! splits with roots `0`, `-(r+s)n`, `(r-s)n`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{gcd_u64, is_square_free_i64};
use crate::error::Error;
use crate::field::{FieldDesc, QuadElem};
use crate::rational::{rat, Rational};

/// Largest order of a rational point of finite order on an elliptic curve
/// over `Q` (Mazur's bound).
pub const TORSION_ORDER_BOUND_Q: i64 = 12;

/// Same bound over any quadratic number field (Kenku, Momose, Kamienny).
pub const TORSION_ORDER_BOUND_QUADRATIC: i64 = 18;

/// A rational cosine `s/r` in lowest terms with `|s| < r`, standing in for
/// the angle it determines. The constraint `|s| < r` keeps the angle
/// strictly between 0 and pi, so a triangle can actually carry it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ThetaSlope {
    r: i64,
    s: i64,
}

impl ThetaSlope {
    pub fn new(s: i64, r: i64) -> Result<ThetaSlope, Error> {
        if r < 1 {
            return Err(Error::BadSlope {
                s,
                r,
                reason: "denominator must be positive",
            });
        }
        if s.abs() >= r {
            return Err(Error::BadSlope {
                s,
                r,
                reason: "cosine must lie strictly between -1 and 1",
            });
        }
        if gcd_u64(s.unsigned_abs(), r as u64) != 1 {
            return Err(Error::BadSlope {
                s,
                r,
                reason: "fraction must be in lowest terms",
            });
        }
        Ok(ThetaSlope { r, s })
    }

    /// cos = 1/2, the sixty-degree angle.
    pub fn sixty_degrees() -> ThetaSlope {
        ThetaSlope { r: 2, s: 1 }
    }

    /// cos = 0, the right angle.
    pub fn right_angle() -> ThetaSlope {
        ThetaSlope { r: 1, s: 0 }
    }

    /// cos = -1/2, the hundred-twenty-degree angle.
    pub fn hundred_twenty_degrees() -> ThetaSlope {
        ThetaSlope { r: 2, s: -1 }
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn cos(&self) -> Rational {
        Rational::new(BigInt::from(self.s), BigInt::from(self.r))
    }

    /// `r^2 - s^2 > 0`; `n * sqrt(of this) / r` is the triangle area scale.
    pub fn r2_minus_s2(&self) -> i64 {
        self.r * self.r - self.s * self.s
    }
}

impl fmt::Display for ThetaSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.s, self.r)
    }
}

/// A square-free positive area `n` together with the angle's cosine.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CurveParams {
    n: i64,
    theta: ThetaSlope,
}

impl CurveParams {
    pub fn new(n: i64, theta: ThetaSlope) -> Result<CurveParams, Error> {
        if n < 1 || !is_square_free_i64(n)? {
            return Err(Error::BadArea(n));
        }
        Ok(CurveParams { n, theta })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn theta(&self) -> ThetaSlope {
        self.theta
    }

    /// Areas 1, 2, 3, 6 are the classical edge cases for the right angle;
    /// callers use this to flag conclusions that deserve extra scrutiny.
    pub fn is_exceptional_area(&self) -> bool {
        matches!(self.n, 1 | 2 | 3 | 6)
    }

    /// `x`-coordinates of the finite 2-torsion: `0`, `-(r+s)n`, `(r-s)n`.
    pub fn two_torsion_roots(&self) -> [i64; 3] {
        let (r, s, n) = (self.theta.r, self.theta.s, self.n);
        [0, -(r + s) * n, (r - s) * n]
    }
}

impl fmt::Display for CurveParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n = {}, cos = {})", self.n, self.theta)
    }
}

/// `y^2 = x^3 + a*x^2 + b*x` over `field`. The family always has this
/// shape (constant term zero), so the type hardcodes it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeierstrassK {
    a: QuadElem,
    b: QuadElem,
    field: FieldDesc,
}

/// Affine point or the point at infinity (the group identity).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum PointK {
    Infinity,
    Affine { x: QuadElem, y: QuadElem },
}

impl PointK {
    pub fn affine(x: QuadElem, y: QuadElem) -> PointK {
        PointK::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, PointK::Infinity)
    }

    pub fn x(&self) -> Option<&QuadElem> {
        match self {
            PointK::Infinity => None,
            PointK::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&QuadElem> {
        match self {
            PointK::Infinity => None,
            PointK::Affine { y, .. } => Some(y),
        }
    }

    pub fn negated(&self) -> PointK {
        match self {
            PointK::Infinity => PointK::Infinity,
            PointK::Affine { x, y } => PointK::Affine {
                x: x.clone(),
                y: -y,
            },
        }
    }
}

impl fmt::Display for PointK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointK::Infinity => write!(f, "O"),
            PointK::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

/// The family curve for `params`, over `Q`.
pub fn build_curve(params: &CurveParams) -> WeierstrassK {
    let (s, n) = (params.theta().s(), params.n());
    let a = rat(2) * rat(s) * rat(n);
    let b = -rat(params.theta().r2_minus_s2()) * rat(n) * rat(n);
    // |s| < r makes b nonzero and the discriminant factor a^2 - 4b = (2rn)^2
    // nonzero, so the family never degenerates
    WeierstrassK::new(QuadElem::rational(a), QuadElem::rational(b))
        .expect("family curves are nonsingular by construction")
}

impl WeierstrassK {
    /// `y^2 = x^3 + a*x^2 + b*x`; rejects singular models
    /// (`b = 0` or `a^2 = 4b`).
    pub fn new(a: QuadElem, b: QuadElem) -> Result<WeierstrassK, Error> {
        if a.field() != b.field() {
            return Err(Error::FieldMismatch);
        }
        let disc_factor = &(&a * &a) - &b.scale(&rat(4));
        if b.is_zero() || disc_factor.is_zero() {
            return Err(Error::SingularCurve);
        }
        let field = a.field();
        Ok(WeierstrassK { a, b, field })
    }

    pub fn a(&self) -> &QuadElem {
        &self.a
    }

    pub fn b(&self) -> &QuadElem {
        &self.b
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    /// The same curve viewed over a larger field. Only `Q -> Q(sqrt(d))`
    /// (or the identity) makes sense here.
    pub fn base_change(&self, k: FieldDesc) -> Result<WeierstrassK, Error> {
        let a = self.a.clone().into_field(k)?;
        let b = self.b.clone().into_field(k)?;
        WeierstrassK::new(a, b)
    }

    pub fn rhs(&self, x: &QuadElem) -> QuadElem {
        let x2 = x * x;
        &(&(&x2 * x) + &(&self.a * &x2)) + &(&self.b * x)
    }

    pub fn contains(&self, p: &PointK) -> bool {
        match p {
            PointK::Infinity => true,
            PointK::Affine { x, y } => {
                x.field() == self.field && y.field() == self.field && y * y == self.rhs(x)
            }
        }
    }

    /// `x`-coordinates of the finite points of order 2 in this field:
    /// always `0`, plus the roots of `x^2 + ax + b` when those lie in the
    /// field. Sorted under the embedding.
    pub fn two_torsion_x(&self) -> Vec<QuadElem> {
        let mut xs = vec![QuadElem::zero(self.field)];
        let disc = &(&self.a * &self.a) - &self.b.scale(&rat(4));
        if let Some(root) = crate::field::sqrt_in_field(&disc, self.field) {
            let half = crate::rational::frac(1, 2);
            let x1 = (&root - &self.a).scale(&half);
            let x2 = (-&(&root + &self.a)).scale(&half);
            if !x1.is_zero() {
                xs.push(x1);
            }
            if !x2.is_zero() && !xs.contains(&x2) {
                xs.push(x2);
            }
        }
        xs.sort_by(|u, v| u.cmp_embedded(v));
        xs
    }

    /// Chord-and-tangent addition after checking both operands satisfy the
    /// curve equation.
    pub fn add(&self, p: &PointK, q: &PointK) -> Result<PointK, Error> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Error::PointOffCurve);
        }
        Ok(self.add_unchecked(p, q))
    }

    /// The group law without the membership check. Callers guarantee both
    /// points are on the curve; sums of on-curve points stay on-curve, so
    /// iterated use is safe after one validation.
    pub(crate) fn add_unchecked(&self, p: &PointK, q: &PointK) -> PointK {
        let (x1, y1, x2, y2) = match (p, q) {
            (PointK::Infinity, _) => return q.clone(),
            (_, PointK::Infinity) => return p.clone(),
            (PointK::Affine { x: x1, y: y1 }, PointK::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let lambda = if x1 == x2 {
            let ysum = y1 + y2;
            if ysum.is_zero() {
                return PointK::Infinity;
            }
            // x1 = x2 on the curve forces y1 = y2 here: tangent slope,
            // written with y1 + y2 = 2*y1 in the denominator
            let x1sq = x1 * x1;
            &(&(&x1sq.scale(&rat(3)) + &(&self.a * x1).scale(&rat(2))) + &self.b) / &ysum
        } else {
            &(y2 - y1) / &(x2 - x1)
        };
        let x3 = &(&(&lambda * &lambda) - &self.a) - &(x1 + x2);
        let y3 = &(&lambda * &(x1 - &x3)) - y1;
        PointK::Affine { x: x3, y: y3 }
    }

    /// `m * p` by double-and-add; validates `p` once up front.
    pub fn scalar_mul(&self, m: i64, p: &PointK) -> Result<PointK, Error> {
        if !self.contains(p) {
            return Err(Error::PointOffCurve);
        }
        Ok(self.scalar_mul_unchecked(m, p))
    }

    pub(crate) fn scalar_mul_unchecked(&self, m: i64, p: &PointK) -> PointK {
        if m == 0 {
            return PointK::Infinity;
        }
        let (mut k, base) = if m < 0 {
            (m.unsigned_abs(), p.negated())
        } else {
            (m as u64, p.clone())
        };
        let mut acc = PointK::Infinity;
        let mut pow = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &pow);
            }
            k >>= 1;
            if k > 0 {
                pow = self.add_unchecked(&pow, &pow);
            }
        }
        acc
    }

    /// Are the coefficients rational integers? The point search needs that.
    pub fn integral_ab(&self) -> Option<(BigInt, BigInt)> {
        if !self.field.is_rationals() {
            return None;
        }
        let one = BigInt::from(1);
        if self.a.a().denom() != &one || self.b.a().denom() != &one {
            return None;
        }
        Some((self.a.a().numer().clone(), self.b.a().numer().clone()))
    }
}

impl fmt::Display for WeierstrassK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3 + ({})*x^2 + ({})*x over {}", self.a, self.b, self.field)
    }
}

/// The `d`-twist `y^2 = x^3 + d*a*x^2 + d^2*b*x` of a curve over `Q`.
pub fn quadratic_twist(e: &WeierstrassK, d: i64) -> Result<WeierstrassK, Error> {
    if !e.field().is_rationals() {
        return Err(Error::CurveNotOverQ);
    }
    if d == 0 || d == 1 || !is_square_free_i64(d)? {
        return Err(Error::BadTwist(d));
    }
    let a = e.a().scale(&rat(d));
    let b = e.b().scale(&(rat(d) * rat(d)));
    WeierstrassK::new(a, b)
}

/// Carry a rational point of the `d`-twist onto the original curve viewed
/// over `Q(sqrt(d))`: `(x, y) -> (x/d, y/(d*sqrt(d)))`.
///
/// Substituting shows the image satisfies the original equation exactly,
/// and the map is a group isomorphism onto its image, so infinite order is
/// preserved in both directions.
pub fn transport_twist_point(
    base: &WeierstrassK,
    d: i64,
    p: &PointK,
) -> Result<PointK, Error> {
    if !base.field().is_rationals() {
        return Err(Error::CurveNotOverQ);
    }
    let twisted = quadratic_twist(base, d)?;
    if !twisted.contains(p) {
        return Err(Error::PointOffCurve);
    }
    let k = FieldDesc::real_quadratic(d)?;
    let dq = k.radicand().expect("quadratic field has a radicand");
    debug_assert_eq!(dq, d, "twist parameter is square-free already");
    let over_k = base.base_change(k)?;
    let out = match p {
        PointK::Infinity => PointK::Infinity,
        PointK::Affine { x, y } => {
            let xk = QuadElem::in_field(x.a() / rat(d), k);
            // y/(d*sqrt(d)) = (y/d^2) * sqrt(d)
            let yk = QuadElem::new(Rational::zero(), y.a() / (rat(d) * rat(d)), k)?;
            PointK::Affine { x: xk, y: yk }
        }
    };
    if !over_k.contains(&out) {
        return Err(Error::PointOffCurve);
    }
    Ok(out)
}

/// Certify that `p` has infinite order by walking multiples past the
/// largest torsion order possible over the field: no `m*p` with
/// `m <= bound` may vanish.
pub fn certify_non_torsion(e: &WeierstrassK, p: &PointK) -> Result<bool, Error> {
    if p.is_infinity() {
        return Err(Error::InfinitePoint);
    }
    if !e.contains(p) {
        return Err(Error::PointOffCurve);
    }
    let bound = if e.field().is_rationals() {
        TORSION_ORDER_BOUND_Q
    } else {
        TORSION_ORDER_BOUND_QUADRATIC
    };
    let mut acc = p.clone();
    for _ in 2..=bound {
        acc = e.add_unchecked(&acc, p);
        if acc.is_infinity() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn params(n: i64, s: i64, r: i64) -> CurveParams {
        CurveParams::new(n, ThetaSlope::new(s, r).unwrap()).unwrap()
    }

    fn qp(x: i64, y: i64) -> PointK {
        PointK::affine(QuadElem::rational(rat(x)), QuadElem::rational(rat(y)))
    }

    #[test]
    fn slope_validation() {
        assert!(ThetaSlope::new(1, 2).is_ok());
        assert!(ThetaSlope::new(-1, 2).is_ok());
        assert!(ThetaSlope::new(0, 1).is_ok());
        assert!(matches!(ThetaSlope::new(2, 2), Err(Error::BadSlope { .. })));
        assert!(matches!(ThetaSlope::new(3, 2), Err(Error::BadSlope { .. })));
        assert!(matches!(ThetaSlope::new(2, 4), Err(Error::BadSlope { .. })));
        assert!(matches!(ThetaSlope::new(1, 0), Err(Error::BadSlope { .. })));
        assert!(matches!(ThetaSlope::new(0, 2), Err(Error::BadSlope { .. })));
    }

    #[test]
    fn area_validation() {
        assert!(CurveParams::new(30, ThetaSlope::right_angle()).is_ok());
        assert!(matches!(
            CurveParams::new(12, ThetaSlope::right_angle()),
            Err(Error::BadArea(12))
        ));
        assert!(matches!(
            CurveParams::new(0, ThetaSlope::right_angle()),
            Err(Error::BadArea(0))
        ));
        assert!(params(5, 0, 1).is_exceptional_area() == false);
        assert!(params(6, 0, 1).is_exceptional_area());
    }

    #[test]
    fn family_coefficients() {
        // area 1, cos -1/2: y^2 = x^3 - 2x^2 - 3x
        let e = build_curve(&params(1, -1, 2));
        assert_eq!(e.a(), &QuadElem::rational(rat(-2)));
        assert_eq!(e.b(), &QuadElem::rational(rat(-3)));
        // area 6, right angle: y^2 = x^3 - 36x
        let e = build_curve(&params(6, 0, 1));
        assert_eq!(e.a(), &QuadElem::rational(rat(0)));
        assert_eq!(e.b(), &QuadElem::rational(rat(-36)));
        assert_eq!(params(6, 0, 1).two_torsion_roots(), [0, -6, 6]);
    }

    #[test]
    fn singular_models_rejected() {
        let z = QuadElem::rational(rat(0));
        assert!(matches!(
            WeierstrassK::new(QuadElem::rational(rat(1)), z.clone()),
            Err(Error::SingularCurve)
        ));
        assert!(matches!(
            WeierstrassK::new(QuadElem::rational(rat(2)), QuadElem::rational(rat(1))),
            Err(Error::SingularCurve)
        ));
    }

    #[test]
    fn group_law_on_the_right_angle_curve() {
        let e = build_curve(&params(6, 0, 1));
        let p = qp(-3, 9);
        let q = qp(12, 36);
        let r = qp(-2, 8);
        assert!(e.contains(&p) && e.contains(&q) && e.contains(&r));

        // commutativity and identity
        assert_eq!(e.add(&p, &q).unwrap(), e.add(&q, &p).unwrap());
        assert_eq!(e.add(&p, &PointK::Infinity).unwrap(), p);

        // inverse
        assert!(e.add(&p, &p.negated()).unwrap().is_infinity());

        // associativity on a concrete triple
        let lhs = e.add(&e.add(&p, &q).unwrap(), &r).unwrap();
        let rhs2 = e.add(&p, &e.add(&q, &r).unwrap()).unwrap();
        assert_eq!(lhs, rhs2);

        // doubling lands where the tangent construction says
        let twop = e.scalar_mul(2, &p).unwrap();
        assert_eq!(
            twop.x().unwrap(),
            &QuadElem::rational(frac(25, 4))
        );

        // 2-torsion
        let t = qp(6, 0);
        assert!(e.scalar_mul(2, &t).unwrap().is_infinity());
        assert_eq!(e.two_torsion_x().len(), 3);

        // off-curve points are refused
        assert!(matches!(
            e.add(&qp(1, 1), &p),
            Err(Error::PointOffCurve)
        ));
    }

    #[test]
    fn scalar_multiples_match_repeated_addition() {
        let e = build_curve(&params(5, 0, 1));
        let p = PointK::affine(
            QuadElem::rational(frac(-4, 1)),
            QuadElem::rational(rat(6)),
        );
        assert!(e.contains(&p));
        let mut acc = PointK::Infinity;
        for m in 1..=9 {
            acc = e.add(&acc, &p).unwrap();
            assert_eq!(e.scalar_mul(m, &p).unwrap(), acc, "m = {m}");
        }
        assert_eq!(e.scalar_mul(-3, &p).unwrap(), acc_neg(&e, &p, 3));
    }

    fn acc_neg(e: &WeierstrassK, p: &PointK, m: i64) -> PointK {
        e.scalar_mul(m, &p.negated()).unwrap()
    }

    #[test]
    fn twisting_and_transport() {
        let e = build_curve(&params(2, -1, 2)); // y^2 = x^3 - 4x^2 - 12x
        let tw = quadratic_twist(&e, 7).unwrap();
        assert_eq!(tw.a(), &QuadElem::rational(rat(-28)));
        assert_eq!(tw.b(), &QuadElem::rational(rat(-588)));
        // twisting twice scales the original coefficients by d^2 and d^4
        let tw2 = quadratic_twist(&tw, 7).unwrap();
        assert_eq!(tw2.a(), &QuadElem::rational(rat(-4 * 49)));
        assert_eq!(tw2.b(), &QuadElem::rational(rat(-12 * 2401)));

        let p = qp(-12, 36);
        assert!(tw.contains(&p));
        let moved = transport_twist_point(&e, 7, &p).unwrap();
        let k = FieldDesc::real_quadratic(7).unwrap();
        assert_eq!(
            moved,
            PointK::affine(
                QuadElem::in_field(frac(-12, 7), k),
                QuadElem::new(rat(0), frac(36, 49), k).unwrap()
            )
        );

        assert!(matches!(
            quadratic_twist(&e, 4),
            Err(Error::BadTwist(4))
        ));
        assert!(matches!(
            quadratic_twist(&e, 1),
            Err(Error::BadTwist(1))
        ));
    }

    #[test]
    fn torsion_certification() {
        let e = build_curve(&params(6, 0, 1));
        assert!(certify_non_torsion(&e, &qp(-3, 9)).unwrap());
        assert!(!certify_non_torsion(&e, &qp(6, 0)).unwrap());
        assert!(matches!(
            certify_non_torsion(&e, &PointK::Infinity),
            Err(Error::InfinitePoint)
        ));
    }
}
