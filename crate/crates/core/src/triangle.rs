//! Triangles with a prescribed angle, and the two-way bridge between such
//! triangles and points on the attached curve.
//!
//! A triangle here is a triple of positive sides `(u, v, w)` where the
//! angle with cosine `s/r` sits between `u` and `v`. Realizing area `n`
//! pins the product `u*v = 2nr / sqrt(r^2 - s^2) * sqrt(r^2 - s^2)`;
//! concretely the two checked identities are `u*v = 2nr` (area, after the
//! sine cancels) and the cosine law for `w`.

use std::fmt;

use crate::curve::{build_curve, CurveParams, PointK};
use crate::error::Error;
use crate::field::{sqrt_in_field, FieldDesc, QuadElem};
use crate::rational::{frac, rat};

/// Why a claimed triangle is not one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriangleViolation {
    NonPositiveSide { side: &'static str },
    ProductMismatch { expected: String, got: String },
    CosineMismatch { expected_w2: String, got_w2: String },
}

impl fmt::Display for TriangleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleViolation::NonPositiveSide { side } => {
                write!(f, "side {side} is not positive")
            }
            TriangleViolation::ProductMismatch { expected, got } => {
                write!(f, "u*v should be {expected} to carry the area, found {got}")
            }
            TriangleViolation::CosineMismatch {
                expected_w2,
                got_w2,
            } => {
                write!(
                    f,
                    "w^2 should be {expected_w2} by the cosine law, found {got_w2}"
                )
            }
        }
    }
}

impl std::error::Error for TriangleViolation {}

/// Sides `(u, v, w)` over a common field, with the parameters they are
/// meant to realize. Construction normalizes `u >= v` (the two sides
/// around the angle are interchangeable) but does not verify the metric
/// identities; [`verify_triangle`] does that, so invalid claims can be
/// represented and then rejected with a reason.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriangleK {
    u: QuadElem,
    v: QuadElem,
    w: QuadElem,
    params: CurveParams,
    field: FieldDesc,
}

impl TriangleK {
    pub fn new(
        u: QuadElem,
        v: QuadElem,
        w: QuadElem,
        params: CurveParams,
    ) -> Result<TriangleK, Error> {
        let mut field = FieldDesc::Rationals;
        for side in [&u, &v, &w] {
            match side.field() {
                FieldDesc::Rationals => {}
                quad => {
                    if field.is_rationals() {
                        field = quad;
                    } else if field != quad {
                        return Err(Error::FieldMismatch);
                    }
                }
            }
        }
        let u = u.into_field(field)?;
        let v = v.into_field(field)?;
        let w = w.into_field(field)?;
        let (u, v) = if u.cmp_embedded(&v) == std::cmp::Ordering::Less {
            (v, u)
        } else {
            (u, v)
        };
        Ok(TriangleK {
            u,
            v,
            w,
            params,
            field,
        })
    }

    pub fn sides(&self) -> (&QuadElem, &QuadElem, &QuadElem) {
        (&self.u, &self.v, &self.w)
    }

    pub fn params(&self) -> &CurveParams {
        &self.params
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }
}

impl fmt::Display for TriangleK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.u, self.v, self.w)
    }
}

/// Check the two defining identities and positivity of all three sides.
pub fn verify_triangle(t: &TriangleK) -> Result<(), TriangleViolation> {
    let (u, v, w) = t.sides();
    for (side, name) in [(u, "u"), (v, "v"), (w, "w")] {
        if !side.is_positive_embedded() {
            return Err(TriangleViolation::NonPositiveSide { side: name });
        }
    }
    let k = t.field();
    let theta = t.params().theta();
    let target = QuadElem::in_field(rat(2) * rat(t.params().n()) * rat(theta.r()), k);
    let prod = u * v;
    if prod != target {
        return Err(TriangleViolation::ProductMismatch {
            expected: target.to_string(),
            got: prod.to_string(),
        });
    }
    let cos = QuadElem::in_field(theta.cos(), k);
    let expected_w2 = &(&(u * u) + &(v * v)) - &(&prod.scale(&rat(2)) * &cos);
    let got_w2 = w * w;
    if got_w2 != expected_w2 {
        return Err(TriangleViolation::CosineMismatch {
            expected_w2: expected_w2.to_string(),
            got_w2: got_w2.to_string(),
        });
    }
    Ok(())
}

/// A verified triangle maps to the curve point
/// `(w^2/4, w*(u^2 - v^2)/8)`.
///
/// The identities `(u +- v)^2/4 = w^2/4 +- n(r +- s)` (cosine law plus the
/// pinned product) show the image satisfies the curve equation; with
/// `u >= v` the ordinate is non-negative.
pub fn triangle_to_point(t: &TriangleK) -> Result<PointK, Error> {
    verify_triangle(t)?;
    let (u, v, w) = t.sides();
    let x = (w * w).scale(&frac(1, 4));
    let y = (w * &(&(u * u) - &(v * v))).scale(&frac(1, 8));
    let p = PointK::affine(x, y);
    debug_assert!(
        build_curve(t.params())
            .base_change(t.field())
            .expect("base change to the triangle's field")
            .contains(&p),
        "triangle image must satisfy the curve equation"
    );
    Ok(p)
}

/// A point with `y != 0` maps back to a triangle via its double.
///
/// With `x2 = x(2P)`, both `x2 + (r+s)n` and `x2 - (r-s)n` equal squares of
/// field elements (each is the square of a rational function of `P` by the
/// halving identity), so the square roots below cannot fail on a valid
/// input; a failure is an arithmetic bug, not a data error.
pub fn point_to_triangle(
    params: &CurveParams,
    k: FieldDesc,
    p: &PointK,
) -> Result<TriangleK, Error> {
    let e = build_curve(params).base_change(k)?;
    let (x, y) = match p {
        PointK::Infinity => return Err(Error::InfinitePoint),
        PointK::Affine { x, y } => (
            x.clone().into_field(k)?,
            y.clone().into_field(k)?,
        ),
    };
    let p = PointK::affine(x.clone(), y.clone());
    if !e.contains(&p) {
        return Err(Error::PointOffCurve);
    }
    if y.is_zero() {
        return Err(Error::TwoTorsionNoTriangle);
    }
    let doubled = e.scalar_mul_unchecked(2, &p);
    let x2 = doubled
        .x()
        .expect("double of a point with y != 0 is affine")
        .clone();
    let (r, s, n) = (params.theta().r(), params.theta().s(), params.n());
    let plus = QuadElem::in_field(rat((r + s) * n), k);
    let minus = QuadElem::in_field(rat((r - s) * n), k);
    let s1 = sqrt_in_field(&(&x2 + &plus), k)
        .expect("x(2P) + (r+s)n is a square of the field for any valid point");
    let s2 = sqrt_in_field(&(&x2 - &minus), k)
        .expect("x(2P) - (r-s)n is a square of the field for any valid point");
    let u = &s1 + &s2;
    let v = &s1 - &s2;
    let w = (&(&x * &x) - e.b()).abs_embedded() / y.abs_embedded();
    let t = TriangleK::new(u, v, w, *params)?;
    debug_assert_eq!(verify_triangle(&t), Ok(()));
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::ThetaSlope;
    use crate::rational::frac;

    fn params(n: i64, s: i64, r: i64) -> CurveParams {
        CurveParams::new(n, ThetaSlope::new(s, r).unwrap()).unwrap()
    }

    fn rational_triangle(u: (i64, i64), v: (i64, i64), w: (i64, i64), p: CurveParams) -> TriangleK {
        TriangleK::new(
            QuadElem::rational(frac(u.0, u.1)),
            QuadElem::rational(frac(v.0, v.1)),
            QuadElem::rational(frac(w.0, w.1)),
            p,
        )
        .unwrap()
    }

    #[test]
    fn the_345_right_triangle() {
        let t = rational_triangle((3, 1), (4, 1), (5, 1), params(6, 0, 1));
        assert_eq!(verify_triangle(&t), Ok(()));
        // normalization swapped the legs
        let (u, v, _) = t.sides();
        assert_eq!(u, &QuadElem::rational(rat(4)));
        assert_eq!(v, &QuadElem::rational(rat(3)));

        let p = triangle_to_point(&t).unwrap();
        assert_eq!(p.x().unwrap(), &QuadElem::rational(frac(25, 4)));
        assert_eq!(p.y().unwrap(), &QuadElem::rational(frac(35, 8)));
    }

    #[test]
    fn sixty_degree_triangle_with_area_six() {
        // sides 3, 8, opposite side 7: area 6*sqrt(3)/ ... the area scale
        // comes out right exactly when u*v = 2*n*r = 24
        let t = rational_triangle((3, 1), (8, 1), (7, 1), params(6, 1, 2));
        assert_eq!(verify_triangle(&t), Ok(()));
    }

    #[test]
    fn violations_are_reported_with_reasons() {
        let p = params(6, 0, 1);
        let bad_product = rational_triangle((3, 1), (5, 1), (5, 1), p);
        assert!(matches!(
            verify_triangle(&bad_product),
            Err(TriangleViolation::ProductMismatch { .. })
        ));
        let bad_cos = rational_triangle((3, 1), (4, 1), (6, 1), p);
        assert!(matches!(
            verify_triangle(&bad_cos),
            Err(TriangleViolation::CosineMismatch { .. })
        ));
        let t = TriangleK::new(
            QuadElem::rational(rat(-3)),
            QuadElem::rational(rat(-4)),
            QuadElem::rational(rat(5)),
            p,
        )
        .unwrap();
        assert!(matches!(
            verify_triangle(&t),
            Err(TriangleViolation::NonPositiveSide { .. })
        ));
        assert!(matches!(
            triangle_to_point(&bad_cos),
            Err(Error::BadTriangle(_))
        ));
    }

    #[test]
    fn round_trip_through_the_curve() {
        let p = params(6, 0, 1);
        let t = rational_triangle((3, 1), (4, 1), (5, 1), p);
        let pt = triangle_to_point(&t).unwrap();
        let back = point_to_triangle(&p, FieldDesc::Rationals, &pt).unwrap();
        // the round trip lands on the doubled point's triangle, which for
        // this generator is a genuinely different similar-area triangle
        assert_eq!(verify_triangle(&back), Ok(()));

        // a point whose double is 2-torsion: isosceles output
        let k = FieldDesc::real_quadratic(3).unwrap();
        let p1 = params(1, -1, 2);
        let four = PointK::affine(
            QuadElem::new(rat(3), rat(2), k).unwrap(),
            QuadElem::new(rat(6), rat(4), k).unwrap(),
        );
        let t4 = point_to_triangle(&p1, k, &four).unwrap();
        let (u, v, w) = t4.sides();
        assert_eq!(u, &QuadElem::in_field(rat(2), k));
        assert_eq!(v, &QuadElem::in_field(rat(2), k));
        assert_eq!(w, &QuadElem::new(rat(0), rat(2), k).unwrap());
        assert_eq!(verify_triangle(&t4), Ok(()));
    }

    #[test]
    fn two_torsion_points_are_refused() {
        let p = params(6, 0, 1);
        let tt = PointK::affine(QuadElem::rational(rat(6)), QuadElem::rational(rat(0)));
        assert!(matches!(
            point_to_triangle(&p, FieldDesc::Rationals, &tt),
            Err(Error::TwoTorsionNoTriangle)
        ));
        assert!(matches!(
            point_to_triangle(&p, FieldDesc::Rationals, &PointK::Infinity),
            Err(Error::InfinitePoint)
        ));
        assert!(matches!(
            point_to_triangle(
                &p,
                FieldDesc::Rationals,
                &PointK::affine(QuadElem::rational(rat(1)), QuadElem::rational(rat(1)))
            ),
            Err(Error::PointOffCurve)
        ));
    }
}
