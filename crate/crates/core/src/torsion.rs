//! Torsion probes for the family curves.
//!
//! Every family curve has full rational 2-torsion built in, so the whole
//! game is deciding what sits on top of `Z/2 x Z/2`: an order-3 point, an
//! order-4 point over the given field, and in the latter case possibly an
//! order-8 point. Those probes pin the torsion subgroup over `Q`
//! completely; over a quadratic field one odd case (order 5) is left
//! unprobed and the report says so instead of guessing.

use std::fmt;

use num_traits::Zero;

use crate::curve::{build_curve, CurveParams, PointK, WeierstrassK};
use crate::error::Error;
use crate::field::{sqrt_in_field, sqrt_rational_in, FieldDesc, QuadElem};
use crate::poly::PolyQ;
use crate::quartic::{rational_roots, roots_in_quadratic_field};
use crate::rational::{rat, Rational};

/// The 3-division polynomial `3x^4 + 4a x^3 + 6b x^2 - b^2` of
/// `y^2 = x^3 + a x^2 + b x`: its roots are the `x`-coordinates of the
/// points of order 3.
pub fn psi3(e: &WeierstrassK) -> Result<PolyQ, Error> {
    let (a, b) = match (e.a().is_rational_value(), e.b().is_rational_value()) {
        (true, true) => (e.a().a().clone(), e.b().a().clone()),
        _ => return Err(Error::CurveNotOverQ),
    };
    Ok(PolyQ::new(vec![
        -(&b * &b),
        Rational::zero(),
        rat(6) * &b,
        rat(4) * &a,
        rat(3),
    ]))
}

/// First point of order 3 on `e` with coordinates in `k`, if any.
///
/// A division-polynomial root alone is not enough: the curve ordinate
/// above it must also lie in the field.
pub fn three_torsion_witness(
    e: &WeierstrassK,
    k: FieldDesc,
) -> Result<Option<PointK>, Error> {
    let psi = psi3(e)?;
    let ek = e.base_change(k)?;
    let roots: Vec<QuadElem> = match k {
        FieldDesc::Rationals => rational_roots(&psi)?
            .into_iter()
            .map(QuadElem::rational)
            .collect(),
        FieldDesc::RealQuadratic { d } => roots_in_quadratic_field(&psi, d)?,
    };
    for x0 in roots {
        let x0 = x0.into_field(k)?;
        if let Some(y) = sqrt_in_field(&ek.rhs(&x0), k) {
            if y.is_zero() {
                // a shared root with the 2-division polynomial would
                // mean the curve is singular; defensively skip
                continue;
            }
            let p = PointK::affine(x0, y);
            debug_assert!(ek.scalar_mul_unchecked(3, &p).is_infinity());
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Points of order 4 sitting over the halvable 2-torsion point, with
/// coordinates in `k`. Empty when there are none.
///
/// Over a real field only `x = (r-s)n` can be halved (the differences to
/// the other 2-torsion abscissas are the only non-negative ones), and a
/// preimage has `x = (r-s)n +- n*sqrt(2r(r-s))`. The gate below is that
/// square root existing in `k`; each candidate abscissa then still needs
/// the curve ordinate to exist, which the gate alone does not promise.
fn four_torsion_candidates(
    params: &CurveParams,
    k: FieldDesc,
) -> Result<Vec<PointK>, Error> {
    let (r, s, n) = (
        params.theta().r(),
        params.theta().s(),
        params.n(),
    );
    let gate = match sqrt_rational_in(&rat(2 * r * (r - s)), k) {
        None => return Ok(vec![]),
        Some(g) => g,
    };
    let ek = build_curve(params).base_change(k)?;
    let e3 = QuadElem::in_field(rat((r - s) * n), k);
    let delta = gate.scale(&rat(n));
    let two_torsion = PointK::affine(e3.clone(), QuadElem::zero(k));
    let mut found = Vec::new();
    for x in [&e3 + &delta, &e3 - &delta] {
        if let Some(y) = sqrt_in_field(&ek.rhs(&x), k) {
            let p = PointK::affine(x, y);
            if ek.scalar_mul_unchecked(2, &p) == two_torsion
                && ek.scalar_mul_unchecked(4, &p).is_infinity()
            {
                found.push(p);
            }
        }
    }
    Ok(found)
}

/// First point of order 4 on the family curve over `k`, if one exists.
pub fn four_torsion_witness(
    params: &CurveParams,
    k: FieldDesc,
) -> Result<Option<PointK>, Error> {
    Ok(four_torsion_candidates(params, k)?.into_iter().next())
}

/// Try to halve an order-4 point: a point of order 8 exists exactly when
/// some order-4 point has all three `x - e_i` squares in the field.
fn eight_torsion_probe(
    params: &CurveParams,
    k: FieldDesc,
    p4: &PointK,
) -> Result<Option<PointK>, Error> {
    let ek = build_curve(params).base_change(k)?;
    let x0 = p4.x().expect("order-4 point is affine").clone();
    let y0 = p4.y().expect("order-4 point is affine").clone();
    let mut deltas = Vec::with_capacity(3);
    for e in params.two_torsion_roots() {
        let diff = &x0 - &QuadElem::in_field(rat(e), k);
        match sqrt_in_field(&diff, k) {
            None => return Ok(None),
            Some(d) => deltas.push(d),
        }
    }
    // align signs so the product of the three roots is y itself
    let prod = &(&deltas[0] * &deltas[1]) * &deltas[2];
    if prod != y0 {
        debug_assert_eq!(-&prod, y0);
        deltas[0] = -&deltas[0];
    }
    let (d1, d2, d3) = (&deltas[0], &deltas[1], &deltas[2]);
    // sign patterns with product +1 give the four preimages of p4
    for (s1, s2, s3) in [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)] {
        let term = |si: i64, sj: i64, di: &QuadElem, dj: &QuadElem| {
            (di * dj).scale(&rat(si * sj))
        };
        let x = &(&(&x0 + &term(s2, s3, d2, d3)) + &term(s1, s3, d1, d3))
            + &term(s1, s2, d1, d2);
        if let Some(y) = sqrt_in_field(&ek.rhs(&x), k) {
            let q = PointK::affine(x, y);
            if ek.scalar_mul_unchecked(8, &q).is_infinity()
                && !ek.scalar_mul_unchecked(4, &q).is_infinity()
            {
                return Ok(Some(q));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TorsionGroup {
    Z2xZ2,
    Z2xZ4,
    Z2xZ6,
    Z2xZ8,
}

impl TorsionGroup {
    pub fn order(&self) -> i64 {
        match self {
            TorsionGroup::Z2xZ2 => 4,
            TorsionGroup::Z2xZ4 => 8,
            TorsionGroup::Z2xZ6 => 12,
            TorsionGroup::Z2xZ8 => 16,
        }
    }

    /// Stable token used by serializers.
    pub fn token(&self) -> &'static str {
        match self {
            TorsionGroup::Z2xZ2 => "Z2xZ2",
            TorsionGroup::Z2xZ4 => "Z2xZ4",
            TorsionGroup::Z2xZ6 => "Z2xZ6",
            TorsionGroup::Z2xZ8 => "Z2xZ8",
        }
    }
}

impl fmt::Display for TorsionGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TorsionGroup::Z2xZ2 => "Z/2 x Z/2",
            TorsionGroup::Z2xZ4 => "Z/2 x Z/4",
            TorsionGroup::Z2xZ6 => "Z/2 x Z/6",
            TorsionGroup::Z2xZ8 => "Z/2 x Z/8",
        };
        write!(f, "{name}")
    }
}

#[derive(Clone, Debug)]
pub struct TorsionReport {
    pub group: TorsionGroup,
    pub order3_witness: Option<PointK>,
    pub order4_witness: Option<PointK>,
    /// Whether the probes above pin the group exactly. Over `Q` they
    /// always do (no other options exist below the torsion bound). Over a
    /// quadratic field a silent curve might still hide odd torsion the
    /// probes do not cover, so silence reports `complete = false`.
    pub complete: bool,
}

/// Torsion subgroup of the family curve over `k`, as far as the order
/// 3, 4, and 8 probes can pin it down.
pub fn torsion_subgroup(params: &CurveParams, k: FieldDesc) -> Result<TorsionReport, Error> {
    let e = build_curve(params);
    let order3_witness = three_torsion_witness(&e, k)?;
    let fours = four_torsion_candidates(params, k)?;
    let order4_witness = fours.first().cloned();

    let (group, complete) = match (&order3_witness, &order4_witness) {
        (None, None) => (TorsionGroup::Z2xZ2, k.is_rationals()),
        (Some(_), None) => (TorsionGroup::Z2xZ6, true),
        (None, Some(_)) => {
            let mut eight = None;
            for p4 in &fours {
                eight = eight_torsion_probe(params, k, p4)?;
                if eight.is_some() {
                    break;
                }
            }
            if eight.is_some() {
                (TorsionGroup::Z2xZ8, true)
            } else {
                (TorsionGroup::Z2xZ4, true)
            }
        }
        (Some(_), Some(_)) => {
            // order 12 on top of full 2-torsion exceeds what any number
            // field of degree at most 2 allows; report the odd part and
            // flag the contradiction as incomplete rather than panic
            (TorsionGroup::Z2xZ6, false)
        }
    };
    Ok(TorsionReport {
        group,
        order3_witness,
        order4_witness,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::ThetaSlope;
    use crate::field::QuadElem;

    fn params(n: i64, s: i64, r: i64) -> CurveParams {
        CurveParams::new(n, ThetaSlope::new(s, r).unwrap()).unwrap()
    }

    fn quad(d: i64) -> FieldDesc {
        FieldDesc::real_quadratic(d).unwrap()
    }

    #[test]
    fn division_polynomial_coefficients() {
        let e = build_curve(&params(6, 0, 1)); // y^2 = x^3 - 36x
        let psi = psi3(&e).unwrap();
        assert_eq!(
            psi,
            PolyQ::from_ints(&[-1296, 0, -216, 0, 3])
        );
    }

    #[test]
    fn synthetic_curve_with_order_three() {
        // y^2 = x^3 + 6x^2 - 3x carries (1, 2) of order 3
        let e = WeierstrassK::new(
            QuadElem::rational(rat(6)),
            QuadElem::rational(rat(-3)),
        )
        .unwrap();
        let p = three_torsion_witness(&e, FieldDesc::Rationals)
            .unwrap()
            .expect("order-3 point exists");
        assert_eq!(p.x().unwrap(), &QuadElem::rational(rat(1)));
        assert!(e.scalar_mul(3, &p).unwrap().is_infinity());
        assert!(!e.scalar_mul(1, &p).unwrap().is_infinity());
    }

    #[test]
    fn family_curves_without_order_three() {
        let e = build_curve(&params(1, -1, 2));
        assert!(three_torsion_witness(&e, FieldDesc::Rationals)
            .unwrap()
            .is_none());
        assert!(three_torsion_witness(&e, quad(3)).unwrap().is_none());
    }

    #[test]
    fn order_four_over_a_quadratic_field() {
        let k = quad(3);
        let p = four_torsion_witness(&params(1, -1, 2), k)
            .unwrap()
            .expect("order-4 point exists");
        assert_eq!(
            p,
            PointK::affine(
                QuadElem::new(rat(3), rat(2), k).unwrap(),
                QuadElem::new(rat(6), rat(4), k).unwrap(),
            )
        );
        let ek = build_curve(&params(1, -1, 2)).base_change(k).unwrap();
        let two = ek.scalar_mul(2, &p).unwrap();
        assert_eq!(
            two,
            PointK::affine(QuadElem::in_field(rat(3), k), QuadElem::zero(k))
        );
        assert!(ek.scalar_mul(4, &p).unwrap().is_infinity());
    }

    #[test]
    fn gate_square_yet_no_order_four() {
        // cos 7/9: 2r(r-s) = 36 is a rational square, but neither
        // candidate abscissa 8, -4 has a square ordinate in Q(sqrt(3)):
        // the values 1152 and 288 are twice a square, not a square
        let p = params(1, 7, 9);
        assert!(four_torsion_witness(&p, quad(3)).unwrap().is_none());
        assert!(four_torsion_witness(&p, FieldDesc::Rationals)
            .unwrap()
            .is_none());
    }

    #[test]
    fn rational_gate_failure_means_no_candidates() {
        // cos 0/1, area 5: 2r(r-s) = 2 is not a square in Q
        assert!(four_torsion_witness(&params(5, 0, 1), FieldDesc::Rationals)
            .unwrap()
            .is_none());
        // but it is in Q(sqrt(2)), and there the construction completes
        let k = quad(2);
        let p = four_torsion_witness(&params(2, 0, 1), k)
            .unwrap()
            .expect("order-4 point over Q(sqrt(2))");
        assert_eq!(
            p,
            PointK::affine(
                QuadElem::new(rat(2), rat(2), k).unwrap(),
                QuadElem::new(rat(4), rat(4), k).unwrap(),
            )
        );
    }

    #[test]
    fn torsion_reports_over_q() {
        for n in [5, 7, 10, 11, 13, 14, 15] {
            for theta in [
                ThetaSlope::sixty_degrees(),
                ThetaSlope::right_angle(),
                ThetaSlope::hundred_twenty_degrees(),
            ] {
                let p = CurveParams::new(n, theta).unwrap();
                let report = torsion_subgroup(&p, FieldDesc::Rationals).unwrap();
                assert_eq!(report.group, TorsionGroup::Z2xZ2, "{p}");
                assert!(report.complete);
                assert!(report.order3_witness.is_none());
                assert!(report.order4_witness.is_none());
            }
        }
    }

    #[test]
    fn the_full_two_power_tower() {
        // cos 47/128: e3 = 81 halves to (225, 3600), which halves again
        // to an order-8 point; everything stays rational
        let p = params(1, 47, 128);
        let report = torsion_subgroup(&p, FieldDesc::Rationals).unwrap();
        assert_eq!(report.group, TorsionGroup::Z2xZ8);
        assert!(report.complete);
        let p4 = report.order4_witness.expect("order-4 witness");
        assert_eq!(p4.x().unwrap(), &QuadElem::rational(rat(225)));
        assert_eq!(p4.y().unwrap(), &QuadElem::rational(rat(3600)));

        let e = build_curve(&p);
        let p8 = eight_torsion_probe(&p, FieldDesc::Rationals, &p4)
            .unwrap()
            .expect("order-8 point");
        assert_eq!(p8.x().unwrap(), &QuadElem::rational(rat(945)));
        assert_eq!(p8.y().unwrap(), &QuadElem::rational(rat(30240)));
        assert!(e.scalar_mul(8, &p8).unwrap().is_infinity());
        assert!(!e.scalar_mul(4, &p8).unwrap().is_infinity());
    }

    #[test]
    fn quadratic_silence_is_reported_incomplete() {
        let report = torsion_subgroup(&params(5, 0, 1), quad(7)).unwrap();
        assert_eq!(report.group, TorsionGroup::Z2xZ2);
        assert!(!report.complete);

        let report = torsion_subgroup(&params(1, -1, 2), quad(3)).unwrap();
        assert_eq!(report.group, TorsionGroup::Z2xZ4);
        assert!(report.complete);
    }
}
