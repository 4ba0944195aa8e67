//! Rational root extraction and Galois-type analysis for quartics, plus
//! the specific quartic obstruction used by the congruence search.
//!
//! The quartic attached to a cosine `s/r` is
//! `f(x) = x^4 - 6(3r^2+s^2) x^2 + 8s(9r^2-s^2) x - 3(3r^2+s^2)^2`;
//! a rational root of `f` would place a flat triangle where none can be,
//! so proving `f` has no rational root is an obstruction certificate.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{
    divisors, factor_smooth, qr_mod_p, square_free_part, DEFAULT_FACTOR_BOUND,
};
use crate::error::Error;
use crate::field::{sqrt_in_field, FieldDesc, QuadElem};
use crate::poly::PolyQ;
use crate::rational::{is_square_rational, rat, Rational};

/// Largest modulus the residue enumeration will sweep.
pub const RESIDUE_ENUMERATION_CAP: u64 = 100_000;

/// The degree-4 obstruction polynomial for the cosine `s/r`.
///
/// Coefficients are exact integers; they grow like `r^8`, so they are
/// built in big arithmetic from the start.
pub fn build_f_quartic(r: i64, s: i64) -> Result<PolyQ, Error> {
    validate_rs(r, s)?;
    let (rb, sb) = (BigInt::from(r), BigInt::from(s));
    let r2 = &rb * &rb;
    let s2 = &sb * &sb;
    let base = BigInt::from(3) * &r2 + &s2; // 3r^2 + s^2
    let c0 = BigInt::from(-3) * &base * &base;
    let c1 = BigInt::from(8) * &sb * (BigInt::from(9) * &r2 - &s2);
    let c2 = BigInt::from(-6) * &base;
    Ok(PolyQ::new(vec![
        Rational::from_integer(c0),
        Rational::from_integer(c1),
        Rational::from_integer(c2),
        Rational::zero(),
        Rational::from_integer(BigInt::from(1)),
    ]))
}

fn validate_rs(r: i64, s: i64) -> Result<(), Error> {
    if r < 1 {
        return Err(Error::BadSlope {
            s,
            r,
            reason: "denominator must be positive",
        });
    }
    if num_integer::gcd(s.unsigned_abs(), r.unsigned_abs()) != 1 {
        return Err(Error::BadSlope {
            s,
            r,
            reason: "fraction must be in lowest terms",
        });
    }
    Ok(())
}

/// All rational roots of `p != 0`, ascending, each listed once.
///
/// Clears denominators, deflates powers of `x`, then runs the rational
/// root test on the primitive integer model: candidates `+-a/b` with
/// `a | constant`, `b | leading`, confirmed by exact evaluation.
pub fn rational_roots(p: &PolyQ) -> Result<Vec<Rational>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ints = p.clear_denominators();
    let mut roots: BTreeSet<Rational> = BTreeSet::new();
    let valuation = ints
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial has a nonzero coefficient");
    if valuation > 0 {
        roots.insert(Rational::zero());
    }
    let deflated = &ints[valuation..];
    if deflated.len() > 1 {
        let a0 = deflated.first().unwrap().abs();
        let an = deflated.last().unwrap().abs();
        let num_divs = divisors(&factor_smooth(&a0, DEFAULT_FACTOR_BOUND)?);
        let den_divs = divisors(&factor_smooth(&an, DEFAULT_FACTOR_BOUND)?);
        for a in &num_divs {
            for b in &den_divs {
                for cand in [
                    Rational::new(a.clone(), b.clone()),
                    Rational::new(-a.clone(), b.clone()),
                ] {
                    if p.eval(&cand).is_zero() {
                        roots.insert(cand);
                    }
                }
            }
        }
    }
    Ok(roots.into_iter().collect())
}

/// `ObstructionProven` means the quartic for `s/r` has no rational root.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Obstruction {
    ObstructionProven,
    Inconclusive,
}

pub fn cubic_field_obstruction(r: i64, s: i64) -> Result<Obstruction, Error> {
    let f = build_f_quartic(r, s)?;
    Ok(if rational_roots(&f)?.is_empty() {
        Obstruction::ObstructionProven
    } else {
        Obstruction::Inconclusive
    })
}

/// What reduction modulo `s` says about `k^4 - 18 r^2 k^2 - 27 r^4`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ModSAnalysis {
    /// 3 is a quadratic residue modulo every odd prime factor of `s`
    /// other than 3 itself. Failing this forces the congruence below to
    /// be insoluble, because the polynomial's discriminant pushes any
    /// root to witness 3 as a residue.
    pub qr3_holds: bool,
    /// Does `k^4 - 18 r^2 k^2 - 27 r^4 = 0 (mod |s|)` have a solution?
    pub residue_roots_exist: bool,
}

pub fn mod_s_root_analysis(r: i64, s: i64) -> Result<ModSAnalysis, Error> {
    validate_rs(r, s)?;
    if s == 0 {
        return Err(Error::BadSlope {
            s,
            r,
            reason: "modulus must be nonzero",
        });
    }
    let modulus = s.unsigned_abs();
    if modulus > RESIDUE_ENUMERATION_CAP {
        return Err(Error::ResidueCapExceeded {
            modulus,
            cap: RESIDUE_ENUMERATION_CAP,
        });
    }

    let mut qr3_holds = true;
    for (p, _) in factor_smooth(&BigInt::from(modulus), DEFAULT_FACTOR_BOUND)? {
        let p = p.to_u64().expect("factor of a u64 fits");
        // 2 has no residue content here; mod 3 the target is 0, a square
        if p == 2 || p == 3 {
            continue;
        }
        if !qr_mod_p(3, p)? {
            qr3_holds = false;
        }
    }

    let m = modulus as u128;
    let r_mod = (r as u128) % m;
    let r2 = r_mod * r_mod % m;
    let r4 = r2 * r2 % m;
    let c2 = 18 * r2 % m;
    let c0 = 27 * r4 % m;
    let mut residue_roots_exist = false;
    for k in 0..m {
        let k2 = k * k % m;
        let k4 = k2 * k2 % m;
        // k^4 - 18 r^2 k^2 - 27 r^4, kept non-negative mod m
        let val = (k4 + (m - c2) * k2 % m + (m - c0)) % m;
        if val == 0 {
            residue_roots_exist = true;
            break;
        }
    }
    Ok(ModSAnalysis {
        qr3_holds,
        residue_roots_exist,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GaloisType {
    S4,
    A4,
    D4,
    C4,
    V4,
    Reducible,
}

impl std::fmt::Display for GaloisType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            GaloisType::S4 => "S4",
            GaloisType::A4 => "A4",
            GaloisType::D4 => "D4",
            GaloisType::C4 => "C4",
            GaloisType::V4 => "V4",
            GaloisType::Reducible => "reducible",
        };
        write!(f, "{name}")
    }
}

#[derive(Clone, Debug)]
pub struct QuarticReport {
    pub irreducible_over_q: bool,
    pub rational_roots: Vec<Rational>,
    /// A factorization into two rational quadratics, when one exists and
    /// no rational root does.
    pub quadratic_split: Option<(PolyQ, PolyQ)>,
    /// The resolvent cubic `z^3 - p z^2 - 4 t z + (4 p t - q^2)` of the
    /// depressed form `x^4 + p x^2 + q x + t`.
    pub resolvent: PolyQ,
    pub discriminant: Rational,
    pub galois_type: GaloisType,
}

/// Galois type of an irreducible quartic (or `Reducible`), by the
/// discriminant / resolvent-cubic casework.
///
/// For the one genuinely subtle split, cyclic versus dihedral, the
/// positive-discriminant side is decided by actually factoring over the
/// real quadratic field `Q(sqrt(disc))`; the negative side uses the
/// residue form of the same criterion (the root field is not real, so
/// there is nothing to embed).
pub fn quartic_analyze(f: &PolyQ) -> Result<QuarticReport, Error> {
    if f.deg() != Some(4) {
        return Err(Error::WrongDegree {
            expected: 4,
            found: f.deg(),
        });
    }
    let monic = f.make_monic();
    // kill the cubic term: x -> x - a3/4
    let a3 = monic.coeff(3);
    let depressed = monic.shift(&(-&a3 / rat(4)));
    debug_assert!(depressed.coeff(3).is_zero());
    let p = depressed.coeff(2);
    let q = depressed.coeff(1);
    let t = depressed.coeff(0);

    let resolvent = PolyQ::new(vec![
        rat(4) * &p * &t - &q * &q,
        rat(-4) * &t,
        -p.clone(),
        rat(1),
    ]);
    let disc = quartic_disc(&p, &q, &t);
    debug_assert_eq!(disc, cubic_disc(&resolvent));
    if disc.is_zero() {
        return Err(Error::RepeatedRoot);
    }

    let roots = rational_roots(f)?;
    if !roots.is_empty() {
        return Ok(QuarticReport {
            irreducible_over_q: false,
            rational_roots: roots,
            quadratic_split: None,
            resolvent,
            discriminant: disc,
            galois_type: GaloisType::Reducible,
        });
    }

    let split = quadratic_split(f, &monic, &depressed, &a3, &resolvent)?;
    if split.is_some() {
        return Ok(QuarticReport {
            irreducible_over_q: false,
            rational_roots: vec![],
            quadratic_split: split,
            resolvent,
            discriminant: disc,
            galois_type: GaloisType::Reducible,
        });
    }

    let disc_is_square = is_square_rational(&disc).is_some();
    let resolvent_roots = rational_roots(&resolvent)?;
    let galois_type = match (disc_is_square, resolvent_roots.is_empty()) {
        (true, true) => GaloisType::A4,
        (true, false) => GaloisType::V4,
        (false, true) => GaloisType::S4,
        (false, false) => {
            // resolvent has exactly one rational root here: three would
            // make its discriminant, which equals disc, a square
            let theta = resolvent_roots[0].clone();
            if cyclic_not_dihedral(&disc, &theta, &p, &q, &t)? {
                GaloisType::C4
            } else {
                GaloisType::D4
            }
        }
    };
    Ok(QuarticReport {
        irreducible_over_q: true,
        rational_roots: vec![],
        quadratic_split: None,
        resolvent,
        discriminant: disc,
        galois_type,
    })
}

/// Discriminant of `x^4 + p x^2 + q x + t`.
fn quartic_disc(p: &Rational, q: &Rational, t: &Rational) -> Rational {
    let p2 = p * p;
    let q2 = q * q;
    let t2 = t * t;
    rat(16) * &p2 * &p2 * t - rat(4) * &p2 * p * &q2 - rat(128) * &p2 * &t2
        + rat(144) * p * &q2 * t
        - rat(27) * &q2 * &q2
        + rat(256) * &t2 * t
}

/// Discriminant of a monic cubic `z^3 + c2 z^2 + c1 z + c0`.
fn cubic_disc(c: &PolyQ) -> Rational {
    let (c2, c1, c0) = (c.coeff(2), c.coeff(1), c.coeff(0));
    let c2sq = &c2 * &c2;
    rat(18) * &c2 * &c1 * &c0 - rat(4) * &c2sq * &c2 * &c0 + &c2sq * &c1 * &c1
        - rat(4) * &c1 * &c1 * &c1
        - rat(27) * &c0 * &c0
}

/// Try to write `f` (with no rational roots) as a product of two rational
/// quadratics. Each rational resolvent root is one candidate split; the
/// returned factors multiply back to `f` exactly.
fn quadratic_split(
    f: &PolyQ,
    monic: &PolyQ,
    depressed: &PolyQ,
    a3: &Rational,
    resolvent: &PolyQ,
) -> Result<Option<(PolyQ, PolyQ)>, Error> {
    let p = depressed.coeff(2);
    let q = depressed.coeff(1);
    let t = depressed.coeff(0);
    let back = a3 / rat(4);
    let lead = f.leading().expect("quartic has a leading coefficient");
    for theta in rational_roots(resolvent)? {
        let u2 = &theta - &p;
        if u2.is_zero() {
            // theta = p happens only for q = 0: biquadratic split
            if !q.is_zero() {
                continue;
            }
            let inner = &p * &p - rat(4) * &t;
            if let Some(root) = is_square_rational(&inner) {
                let v = (&p - &root) / rat(2);
                let w = (&p + &root) / rat(2);
                let f1 = PolyQ::new(vec![v, Rational::zero(), rat(1)]).shift(&back);
                let f2 = PolyQ::new(vec![w, Rational::zero(), rat(1)]).shift(&back);
                return Ok(Some(finish_split(f, monic, lead, f1, f2)));
            }
            continue;
        }
        if let Some(u) = is_square_rational(&u2) {
            if u.is_zero() {
                continue;
            }
            // (x^2 + u x + v)(x^2 - u x + w) with v + w = p + u^2,
            // w - v = q / u
            let v = (&p + &u2 - &q / &u) / rat(2);
            let w = (&p + &u2 + &q / &u) / rat(2);
            let f1 = PolyQ::new(vec![v, u.clone(), rat(1)]).shift(&back);
            let f2 = PolyQ::new(vec![w, -u, rat(1)]).shift(&back);
            return Ok(Some(finish_split(f, monic, lead, f1, f2)));
        }
    }
    Ok(None)
}

fn finish_split(
    f: &PolyQ,
    monic: &PolyQ,
    lead: &Rational,
    f1: PolyQ,
    f2: PolyQ,
) -> (PolyQ, PolyQ) {
    debug_assert_eq!(&(&f1 * &f2), monic);
    let f1 = f1.mul_scalar(lead);
    debug_assert_eq!(&(&f1 * &f2), f);
    (f1, f2)
}

/// Decide cyclic versus dihedral for an irreducible quartic whose
/// resolvent has the single rational root `theta`.
///
/// Cyclic is equivalent to the quartic splitting over `Q(sqrt(disc))`.
/// For positive discriminant that field is real and the question reduces
/// to square-root extractions there; for negative discriminant the same
/// criterion is evaluated in residue form: the relevant quantity must be
/// a square times 1 or disc.
fn cyclic_not_dihedral(
    disc: &Rational,
    theta: &Rational,
    p: &Rational,
    q: &Rational,
    t: &Rational,
) -> Result<bool, Error> {
    let m_big = square_free_part(
        &(disc.numer() * disc.denom()),
        DEFAULT_FACTOR_BOUND,
    )?;
    if m_big.is_positive() {
        let m = m_big
            .to_i64()
            .ok_or(Error::SearchModelOutOfRange)?;
        let k = FieldDesc::real_quadratic(m)?;
        let z1 = theta - p;
        if z1.is_zero() {
            debug_assert!(q.is_zero());
            let inner = QuadElem::in_field(p * p - rat(4) * t, k);
            return Ok(sqrt_in_field(&inner, k).is_some());
        }
        return Ok(sqrt_in_field(&QuadElem::in_field(z1, k), k).is_some());
    }
    // residue form of the same test
    let m = Rational::from_integer(m_big);
    let is_square_up_to_disc = |z: &Rational| -> bool {
        z.is_zero() || is_square_rational(z).is_some() || is_square_rational(&(z / &m)).is_some()
    };
    let z1 = theta - p;
    if z1.is_zero() {
        debug_assert!(q.is_zero());
        return Ok(is_square_up_to_disc(&(p * p - rat(4) * t)));
    }
    Ok(is_square_up_to_disc(&z1))
}

/// All roots of `p` (degree at most 4) lying in `Q(sqrt(d))`, sorted
/// under the embedding.
///
/// Strategy: strip repeated factors, peel off rational roots, then the
/// remaining factor can only contribute roots of degree 2 over `Q`; a
/// leftover quadratic is solved directly and a leftover quartic is first
/// split into rational quadratics when possible.
pub fn roots_in_quadratic_field(poly: &PolyQ, d: i64) -> Result<Vec<QuadElem>, Error> {
    let k = FieldDesc::real_quadratic(d)?;
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    match poly.deg() {
        Some(n) if n > 4 => return Err(Error::UnsupportedDegree(n)),
        _ => {}
    }
    let mut out: Vec<QuadElem> = Vec::new();
    let mut push = |x: QuadElem| {
        if !out.contains(&x) {
            out.push(x);
        }
    };

    // square-free part: roots are unchanged, multiplicities dropped
    let deriv = poly.derivative();
    let mut work = if deriv.is_zero() {
        poly.make_monic()
    } else {
        let g = poly.gcd_monic(&deriv);
        if g.deg() == Some(0) {
            poly.make_monic()
        } else {
            poly.divrem(&g).0.make_monic()
        }
    };

    for root in rational_roots(&work)? {
        push(QuadElem::in_field(root.clone(), k));
        let linear = PolyQ::new(vec![-root, rat(1)]);
        let (quot, rem) = work.divrem(&linear);
        debug_assert!(rem.is_zero());
        work = quot;
    }

    match work.deg() {
        None | Some(0) => {}
        Some(2) => {
            for r in quadratic_roots_in(&work, k) {
                push(r);
            }
        }
        Some(3) => {
            // an irreducible cubic has no root of degree dividing 2
        }
        Some(4) => {
            let monic = work.clone();
            let a3 = monic.coeff(3);
            let depressed = monic.shift(&(-&a3 / rat(4)));
            let p = depressed.coeff(2);
            let q = depressed.coeff(1);
            let t = depressed.coeff(0);
            let resolvent = PolyQ::new(vec![
                rat(4) * &p * &t - &q * &q,
                rat(-4) * &t,
                -p,
                rat(1),
            ]);
            if let Some((f1, f2)) =
                quadratic_split(&monic, &monic, &depressed, &a3, &resolvent)?
            {
                for r in quadratic_roots_in(&f1, k) {
                    push(r);
                }
                for r in quadratic_roots_in(&f2, k) {
                    push(r);
                }
            }
        }
        Some(1) => unreachable!("rational roots were already removed"),
        Some(_) => {}
    }

    let mut out = out;
    out.sort_by(|a, b| a.cmp_embedded(b));
    Ok(out)
}

/// Roots of a rational quadratic inside `k`, possibly none.
fn quadratic_roots_in(f: &PolyQ, k: FieldDesc) -> Vec<QuadElem> {
    debug_assert_eq!(f.deg(), Some(2));
    let a = f.coeff(2);
    let b = f.coeff(1);
    let c = f.coeff(0);
    let disc = &b * &b - rat(4) * &a * &c;
    match crate::field::sqrt_rational_in(&disc, k) {
        None => vec![],
        Some(delta) => {
            let two_a = QuadElem::in_field(rat(2) * &a, k);
            let minus_b = QuadElem::in_field(-&b, k);
            let r1 = &(&minus_b + &delta) / &two_a;
            let r2 = &(&minus_b - &delta) / &two_a;
            if r1 == r2 {
                vec![r1]
            } else {
                vec![r1, r2]
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn obstruction_quartic_coefficients() {
        // cos 1/2: x^4 - 78x^2 + 280x - 507
        let f = build_f_quartic(2, 1).unwrap();
        assert_eq!(
            f.coeffs().to_vec(),
            vec![rat(-507), rat(280), rat(-78), rat(0), rat(1)]
        );
        assert!(matches!(
            build_f_quartic(4, 2),
            Err(Error::BadSlope { .. })
        ));
    }

    #[test]
    fn rational_root_extraction() {
        let f = PolyQ::from_ints(&[-6, 11, -6, 1]);
        assert_eq!(
            rational_roots(&f).unwrap(),
            vec![rat(1), rat(2), rat(3)]
        );
        // 6x^2 - x - 2 = (3x - 2)(2x + 1)
        let g = PolyQ::from_ints(&[-2, -1, 6]);
        assert_eq!(
            rational_roots(&g).unwrap(),
            vec![frac(-1, 2), frac(2, 3)]
        );
        // deflation of powers of x
        let h = PolyQ::from_ints(&[0, 0, -4, 1]);
        assert_eq!(rational_roots(&h).unwrap(), vec![rat(0), rat(4)]);
        assert_eq!(
            rational_roots(&PolyQ::from_ints(&[1, 0, 1])).unwrap(),
            vec![]
        );
        assert!(matches!(
            rational_roots(&PolyQ::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn galois_types_of_the_classical_corpus() {
        let cases: [(&[i64], GaloisType); 5] = [
            (&[1, 0, 0, 0, 1], GaloisType::V4),     // x^4 + 1
            (&[-2, 0, 0, 0, 1], GaloisType::D4),    // x^4 - 2
            (&[1, 1, 0, 0, 1], GaloisType::S4),     // x^4 + x + 1
            (&[12, 8, 0, 0, 1], GaloisType::A4),    // x^4 + 8x + 12
            (&[2, 0, 4, 0, 1], GaloisType::C4),     // x^4 + 4x^2 + 2
        ];
        for (coeffs, expected) in cases {
            let report = quartic_analyze(&PolyQ::from_ints(coeffs)).unwrap();
            assert_eq!(report.galois_type, expected, "{coeffs:?}");
            assert!(report.irreducible_over_q);
        }
    }

    #[test]
    fn corpus_invariants_cross_checked_by_hand() {
        // x^4 + 1: resolvent z^3 - 4z, disc 256 = 16^2
        let r = quartic_analyze(&PolyQ::from_ints(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(r.resolvent, PolyQ::from_ints(&[0, -4, 0, 1]));
        assert_eq!(r.discriminant, rat(256));

        // x^4 - 2: resolvent z^3 + 8z, disc -2048
        let r = quartic_analyze(&PolyQ::from_ints(&[-2, 0, 0, 0, 1])).unwrap();
        assert_eq!(r.resolvent, PolyQ::from_ints(&[0, 8, 0, 1]));
        assert_eq!(r.discriminant, rat(-2048));

        // x^4 + x + 1: resolvent z^3 - 4z - 1, disc 229 (prime)
        let r = quartic_analyze(&PolyQ::from_ints(&[1, 1, 0, 0, 1])).unwrap();
        assert_eq!(r.resolvent, PolyQ::from_ints(&[-1, -4, 0, 1]));
        assert_eq!(r.discriminant, rat(229));

        // x^4 + 8x + 12: resolvent z^3 - 48z - 64, disc 576^2
        let r = quartic_analyze(&PolyQ::from_ints(&[12, 8, 0, 0, 1])).unwrap();
        assert_eq!(r.resolvent, PolyQ::from_ints(&[-64, -48, 0, 1]));
        assert_eq!(r.discriminant, rat(576 * 576));

        // x^4 + 4x^2 + 2: resolvent (z - 4)(z^2 - 8), disc 2048
        let r = quartic_analyze(&PolyQ::from_ints(&[2, 0, 4, 0, 1])).unwrap();
        assert_eq!(r.resolvent, PolyQ::from_ints(&[32, -8, -4, 1]));
        assert_eq!(r.discriminant, rat(2048));
    }

    #[test]
    fn reducible_quartics_are_reported_with_their_splits() {
        // (x^2 + 1)(x^2 + 2), no rational roots
        let f = PolyQ::from_ints(&[2, 0, 3, 0, 1]);
        let report = quartic_analyze(&f).unwrap();
        assert_eq!(report.galois_type, GaloisType::Reducible);
        let (f1, f2) = report.quadratic_split.expect("splits rationally");
        assert_eq!(&(&f1 * &f2), &f);

        // rational roots win over splits: (x-1)(x+1)(x^2+1)
        let g = PolyQ::from_ints(&[-1, 0, 0, 0, 1]);
        let report = quartic_analyze(&g).unwrap();
        assert_eq!(report.galois_type, GaloisType::Reducible);
        assert_eq!(report.rational_roots, vec![rat(-1), rat(1)]);
        assert!(report.quadratic_split.is_none());

        // non-monic, with a cubic term: 2(x^2+x+1)(x^2-x+3)
        let h = (&PolyQ::from_ints(&[1, 1, 1]) * &PolyQ::from_ints(&[3, -1, 1]))
            .mul_scalar(&rat(2));
        let report = quartic_analyze(&h).unwrap();
        let (f1, f2) = report.quadratic_split.expect("splits rationally");
        assert_eq!(&(&f1 * &f2), &h);

        assert!(matches!(
            quartic_analyze(&PolyQ::from_ints(&[0, 0, 1, 0, 1])),
            Err(Error::RepeatedRoot)
        ));
        assert!(matches!(
            quartic_analyze(&PolyQ::from_ints(&[1, 1])),
            Err(Error::WrongDegree { expected: 4, .. })
        ));
    }

    #[test]
    fn quartic_roots_in_quadratic_fields() {
        // x^4 - 5x^2 + 6 = (x^2 - 2)(x^2 - 3)
        let f = PolyQ::from_ints(&[6, 0, -5, 0, 1]);
        let roots = roots_in_quadratic_field(&f, 2).unwrap();
        let k = FieldDesc::real_quadratic(2).unwrap();
        assert_eq!(
            roots,
            vec![
                QuadElem::new(rat(0), rat(-1), k).unwrap(),
                QuadElem::new(rat(0), rat(1), k).unwrap(),
            ]
        );
        // same polynomial, other field
        assert_eq!(roots_in_quadratic_field(&f, 3).unwrap().len(), 2);
        assert_eq!(roots_in_quadratic_field(&f, 5).unwrap().len(), 0);

        // rational roots appear in every field, with multiplicity dropped
        let g = &PolyQ::from_ints(&[-1, 1]) * &PolyQ::from_ints(&[-1, 1]);
        let roots = roots_in_quadratic_field(&g, 7).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].is_rational_value());

        // degree cap
        assert!(matches!(
            roots_in_quadratic_field(&PolyQ::from_ints(&[1, 0, 0, 0, 0, 1]), 2),
            Err(Error::UnsupportedDegree(5))
        ));
    }

    #[test]
    fn residue_analysis_mod_s() {
        // |s| = 1: everything is 0 mod 1, so both flags hold vacuously
        let a = mod_s_root_analysis(2, 1).unwrap();
        assert!(a.qr3_holds && a.residue_roots_exist);
        let a = mod_s_root_analysis(2, -1).unwrap();
        assert!(a.qr3_holds && a.residue_roots_exist);

        // the modulus is |s|, so sign does not matter
        let pos = mod_s_root_analysis(4, 5).unwrap();
        let neg = mod_s_root_analysis(4, -5).unwrap();
        assert_eq!(pos, neg);

        assert!(matches!(
            mod_s_root_analysis(2, 0),
            Err(Error::BadSlope { .. })
        ));
        assert!(matches!(
            mod_s_root_analysis(4, 6),
            Err(Error::BadSlope { .. })
        ));
    }

    #[test]
    fn qr3_failure_forces_empty_residue_roots() {
        // s = 5 with a coprime r: 3 is a non-residue mod 5
        let a = mod_s_root_analysis(4, 5).unwrap();
        assert!(!a.qr3_holds);
        assert!(!a.residue_roots_exist);

        let a = mod_s_root_analysis(2, 7).unwrap();
        assert!(!a.qr3_holds);
        assert!(!a.residue_roots_exist);

        // s = 23: 3 is a residue (16^2 = 256 = 3 + 11*23)
        let a = mod_s_root_analysis(2, 23).unwrap();
        assert!(a.qr3_holds);

        // cap
        assert!(matches!(
            mod_s_root_analysis(200_003, 200_001),
            Err(Error::ResidueCapExceeded { .. })
        ));
    }

    #[test]
    fn obstruction_for_the_sixty_degree_cosine() {
        assert_eq!(
            cubic_field_obstruction(2, 1).unwrap(),
            Obstruction::ObstructionProven
        );
        assert_eq!(
            cubic_field_obstruction(2, -1).unwrap(),
            Obstruction::ObstructionProven
        );
    }
}
