use num_bigint::BigInt;

use crate::triangle::TriangleViolation;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("cofactor {cofactor} not factored: trial division stopped at {bound}")]
    UnfactoredCofactor { cofactor: BigInt, bound: u64 },

    #[error("modulus {modulus} exceeds the residue enumeration cap {cap}")]
    ResidueCapExceeded { modulus: u64, cap: u64 },

    #[error("{0} does not determine a real quadratic field")]
    NotRealQuadratic(i64),

    #[error("invalid cosine {s}/{r}: {reason}")]
    BadSlope {
        s: i64,
        r: i64,
        reason: &'static str,
    },

    #[error("area parameter {0} must be a square-free positive integer")]
    BadArea(i64),

    #[error("twist parameter {0} must be square-free and neither 0 nor 1")]
    BadTwist(i64),

    #[error("curve is singular")]
    SingularCurve,

    #[error("expected a curve over the rationals")]
    CurveNotOverQ,

    #[error("curve coefficients are not rational integers")]
    NonIntegralModel,

    #[error("curve coefficients too large for the point search")]
    SearchModelOutOfRange,

    #[error("point does not satisfy the curve equation")]
    PointOffCurve,

    #[error("affine point required, found the point at infinity")]
    InfinitePoint,

    #[error("points of order dividing 2 have no triangle image")]
    TwoTorsionNoTriangle,

    #[error("triangle fails verification: {0}")]
    BadTriangle(#[from] TriangleViolation),

    #[error("the zero polynomial has no meaningful root set")]
    ZeroPolynomial,

    #[error("expected a polynomial of degree {expected}, found degree {found:?}")]
    WrongDegree {
        expected: usize,
        found: Option<usize>,
    },

    #[error("degree {0} not supported here (at most 4)")]
    UnsupportedDegree(usize),

    #[error("polynomial has a repeated root")]
    RepeatedRoot,
}
