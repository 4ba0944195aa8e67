//! Exact arithmetic for deciding when a given area can be realized by a
//! triangle with a prescribed rational cosine, over the rationals or a real
//! quadratic field.
//!
//! The layers, bottom up:
//!
//! * [`rational`], [`field`]: exact scalars and `a + b*sqrt(d)` elements with
//!   a canonical real embedding (`sqrt(d) > 0`).
//! * [`arith`]: integer utilities (trial factorization, residue symbols).
//! * [`poly`], [`quartic`]: dense rational polynomials, rational root
//!   extraction, and Galois-type analysis of quartics.
//! * [`curve`], [`torsion`]: the curve family `y^2 = x(x + (r+s)n)(x - (r-s)n)`
//!   attached to an area `n` and a cosine `s/r`, with its group law, twists,
//!   and torsion probes.
//! * [`triangle`], [`engine`]: the two-way bridge between curve points and
//!   triangles, plus the search / classification drivers.

pub mod arith;
pub mod curve;
pub mod engine;
pub mod error;
pub mod field;
pub mod poly;
pub mod quartic;
pub mod rational;
pub mod torsion;
pub mod triangle;

pub use curve::{build_curve, CurveParams, PointK, ThetaSlope, WeierstrassK};
pub use engine::{classify, CongruenceStatus, RankEvidence, SearchConfig, Verdict};
pub use error::Error;
pub use field::{sqrt_in_field, FieldDesc, QuadElem};
pub use rational::Rational;
pub use triangle::TriangleK;
