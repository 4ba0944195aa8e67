//! Exact JSON rendering: every number is a string ("num/den", or plain
//! "n" for integers), field elements a + b*sqrt(d) are the pair
//! ["a", "b"]. Nothing here ever goes through floating point.

use serde_json::{json, Map, Value};

use theta_forge_core::curve::PointK;
use theta_forge_core::field::{FieldDesc, QuadElem};
use theta_forge_core::poly::PolyQ;
use theta_forge_core::rational::{format_rational, Rational};
use theta_forge_core::triangle::TriangleK;

pub fn rational_value(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn quad_value(e: &QuadElem) -> Value {
    match e.field() {
        FieldDesc::Rationals => rational_value(e.a()),
        FieldDesc::RealQuadratic { .. } => json!([format_rational(e.a()), format_rational(e.b())]),
    }
}

pub fn field_value(k: FieldDesc) -> Value {
    Value::String(match k {
        FieldDesc::Rationals => "Q".to_string(),
        FieldDesc::RealQuadratic { d } => format!("Q(sqrt({d}))"),
    })
}

pub fn point_value(p: &PointK) -> Value {
    match p {
        PointK::Infinity => json!({ "infinity": true }),
        PointK::Affine { x, y } => {
            let mut m = Map::new();
            m.insert("x".into(), quad_value(x));
            m.insert("y".into(), quad_value(y));
            Value::Object(m)
        }
    }
}

pub fn triangle_value(t: &TriangleK) -> Value {
    let (u, v, w) = t.sides();
    let mut m = Map::new();
    m.insert("u".into(), quad_value(u));
    m.insert("v".into(), quad_value(v));
    m.insert("w".into(), quad_value(w));
    Value::Object(m)
}

/// Ascending coefficient list; the zero polynomial renders as ["0"].
pub fn poly_value(p: &PolyQ) -> Value {
    if p.is_zero() {
        return json!(["0"]);
    }
    Value::Array(p.coeffs().iter().map(rational_value).collect())
}

pub fn opt_value<T>(o: &Option<T>, f: impl Fn(&T) -> Value) -> Value {
    o.as_ref().map(&f).unwrap_or(Value::Null)
}
