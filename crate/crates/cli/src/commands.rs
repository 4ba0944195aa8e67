//! Request dispatch. Every handler builds the same report shape:
//! `{ request, result, warnings, exit_code }`, all numbers as exact
//! strings. Identical requests yield byte-identical reports.

use serde_json::{json, Map, Value};

use theta_forge_core::curve::{build_curve, CurveParams, PointK, ThetaSlope};
use theta_forge_core::engine::{
    classify, oracle_triangle_search, twist_rank_evidence, SearchConfig,
};
use theta_forge_core::field::{FieldDesc, QuadElem};
use theta_forge_core::quartic::{
    build_f_quartic, cubic_field_obstruction, mod_s_root_analysis, quartic_analyze, Obstruction,
};
use theta_forge_core::rational::parse_rational;
use theta_forge_core::torsion::torsion_subgroup;
use theta_forge_core::triangle::{point_to_triangle, triangle_to_point, verify_triangle, TriangleK};
use theta_forge_core::CongruenceStatus;

use crate::args::{
    BoundsArgs, ClassifyArgs, Cli, Command, CommonArgs, CurveArgs, OracleArgs, OutputMode,
    PointFromTriangleArgs, QuarticArgs, TorsionArgs, TriangleFromPointArgs, TwistEvidenceArgs,
    VerifyArgs,
};
use crate::reference;
use crate::render::{
    field_value, opt_value, point_value, poly_value, quad_value, rational_value, triangle_value,
};

pub struct CliReport {
    pub json: Value,
    pub text: String,
    pub exit_code: i32,
    output: OutputMode,
}

impl CliReport {
    /// The string the binary prints, without a trailing newline.
    pub fn rendered(&self) -> String {
        match self.output {
            OutputMode::Json => {
                serde_json::to_string_pretty(&self.json).expect("report serializes")
            }
            OutputMode::Text => self.text.clone(),
        }
    }
}

pub fn run(cli: Cli) -> Result<CliReport, String> {
    match cli.command {
        Command::Curve(a) => curve_cmd(a),
        Command::Torsion(a) => torsion_cmd(a),
        Command::Classify(a) => classify_cmd(a),
        Command::TriangleFromPoint(a) => triangle_from_point_cmd(a),
        Command::PointFromTriangle(a) => point_from_triangle_cmd(a),
        Command::Quartic(a) => quartic_cmd(a),
        Command::Oracle(a) => oracle_cmd(a),
        Command::TwistEvidence(a) => twist_evidence_cmd(a),
        Command::VerifyPaper(a) => verify_cmd(a),
    }
}

fn fail<T>(e: impl std::fmt::Display) -> Result<T, String> {
    Err(e.to_string())
}

fn parse_theta(text: &str) -> Result<ThetaSlope, String> {
    let q = parse_rational(text)
        .ok_or_else(|| format!("cannot parse theta {text:?}; expected a fraction like \"1/2\""))?;
    let s = i64::try_from(q.numer()).map_err(|_| "theta numerator out of range".to_string())?;
    let r = i64::try_from(q.denom()).map_err(|_| "theta denominator out of range".to_string())?;
    ThetaSlope::new(s, r).map_err(|e| e.to_string())
}

fn parse_params(n: i64, theta: &str) -> Result<CurveParams, String> {
    let slope = parse_theta(theta)?;
    CurveParams::new(n, slope).map_err(|e| match e {
        theta_forge_core::Error::BadArea(_) => format!(
            "{e}; pass its square-free part instead, the theory does not change under square scaling"
        ),
        other => other.to_string(),
    })
}

fn parse_field(d: Option<i64>) -> Result<FieldDesc, String> {
    match d {
        None => Ok(FieldDesc::Rationals),
        Some(d) => FieldDesc::real_quadratic(d).map_err(|e| e.to_string()),
    }
}

/// "a" or "a,b", components exact rationals, meaning a + b*sqrt(d).
fn parse_elem(text: &str, k: FieldDesc) -> Result<QuadElem, String> {
    let parts: Vec<&str> = text.split(',').collect();
    let parse_part = |p: &str| {
        parse_rational(p.trim())
            .ok_or_else(|| format!("cannot parse {p:?} as an exact rational"))
    };
    match parts.as_slice() {
        [a] => Ok(QuadElem::in_field(parse_part(a)?, k)),
        [a, b] => QuadElem::new(parse_part(a)?, parse_part(b)?, k).map_err(|_| {
            format!("component {text:?} has an irrational part but the field is Q; pass --d")
        }),
        _ => Err(format!("cannot parse {text:?}; expected \"a\" or \"a,b\"")),
    }
}

fn search_config(bounds: &BoundsArgs) -> SearchConfig {
    let dflt = SearchConfig::default();
    SearchConfig {
        denom_bound: bounds.denom_bound.unwrap_or(dflt.denom_bound),
        numer_bound: bounds.numer_bound.unwrap_or(dflt.numer_bound),
        ..dflt
    }
}

fn status_token(s: CongruenceStatus) -> &'static str {
    match s {
        CongruenceStatus::ProperlyCongruent => "ProperlyCongruent",
        CongruenceStatus::TorsionOnlyCongruent => "TorsionOnlyCongruent",
        CongruenceStatus::Unknown => "Unknown",
    }
}

fn echo_common(command: &str, c: &CommonArgs) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("n".into(), json!(c.n.to_string()));
    m.insert("theta".into(), json!(c.theta));
    m.insert(
        "d".into(),
        c.d.map(|d| json!(d.to_string())).unwrap_or(Value::Null),
    );
    m
}

fn report(
    request: Map<String, Value>,
    result: Value,
    warnings: Vec<String>,
    exit_code: i32,
    text: Vec<String>,
    output: OutputMode,
) -> CliReport {
    let mut top = Map::new();
    top.insert("request".into(), Value::Object(request));
    top.insert("result".into(), result);
    top.insert(
        "warnings".into(),
        Value::Array(warnings.into_iter().map(Value::String).collect()),
    );
    top.insert("exit_code".into(), json!(exit_code));
    let mut text = text;
    text.extend(
        top["warnings"]
            .as_array()
            .unwrap()
            .iter()
            .map(|w| format!("warning: {}", w.as_str().unwrap())),
    );
    CliReport {
        json: Value::Object(top),
        text: text.join("\n"),
        exit_code,
        output,
    }
}

fn curve_cmd(a: CurveArgs) -> Result<CliReport, String> {
    let params = parse_params(a.common.n, &a.common.theta)?;
    let k = parse_field(a.common.d)?;
    let e = build_curve(&params);
    let ek = e.base_change(k).map_err(|x| x.to_string())?;

    let coeffs = json!([
        "0",
        rational_value(e.b().a()),
        rational_value(e.a().a()),
        "1"
    ]);
    let equation = format!("y^2 = x^3 + ({})*x^2 + ({})*x", e.a(), e.b());
    let two_torsion: Vec<Value> = ek.two_torsion_x().iter().map(quad_value).collect();

    let result = json!({
        "field": field_value(k),
        "equation": equation,
        "coefficients": coeffs,
        "two_torsion_x": two_torsion,
    });
    let xs: Vec<String> = ek.two_torsion_x().iter().map(|x| x.to_string()).collect();
    let text = vec![
        equation.clone(),
        format!(
            "coefficients (ascending): [0, {}, {}, 1]",
            e.b().a(),
            e.a().a()
        ),
        format!("2-torsion abscissas over {k}: [{}]", xs.join(", ")),
    ];
    Ok(report(
        echo_common("curve", &a.common),
        result,
        vec![],
        0,
        text,
        a.output.output,
    ))
}

fn torsion_cmd(a: TorsionArgs) -> Result<CliReport, String> {
    let params = parse_params(a.common.n, &a.common.theta)?;
    let k = parse_field(a.common.d)?;
    let t = torsion_subgroup(&params, k).map_err(|e| e.to_string())?;

    let result = json!({
        "field": field_value(k),
        "group": t.group.token(),
        "order": t.group.order().to_string(),
        "complete": t.complete,
        "order3_witness": opt_value(&t.order3_witness, point_value),
        "order4_witness": opt_value(&t.order4_witness, point_value),
    });
    let text = vec![format!(
        "torsion over {k}: {} (order {}){}",
        t.group,
        t.group.order(),
        if t.complete { "" } else { ", possibly larger" }
    )];
    Ok(report(
        echo_common("torsion", &a.common),
        result,
        vec![],
        0,
        text,
        a.output.output,
    ))
}

fn classify_cmd(a: ClassifyArgs) -> Result<CliReport, String> {
    let params = parse_params(a.common.n, &a.common.theta)?;
    let k = parse_field(a.common.d)?;
    let cfg = search_config(&a.bounds);
    let verdict = classify(&params, k, &cfg).map_err(|e| e.to_string())?;

    let exit_code = if verdict.status == CongruenceStatus::Unknown {
        2
    } else {
        0
    };
    let mut request = echo_common("classify", &a.common);
    request.insert("denom_bound".into(), json!(cfg.denom_bound.to_string()));
    request.insert("numer_bound".into(), json!(cfg.numer_bound.to_string()));

    let result = json!({
        "field": field_value(k),
        "status": status_token(verdict.status),
        "witness_point": opt_value(&verdict.witness_point, point_value),
        "witness_triangle": opt_value(&verdict.witness_triangle, triangle_value),
        "evidence": verdict.evidence,
    });
    let mut text = vec![format!("{}: {}", params_label(&params, k), verdict.status)];
    for line in &verdict.evidence {
        text.push(format!("  {line}"));
    }
    Ok(report(request, result, vec![], exit_code, text, a.output.output))
}

fn params_label(params: &CurveParams, k: FieldDesc) -> String {
    format!(
        "n = {}, cos(theta) = {}/{}, over {}",
        params.n(),
        params.theta().s(),
        params.theta().r(),
        k
    )
}

fn triangle_from_point_cmd(a: TriangleFromPointArgs) -> Result<CliReport, String> {
    let params = parse_params(a.common.n, &a.common.theta)?;
    let k = parse_field(a.common.d)?;
    let x = parse_elem(&a.x, k)?;
    let y = parse_elem(&a.y, k)?;
    let p = PointK::affine(x, y);
    let tri = match point_to_triangle(&params, k, &p) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };

    let mut request = echo_common("triangle-from-point", &a.common);
    request.insert("x".into(), json!(a.x));
    request.insert("y".into(), json!(a.y));
    let result = json!({
        "field": field_value(k),
        "point": point_value(&p),
        "triangle": triangle_value(&tri),
        "verified": true,
    });
    let (u, v, w) = tri.sides();
    let text = vec![format!("triangle: u = {u}, v = {v}, w = {w}")];
    Ok(report(request, result, vec![], 0, text, a.output.output))
}

fn point_from_triangle_cmd(a: PointFromTriangleArgs) -> Result<CliReport, String> {
    let params = parse_params(a.common.n, &a.common.theta)?;
    let k = parse_field(a.common.d)?;
    let u = parse_elem(&a.u, k)?;
    let v = parse_elem(&a.v, k)?;
    let w = parse_elem(&a.w, k)?;
    let tri = TriangleK::new(u, v, w, params).map_err(|e| e.to_string())?;
    if let Err(violation) = verify_triangle(&tri) {
        return fail(violation);
    }
    let p = triangle_to_point(&tri).map_err(|e| e.to_string())?;

    let mut request = echo_common("point-from-triangle", &a.common);
    request.insert("u".into(), json!(a.u));
    request.insert("v".into(), json!(a.v));
    request.insert("w".into(), json!(a.w));
    let result = json!({
        "field": field_value(k),
        "triangle": triangle_value(&tri),
        "point": point_value(&p),
    });
    let text = vec![match &p {
        PointK::Infinity => "point: infinity".to_string(),
        PointK::Affine { x, y } => format!("point: ({x}, {y})"),
    }];
    Ok(report(request, result, vec![], 0, text, a.output.output))
}

fn quartic_cmd(a: QuarticArgs) -> Result<CliReport, String> {
    let f = build_f_quartic(a.r, a.s).map_err(|e| e.to_string())?;
    let analysis = quartic_analyze(&f).map_err(|e| e.to_string())?;
    let obstruction = cubic_field_obstruction(a.r, a.s).map_err(|e| e.to_string())?;
    let mod_s = if a.s == 0 {
        Value::Null
    } else {
        let m = mod_s_root_analysis(a.r, a.s).map_err(|e| e.to_string())?;
        json!({
            "qr3_holds": m.qr3_holds,
            "residue_roots_exist": m.residue_roots_exist,
        })
    };

    let mut request = Map::new();
    request.insert("command".into(), json!("quartic"));
    request.insert("r".into(), json!(a.r.to_string()));
    request.insert("s".into(), json!(a.s.to_string()));

    let split = analysis
        .quadratic_split
        .as_ref()
        .map(|(f1, f2)| json!([poly_value(f1), poly_value(f2)]))
        .unwrap_or(Value::Null);
    let result = json!({
        "polynomial": poly_value(&f),
        "irreducible": analysis.irreducible_over_q,
        "rational_roots": analysis.rational_roots.iter().map(rational_value).collect::<Vec<_>>(),
        "quadratic_split": split,
        "resolvent": poly_value(&analysis.resolvent),
        "discriminant": rational_value(&analysis.discriminant),
        "galois_type": analysis.galois_type.to_string(),
        "obstruction": match obstruction {
            Obstruction::ObstructionProven => "ObstructionProven",
            Obstruction::Inconclusive => "Inconclusive",
        },
        "mod_s": mod_s,
    });
    let text = vec![
        format!("quartic: {f}"),
        format!(
            "irreducible over Q: {}, Galois type {}, obstruction {}",
            analysis.irreducible_over_q,
            analysis.galois_type,
            result["obstruction"].as_str().unwrap()
        ),
    ];
    Ok(report(request, result, vec![], 0, text, a.output.output))
}

fn oracle_cmd(a: OracleArgs) -> Result<CliReport, String> {
    let params = parse_params(a.common.n, &a.common.theta)?;
    let k = parse_field(a.common.d)?;
    let found = oracle_triangle_search(&params, k, a.height).map_err(|e| e.to_string())?;

    let mut request = echo_common("oracle", &a.common);
    request.insert("height".into(), json!(a.height.to_string()));
    let result = json!({
        "field": field_value(k),
        "height": a.height.to_string(),
        "triangle": opt_value(&found, triangle_value),
    });
    let text = vec![match &found {
        Some(t) => {
            let (u, v, w) = t.sides();
            format!("triangle found: u = {u}, v = {v}, w = {w}")
        }
        None => format!("no triangle within height {}", a.height),
    }];
    Ok(report(request, result, vec![], 0, text, a.output.output))
}

fn twist_evidence_cmd(a: TwistEvidenceArgs) -> Result<CliReport, String> {
    let params = parse_params(a.n, &a.theta)?;
    let k = parse_field(Some(a.d))?;
    let cfg = search_config(&a.bounds);
    let ev = twist_rank_evidence(&params, a.d, &cfg).map_err(|e| e.to_string())?;

    let mut request = Map::new();
    request.insert("command".into(), json!("twist-evidence"));
    request.insert("n".into(), json!(a.n.to_string()));
    request.insert("theta".into(), json!(a.theta));
    request.insert("d".into(), json!(a.d.to_string()));
    request.insert("denom_bound".into(), json!(cfg.denom_bound.to_string()));
    request.insert("numer_bound".into(), json!(cfg.numer_bound.to_string()));

    let points = |ps: &[PointK]| -> Vec<Value> { ps.iter().map(point_value).collect() };
    let result = json!({
        "field": field_value(k),
        "base_points": points(&ev.base_points),
        "twist_points": points(&ev.twist_points),
        "transported": points(&ev.transported),
        "lower_bound_hint": ev.lower_bound_hint.to_string(),
    });
    let text = vec![format!(
        "base generators: {}, twist generators: {}, rank lower bound hint: {}",
        ev.base_points.len(),
        ev.twist_points.len(),
        ev.lower_bound_hint
    )];
    Ok(report(request, result, vec![], 0, text, a.output.output))
}

fn verify_cmd(a: VerifyArgs) -> Result<CliReport, String> {
    let items = reference::run_items();
    let all_pass = items.iter().all(|i| i.pass);
    let mut warnings = Vec::new();
    let mut text = Vec::new();
    let mut rendered = Vec::new();
    for item in &items {
        text.push(format!(
            "item {}: {}",
            item.name,
            if item.pass { "PASS" } else { "FAIL" }
        ));
        rendered.push(json!({
            "item": item.name,
            "pass": item.pass,
            "checks": item.checks,
        }));
        warnings.extend(item.warnings.iter().cloned());
    }

    let mut request = Map::new();
    request.insert("command".into(), json!("verify-paper"));
    let result = json!({
        "items": rendered,
        "all_pass": all_pass,
    });
    let exit_code = if all_pass { 0 } else { 1 };
    Ok(report(request, result, warnings, exit_code, text, a.output.output))
}
