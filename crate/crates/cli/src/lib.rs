//! JSON reports for the `latpyr` command-line tool.
//!
//! Objects are `serde_json::Map`s, which keep keys sorted, so output is
//! byte-stable. Exact rationals are written as `"p/q"` strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use latpyr::boxpoints::{enumerate_box_points, hstar_from_points, support_of, BoxPoint, EmbeddedSimplex};
use latpyr::bounds::{check_all, BoundReport};
use latpyr::circuits::{apexes_from_circuits, circuit_bound_verdict, enumerate_circuits, Circuit};
use latpyr::ehrhart::{codegree_by_interior, hstar, hstar_via_interpolation};
use latpyr::generators::{random_corpus, CorpusSpec};
use latpyr::greedy::{trace_from_points, verify_greedy_claim, GreedyTrace, TieBreak};
use latpyr::pyramids::{apex_indices, decompose};
use latpyr::{LatticePoint, LatticePolytope, Rational};

/// Largest accepted absolute coordinate in input files.
pub const MAX_COORDINATE: i64 = 1 << 31;

/// Failure classes with distinct exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable or malformed input; exit code 1.
    Input(String),
    /// A computed invariant does not hold; exit code 2.
    Invariant(Vec<String>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Invariant(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Invariant(v) => write!(f, "invariant failure: {}", v.join("; ")),
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

/// Parses `{"ambient_dim": N, "vertices": [[int, ...], ...]}`.
pub fn parse_polytope(text: &str) -> Result<LatticePolytope, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed JSON: {e}")))?;
    polytope_from_value(&v)
}

pub fn polytope_from_value(v: &Value) -> Result<LatticePolytope, CliError> {
    let obj = v.as_object().ok_or_else(|| input("expected a JSON object"))?;
    let ambient = obj
        .get("ambient_dim")
        .ok_or_else(|| input("missing field \"ambient_dim\""))?
        .as_u64()
        .ok_or_else(|| input("\"ambient_dim\" must be a non-negative integer"))? as usize;
    let verts = obj
        .get("vertices")
        .ok_or_else(|| input("missing field \"vertices\""))?
        .as_array()
        .ok_or_else(|| input("\"vertices\" must be an array"))?;
    if verts.is_empty() {
        return Err(input("vertex list is empty"));
    }
    let mut points = Vec::with_capacity(verts.len());
    for (i, row) in verts.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| CliError::Input(format!("vertex {i} is not an array")))?;
        if row.len() != ambient {
            return Err(CliError::Input(format!(
                "vertex {i} has {} coordinates, expected {ambient}",
                row.len()
            )));
        }
        let coords = row
            .iter()
            .map(|c| match c.as_i64() {
                Some(x) if x.abs() <= MAX_COORDINATE => Ok(x),
                Some(_) => Err(CliError::Input(format!("vertex {i}: coordinate exceeds 2^31 in absolute value"))),
                None => Err(CliError::Input(format!("vertex {i}: coordinate {c} is not an integer"))),
            })
            .collect::<Result<Vec<i64>, _>>()?;
        points.push(LatticePoint::from_i64(&coords));
    }
    LatticePolytope::new(points).map_err(input)
}

pub fn int(x: &BigInt) -> Value {
    x.to_i64().map_or_else(|| Value::String(x.to_string()), Value::from)
}

pub fn point(p: &LatticePoint) -> Value {
    Value::Array(p.coords().iter().map(int).collect())
}

pub fn points(ps: &[LatticePoint]) -> Value {
    Value::Array(ps.iter().map(point).collect())
}

/// `"p/q"`, always with an explicit denominator.
pub fn rational(q: &Rational) -> Value {
    Value::String(format!("{}/{}", q.numer(), q.denom()))
}

fn indices<I: IntoIterator<Item = usize>>(it: I) -> Value {
    Value::Array(it.into_iter().map(Value::from).collect())
}

/// The polytope in input format, with canonical vertices.
pub fn polytope_json(p: &LatticePolytope) -> Value {
    json!({ "ambient_dim": p.ambient_dim(), "vertices": points(p.vertices()) })
}

pub fn hstar_report(p: &LatticePolytope) -> Result<Value, CliError> {
    let h = hstar(p).map_err(|e| CliError::Invariant(vec![e.to_string()]))?;
    Ok(json!({
        "hstar": h.trimmed(),
        "degree": h.degree(),
        "codegree": h.codegree(),
        "volume": h.volume(),
    }))
}

pub fn pyramid_report(p: &LatticePolytope) -> Value {
    let d = decompose(p);
    json!({
        "fold_count": d.fold_count(),
        "apexes": points(&d.apexes),
        "apex_indices": indices(apex_indices(p)),
        "base": {
            "ambient_dim": d.base.ambient_dim(),
            "dimension": d.base.dimension(),
            "vertices": points(d.base.vertices()),
        },
    })
}

fn circuit_json(c: &Circuit) -> Value {
    json!({
        "members": c.members(),
        "relation": c.relation().iter().map(int).collect::<Vec<_>>(),
        "positive": indices(c.positive_part()),
        "negative": indices(c.negative_part()),
    })
}

fn circuits_section(p: &LatticePolytope, degree: usize) -> (Value, bool) {
    let cs = enumerate_circuits(p);
    let v = circuit_bound_verdict(&cs, degree);
    let report = json!({
        "count": cs.len(),
        "max_size": v.max_size,
        "degree": degree,
        "bound": v.bound,
        "holds": v.holds(),
        "circuits": cs.iter().map(circuit_json).collect::<Vec<_>>(),
        "combinatorial_apexes": indices(apexes_from_circuits(p.num_vertices(), &cs)),
    });
    (report, v.holds())
}

pub fn circuits_report(p: &LatticePolytope) -> Result<(Value, Vec<String>), CliError> {
    let h = hstar(p).map_err(|e| CliError::Invariant(vec![e.to_string()]))?;
    let (report, holds) = circuits_section(p, h.degree());
    let failures = if holds { vec![] } else { vec!["circuit larger than 2d+2".to_string()] };
    Ok((report, failures))
}

fn trim(h: &[u64]) -> &[u64] {
    &h[..=h.iter().rposition(|&c| c != 0).unwrap_or(0)]
}

pub fn bound_json(r: &BoundReport) -> Value {
    json!({
        "name": r.name,
        "n": r.n,
        "d": r.d,
        "volume": r.volume,
        "vertices": r.vertices,
        "c": r.c,
        "hstar": trim(&r.hstar),
        "threshold": r.threshold.as_ref().map(|t| t.to_string()),
        "hypothesis_satisfied": r.hypothesis_satisfied,
        "conclusion": r.conclusion.to_string(),
        "witness": r.witness,
    })
}

pub fn bounds_report(p: &LatticePolytope) -> Result<(Value, Vec<String>), CliError> {
    let reports = check_all(p).map_err(|e| CliError::Invariant(vec![e.to_string()]))?;
    let failures = reports
        .iter()
        .filter(|r| r.is_violation())
        .map(|r| format!("{} violated: {}", r.name, r.witness.clone().unwrap_or_default()))
        .collect();
    Ok((Value::Array(reports.iter().map(bound_json).collect()), failures))
}

fn box_point_json(m: &BoxPoint) -> Value {
    json!({
        "point": point(m.point()),
        "lambdas": m.lambdas().iter().map(rational).collect::<Vec<_>>(),
        "height": m.height(),
        "support": indices(m.support().iter().copied()),
    })
}

fn trace_json(t: &GreedyTrace, d: usize) -> (Value, bool) {
    let verdict = verify_greedy_claim(t, d);
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| {
            let mut m = box_point_json(&s.point);
            let obj = m.as_object_mut().expect("object");
            obj.insert("I".into(), indices(s.new_support.iter().copied()));
            obj.insert(
                "J".into(),
                s.overlap.as_ref().map_or(Value::Null, |j| indices(j.iter().copied())),
            );
            m
        })
        .collect();
    let report = json!({
        "tie_break": match t.tie_break { TieBreak::Ascending => "ascending", TieBreak::Descending => "descending" },
        "steps": steps,
        "covered": indices(t.covered.iter().copied()),
        "claim_holds": verdict.holds(),
        "failures": verdict.failures.iter().map(|f| format!("{f:?}")).collect::<Vec<_>>(),
    });
    (report, verdict.holds())
}

/// The full analysis. Returns the report and the list of failed invariants.
pub fn analyze_report(p: &LatticePolytope, trace: bool, with_circuits: bool) -> Result<(Value, Vec<String>), CliError> {
    let mut failures = Vec::new();
    let interp = hstar_via_interpolation(p).map_err(|e| CliError::Invariant(vec![e.to_string()]))?;
    let mut out = Map::new();
    out.insert(
        "input".into(),
        json!({
            "ambient_dim": p.ambient_dim(),
            "dimension": p.dimension(),
            "num_vertices": p.num_vertices(),
            "vertices": points(p.vertices()),
        }),
    );
    let by_interior = codegree_by_interior(p);
    if by_interior != interp.codegree() {
        failures.push(format!(
            "codegree from h* is {} but first interior dilation is {by_interior}",
            interp.codegree()
        ));
    }
    out.insert("hstar".into(), json!(interp.trimmed()));
    out.insert("hstar_full".into(), json!(interp.coefficients()));
    out.insert("degree".into(), json!(interp.degree()));
    out.insert("volume".into(), json!(interp.volume()));
    out.insert(
        "codegree".into(),
        json!({ "from_hstar": interp.codegree(), "from_interior": by_interior }),
    );
    out.insert("pyramid".into(), pyramid_report(p));

    if p.is_simplex() {
        let s = EmbeddedSimplex::from_polytope(p).map_err(|e| CliError::Invariant(vec![e.to_string()]))?;
        let pts = enumerate_box_points(&s);
        let from_box = hstar_from_points(&s, &pts);
        if from_box != interp {
            failures.push(format!("box-point h* {from_box} differs from interpolated h* {interp}"));
        }
        let support = support_of(&pts);
        let mut section = json!({
            "count": pts.len(),
            "points": pts.iter().map(box_point_json).collect::<Vec<_>>(),
            "support": indices(support.iter().copied()),
        });
        if trace {
            let t = trace_from_points(&s, &pts, TieBreak::Ascending);
            let (tj, holds) = trace_json(&t, interp.degree());
            if !holds {
                failures.push("greedy claim failed".into());
            }
            section.as_object_mut().expect("object").insert("greedy_trace".into(), tj);
        }
        out.insert("box_points".into(), section);
    } else {
        out.insert("box_points".into(), Value::Null);
    }

    if with_circuits {
        let (c, holds) = circuits_section(p, interp.degree());
        if !holds {
            failures.push("circuit larger than 2d+2".into());
        }
        out.insert("circuits".into(), c);
    }

    let (b, bf) = bounds_report(p)?;
    failures.extend(bf);
    out.insert("bounds".into(), b);
    Ok((Value::Object(out), failures))
}

/// Parses `"N"` or `"A..B"` (inclusive).
pub fn parse_dim_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("bad dimension {x:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty dimension range {s:?}"));
            }
            Ok((a, b))
        }
        None => {
            let n = parse(s)?;
            Ok((n, n))
        }
    }
}

pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<Value>, CliError> {
    Ok(random_corpus(spec).map_err(input)?.iter().map(polytope_json).collect())
}

/// Serializes with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_polytope("{"), Err(CliError::Input(_))));
        assert!(matches!(parse_polytope("[]"), Err(CliError::Input(_))));
        assert!(matches!(parse_polytope(r#"{"ambient_dim": 2, "vertices": []}"#), Err(CliError::Input(_))));
        assert!(matches!(
            parse_polytope(r#"{"ambient_dim": 2, "vertices": [[0, 0.5]]}"#),
            Err(CliError::Input(_))
        ));
        assert!(matches!(
            parse_polytope(r#"{"ambient_dim": 2, "vertices": [[0, 0, 0]]}"#),
            Err(CliError::Input(_))
        ));
        assert!(matches!(
            parse_polytope(r#"{"ambient_dim": 1, "vertices": [[4294967296]]}"#),
            Err(CliError::Input(_))
        ));
    }

    #[test]
    fn square_hstar() {
        let p = parse_polytope(r#"{"ambient_dim": 2, "vertices": [[1,1],[0,0],[1,0],[0,1]]}"#).unwrap();
        assert_eq!(
            render(&hstar_report(&p).unwrap()),
            "{\"codegree\":2,\"degree\":1,\"hstar\":[1,1],\"volume\":2}\n"
        );
    }

    #[test]
    fn dim_ranges() {
        assert_eq!(parse_dim_range("3"), Ok((3, 3)));
        assert_eq!(parse_dim_range("1..4"), Ok((1, 4)));
        assert_eq!(parse_dim_range("1..=4"), Ok((1, 4)));
        assert!(parse_dim_range("4..1").is_err());
        assert!(parse_dim_range("x").is_err());
    }

    #[test]
    fn rationals_keep_denominators() {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(rational(&half), json!("1/2"));
        assert_eq!(rational(&Rational::from_integer(BigInt::from(0))), json!("0/1"));
    }
}
