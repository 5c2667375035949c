//! JSON and text rendering of reports.
//!
//! Keys are sorted (serde_json's default map) and floats are rounded to 12
//! significant digits, so identical inputs give identical bytes.

use isoseq_core::{
    ClassInfo, EmbedReport, EmbeddingCheck, EmbeddingKind, FTableEntry, MinDimSearch, SweepReport,
    TheoremReport, Witness,
};
use serde_json::{json, Map, Value};

use crate::io::{ConfigJson, PointSetJson};

pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

pub fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(round12(x))
    } else {
        Value::Null
    }
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

pub fn format_float(x: f64) -> String {
    round12(x).to_string()
}

pub fn to_json_string(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

pub fn config_value(c: &isoseq_core::DistanceConfiguration) -> Value {
    serde_json::to_value(ConfigJson::from_config(c)).expect("configurations serialize")
}

pub fn points_value(p: &isoseq_core::PointSet) -> Value {
    let j = PointSetJson::from_points(p);
    json!({ "dim": j.dim, "points": j.points.iter().map(|r| nums(r)).collect::<Vec<_>>() })
}

pub fn embed_value(r: &EmbedReport) -> Value {
    json!({
        "is_euclidean": r.is_euclidean,
        "m_X": r.m_x,
        "negative_mass": num(r.negative_mass),
        "eigenvalues": nums(&r.eigenvalues),
        "tol": num(r.tol),
    })
}

pub fn classes_value(k: usize, classes: &[ClassInfo]) -> Value {
    json!({
        "k": k,
        "count": classes.len(),
        "classes": classes.iter().map(|c| json!({
            "key": c.key.key,
            "representative": c.representative,
            "size": c.size,
        })).collect::<Vec<_>>(),
    })
}

pub fn search_value(s: &MinDimSearch) -> Value {
    let cand = |c: &isoseq_core::DimCandidate| json!({ "values": nums(&c.values), "report": embed_value(&c.report) });
    json!({
        "best": s.best.as_ref().map(cand),
        "boundary": s.boundary.iter().map(cand).collect::<Vec<_>>(),
        "grid_points": s.grid_points,
        "euclidean_points": s.euclidean_points,
    })
}

pub fn kind_value(k: &EmbeddingKind) -> Value {
    let params = match *k {
        EmbeddingKind::Simplex { n }
        | EmbeddingKind::OneEdge { n }
        | EmbeddingKind::SimplexPlusSegment { n } => {
            json!({ "n": n })
        }
        EmbeddingKind::BipartiteSimplices { m, n } | EmbeddingKind::MatchingComplement { n, m } => {
            json!({ "m": m, "n": n })
        }
        EmbeddingKind::AntipodalSimplices { m } | EmbeddingKind::Circle { m } => json!({ "m": m }),
        EmbeddingKind::CrossPairs { p, q, c, t } => {
            json!({ "p": p, "q": q, "c": num(c), "t": t.map(num) })
        }
        EmbeddingKind::Pentagon
        | EmbeddingKind::TwoSquares
        | EmbeddingKind::HalfCube5
        | EmbeddingKind::JohnsonJ52 => {
            json!({})
        }
    };
    json!({ "kind": k.name(), "params": params })
}

pub fn embedding_check_value(c: &EmbeddingCheck) -> Value {
    json!({
        "generator": kind_value(&c.kind),
        "points": points_value(&c.points),
        "realized_colors": c.realized_colors,
        "intended_colors": c.intended_colors,
        "configuration_matches": c.configuration_matches(),
        "vertex_map": c.isomorphism.as_ref().map(|i| i.vertex_map.clone()),
        "rank": c.rank,
        "claimed": c.claimed,
        "ns_bound": c.ns_bound,
        "discrepancies": c.discrepancies,
        "passed": c.passed(),
    })
}

pub fn ftable_value(e: &FTableEntry) -> Value {
    json!({
        "m": e.m,
        "k": e.k,
        "t": e.t,
        "claimed": e.claimed,
        "generator": kind_value(&e.kind),
        "points": e.witness.len(),
        "a_k": e.a_k,
        "rank": e.rank,
        "holds": e.holds(),
    })
}

pub fn theorem_value(r: &TheoremReport) -> Value {
    let witness = match &r.witness {
        Witness::NotApplicable(s) => json!({ "not_applicable": s }),
        Witness::Counts { k, a_k, a_2, a_3 } => {
            json!({ "k": k, "a_k": a_k, "a_2": a_2, "a_3": a_3 })
        }
        Witness::Shape { color, verdict } => json!({
            "color": color.index(),
            "shape": verdict.shape.name(),
            "detail": format!("{:?}", verdict.witness),
        }),
        Witness::Triangles { shape, order } => json!({
            "triangle_shape": shape.name(),
            "colors": order.iter().map(|c| c.index()).collect::<Vec<_>>(),
        }),
        Witness::Example {
            instance,
            isomorphism,
        } => json!({
            "example": instance.label(),
            "vertex_map": isomorphism.vertex_map,
            "color_map": isomorphism.color_map.iter().map(|c| c.index()).collect::<Vec<_>>(),
        }),
        Witness::Counterexample(s) => json!({ "counterexample": s }),
    };
    json!({
        "theorem": r.theorem.id(),
        "applicable": r.applicable,
        "holds": r.holds,
        "witness": witness,
    })
}

pub fn sweep_value(r: &SweepReport) -> Value {
    let mut checks = Map::new();
    for (c, t) in &r.tallies {
        checks.insert(
            c.id().to_string(),
            json!({ "passed": t.passed, "failed": t.failed, "not_applicable": t.not_applicable }),
        );
    }
    let mut notes = Map::new();
    for ((c, note), count) in &r.notes {
        let entry = notes
            .entry(c.id().to_string())
            .or_insert_with(|| Value::Object(Map::new()));
        entry
            .as_object_mut()
            .expect("object")
            .insert(note.clone(), json!(count));
    }
    json!({
        "total": r.total,
        "checks": checks,
        "classified": notes,
        "all_passed": r.all_passed(),
        "counterexamples": r.counterexamples.iter().map(|c| json!({
            "check": c.check.id(),
            "details": c.details,
            "configuration": config_value(&c.config),
        })).collect::<Vec<_>>(),
    })
}

/// Aligned two-column text: one row per leaf, keyed by its JSON path.
pub fn pretty(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten(v, String::new(), &mut rows);
    let width = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for (k, val) in rows {
        let pad = width - k.chars().count();
        out.push_str(&k);
        out.push_str(&" ".repeat(pad + 2));
        out.push_str(&val);
        out.push('\n');
    }
    out
}

fn flatten(v: &Value, path: String, rows: &mut Vec<(String, String)>) {
    let join = |key: &str| {
        if path.is_empty() {
            key.to_string()
        } else {
            format!("{path}.{key}")
        }
    };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                flatten(x, join(k), rows);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(x, join(&i.to_string()), rows);
            }
        }
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(leaf).collect();
            rows.push((path, items.join(" ")));
        }
        other => rows.push((path, leaf(other))),
    }
}

fn leaf(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}
