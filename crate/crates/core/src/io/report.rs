//! Report documents (`singularity-report/1`). Rationals are `"p/q"` strings.

use serde_json::{json, Map, Value};

use crate::cycle::{q_to_string, IntCycle, RatCycle, Q};
use crate::hyperelliptic::{Check, Condition, CycleTower, G12Report, Mode};
use crate::lattice::ResolutionGraph;

pub const SCHEMA: &str = "singularity-report/1";

pub fn rational(x: &Q) -> Value {
    Value::String(q_to_string(x))
}

pub fn int_cycle(g: &ResolutionGraph, c: &IntCycle) -> Value {
    Value::Object((0..g.len()).map(|v| (g.id(v).to_string(), json!(c[v]))).collect())
}

pub fn rat_cycle(g: &ResolutionGraph, c: &RatCycle) -> Value {
    Value::Object((0..g.len()).map(|v| (g.id(v).to_string(), rational(&c[v]))).collect())
}

pub fn graph(g: &ResolutionGraph) -> Value {
    let vertices: Vec<Value> = (0..g.len()).map(|v| json!({"id": g.id(v), "euler": g.euler(v)})).collect();
    let edges: Vec<Value> = g.edges().iter().map(|&(a, b)| json!([g.id(a), g.id(b)])).collect();
    json!({"fingerprint": g.fingerprint(), "vertices": vertices, "edges": edges})
}

fn pairs(values: &[(&str, i64)]) -> Value {
    Value::Array(values.iter().map(|(k, v)| json!({"name": k, "value": v})).collect())
}

fn check(c: &Check) -> Value {
    json!({"name": c.name, "holds": c.holds, "values": pairs(&c.values)})
}

fn condition(c: &Condition) -> Value {
    json!({
        "name": c.name,
        "holds": c.holds,
        "applicable": c.applicable,
        "kind": "derived-under-hypothesis",
        "values": pairs(&c.values),
    })
}

pub fn tower(g: &ResolutionGraph, t: &CycleTower) -> Value {
    let levels: Vec<Value> = t
        .levels
        .iter()
        .map(|l| {
            json!({
                "t": l.t,
                "cycle": int_cycle(g, &l.cycle),
                "h1": l.h1,
                "predicted_h1": l.predicted_h1,
                "tracked": l.key.iter().map(|(k, v)| json!({"name": k, "value": v})).collect::<Vec<_>>(),
                "e": l.e.iter().map(|(k, v)| json!({"name": k, "value": v})).collect::<Vec<_>>(),
                "regular": l.regular,
            })
        })
        .collect();
    json!({"kind": t.kind, "levels": levels, "stop": t.stop})
}

pub fn g12(g: &ResolutionGraph, r: &G12Report) -> Value {
    let mode = match r.mode {
        Mode::Pair(a, b) => json!({"kind": "pair", "u1": g.id(a), "u2": g.id(b)}),
        Mode::Single(u) => json!({"kind": "single", "u": g.id(u)}),
    };
    json!({
        "mode": mode,
        "cycle": int_cycle(g, &r.z),
        "status": r.status.as_str(),
        "checks": r.checks.iter().map(check).collect::<Vec<_>>(),
        "necessary_conditions": r.necessary.iter().map(condition).collect::<Vec<_>>(),
        "e": {"h1": r.e.h1, "first": r.e.first, "second": r.e.second, "both": r.e.both},
        "towers": r.towers.iter().map(|t| tower(g, t)).collect::<Vec<_>>(),
    })
}

/// Assembles a full report document.
pub fn document(
    operation: &str,
    g: Option<&ResolutionGraph>,
    inputs: Value,
    values: Value,
    trace: &[String],
    oracle: Option<Value>,
) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("operation".into(), json!(operation));
    m.insert("graph".into(), g.map(graph).unwrap_or(Value::Null));
    m.insert("inputs".into(), inputs);
    m.insert("values".into(), values);
    m.insert("trace".into(), json!(trace));
    m.insert("oracle".into(), oracle.unwrap_or(Value::Null));
    Value::Object(m)
}

/// `key: value` lines for terminal output, one per leaf of `values`.
pub fn render_text(values: &Value) -> String {
    let mut out = String::new();
    flatten("", values, &mut out);
    out
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, out);
            }
        }
        Value::Array(a) if !a.is_empty() => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
        _ => out.push_str(&format!("{prefix}: {v}\n")),
    }
}

/// Paths at which two value trees differ.
pub fn differences(a: &Value, b: &Value) -> Vec<String> {
    let mut out = Vec::new();
    diff("", a, b, &mut out);
    out
}

fn diff(prefix: &str, a: &Value, b: &Value, out: &mut Vec<String>) {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            let keys: std::collections::BTreeSet<&String> = x.keys().chain(y.keys()).collect();
            for k in keys {
                let p = format!("{prefix}/{k}");
                diff(&p, x.get(k).unwrap_or(&Value::Null), y.get(k).unwrap_or(&Value::Null), out);
            }
        }
        (Value::Array(x), Value::Array(y)) if x.len() == y.len() => {
            for (i, (p, q)) in x.iter().zip(y).enumerate() {
                diff(&format!("{prefix}/{i}"), p, q, out);
            }
        }
        _ if a != b => out.push(if prefix.is_empty() { "/".into() } else { prefix.into() }),
        _ => {}
    }
}
