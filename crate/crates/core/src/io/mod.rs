//! The plain-text graph format and JSON reports.
//!
//! ```text
//! # comment
//! vertex a euler=-2
//! vertex b euler=-3 genus=0
//! edge a b
//! cycle Z a=1 b=2
//! ```

pub mod report;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::cycle::IntCycle;
use crate::error::{Error, Result};
use crate::lattice::{RawGraph, RawVertex, ResolutionGraph};

/// A graph file before validation: named cycles keep their raw coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawGraphFile {
    pub graph: RawGraph,
    pub cycles: BTreeMap<String, BTreeMap<String, i64>>,
}

#[derive(Clone, Debug)]
pub struct GraphFile {
    pub graph: ResolutionGraph,
    pub cycles: BTreeMap<String, IntCycle>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

/// Whitespace-separated tokens with their 1-based columns, up to a `#`.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &body[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &body[s..]));
    }
    out.into_iter().map(|(s, t)| (body[..s].chars().count() + 1, t)).collect()
}

fn parse_id(line: usize, tok: Option<&(usize, &str)>, col: usize, what: &str) -> Result<String> {
    match tok {
        None => Err(syntax(line, col, format!("missing {what}"))),
        Some(&(c, t)) if t.contains('=') => Err(syntax(line, c, format!("expected {what}, found `{t}`"))),
        Some(&(_, t)) => Ok(t.to_string()),
    }
}

fn parse_assignment(line: usize, col: usize, tok: &str) -> Result<(String, i64)> {
    let Some((k, v)) = tok.split_once('=') else {
        return Err(syntax(line, col, format!("expected `key=value`, found `{tok}`")));
    };
    if k.is_empty() {
        return Err(syntax(line, col, "empty key"));
    }
    let v = v
        .parse::<i64>()
        .map_err(|_| syntax(line, col + k.chars().count() + 1, format!("`{v}` is not an integer")))?;
    Ok((k.to_string(), v))
}

/// Reads the document without validating the graph.
pub fn parse_raw(doc: &str) -> Result<RawGraphFile> {
    let mut out = RawGraphFile::default();
    let mut cycle_lines: Vec<(usize, usize, String, Vec<(usize, String, i64)>)> = Vec::new();
    for (i, line) in doc.lines().enumerate() {
        let ln = i + 1;
        let toks = tokens(line);
        let Some(&(col, head)) = toks.first() else { continue };
        let end = line.split('#').next().unwrap_or("").trim_end().chars().count() + 1;
        match head {
            "vertex" => {
                let id = parse_id(ln, toks.get(1), end, "vertex id")?;
                let (mut euler, mut genus) = (None, None);
                for &(c, t) in &toks[2..] {
                    let (k, v) = parse_assignment(ln, c, t)?;
                    let slot = match k.as_str() {
                        "euler" => &mut euler,
                        "genus" => &mut genus,
                        _ => return Err(syntax(ln, c, format!("unknown attribute `{k}`"))),
                    };
                    if slot.replace(v).is_some() {
                        return Err(syntax(ln, c, format!("attribute `{k}` given twice")));
                    }
                }
                let euler = euler.ok_or_else(|| syntax(ln, end, "missing `euler=<int>`"))?;
                out.graph.vertices.push(RawVertex { id, euler, genus: genus.unwrap_or(0) });
            }
            "edge" => {
                let a = parse_id(ln, toks.get(1), end, "edge endpoint")?;
                let b = parse_id(ln, toks.get(2), end, "second edge endpoint")?;
                if let Some(&(c, t)) = toks.get(3) {
                    return Err(syntax(ln, c, format!("unexpected `{t}` after edge")));
                }
                out.graph.edges.push((a, b));
            }
            "cycle" => {
                let name = parse_id(ln, toks.get(1), end, "cycle name")?;
                let mut coeffs = Vec::new();
                for &(c, t) in &toks[2..] {
                    let (k, v) = parse_assignment(ln, c, t)?;
                    coeffs.push((c, k, v));
                }
                cycle_lines.push((ln, toks[1].0, name, coeffs));
            }
            _ => return Err(syntax(ln, col, format!("unknown directive `{head}`"))),
        }
    }
    for (ln, col, name, coeffs) in cycle_lines {
        if out.cycles.contains_key(&name) {
            return Err(syntax(ln, col, format!("cycle `{name}` defined twice")));
        }
        let mut map = BTreeMap::new();
        for (c, k, v) in coeffs {
            if !out.graph.vertices.iter().any(|x| x.id == k) {
                return Err(syntax(ln, c, format!("unknown vertex `{k}`")));
            }
            if map.insert(k.clone(), v).is_some() {
                return Err(syntax(ln, c, format!("coefficient of `{k}` given twice")));
            }
        }
        out.cycles.insert(name, map);
    }
    Ok(out)
}

/// Parses and validates a graph file.
pub fn parse_graph_file(doc: &str) -> Result<GraphFile> {
    let raw = parse_raw(doc)?;
    let graph = ResolutionGraph::validate(&raw.graph)?;
    let cycles = raw
        .cycles
        .iter()
        .map(|(k, m)| Ok((k.clone(), graph.int_cycle(m)?)))
        .collect::<Result<_>>()?;
    Ok(GraphFile { graph, cycles })
}

/// Canonical text: vertices sorted by id, then edges (endpoints ordered,
/// edges sorted), then cycles by name with nonzero coefficients only.
pub fn emit_raw(f: &RawGraphFile) -> String {
    let mut s = String::new();
    let mut vs: Vec<&RawVertex> = f.graph.vertices.iter().collect();
    vs.sort_by(|a, b| a.id.cmp(&b.id));
    for v in vs {
        let _ = write!(s, "vertex {} euler={}", v.id, v.euler);
        if v.genus != 0 {
            let _ = write!(s, " genus={}", v.genus);
        }
        s.push('\n');
    }
    let mut es: Vec<(&String, &String)> =
        f.graph.edges.iter().map(|(a, b)| if a <= b { (a, b) } else { (b, a) }).collect();
    es.sort();
    for (a, b) in es {
        let _ = writeln!(s, "edge {a} {b}");
    }
    for (name, m) in &f.cycles {
        s.push_str("cycle ");
        s.push_str(name);
        for (k, v) in m.iter().filter(|(_, v)| **v != 0) {
            let _ = write!(s, " {k}={v}");
        }
        s.push('\n');
    }
    s
}

pub fn to_raw_file(f: &GraphFile) -> RawGraphFile {
    RawGraphFile {
        graph: f.graph.to_raw(),
        cycles: f.cycles.iter().map(|(k, c)| (k.clone(), f.graph.cycle_map(c))).collect(),
    }
}

pub fn emit_graph_file(f: &GraphFile) -> String {
    emit_raw(&to_raw_file(f))
}

/// Equality up to vertex order and edge orientation.
pub fn same_file(a: &GraphFile, b: &GraphFile) -> bool {
    emit_graph_file(a) == emit_graph_file(b)
}
