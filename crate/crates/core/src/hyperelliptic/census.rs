//! Exhaustive search for classified instances over small trees.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use super::{classify_pair, classify_single, with_towers, G12Report, Mode, Status};
use crate::cohomology::{Engine, GenericStructure};
use crate::cycle::IntCycle;
use crate::error::{Error, Result};
use crate::lattice::ResolutionGraph;
use crate::opt::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeFilter {
    Pair,
    Single,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusParams {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub euler_min: i64,
    pub euler_max: i64,
    /// Upper bound on every coefficient of the candidate cycles.
    pub coeff_cap: i64,
    /// Keep only reports with this status (`None` keeps everything).
    pub target: Option<Status>,
    pub modes: ModeFilter,
    /// Recompute every kept report with the exhaustive engine.
    pub verify: bool,
    /// Attach cycle towers to kept reports.
    pub towers: bool,
}

impl Default for CensusParams {
    fn default() -> Self {
        CensusParams {
            min_vertices: 1,
            max_vertices: 7,
            euler_min: -5,
            euler_max: -1,
            coeff_cap: 4,
            target: None,
            modes: ModeFilter::Both,
            verify: true,
            towers: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    /// Canonical encoding of the decorated tree.
    pub key: String,
    pub graph: ResolutionGraph,
    pub report: G12Report,
    /// Whether the exhaustive engine reproduced status and e-values.
    pub verified: Option<bool>,
}

#[derive(Clone, Debug, Default)]
pub struct Census {
    /// Unlabelled tree shapes.
    pub shapes: u64,
    /// Decorated trees up to isomorphism.
    pub decorated: u64,
    pub negative_definite: u64,
    /// Graphs with `Z_K ≥ E`; only these can carry a full-support cycle with
    /// a regular canonical section.
    pub canonical_ge_reduced: u64,
    pub cycles_tested: u64,
    pub regular_cycles: u64,
    /// Per status, number of classified (cycle, vertex choice) pairs.
    pub counts: BTreeMap<Status, u64>,
    pub instances: Vec<Instance>,
    pub discrepancies: u64,
}

fn validate_params(p: &CensusParams) -> Result<()> {
    if p.min_vertices == 0 || p.min_vertices > p.max_vertices {
        return Err(Error::InvalidInput("vertex bounds must satisfy 1 <= min <= max".into()));
    }
    if p.max_vertices > 10 {
        return Err(Error::InvalidInput("at most 10 vertices are supported".into()));
    }
    if p.euler_min > p.euler_max || p.euler_max > -1 {
        return Err(Error::InvalidInput("Euler range must lie in the negative integers".into()));
    }
    if p.coeff_cap < 1 {
        return Err(Error::InvalidInput("coefficient cap must be positive".into()));
    }
    Ok(())
}

/// Runs the search. Output order is deterministic.
pub fn enumerate_instances(p: &CensusParams, limits: &Limits) -> Result<Census> {
    validate_params(p)?;
    let mut census = Census::default();
    let mut graphs: Vec<(Vec<i64>, Vec<(usize, usize)>)> = Vec::new();
    for n in p.min_vertices..=p.max_vertices {
        let shapes = tree_shapes(n);
        census.shapes += shapes.len() as u64;
        for edges in shapes {
            let adj = adjacency(n, &edges);
            let auts = automorphisms(&adj);
            let width = (p.euler_max - p.euler_min + 1) as usize;
            let total = width.pow(n as u32);
            let mut eulers = vec![0i64; n];
            for code in 0..total {
                let mut c = code;
                for e in eulers.iter_mut() {
                    *e = p.euler_min + (c % width) as i64;
                    c /= width;
                }
                // One representative per orbit: the lexicographically least.
                if auts.iter().any(|a| a.iter().map(|&v| eulers[v]).lt(eulers.iter().copied())) {
                    continue;
                }
                census.decorated += 1;
                if !negative_definite(&eulers, &edges) {
                    continue;
                }
                graphs.push((eulers.clone(), edges.clone()));
            }
        }
    }
    census.negative_definite = graphs.len() as u64;

    let results: Vec<Result<GraphOutcome>> =
        graphs.par_iter().map(|(e, ed)| examine(e, ed, p, limits)).collect();
    for r in results {
        let o = r?;
        if !o.zk_ok {
            continue;
        }
        census.canonical_ge_reduced += 1;
        census.cycles_tested += o.cycles_tested;
        census.regular_cycles += o.regular;
        for (st, k) in o.counts {
            *census.counts.entry(st).or_default() += k;
        }
        census.discrepancies += o.instances.iter().filter(|i| i.verified == Some(false)).count() as u64;
        census.instances.extend(o.instances);
    }
    census.instances.sort_by(|a, b| {
        (a.graph.len(), &a.key, &a.report.z, a.report.mode).cmp(&(b.graph.len(), &b.key, &b.report.z, b.report.mode))
    });
    Ok(census)
}

struct GraphOutcome {
    zk_ok: bool,
    cycles_tested: u64,
    regular: u64,
    counts: BTreeMap<Status, u64>,
    instances: Vec<Instance>,
}

fn examine(eulers: &[i64], edges: &[(usize, usize)], p: &CensusParams, limits: &Limits) -> Result<GraphOutcome> {
    let mut out = GraphOutcome { zk_ok: false, cycles_tested: 0, regular: 0, counts: BTreeMap::new(), instances: vec![] };
    if !canonical_at_least_reduced(&matrix(eulers, edges), eulers) {
        return Ok(out);
    }
    let n = eulers.len();
    let labels: Vec<String> = eulers.iter().map(|e| e.to_string()).collect();
    let (key, order) = canonical_form(&adjacency(n, edges), &labels);
    let key = key.as_str();
    let (eulers, edges) = relabel(eulers, edges, &order);
    let m = matrix(&eulers, &edges);
    let g = ResolutionGraph::from_eulers(&eulers, &edges)?;
    let top: Vec<i64> = g
        .canonical_cycle()
        .0
        .iter()
        .map(|c| c.floor().to_integer().try_into().unwrap_or(i64::MAX).min(p.coeff_cap))
        .collect();
    if top.iter().any(|&c| c < 1) {
        return Ok(out);
    }
    out.zk_ok = true;
    let s = GenericStructure::with_options(g.clone(), *limits, Engine::Pruned);
    let oracle = p.verify.then(|| GenericStructure::with_options(g.clone(), *limits, Engine::Exhaustive));
    let mut cur = vec![1i64; n];
    loop {
        out.cycles_tested += 1;
        // (Z - Z_K, E_v) = (Z, E_v) - e_v - 2 ≥ 0 everywhere.
        let local = (0..n).all(|v| {
            let p: i64 = m[v][v] * cur[v] + g.neighbors(v).iter().map(|&w| cur[w]).sum::<i64>();
            p >= m[v][v] + 2
        });
        if local {
            classify_cycle(&s, oracle.as_ref(), &g, key, IntCycle(cur.clone()), p, &mut out)?;
        }
        if !next_in_box(&mut cur, &top) {
            break;
        }
    }
    Ok(out)
}

fn matrix(eulers: &[i64], edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let n = eulers.len();
    let mut m = vec![vec![0i64; n]; n];
    for v in 0..n {
        m[v][v] = eulers[v];
    }
    for &(a, b) in edges {
        m[a][b] = 1;
        m[b][a] = 1;
    }
    m
}

/// Automorphisms of a small tree, by backtracking over adjacency-preserving
/// assignments.
pub fn automorphisms(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn extend(adj: &[Vec<usize>], image: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let v = image.len();
        if v == adj.len() {
            out.push(image.clone());
            return;
        }
        for w in 0..adj.len() {
            if used[w] || adj[w].len() != adj[v].len() {
                continue;
            }
            let ok = (0..v).all(|u| adj[v].contains(&u) == adj[w].contains(&image[u]));
            if ok {
                used[w] = true;
                image.push(w);
                extend(adj, image, used, out);
                image.pop();
                used[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(adj, &mut Vec::new(), &mut vec![false; adj.len()], &mut out);
    out
}

/// Lexicographic successor in `[1, top]`, last coordinate fastest.
fn next_in_box(cur: &mut [i64], top: &[i64]) -> bool {
    for v in (0..cur.len()).rev() {
        if cur[v] < top[v] {
            cur[v] += 1;
            return true;
        }
        cur[v] = 1;
    }
    false
}

fn classify_cycle(
    s: &GenericStructure,
    oracle: Option<&GenericStructure>,
    g: &ResolutionGraph,
    key: &str,
    z: IntCycle,
    p: &CensusParams,
    out: &mut GraphOutcome,
) -> Result<()> {
    let n = g.len();
    {
        if !s.has_regular_canonical_section(&z)? {
            return Ok(());
        }
        out.regular += 1;
        let ones: Vec<usize> = (0..n).filter(|&v| z[v] == 1).collect();
        let mut reports = Vec::new();
        if p.modes != ModeFilter::Single {
            let mut seen = HashSet::new();
            for (i, &a) in ones.iter().enumerate() {
                for &b in &ones[i + 1..] {
                    if !seen.insert(marked_key(g, &z, &[a, b])) {
                        continue;
                    }
                    let (ea, eb) = (s.e_z(&z, &[a])?, s.e_z(&z, &[b])?);
                    let (u1, u2) = if eb > ea { (b, a) } else { (a, b) };
                    reports.push(classify_pair(s, &z, u1, u2)?);
                }
            }
        }
        if p.modes != ModeFilter::Pair {
            let mut seen = HashSet::new();
            for &u in &ones {
                if seen.insert(marked_key(g, &z, &[u])) {
                    reports.push(classify_single(s, &z, u)?);
                }
            }
        }
        for r in reports {
            *out.counts.entry(r.status).or_default() += 1;
            if p.target.is_some_and(|t| t != r.status) {
                continue;
            }
            let verified = match oracle {
                Some(o) => Some(reverify(o, &r)?),
                None => None,
            };
            let report = if p.towers { with_towers(s, r)? } else { r };
            out.instances.push(Instance { key: key.to_string(), graph: g.clone(), report, verified });
        }
    }
    Ok(())
}

/// Recomputes the report with another engine and compares the decision data.
pub fn reverify(oracle: &GenericStructure, r: &G12Report) -> Result<bool> {
    let again = match r.mode {
        Mode::Pair(a, b) => classify_pair(oracle, &r.z, a, b)?,
        Mode::Single(u) => classify_single(oracle, &r.z, u)?,
    };
    Ok(again.status == r.status && again.e == r.e && again.checks == r.checks)
}

fn marked_key(g: &ResolutionGraph, z: &IntCycle, marked: &[usize]) -> String {
    let n = g.len();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let labels: Vec<String> = (0..n)
        .map(|v| format!("{}:{}{}", g.euler(v), z[v], if marked.contains(&v) { "*" } else { "" }))
        .collect();
    canonical_form(&adj, &labels).0
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// Unlabelled trees on `n` vertices, one edge list per isomorphism class.
pub fn tree_shapes(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 1 {
        return vec![vec![]];
    }
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let total = n.pow((n - 2) as u32);
    let blank = vec![String::new(); n];
    for code in 0..total {
        let mut c = code;
        let seq: Vec<usize> = (0..n - 2)
            .map(|_| {
                let x = c % n;
                c /= n;
                x
            })
            .collect();
        let edges = prufer_edges(n, &seq);
        let (key, order) = canonical_form(&adjacency(n, &edges), &blank);
        if seen.insert(key) {
            let zeros = vec![0i64; n];
            out.push(relabel(&zeros, &edges, &order).1);
        }
    }
    out
}

fn prufer_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Canonical encoding of a labelled tree (minimal rooted encoding over the
/// centre vertices) and the vertex order it induces.
pub fn canonical_form(adj: &[Vec<usize>], labels: &[String]) -> (String, Vec<usize>) {
    centers(adj)
        .into_iter()
        .map(|r| {
            let mut order = Vec::with_capacity(adj.len());
            let code = encode(adj, labels, r, usize::MAX, &mut order);
            (code, order)
        })
        .min()
        .expect("a tree has a centre")
}

fn encode(adj: &[Vec<usize>], labels: &[String], v: usize, parent: usize, order: &mut Vec<usize>) -> String {
    let mut kids: Vec<(String, Vec<usize>)> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| {
            let mut o = Vec::new();
            (encode(adj, labels, w, v, &mut o), o)
        })
        .collect();
    kids.sort();
    let mut s = format!("({}", labels[v]);
    order.push(v);
    for (k, o) in kids {
        s.push_str(&k);
        order.extend(o);
    }
    s.push(')');
    s
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn relabel(eulers: &[i64], edges: &[(usize, usize)], order: &[usize]) -> (Vec<i64>, Vec<(usize, usize)>) {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let e = order.iter().map(|&v| eulers[v]).collect();
    let mut ed: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
        .collect();
    ed.sort_unstable();
    (e, ed)
}

/// Leading minors alternate in sign, by fraction-free elimination in `i128`.
fn negative_definite(eulers: &[i64], edges: &[(usize, usize)]) -> bool {
    let m = matrix(eulers, edges);
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut prev = 1i128;
    for k in 0..n {
        let minor = a[k][k];
        let want_negative = k % 2 == 0;
        if (want_negative && minor >= 0) || (!want_negative && minor <= 0) {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    true
}

/// Floating-point screen for `Z_K ≥ E` (with a margin; the exact value is
/// recomputed afterwards).
fn canonical_at_least_reduced(m: &[Vec<i64>], eulers: &[i64]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<f64> = r.iter().map(|&x| x as f64).collect();
            row.push((eulers[i] + 2) as f64);
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n)
            .max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs()))
            .expect("nonempty");
        a.swap(c, piv);
        for r in 0..n {
            if r != c {
                let f = a[r][c] / a[c][c];
                for k in c..=n {
                    a[r][k] -= f * a[c][k];
                }
            }
        }
    }
    (0..n).all(|v| a[v][n] / a[v][v] >= 1.0 - 1e-6)
}
