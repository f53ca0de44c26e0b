//! Blow-ups of resolution graphs and the induced pullback of cycles.

use crate::cohomology::GenericStructure;
use crate::cycle::{q, IntCycle, RatCycle, Q};
use crate::error::{Error, Result};
use crate::lattice::{RawGraph, ResolutionGraph};
use crate::opt::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Center {
    /// The intersection point of two adjacent curves.
    Edge(usize, usize),
    /// A generic point of one curve.
    Vertex(usize),
}

#[derive(Clone, Debug)]
pub struct BlowupResult {
    pub graph: ResolutionGraph,
    /// Index of the new `(-1)`-curve in `graph`.
    pub new_vertex: usize,
    /// Old vertex index → new vertex index.
    pub map: Vec<usize>,
    /// Blown-up centre, in old indices.
    pub center: Center,
}

impl BlowupResult {
    /// `π*`: the new coordinate is the sum of the coordinates of the curves
    /// through the centre.
    pub fn pullback(&self, l: &IntCycle) -> IntCycle {
        let mut out = vec![0i64; self.graph.len()];
        for (old, &new) in self.map.iter().enumerate() {
            out[new] = l[old];
        }
        out[self.new_vertex] = match self.center {
            Center::Edge(u, v) => l[u] + l[v],
            Center::Vertex(v) => l[v],
        };
        IntCycle(out)
    }

    pub fn pullback_rat(&self, l: &RatCycle) -> RatCycle {
        let mut out = vec![q(0); self.graph.len()];
        for (old, &new) in self.map.iter().enumerate() {
            out[new] = l[old].clone();
        }
        out[self.new_vertex] = match self.center {
            Center::Edge(u, v) => &l[u] + &l[v],
            Center::Vertex(v) => l[v].clone(),
        };
        RatCycle(out)
    }

    pub fn new_unit(&self) -> IntCycle {
        self.graph.unit(self.new_vertex)
    }
}

fn fresh_id(g: &ResolutionGraph, stem: &str) -> String {
    (1..)
        .map(|k| format!("{stem}.{k}"))
        .find(|id| g.vertex(id).is_err())
        .expect("unbounded id supply")
}

fn finish(g: &ResolutionGraph, raw: RawGraph, new_id: &str, center: Center) -> Result<BlowupResult> {
    let graph = ResolutionGraph::validate(&raw)?;
    let map = g.ids().iter().map(|id| graph.vertex(id)).collect::<Result<Vec<_>>>()?;
    let new_vertex = graph.vertex(new_id)?;
    Ok(BlowupResult { graph, new_vertex, map, center })
}

/// Blows up the intersection point of `E_u` and `E_v`.
pub fn blowup_edge(g: &ResolutionGraph, u: usize, v: usize) -> Result<BlowupResult> {
    if u == v || !g.is_edge(u, v) {
        return Err(Error::NotAnEdge(g.id(u).to_string(), g.id(v).to_string()));
    }
    let mut raw = g.to_raw();
    let new_id = fresh_id(g, &format!("{}~{}", g.id(u.min(v)), g.id(u.max(v))));
    for x in &mut raw.vertices {
        if x.id == g.id(u) || x.id == g.id(v) {
            x.euler -= 1;
        }
    }
    raw.edges.retain(|(a, b)| !((a == g.id(u) && b == g.id(v)) || (a == g.id(v) && b == g.id(u))));
    raw = raw.vertex(new_id.clone(), -1).edge(g.id(u), new_id.clone()).edge(g.id(v), new_id.clone());
    finish(g, raw, &new_id, Center::Edge(u, v))
}

/// Blows up a generic point of `E_v`; the new curve is a leaf attached to `v`.
pub fn blowup_vertex(g: &ResolutionGraph, v: usize) -> Result<BlowupResult> {
    if v >= g.len() {
        return Err(Error::InvalidInput(format!("vertex index {v} out of range")));
    }
    let mut raw = g.to_raw();
    let new_id = fresh_id(g, g.id(v));
    for x in &mut raw.vertices {
        if x.id == g.id(v) {
            x.euler -= 1;
        }
    }
    raw = raw.vertex(new_id.clone(), -1).edge(g.id(v), new_id.clone());
    finish(g, raw, &new_id, Center::Vertex(v))
}

/// `t` successive blow-ups along a curvette transversal to `E_v`: first at a
/// generic point of `E_v`, then each time at a generic point of the newest
/// curve.
#[derive(Clone, Debug)]
pub struct ChainBlowup {
    pub graph: ResolutionGraph,
    /// Indices (in `graph`) of `E_{v_1}, …, E_{v_t}`.
    pub chain: Vec<usize>,
    steps: Vec<BlowupResult>,
}

impl ChainBlowup {
    /// The composite pullback `b_t*`.
    pub fn pullback_rat(&self, l: &RatCycle) -> RatCycle {
        self.steps.iter().fold(l.clone(), |acc, s| s.pullback_rat(&acc))
    }

    pub fn pullback(&self, l: &IntCycle) -> IntCycle {
        self.steps.iter().fold(l.clone(), |acc, s| s.pullback(&acc))
    }

    pub fn steps(&self) -> &[BlowupResult] {
        &self.steps
    }
}

pub fn iterated_blowup_chain(g: &ResolutionGraph, v: usize, t: usize) -> Result<ChainBlowup> {
    if t == 0 {
        return Err(Error::InvalidInput("the number of blow-ups must be positive".into()));
    }
    let mut steps: Vec<BlowupResult> = Vec::with_capacity(t);
    let mut chain: Vec<usize> = Vec::with_capacity(t);
    let mut cur = g.clone();
    let mut at = v;
    for _ in 0..t {
        let b = blowup_vertex(&cur, at)?;
        for c in chain.iter_mut() {
            *c = b.map[*c];
        }
        chain.push(b.new_vertex);
        at = b.new_vertex;
        cur = b.graph.clone();
        steps.push(b);
    }
    Ok(ChainBlowup { graph: cur, chain, steps })
}

pub const DEFAULT_STEP_CAP: usize = 16;

/// One step of [`simple_base_multiplicity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityStep {
    pub step: usize,
    pub h1: i64,
    pub expected: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplicity {
    pub t: usize,
    pub base_h1: i64,
    pub steps: Vec<MultiplicityStep>,
}

/// The multiplicity `t` of a simple base point of `O(-l')` at a generic
/// point of `E_v`: the largest `i` such that the class
/// `b_i*(l') + Σ_{j≤i} j·E_{v_j}` on the `i`-fold chain blow-up has
/// `h¹ = h¹(O(-l')) + i`, checked for `i = 1, 2, …` until the first failure.
pub fn simple_base_multiplicity(
    s: &GenericStructure,
    l: &RatCycle,
    v: usize,
    cap: usize,
) -> Result<Multiplicity> {
    let g = s.graph();
    g.check_rat(l)?;
    if !s.semigroup_member(l)? {
        return Err(Error::FormulaNotApplicable(
            "the Chern class is not in the analytic semigroup".into(),
        ));
    }
    let base_h1 = s.h1_resolution_natural(l)?;
    let mut steps = Vec::new();
    if g.pairing(l, &g.unit(v).to_rat()) >= Q::from_integer(0.into()) {
        return Ok(Multiplicity { t: 0, base_h1, steps });
    }
    let limits: Limits = *s.limits();
    for i in 1..=cap {
        let chain = iterated_blowup_chain(g, v, i)?;
        let mut class = chain.pullback_rat(l);
        for (j, &w) in chain.chain.iter().enumerate() {
            class.0[w] += q(j as i64 + 1);
        }
        let t = GenericStructure::with_options(chain.graph.clone(), limits, s.engine());
        let h1 = t.h1_resolution_natural(&class)?;
        let expected = base_h1 + i as i64;
        steps.push(MultiplicityStep { step: i, h1, expected });
        if h1 != expected {
            return Ok(Multiplicity { t: i - 1, base_h1, steps });
        }
    }
    Err(Error::StepCapReached(cap))
}
