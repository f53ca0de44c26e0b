//! Resolution graphs and the lattice package attached to them: intersection
//! form, dual basis `E*_v`, canonical cycle `Z_K`, the Riemann–Roch function
//! `χ`, the Lipman cone and discriminant-group representatives.
//!
//! Vertices are kept in lexicographic order of their ids; every dense cycle
//! is indexed by that order.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use sha2::{Digest, Sha256};

use crate::cycle::{q, IntCycle, RatCycle, Q};
use crate::error::{Diagnostic, Error, Result};

/// Unvalidated graph description, as read from a file or built by hand.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawGraph {
    pub vertices: Vec<RawVertex>,
    pub edges: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawVertex {
    pub id: String,
    pub euler: i64,
    pub genus: i64,
}

impl RawGraph {
    pub fn vertex(mut self, id: impl Into<String>, euler: i64) -> Self {
        self.vertices.push(RawVertex { id: id.into(), euler, genus: 0 });
        self
    }

    pub fn edge(mut self, a: impl Into<String>, b: impl Into<String>) -> Self {
        self.edges.push((a.into(), b.into()));
        self
    }
}

/// The intersection matrix together with its exact inverse.
#[derive(Clone, Debug)]
pub struct IntersectionForm {
    pub matrix: Vec<Vec<i64>>,
    pub inverse: Vec<Vec<Q>>,
    pub det: BigInt,
}

/// A validated plumbing graph: a tree of rational curves with negative
/// definite intersection form.
#[derive(Clone, Debug)]
pub struct ResolutionGraph {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    euler: Vec<i64>,
    adj: Vec<Vec<usize>>,
    form: IntersectionForm,
    canonical: RatCycle,
    fingerprint: String,
}

impl ResolutionGraph {
    /// Validates a raw description, collecting every violated invariant.
    pub fn validate(raw: &RawGraph) -> Result<Self> {
        let mut diags = Vec::new();
        if raw.vertices.is_empty() {
            return Err(Error::Validation(vec![Diagnostic::Empty]));
        }
        let mut by_id: BTreeMap<&str, &RawVertex> = BTreeMap::new();
        for v in &raw.vertices {
            if by_id.insert(v.id.as_str(), v).is_some() {
                diags.push(Diagnostic::DuplicateVertex(v.id.clone()));
            }
            if v.genus != 0 {
                diags.push(Diagnostic::NonzeroGenus { vertex: v.id.clone(), genus: v.genus });
            }
        }
        let ids: Vec<String> = by_id.keys().map(|s| s.to_string()).collect();
        let index: HashMap<String, usize> =
            ids.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let euler: Vec<i64> = ids.iter().map(|s| by_id[s.as_str()].euler).collect();
        let n = ids.len();

        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for (a, b) in &raw.edges {
            let mut ok = true;
            for id in [a, b] {
                if !index.contains_key(id) {
                    diags.push(Diagnostic::UnknownEndpoint { edge: (a.clone(), b.clone()), id: id.clone() });
                    ok = false;
                }
            }
            if !ok {
                continue;
            }
            if a == b {
                diags.push(Diagnostic::SelfLoop(a.clone()));
                continue;
            }
            let (i, j) = (index[a], index[b]);
            if !seen.insert((i.min(j), i.max(j))) {
                diags.push(Diagnostic::DuplicateEdge(a.clone(), b.clone()));
                continue;
            }
            adj[i].push(j);
            adj[j].push(i);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        if !diags.is_empty() {
            return Err(Error::Validation(diags));
        }

        let mut reached = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        reached[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !reached[w] {
                    reached[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if let Some(v) = reached.iter().position(|r| !r) {
            diags.push(Diagnostic::Disconnected { unreached: ids[v].clone() });
        }
        if seen.len() != n - 1 {
            diags.push(Diagnostic::NotATree { edges: seen.len(), vertices: n });
        }

        let mut matrix = vec![vec![0i64; n]; n];
        for v in 0..n {
            matrix[v][v] = euler[v];
            for &w in &adj[v] {
                matrix[v][w] = 1;
            }
        }
        let minors = leading_minors(&matrix);
        for (k, m) in minors.iter().enumerate() {
            let order = k + 1;
            let want_negative = order % 2 == 1;
            let ok = if want_negative { m.is_negative() } else { m.is_positive() };
            if !ok {
                diags.push(Diagnostic::NotNegativeDefinite {
                    order,
                    last_vertex: ids[k].clone(),
                    minor: m.to_string(),
                });
                if order == n && m.is_zero() {
                    diags.push(Diagnostic::ZeroDeterminant);
                }
                break;
            }
        }
        if !diags.is_empty() {
            return Err(Error::Validation(diags));
        }

        let det = minors[n - 1].clone();
        let inverse = invert(&matrix);
        let canonical = RatCycle(
            (0..n)
                .map(|v| (0..n).map(|w| &inverse[v][w] * q(euler[w] + 2)).sum())
                .collect(),
        );
        let fingerprint = fingerprint_of(&ids, &euler, &adj);
        Ok(ResolutionGraph {
            ids,
            index,
            euler,
            adj,
            form: IntersectionForm { matrix, inverse, det },
            canonical,
            fingerprint,
        })
    }

    /// Convenience constructor from an euler list (ids `v0, v1, …`) and
    /// index pairs.
    pub fn from_eulers(eulers: &[i64], edges: &[(usize, usize)]) -> Result<Self> {
        let ids = default_ids(eulers.len());
        let mut raw = RawGraph::default();
        for (id, &e) in ids.iter().zip(eulers) {
            raw = raw.vertex(id.clone(), e);
        }
        for &(a, b) in edges {
            raw = raw.edge(ids[a].clone(), ids[b].clone());
        }
        Self::validate(&raw)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn vertex(&self, id: &str) -> Result<usize> {
        self.index.get(id).copied().ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn euler(&self, v: usize) -> i64 {
        self.euler[v]
    }

    pub fn eulers(&self) -> &[i64] {
        &self.euler
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn valency(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.len() {
            for &w in &self.adj[v] {
                if v < w {
                    out.push((v, w));
                }
            }
        }
        out
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn form(&self) -> &IntersectionForm {
        &self.form
    }

    /// Hex SHA-256 of the canonical vertex/edge description.
    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub fn to_raw(&self) -> RawGraph {
        RawGraph {
            vertices: (0..self.len())
                .map(|v| RawVertex { id: self.ids[v].clone(), euler: self.euler[v], genus: 0 })
                .collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|(a, b)| (self.ids[a].clone(), self.ids[b].clone()))
                .collect(),
        }
    }

    pub fn check_int(&self, l: &IntCycle) -> Result<()> {
        if l.len() != self.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), got: l.len() });
        }
        Ok(())
    }

    pub fn check_rat(&self, l: &RatCycle) -> Result<()> {
        if l.len() != self.len() {
            return Err(Error::DimensionMismatch { expected: self.len(), got: l.len() });
        }
        Ok(())
    }

    pub fn int_cycle(&self, coeffs: &BTreeMap<String, i64>) -> Result<IntCycle> {
        let mut c = IntCycle::zero(self.len());
        for (id, &k) in coeffs {
            c.0[self.vertex(id)?] = k;
        }
        Ok(c)
    }

    pub fn rat_cycle(&self, coeffs: &BTreeMap<String, Q>) -> Result<RatCycle> {
        let mut c = RatCycle::zero(self.len());
        for (id, k) in coeffs {
            c.0[self.vertex(id)?] = k.clone();
        }
        Ok(c)
    }

    pub fn cycle_map(&self, l: &IntCycle) -> BTreeMap<String, i64> {
        (0..self.len()).filter(|&v| l[v] != 0).map(|v| (self.ids[v].clone(), l[v])).collect()
    }

    pub fn unit(&self, v: usize) -> IntCycle {
        IntCycle::unit(self.len(), v)
    }

    /// The reduced exceptional cycle `E = Σ E_v`.
    pub fn reduced(&self) -> IntCycle {
        IntCycle(vec![1; self.len()])
    }

    /// `(E_v, a)` for every `v`, i.e. `I·a`.
    pub fn pairings_with_basis(&self, a: &RatCycle) -> Vec<Q> {
        (0..self.len())
            .map(|v| {
                let mut s = a[v].clone() * q(self.euler[v]);
                for &w in &self.adj[v] {
                    s += &a[w];
                }
                s
            })
            .collect()
    }

    pub fn pairing(&self, a: &RatCycle, b: &RatCycle) -> Q {
        self.pairings_with_basis(a).iter().zip(&b.0).map(|(x, y)| x * y).sum()
    }

    /// `(a, E_v)` for an integer cycle.
    pub fn pairing_unit_int(&self, a: &IntCycle, v: usize) -> i64 {
        self.euler[v] * a[v] + self.adj[v].iter().map(|&w| a[w]).sum::<i64>()
    }

    pub fn pairing_int(&self, a: &IntCycle, b: &IntCycle) -> i64 {
        (0..self.len()).map(|v| b[v] * self.pairing_unit_int(a, v)).sum()
    }

    /// `E*_v`, the column `v` of `-I⁻¹`.
    pub fn dual(&self, v: usize) -> RatCycle {
        RatCycle((0..self.len()).map(|w| -&self.form.inverse[w][v]).collect())
    }

    pub fn dual_basis(&self) -> Vec<RatCycle> {
        (0..self.len()).map(|v| self.dual(v)).collect()
    }

    /// `Σ_v a_v E*_v`.
    pub fn from_dual_coords(&self, a: &[Q]) -> RatCycle {
        let n = self.len();
        RatCycle(
            (0..n)
                .map(|w| (0..n).map(|v| -(&self.form.inverse[w][v] * &a[v])).sum())
                .collect(),
        )
    }

    /// The anticanonical cycle `Z_K`, `(Z_K, E_v) = (E_v, E_v) + 2`.
    pub fn canonical_cycle(&self) -> &RatCycle {
        &self.canonical
    }

    /// `χ(l') = -(l', l' - Z_K) / 2`.
    pub fn chi(&self, l: &RatCycle) -> Q {
        let diff = l - &self.canonical;
        -self.pairing(l, &diff) / q(2)
    }

    /// `χ` of an integer cycle; always an integer.
    pub fn chi_int(&self, l: &IntCycle) -> i64 {
        let ll = self.pairing_int(l, l);
        let lk: i64 = (0..self.len()).map(|v| l[v] * (self.euler[v] + 2)).sum();
        (lk - ll) / 2
    }

    pub fn in_dual_lattice(&self, l: &RatCycle) -> bool {
        self.pairings_with_basis(l).iter().all(|x| x.denom().is_one())
    }

    /// The representative of `[l'] ∈ L'/L` in the cube `[0, 1)^V`.
    pub fn class_rep(&self, l: &RatCycle) -> Result<RatCycle> {
        self.check_rat(l)?;
        if !self.in_dual_lattice(l) {
            return Err(Error::NotInDualLattice);
        }
        Ok(RatCycle(l.0.iter().map(|c| c - c.floor()).collect()))
    }

    /// Returns the `E*`-coordinates `a_v = -(l', E_v)` when `l'` lies in the
    /// Lipman cone, `None` otherwise.
    pub fn lipman_coordinates(&self, l: &RatCycle) -> Option<Vec<Q>> {
        let a: Vec<Q> = self.pairings_with_basis(l).into_iter().map(|x| -x).collect();
        a.iter().all(|x| !x.is_negative()).then_some(a)
    }

    pub fn in_lipman_cone(&self, l: &RatCycle) -> bool {
        self.lipman_coordinates(l).is_some()
    }

    /// `|det I|`, the order of `H = L'/L`.
    pub fn discriminant_order(&self) -> BigInt {
        self.form.det.abs()
    }

    /// Connected components of the subgraph induced on `keep`.
    pub fn components(&self, keep: &[bool]) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if !keep[s] || comp[s] != usize::MAX {
                continue;
            }
            let mut members = vec![s];
            comp[s] = out.len();
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &w in &self.adj[v] {
                    if keep[w] && comp[w] == usize::MAX {
                        comp[w] = out.len();
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected_support(&self, l: &IntCycle) -> bool {
        let keep: Vec<bool> = l.0.iter().map(|&c| c != 0).collect();
        self.components(&keep).len() == 1
    }

    /// Exact inverse of the principal submatrix on `keep` (indexed like the
    /// full matrix; rows/columns outside `keep` are zero).
    pub fn sub_inverse(&self, keep: &[bool]) -> Vec<Vec<Q>> {
        let n = self.len();
        let idx: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
        let sub: Vec<Vec<i64>> =
            idx.iter().map(|&i| idx.iter().map(|&j| self.form.matrix[i][j]).collect()).collect();
        let inv = invert(&sub);
        let mut out = vec![vec![Q::zero(); n]; n];
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out[i][j] = inv[a][b].clone();
            }
        }
        out
    }
}

/// Ids `v0, v1, …`, zero padded so that lexicographic and numeric order agree.
pub fn default_ids(n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("v{i:0width$}")).collect()
}

/// Leading principal minors via fraction-free elimination. Stops early (the
/// returned list is shorter) only after recording a zero minor.
fn leading_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> =
        m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        minors.push(a[k][k].clone());
        if a[k][k].is_zero() {
            return minors;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    minors
}

/// Gauss–Jordan inverse of an invertible integer matrix.
fn invert(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<Q> = r.iter().map(|&x| q(x)).collect();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("matrix is invertible");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

fn fingerprint_of(ids: &[String], euler: &[i64], adj: &[Vec<usize>]) -> String {
    let mut text = String::new();
    for (i, id) in ids.iter().enumerate() {
        text.push_str(&format!("v {id} {}\n", euler[i]));
    }
    for (i, nb) in adj.iter().enumerate() {
        for &j in nb {
            if i < j {
                text.push_str(&format!("e {} {}\n", ids[i], ids[j]));
            }
        }
    }
    hex::encode(Sha256::digest(text.as_bytes()))
}
