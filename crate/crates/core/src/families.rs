//! Standard graph families. Vertex ids are `v0, v1, …` in the order the
//! vertices are listed below.

use crate::lattice::ResolutionGraph;

/// Builds a graph that is known to be valid; panics otherwise.
pub fn from_edges(eulers: &[i64], edges: &[(usize, usize)]) -> ResolutionGraph {
    ResolutionGraph::from_eulers(eulers, edges).expect("family graph must be valid")
}

/// A path `v0 - v1 - … ` with the given Euler numbers.
pub fn chain(eulers: &[i64]) -> ResolutionGraph {
    let edges: Vec<_> = (1..eulers.len()).map(|i| (i - 1, i)).collect();
    from_edges(eulers, &edges)
}

/// A star with centre `v0` and one single-vertex leg per entry of `legs`.
pub fn star(center: i64, legs: &[i64]) -> ResolutionGraph {
    let mut eulers = vec![center];
    eulers.extend_from_slice(legs);
    let edges: Vec<_> = (1..eulers.len()).map(|i| (0, i)).collect();
    from_edges(&eulers, &edges)
}

pub fn a_n(n: usize) -> ResolutionGraph {
    chain(&vec![-2; n])
}

/// `D_n` (n ≥ 4): a chain `v0 … v{n-2}` plus `v{n-1}` attached to `v{n-3}`.
pub fn d_n(n: usize) -> ResolutionGraph {
    assert!(n >= 4);
    let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
    edges.push((n - 3, n - 1));
    from_edges(&vec![-2; n], &edges)
}

/// `E_n` (n = 6, 7, 8): a chain `v0 … v{n-2}` plus `v{n-1}` attached to `v2`.
fn e_n(n: usize) -> ResolutionGraph {
    let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
    edges.push((2, n - 1));
    from_edges(&vec![-2; n], &edges)
}

pub fn e6() -> ResolutionGraph {
    e_n(6)
}

pub fn e7() -> ResolutionGraph {
    e_n(7)
}

pub fn e8() -> ResolutionGraph {
    e_n(8)
}

/// The minimally elliptic star with a `-1` centre and three `-4` legs.
pub fn star_1_444() -> ResolutionGraph {
    star(-1, &[-4, -4, -4])
}
