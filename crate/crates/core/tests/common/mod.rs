#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sing_core::{IntCycle, ResolutionGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random tree (uniform parent attachment) with Euler numbers in
/// `[lo, hi]`, redrawn until the form is negative definite.
pub fn random_graph(rng: &mut ChaCha8Rng, max_vertices: usize, lo: i64, hi: i64) -> ResolutionGraph {
    loop {
        let n = rng.random_range(1..=max_vertices);
        let eulers: Vec<i64> = (0..n).map(|_| rng.random_range(lo..=hi)).collect();
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
        if let Ok(g) = ResolutionGraph::from_eulers(&eulers, &edges) {
            return g;
        }
    }
}

pub fn random_cycle(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> IntCycle {
    IntCycle((0..n).map(|_| rng.random_range(lo..=hi)).collect())
}

/// Every cycle `0 ≤ c ≤ top`, by plain nested counting.
pub fn all_below(top: &IntCycle) -> Vec<IntCycle> {
    let mut out = vec![Vec::new()];
    for &t in &top.0 {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=t).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(IntCycle).collect()
}

/// Path of a shipped sample graph file.
pub fn sample(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/samples").join(name)
}
