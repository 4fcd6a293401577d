//! Seeded random graphs for tests and experiments.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{precondition, Result};
use crate::graph::{edge_connectivity_at_least, Multigraph};

const MAX_ATTEMPTS: usize = 100_000;

fn normalized(n: usize, mut edges: Vec<(usize, usize)>) -> Multigraph {
    for e in edges.iter_mut() {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    edges.sort_unstable();
    Multigraph::from_edges(n, &edges)
}

/// A cubic 3-edge-connected multigraph on `n` vertices: a random Hamilton
/// cycle plus a random perfect matching, resampled until 3-edge-connected.
/// Deterministic per `(n, seed)`.
pub fn generate_random_cubic(n: usize, seed: u64) -> Result<Multigraph> {
    if n < 4 || !n.is_multiple_of(2) {
        return precondition("vertex count must be even and at least 4");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
        let mut pairing: Vec<usize> = (0..n).collect();
        pairing.shuffle(&mut rng);
        edges.extend(pairing.chunks(2).map(|p| (p[0], p[1])));
        let g = normalized(n, edges);
        if edge_connectivity_at_least(&g, 3) {
            return Ok(g);
        }
    }
    precondition("no 3-edge-connected sample found")
}

/// A 3-edge-connected multigraph without loops on `n` vertices and `m`
/// edges with minimum degree at least 3: a random Hamilton cycle plus random
/// chords, resampled until the conditions hold.
pub fn generate_random_3_edge_connected(n: usize, m: usize, seed: u64) -> Result<Multigraph> {
    if n < 2 || 2 * m < 3 * n {
        return precondition("need at least two vertices and 2m >= 3n");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut edges: Vec<(usize, usize)> =
            if n == 2 { vec![(order[0], order[1])] } else { (0..n).map(|i| (order[i], order[(i + 1) % n])).collect() };
        while edges.len() < m {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b {
                edges.push((a, b));
            }
        }
        let g = normalized(n, edges);
        if g.vertices().all(|v| g.degree(v) >= 3) && edge_connectivity_at_least(&g, 3) {
            return Ok(g);
        }
    }
    precondition("no 3-edge-connected sample found")
}
