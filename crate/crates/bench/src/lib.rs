//! Deterministic workloads shared by the benchmarks.

use cospec::graph::emit_graph6;
use cospec::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// G(n, p) with a fixed seed.
pub fn random_graph(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// `count` random graphs on `n` vertices as graph6 lines.
pub fn graph6_stream(seed: u64, count: usize, n: usize) -> String {
    (0..count)
        .map(|i| emit_graph6(&random_graph(seed + i as u64, n, 0.5)) + "\n")
        .collect()
}
