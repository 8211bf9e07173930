#![allow(dead_code)]

use std::collections::HashMap;

use cospec::graph::is_isomorphic;
use cospec::{Graph, SwapPlan};
use rand::seq::SliceRandom;
use rand::Rng;

/// Cheap isomorphism invariant used to bucket candidates.
fn signature(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let deg = g.degrees();
    let mut sig: Vec<(usize, Vec<usize>)> = (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| deg[u]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    sig.sort();
    sig
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// built by adding a vertex with every possible neighborhood to each class
/// on `n - 1` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut classes = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut buckets: HashMap<Vec<(usize, Vec<usize>)>, Vec<Graph>> = HashMap::new();
        let mut next = Vec::new();
        for g in &classes {
            for mask in 0u32..(1 << (k - 1)) {
                let mut h = Graph::empty(k);
                for (u, v) in g.edges() {
                    h.add_edge(u, v).unwrap();
                }
                for u in 0..k - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, k - 1).unwrap();
                    }
                }
                let bucket = buckets.entry(signature(&h)).or_default();
                if !bucket.iter().any(|b| is_isomorphic(b, &h).unwrap()) {
                    bucket.push(h.clone());
                    next.push(h);
                }
            }
        }
        classes = next;
    }
    classes
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Every labeled graph on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap()
    })
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
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

/// A random tree plus extra edges, so always connected.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: f64) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(extra) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// No edges between the sets; outside attachment sizes sometimes equal.
    Twins,
    /// A random swap-invariant bipartite graph between the sets.
    Bipartite,
    /// `G₁[V₁ ∪ V₂]` forced regular by rejection.
    Regular,
    /// The base graph has an automorphism exchanging the sets, which makes
    /// them co-transmission cousins.
    Mirror,
}

pub const MODES: [Mode; 4] = [Mode::Twins, Mode::Bipartite, Mode::Regular, Mode::Mirror];

pub const MAX_PLANTED_N: usize = 14;

fn random_house<R: Rng>(rng: &mut R, m: usize, edges: Option<usize>) -> Graph {
    let mut all: Vec<(usize, usize)> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
    all.shuffle(rng);
    let k = edges.unwrap_or_else(|| rng.gen_range(0..=all.len()));
    Graph::from_edges(m, all.into_iter().take(k)).unwrap()
}

/// Two different houses, with equal edge counts when `same_size`.
fn house_pair<R: Rng>(rng: &mut R, m: usize, same_size: bool) -> (Graph, Graph) {
    loop {
        let h1 = random_house(rng, m, None);
        let h2 = if same_size {
            random_house(rng, m, Some(h1.size()))
        } else {
            random_house(rng, m, None)
        };
        if h1 != h2 {
            return (h1, h2);
        }
    }
}

/// Swap-invariant edges between `V₁ = 0..m` and `V₂ = m..2m`, where the
/// swap is `i ↔ 2m−1−i`.
fn invariant_bipartite<R: Rng>(rng: &mut R, m: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..m {
            // V1[i]–V2[j] maps to V1[m−1−j]–V2[m−1−i]; decide each orbit once.
            let (ii, jj) = (m - 1 - j, m - 1 - i);
            if (ii, jj) < (i, j) {
                continue;
            }
            if rng.gen_bool(p) {
                edges.push((i, m + j));
                if (ii, jj) != (i, j) {
                    edges.push((ii, m + jj));
                }
            }
        }
    }
    edges
}

fn subset<R: Rng>(rng: &mut R, pool: &[usize], size: usize) -> Vec<usize> {
    let mut v = pool.to_vec();
    v.shuffle(rng);
    v.truncate(size.max(1));
    v
}

#[allow(clippy::too_many_arguments)]
fn build(
    n: usize,
    m: usize,
    outside: &Graph,
    s1: &[usize],
    s2: &[usize],
    bip: &[(usize, usize)],
    h1: Graph,
    h2: Graph,
) -> SwapPlan {
    let off = 2 * m;
    let mut base = Graph::empty(n);
    for (u, v) in outside.edges() {
        base.add_edge(off + u, off + v).unwrap();
    }
    for i in 0..m {
        for &x in s1 {
            base.add_edge(i, off + x).unwrap();
        }
        for &x in s2 {
            base.add_edge(m + i, off + x).unwrap();
        }
    }
    for &(a, b) in bip {
        base.add_edge(a, b).unwrap();
    }
    let v1: Vec<usize> = (0..m).collect();
    let v2: Vec<usize> = (m..2 * m).collect();
    SwapPlan::new(base, v1, v2, None, h1, h2, None, None).expect("planted plan is valid")
}

/// A random valid plan of the given flavor on at most [`MAX_PLANTED_N`]
/// vertices, with `V₁ = 0..m`, `V₂ = m..2m` and `H₁ ≠ H₂`.
///
/// Regular houses of equal size on two vertices are equal, so the regular
/// flavor raises `m = 2` to 3.
pub fn planted<R: Rng>(rng: &mut R, mode: Mode, m: usize) -> SwapPlan {
    assert!((2..=4).contains(&m));
    let m = if mode == Mode::Regular { m.max(3) } else { m };
    let room = MAX_PLANTED_N - 2 * m;
    match mode {
        Mode::Twins | Mode::Bipartite => {
            let k = rng.gen_range(2..=room);
            let outside = { let r = rng.gen_range(0.0..0.5); random_connected(rng, k, r) };
            let pool: Vec<usize> = (0..k).collect();
            let a = rng.gen_range(1..=k);
            let b = if rng.gen_bool(0.6) { a } else { rng.gen_range(1..=k) };
            let s1 = subset(rng, &pool, a);
            let s2 = subset(rng, &pool, b);
            let bip = if mode == Mode::Bipartite {
                { let r = rng.gen_range(0.2..0.9); invariant_bipartite(rng, m, r) }
            } else {
                Vec::new()
            };
            let (h1, h2) = house_pair(rng, m, false);
            build(2 * m + k, m, &outside, &s1, &s2, &bip, h1, h2)
        }
        Mode::Regular => {
            let k = rng.gen_range(2..=room);
            let outside = { let r = rng.gen_range(0.0..0.5); random_connected(rng, k, r) };
            let pool: Vec<usize> = (0..k).collect();
            let a = rng.gen_range(1..=k);
            let s1 = subset(rng, &pool, a);
            let s2 = subset(rng, &pool, a);
            loop {
                let bip = { let r = rng.gen_range(0.2..1.0); invariant_bipartite(rng, m, r) };
                let (h1, h2) = house_pair(rng, m, true);
                let mut deg = vec![0usize; 2 * m];
                for &(a, b) in &bip {
                    deg[a] += 1;
                    deg[b] += 1;
                }
                for (u, v) in h1.edges() {
                    deg[u] += 1;
                    deg[v] += 1;
                }
                for (u, v) in h2.edges() {
                    deg[m + u] += 1;
                    deg[m + v] += 1;
                }
                if deg.windows(2).all(|w| w[0] == w[1]) {
                    return build(2 * m + k, m, &outside, &s1, &s2, &bip, h1, h2);
                }
            }
        }
        Mode::Mirror => {
            let h = rng.gen_range(1..=room / 2);
            let half = { let r = rng.gen_range(0.0..0.5); random_connected(rng, h, r) };
            let mut outside = Graph::empty(2 * h);
            for (u, v) in half.edges() {
                outside.add_edge(u, v).unwrap();
                outside.add_edge(h + u, h + v).unwrap();
            }
            let cross = { let r = rng.gen_range(1..=h); subset(rng, &(0..h).collect::<Vec<_>>(), r) };
            for &y in &cross {
                outside.add_edge(y, h + y).unwrap();
            }
            let s1 = { let r = rng.gen_range(1..=h); subset(rng, &(0..h).collect::<Vec<_>>(), r) };
            let s2: Vec<usize> = s1.iter().map(|&y| h + y).collect();
            let bip = { let r = rng.gen_range(0.0..0.8); invariant_bipartite(rng, m, r) };
            let (h1, h2) = house_pair(rng, m, false);
            build(2 * m + 2 * h, m, &outside, &s1, &s2, &bip, h1, h2)
        }
    }
}
