//! Exhaustive isomorphism testing for small graphs.
//!
//! Plain backtracking: vertices of the first graph are placed in
//! breadth-first order, candidates must agree on degree and on the sorted
//! degree list of their neighborhood, and every new assignment is checked
//! against all earlier ones.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_ISO_ORDER: usize = 12;

fn signature(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Placement order: BFS from a max-degree vertex in each component, so that
/// most vertices have an already-placed neighbor constraining them.
fn placement_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for root in by_degree {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut head = start;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    order: Vec<usize>,
    sig1: Vec<(usize, Vec<usize>)>,
    sig2: Vec<(usize, Vec<usize>)>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.g2.order() {
            if self.used[w] || self.sig1[v] != self.sig2[w] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                let image = self.map[u].expect("placed");
                self.g1.has_edge(u, v) == self.g2.has_edge(image, w)
            });
            if !consistent {
                continue;
            }
            self.map[v] = Some(w);
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[v] = None;
            self.used[w] = false;
        }
        false
    }
}

/// Returns `f` with `f[v]` the image of vertex `v` of `g1` in `g2`.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g1.order().max(g2.order());
    if n > MAX_ISO_ORDER {
        return Err(Error::SizeGuard {
            what: "isomorphism test order",
            value: n,
            limit: MAX_ISO_ORDER,
        });
    }
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return Ok(None);
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(None);
    }
    let n = g1.order();
    let mut search = Search {
        g1,
        g2,
        order: placement_order(g1),
        sig1: (0..n).map(|v| signature(g1, v)).collect(),
        sig2: (0..n).map(|v| signature(g2, v)).collect(),
        map: vec![None; n],
        used: vec![false; n],
    };
    if search.extend(0) {
        Ok(Some(search.map.into_iter().map(|w| w.expect("complete")).collect()))
    } else {
        Ok(None)
    }
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g1, g2)?.is_some())
}
