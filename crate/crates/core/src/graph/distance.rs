use std::collections::VecDeque;

use super::Graph;

/// Shortest-path lengths between all vertex pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceTable {
    /// Stored for pairs in different components.
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn order(&self) -> usize {
        self.n
    }

    /// Raw entry; [`Self::UNREACHABLE`] for pairs in different components.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.raw(u, v);
        (d != Self::UNREACHABLE).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(|&d| d != Self::UNREACHABLE)
    }

    /// Sum of distances from `v` to every other vertex, or `None` if some
    /// vertex is unreachable.
    pub fn transmission(&self, v: usize) -> Option<u64> {
        (0..self.n).map(|u| self.get(v, u).map(u64::from)).sum()
    }

    pub fn transmissions(&self) -> Option<Vec<u64>> {
        (0..self.n).map(|v| self.transmission(v)).collect()
    }

    pub fn diameter(&self) -> Option<u32> {
        if !self.is_connected() {
            return None;
        }
        Some(self.dist.iter().copied().max().unwrap_or(0))
    }
}

/// Breadth-first search from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceTable {
    let n = g.order();
    let mut dist = vec![DistanceTable::UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            let next = row[v] + 1;
            for u in g.neighbors(v) {
                if row[u] == DistanceTable::UNREACHABLE {
                    row[u] = next;
                    queue.push_back(u);
                }
            }
        }
    }
    DistanceTable { n, dist }
}
