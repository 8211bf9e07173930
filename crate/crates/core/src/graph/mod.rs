//! Simple undirected graphs on vertices `0..n`.
//!
//! Vertex order is significant everywhere in this crate: matrix rows follow
//! vertex identifiers, and relabeling only ever happens through an explicit
//! permutation or [`VertexMap`].

mod distance;
mod io;
mod iso;

pub use distance::{all_pairs_distances, DistanceTable};
pub use io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph, parse_graph6};
pub use iso::{find_isomorphism, is_isomorphic, MAX_ISO_ORDER};

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    size: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
            size: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v, true);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// Builds a graph from an edge iterator, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    fn set(&mut self, u: usize, v: usize, present: bool) {
        let was = self.adj[u * self.n + v];
        self.adj[u * self.n + v] = present;
        self.adj[v * self.n + u] = present;
        match (was, present) {
            (false, true) => self.size += 1,
            (true, false) => self.size -= 1,
            _ => {}
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.set(u, v, true);
        Ok(())
    }

    /// Removes `{u, v}`; returns whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.set(u, v, false);
        true
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u * self.n + v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter()
            .enumerate()
            .filter_map(|(u, &e)| if e { Some(u) } else { None })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v * self.n..(v + 1) * self.n]
            .iter()
            .filter(|&&e| e)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// The common degree if the graph is regular. The null graph counts as
    /// 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = (0..self.n).map(|v| self.degree(v));
        let first = match degrees.next() {
            Some(d) => d,
            None => return Some(0),
        };
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Relabels so that vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        let map = VertexMap::new(perm.to_vec(), self.n)?;
        if map.len() != self.n {
            return Err(Error::DimensionMismatch(map.len(), self.n));
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v], true);
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set(u + self.n, v + self.n, true);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// An injective map from `0..len` into the vertices of a target graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexMap {
    images: Vec<usize>,
}

impl VertexMap {
    pub fn new(images: Vec<usize>, target_order: usize) -> Result<Self> {
        let mut hit = vec![false; target_order];
        for &v in &images {
            if v >= target_order {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: target_order,
                });
            }
            if std::mem::replace(&mut hit[v], true) {
                return Err(Error::NotInjective(v));
            }
        }
        Ok(VertexMap { images })
    }

    pub fn identity(len: usize) -> Self {
        VertexMap {
            images: (0..len).collect(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `other ∘ self`: first apply `self`, then `other`.
    pub fn then(&self, other: impl Fn(usize) -> usize) -> VertexMap {
        VertexMap {
            images: self.images.iter().map(|&v| other(v)).collect(),
        }
    }
}

fn check_vertex_list(n: usize, vertices: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    for &v in vertices {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::DuplicateVertex(v));
        }
    }
    Ok(())
}

/// The subgraph induced on `vertices`, relabeled by position in the list.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Graph> {
    check_vertex_list(g.order(), vertices)?;
    let mut sub = Graph::empty(vertices.len());
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                sub.set(i, j, true);
            }
        }
    }
    Ok(sub)
}

/// `G + φ(E(H))`: adds the image of every edge of `h` under `phi` to `g`.
///
/// Gluing onto an edge that already exists is an error, never a merge, so
/// the result always has `|E(G)| + |E(H)|` edges.
pub fn glue(g: &Graph, h: &Graph, phi: &VertexMap) -> Result<Graph> {
    if phi.len() != h.order() {
        return Err(Error::DimensionMismatch(phi.len(), h.order()));
    }
    // Re-validate against this particular target.
    VertexMap::new(phi.images().to_vec(), g.order())?;
    let mut out = g.clone();
    for (a, b) in h.edges() {
        out.add_edge(phi.image(a), phi.image(b))?;
    }
    Ok(out)
}
