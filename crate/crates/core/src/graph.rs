//! Simple undirected graphs on at most [`MAX_ORDER`] vertices, with the
//! standard families, the corona product and hop distances.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest order representable with one-word adjacency rows.
pub const MAX_ORDER: usize = VertexSet::CAPACITY;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::empty(); n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Returns a copy of `self` with the edge `u-v` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|a| a.contains(v))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, a)| {
            a.iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count() == n * (n - 1) / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).min() {
            None => Ok(()),
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            }),
        }
    }

    /// Vertices reachable from `source` without entering `blocked`.
    fn reachable(&self, source: usize, blocked: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(source);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for w in frontier {
                next = next.union(self.adj[w]);
            }
            frontier = next.difference(seen).difference(blocked);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Hop distance from `from` to `to` in the graph with `blocked` deleted.
    /// Endpoints are never treated as blocked.
    pub fn masked_distance(&self, from: usize, to: usize, blocked: VertexSet) -> Option<u32> {
        let blocked = blocked.without(from).without(to);
        let mut seen = VertexSet::singleton(from);
        let mut frontier = seen;
        let mut dist = 0;
        while !frontier.is_empty() {
            if frontier.contains(to) {
                return Some(dist);
            }
            let mut next = VertexSet::empty();
            for w in frontier {
                next = next.union(self.adj[w]);
            }
            frontier = next.difference(seen).difference(blocked);
            seen = seen.union(frontier);
            dist += 1;
        }
        None
    }

    /// One search from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        self.reachable(0, VertexSet::empty()) == self.vertices()
    }

    fn ensure_connected(&self) -> Result<()> {
        let seen = self.reachable(0, VertexSet::empty());
        match self.vertices().difference(seen).min() {
            None => Ok(()),
            Some(unreached) => Err(Error::Disconnected {
                reached: 0,
                unreached,
            }),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Path,
    Cycle,
    Complete,
}

pub fn standard_graph(kind: StandardKind, n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    match kind {
        StandardKind::Path => {
            for i in 1..n {
                g.add_edge(i - 1, i)?;
            }
        }
        StandardKind::Cycle => {
            if n < 3 {
                return Err(Error::CycleTooShort(n));
            }
            for i in 1..n {
                g.add_edge(i - 1, i)?;
            }
            g.add_edge(0, n - 1)?;
        }
        StandardKind::Complete => {
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    standard_graph(StandardKind::Path, n)
}

pub fn cycle(n: usize) -> Result<Graph> {
    standard_graph(StandardKind::Cycle, n)
}

pub fn complete(n: usize) -> Result<Graph> {
    standard_graph(StandardKind::Complete, n)
}

/// Vertex layout of a corona product: the base graph first, then one block
/// of `copy_order` vertices per base vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoronaLabeling {
    base_order: usize,
    copy_order: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoronaPosition {
    Base(usize),
    /// Vertex `j` of the copy attached to base vertex `w`.
    Copy(usize, usize),
}

impl CoronaLabeling {
    pub fn new(base_order: usize, copy_order: usize) -> Self {
        CoronaLabeling {
            base_order,
            copy_order,
        }
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn copy_order(&self) -> usize {
        self.copy_order
    }

    pub fn order(&self) -> usize {
        self.base_order * (1 + self.copy_order)
    }

    pub fn base(&self, w: usize) -> usize {
        debug_assert!(w < self.base_order);
        w
    }

    pub fn copy(&self, w: usize, j: usize) -> usize {
        debug_assert!(w < self.base_order && j < self.copy_order);
        self.base_order + w * self.copy_order + j
    }

    pub fn position(&self, index: usize) -> Option<CoronaPosition> {
        if index < self.base_order {
            Some(CoronaPosition::Base(index))
        } else if index < self.order() {
            let off = index - self.base_order;
            Some(CoronaPosition::Copy(
                off / self.copy_order,
                off % self.copy_order,
            ))
        } else {
            None
        }
    }

    pub fn base_vertices(&self) -> VertexSet {
        VertexSet::full(self.base_order)
    }

    /// Vertices of the copy attached to base vertex `w`.
    pub fn copy_block(&self, w: usize) -> VertexSet {
        let start = self.copy(w, 0);
        VertexSet::from_bits(VertexSet::full(self.copy_order).bits() << start)
    }

    pub fn all_copies(&self) -> VertexSet {
        VertexSet::full(self.order()).difference(self.base_vertices())
    }
}

/// The corona `g ⊙ h`: `g` plus one copy of `h` per vertex `w` of `g`, with
/// `w` joined to every vertex of its copy.
pub fn corona(g: &Graph, h: &Graph) -> Result<(Graph, CoronaLabeling)> {
    let labels = CoronaLabeling::new(g.order(), h.order());
    let mut out = Graph::empty(labels.order())?;
    for (u, v) in g.edges() {
        out.add_edge(labels.base(u), labels.base(v))?;
    }
    for w in 0..g.order() {
        for (i, j) in h.edges() {
            out.add_edge(labels.copy(w, i), labels.copy(w, j))?;
        }
        for j in 0..h.order() {
            out.add_edge(labels.base(w), labels.copy(w, j))?;
        }
    }
    Ok((out, labels))
}

/// All-pairs hop distances of a connected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u32]> = self.d.chunks(self.n).collect();
        f.debug_struct("DistanceMatrix").field("d", &rows).finish()
    }
}

pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    g.ensure_connected()?;
    let n = g.order();
    let mut d = vec![0u32; n * n];
    for s in 0..n {
        let mut seen = VertexSet::singleton(s);
        let mut frontier = seen;
        let mut level = 0;
        while !frontier.is_empty() {
            for v in frontier {
                d[s * n + v] = level;
            }
            let mut next = VertexSet::empty();
            for w in frontier {
                next = next.union(g.neighbors(w));
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
            level += 1;
        }
    }
    Ok(DistanceMatrix { n, d })
}

/// `diam_G(X)`: largest distance in `g` between two members of `x`.
pub fn induced_diameter(dm: &DistanceMatrix, x: VertexSet) -> Result<u32> {
    if x.is_empty() {
        return Err(Error::invalid("diameter of an empty vertex set is undefined"));
    }
    if let Some(v) = x.max().filter(|&v| v >= dm.order()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: dm.order(),
        });
    }
    let mut best = 0;
    for u in x {
        for v in x {
            best = best.max(dm.get(u, v));
        }
    }
    Ok(best)
}
