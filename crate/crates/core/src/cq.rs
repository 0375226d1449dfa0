//! Co-visible (c_Q-visible) sets.
//!
//! For a reference set `Q`, a set `W` outside `Q` is c_Q-visible when every
//! pair inside `W` and every pair in `Q × W` is Q-visible. It is absolute
//! when `Q` itself is a mutual-visibility set. Because both conditions are
//! pairwise, the c_Q-visible sets are exactly the cliques of the
//! compatibility graph on the admissible vertices, and the maximal absolute
//! sets are its maximal cliques.

use crate::cliques::maximal_cliques_in;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::vertex_set::{subsets_of_size, VertexSet};
use crate::visibility::{all_pairs_visible, is_mv_set, pair_visible};
use crate::Limits;

fn check_outside(g: &Graph, q: VertexSet, w: VertexSet) -> Result<()> {
    g.check_set(q)?;
    g.check_set(w)?;
    if !q.is_disjoint(w) {
        return Err(Error::invalid(format!(
            "{w} overlaps the reference set {q}"
        )));
    }
    Ok(())
}

fn check_reference(g: &Graph, q: VertexSet) -> Result<()> {
    g.check_set(q)?;
    if q.is_empty() {
        return Err(Error::invalid("reference set Q must be nonempty"));
    }
    Ok(())
}

/// Every pair inside `w` is `q`-visible.
pub fn is_q_visible_set(g: &Graph, dm: &DistanceMatrix, q: VertexSet, w: VertexSet) -> Result<bool> {
    check_outside(g, q, w)?;
    Ok(all_pairs_visible(g, dm, w, q))
}

fn sees_reference(g: &Graph, dm: &DistanceMatrix, q: VertexSet, v: usize) -> bool {
    q.iter().all(|u| pair_visible(g, dm, u, v, q))
}

pub fn is_cq_visible(g: &Graph, dm: &DistanceMatrix, q: VertexSet, w: VertexSet) -> Result<bool> {
    check_outside(g, q, w)?;
    Ok(all_pairs_visible(g, dm, w, q) && w.iter().all(|v| sees_reference(g, dm, q, v)))
}

pub fn is_absolute_cq_visible(
    g: &Graph,
    dm: &DistanceMatrix,
    q: VertexSet,
    w: VertexSet,
) -> Result<bool> {
    Ok(is_cq_visible(g, dm, q, w)? && is_mv_set(g, dm, q))
}

/// Vertices outside `q` that form a c_Q-visible singleton.
pub fn admissible_vertices(g: &Graph, dm: &DistanceMatrix, q: VertexSet) -> Result<VertexSet> {
    check_reference(g, q)?;
    Ok(g
        .vertices()
        .difference(q)
        .iter()
        .filter(|&v| sees_reference(g, dm, q, v))
        .collect())
}

/// Rows indexed by original vertex: the admissible vertices each one is
/// `q`-visible with.
fn compatibility_rows(g: &Graph, dm: &DistanceMatrix, q: VertexSet, admissible: VertexSet) -> Vec<VertexSet> {
    let mut rows = vec![VertexSet::empty(); g.order()];
    for u in admissible {
        for v in admissible.iter().filter(|&v| v > u) {
            if pair_visible(g, dm, u, v, q) {
                rows[u].insert(v);
                rows[v].insert(u);
            }
        }
    }
    rows
}

/// The compatibility graph on the admissible vertices, relabeled densely.
/// `labels[i]` is the original vertex behind vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityGraph {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl CompatibilityGraph {
    pub fn to_original(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|i| self.labels[i]).collect()
    }
}

/// `None` when no vertex is admissible.
pub fn compatibility_graph(
    g: &Graph,
    dm: &DistanceMatrix,
    q: VertexSet,
) -> Result<Option<CompatibilityGraph>> {
    let admissible = admissible_vertices(g, dm, q)?;
    if admissible.is_empty() {
        return Ok(None);
    }
    let labels = admissible.to_vec();
    let rows = compatibility_rows(g, dm, q, admissible);
    let mut edges = Vec::new();
    for (i, &u) in labels.iter().enumerate() {
        for (j, &v) in labels.iter().enumerate().skip(i + 1) {
            if rows[u].contains(v) {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::from_edges(labels.len(), &edges)?;
    Ok(Some(CompatibilityGraph { graph, labels }))
}

/// The maximal absolute c_Q-visible sets of a reference set `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaFamily {
    pub q: VertexSet,
    /// Sorted by size, then lexicographically.
    pub members: Vec<VertexSet>,
}

impl GammaFamily {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_pairwise_disjoint(&self) -> bool {
        self.members
            .iter()
            .enumerate()
            .all(|(i, a)| self.members[i + 1..].iter().all(|b| a.is_disjoint(*b)))
    }
}

/// Empty when `q` is not a mutual-visibility set or nothing is admissible.
pub fn maximal_absolute_cq_sets(g: &Graph, dm: &DistanceMatrix, q: VertexSet) -> Result<GammaFamily> {
    check_reference(g, q)?;
    if q == g.vertices() {
        return Err(Error::invalid("reference set Q must be a proper subset"));
    }
    let mut members = Vec::new();
    if is_mv_set(g, dm, q) {
        let admissible = admissible_vertices(g, dm, q)?;
        let rows = compatibility_rows(g, dm, q, admissible);
        members = maximal_cliques_in(&rows, admissible);
        members.sort_by(VertexSet::canonical_cmp);
    }
    Ok(GammaFamily { q, members })
}

/// The maximal absolute c_Q-visible sets of `q` are pairwise disjoint.
pub fn is_disjoint_visible(g: &Graph, dm: &DistanceMatrix, q: VertexSet) -> Result<bool> {
    check_reference(g, q)?;
    if q == g.vertices() {
        return Ok(true);
    }
    Ok(maximal_absolute_cq_sets(g, dm, q)?.is_pairwise_disjoint())
}

/// The first reference set, by size and then lexicographically, that is not
/// disjoint-visible. `None` means the graph is absolute-clear.
pub fn absolute_clear_witness(
    g: &Graph,
    dm: &DistanceMatrix,
    limits: &Limits,
) -> Result<Option<VertexSet>> {
    let n = g.order();
    if n > limits.max_order {
        return Err(Error::LimitExceeded {
            what: "absolute-clear scan over a graph",
            size: n,
            limit: limits.max_order,
        });
    }
    // Q = V(G) has nothing outside it, so sizes stop at n - 1.
    for k in 1..n {
        for q in subsets_of_size(g.vertices(), k) {
            if !is_disjoint_visible(g, dm, q)? {
                return Ok(Some(q));
            }
        }
    }
    Ok(None)
}

pub fn is_absolute_clear(g: &Graph, dm: &DistanceMatrix, limits: &Limits) -> Result<bool> {
    Ok(absolute_clear_witness(g, dm, limits)?.is_none())
}
