use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// All maximal cliques of the graph induced on `universe`, where `adj[v]`
/// is the neighborhood of `v`. Bron–Kerbosch with Tomita pivoting.
pub(crate) fn maximal_cliques_in(adj: &[VertexSet], universe: VertexSet) -> Vec<VertexSet> {
    fn expand(
        adj: &[VertexSet],
        r: VertexSet,
        mut p: VertexSet,
        mut x: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| p.intersection(adj[u]).len())
            .expect("p is nonempty");
        for v in p.difference(adj[pivot]) {
            expand(
                adj,
                r.with(v),
                p.intersection(adj[v]),
                x.intersection(adj[v]),
                out,
            );
            p.remove(v);
            x.insert(v);
        }
    }

    let mut out = Vec::new();
    if universe.is_empty() {
        return out;
    }
    let adj: Vec<VertexSet> = adj.iter().map(|a| a.intersection(universe)).collect();
    expand(&adj, VertexSet::empty(), universe, VertexSet::empty(), &mut out);
    out
}

/// Maximal cliques of `g`, each as a vertex set.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let adj: Vec<VertexSet> = (0..g.order()).map(|v| g.neighbors(v)).collect();
    maximal_cliques_in(&adj, g.vertices())
}
