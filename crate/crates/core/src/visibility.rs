//! Visibility predicates and enumeration of mutual-visibility sets.
//!
//! A pair `u, v` is X-visible when some geodesic between them has no
//! internal vertex in X. We decide this by deleting `X \ {u, v}` and checking
//! that the distance survives.

use crate::error::{Error, Result};
use crate::graph::{induced_diameter, DistanceMatrix, Graph};
use crate::polynomial::Polynomial;
use crate::vertex_set::VertexSet;
use crate::Limits;

/// Unchecked pair test shared by the other modules.
pub(crate) fn pair_visible(g: &Graph, dm: &DistanceMatrix, u: usize, v: usize, x: VertexSet) -> bool {
    if g.has_edge(u, v) {
        return true;
    }
    g.masked_distance(u, v, x) == Some(dm.get(u, v))
}

/// Every pair of members of `w` is visible with respect to `x`.
pub(crate) fn all_pairs_visible(g: &Graph, dm: &DistanceMatrix, w: VertexSet, x: VertexSet) -> bool {
    let members = w.to_vec();
    members.iter().enumerate().all(|(i, &u)| {
        members[i + 1..]
            .iter()
            .all(|&v| pair_visible(g, dm, u, v, x))
    })
}

pub fn is_pair_x_visible(
    g: &Graph,
    dm: &DistanceMatrix,
    u: usize,
    v: usize,
    x: VertexSet,
) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    g.check_set(x)?;
    if u == v {
        return Err(Error::invalid(format!(
            "visibility needs two distinct vertices, got {u} twice"
        )));
    }
    Ok(pair_visible(g, dm, u, v, x))
}

/// `u` sees every member of `x` with respect to `x`.
pub fn is_vertex_x_visible(g: &Graph, dm: &DistanceMatrix, u: usize, x: VertexSet) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_set(x)?;
    if x.contains(u) {
        return Err(Error::invalid(format!("vertex {u} belongs to {x}")));
    }
    Ok(x.iter().all(|v| pair_visible(g, dm, u, v, x)))
}

/// Every pair of `s` is `s`-visible. Sets with fewer than two members
/// qualify trivially.
pub fn is_mv_set(g: &Graph, dm: &DistanceMatrix, s: VertexSet) -> bool {
    all_pairs_visible(g, dm, s, s)
}

/// Mutual-visibility sets tallied by size and by diameter in the host graph.
///
/// Row 0 holds the empty set, which is filed under diameter 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaTable {
    counts: Vec<Vec<u64>>,
}

impl ThetaTable {
    fn new(diameter: u32) -> Self {
        let mut counts = vec![vec![0; diameter as usize + 1]];
        counts[0][0] = 1;
        ThetaTable { counts }
    }

    fn record(&mut self, size: usize, diameter: u32) {
        let width = self.counts[0].len();
        while self.counts.len() <= size {
            self.counts.push(vec![0; width]);
        }
        self.counts[size][diameter as usize] += 1;
    }

    /// Number of mutual-visibility sets of `size` vertices with diameter `d`.
    pub fn count(&self, size: usize, d: usize) -> u64 {
        self.counts
            .get(size)
            .and_then(|row| row.get(d))
            .copied()
            .unwrap_or(0)
    }

    pub fn size_total(&self, size: usize) -> u64 {
        self.counts.get(size).map_or(0, |row| row.iter().sum())
    }

    /// Largest size of a mutual-visibility set.
    pub fn max_size(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn max_diameter(&self) -> usize {
        self.counts[0].len() - 1
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.counts
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_coeffs(self.counts.iter().map(|row| row.iter().sum::<u64>()))
    }

    /// Sets of diameter at most `d`, plus the empty set.
    pub fn restricted_polynomial(&self, d: usize) -> Polynomial {
        let mut coeffs = vec![1u64];
        coeffs.extend(
            self.counts[1..]
                .iter()
                .map(|row| row.iter().take(d + 1).sum::<u64>()),
        );
        Polynomial::from_coeffs(coeffs)
    }
}

fn check_order(g: &Graph, limits: &Limits) -> Result<()> {
    if g.order() > limits.max_order {
        return Err(Error::LimitExceeded {
            what: "mutual-visibility enumeration over a graph",
            size: g.order(),
            limit: limits.max_order,
        });
    }
    Ok(())
}

/// Visits every nonempty mutual-visibility set of `g` once.
///
/// Sets grow by vertices larger than their current maximum and a branch is
/// cut as soon as it stops being a mutual-visibility set; the family is
/// closed under taking subsets, so nothing is missed.
pub fn for_each_mv_set<F>(g: &Graph, dm: &DistanceMatrix, limits: &Limits, mut visit: F) -> Result<()>
where
    F: FnMut(VertexSet),
{
    check_order(g, limits)?;
    fn extend<F: FnMut(VertexSet)>(g: &Graph, dm: &DistanceMatrix, s: VertexSet, start: usize, visit: &mut F) {
        for v in start..g.order() {
            let t = s.with(v);
            if is_mv_set(g, dm, t) {
                visit(t);
                extend(g, dm, t, v + 1, visit);
            }
        }
    }
    extend(g, dm, VertexSet::empty(), 0, &mut visit);
    Ok(())
}

/// Collects every mutual-visibility set of `g`, the empty set included.
pub fn mv_sets(g: &Graph, dm: &DistanceMatrix, limits: &Limits) -> Result<Vec<VertexSet>> {
    let mut out = vec![VertexSet::empty()];
    for_each_mv_set(g, dm, limits, |s| out.push(s))?;
    Ok(out)
}

pub fn enumerate_mv_sets(g: &Graph, dm: &DistanceMatrix, limits: &Limits) -> Result<ThetaTable> {
    let mut table = ThetaTable::new(dm.diameter());
    let mut failure = None;
    for_each_mv_set(g, dm, limits, |s| match induced_diameter(dm, s) {
        Ok(d) => table.record(s.len(), d),
        Err(e) => failure = Some(e),
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(table),
    }
}

pub fn visibility_polynomial(g: &Graph, dm: &DistanceMatrix, limits: &Limits) -> Result<Polynomial> {
    Ok(enumerate_mv_sets(g, dm, limits)?.polynomial())
}

/// Counts only mutual-visibility sets whose diameter in `g` is at most
/// `max_diameter`. Values above `diam(g)` give the full polynomial.
pub fn restricted_visibility_polynomial(
    g: &Graph,
    dm: &DistanceMatrix,
    max_diameter: usize,
    limits: &Limits,
) -> Result<Polynomial> {
    Ok(enumerate_mv_sets(g, dm, limits)?.restricted_polynomial(max_diameter))
}

/// The mutual-visibility number of `g`.
pub fn mu(g: &Graph, dm: &DistanceMatrix, limits: &Limits) -> Result<usize> {
    Ok(enumerate_mv_sets(g, dm, limits)?.max_size())
}

/// `w` lies on every geodesic between `u` and `v`.
fn is_shortest_separator(g: &Graph, dm: &DistanceMatrix, w: usize, u: usize, v: usize) -> bool {
    !pair_visible(g, dm, u, v, VertexSet::singleton(w))
}

/// Vertices that lie on every geodesic of at least one pair of other
/// vertices.
pub fn path_cut(g: &Graph, dm: &DistanceMatrix) -> VertexSet {
    let n = g.order();
    (0..n)
        .filter(|&w| {
            (0..n).any(|u| {
                u != w && (u + 1..n).any(|v| v != w && is_shortest_separator(g, dm, w, u, v))
            })
        })
        .collect()
}

/// `w` separates every pair in `a × b` along all of its geodesics.
pub fn is_set_separator(
    g: &Graph,
    dm: &DistanceMatrix,
    w: usize,
    a: VertexSet,
    b: VertexSet,
) -> Result<bool> {
    g.check_vertex(w)?;
    g.check_set(a)?;
    g.check_set(b)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::invalid("set-separator needs two nonempty sets"));
    }
    if !a.is_disjoint(b) {
        return Err(Error::invalid(format!("{a} and {b} are not disjoint")));
    }
    if a.union(b).contains(w) {
        return Err(Error::invalid(format!("separator {w} lies inside {}", a.union(b))));
    }
    Ok(a
        .iter()
        .all(|u| b.iter().all(|v| is_shortest_separator(g, dm, w, u, v))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, complete, cycle, path};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn poly(c: &[u64]) -> Polynomial {
        Polynomial::from_coeffs(c.iter().copied())
    }

    #[test]
    fn pair_visibility() {
        let p4 = path(4).unwrap();
        let dm = all_pairs_distances(&p4).unwrap();
        assert_eq!(is_pair_x_visible(&p4, &dm, 0, 2, set(&[1])), Ok(false));
        assert_eq!(is_pair_x_visible(&p4, &dm, 0, 1, p4.vertices()), Ok(true));
        assert!(is_pair_x_visible(&p4, &dm, 2, 2, set(&[])).is_err());

        let c6 = cycle(6).unwrap();
        let dm = all_pairs_distances(&c6).unwrap();
        assert_eq!(is_pair_x_visible(&c6, &dm, 5, 2, set(&[0, 1])), Ok(true));
    }

    #[test]
    fn vertex_visibility() {
        let p4 = path(4).unwrap();
        let dm = all_pairs_distances(&p4).unwrap();
        assert_eq!(is_vertex_x_visible(&p4, &dm, 1, set(&[0, 2])), Ok(true));
        assert_eq!(is_vertex_x_visible(&p4, &dm, 3, set(&[])), Ok(true));
        assert!(is_vertex_x_visible(&p4, &dm, 0, set(&[0])).is_err());

        let c8 = cycle(8).unwrap();
        let dm = all_pairs_distances(&c8).unwrap();
        assert_eq!(is_vertex_x_visible(&c8, &dm, 3, set(&[0, 2])), Ok(false));
    }

    #[test]
    fn small_polynomials() {
        let lim = Limits::default();
        let p3 = path(3).unwrap();
        let dm = all_pairs_distances(&p3).unwrap();
        assert_eq!(visibility_polynomial(&p3, &dm, &lim), Ok(poly(&[1, 3, 3])));

        let k3 = complete(3).unwrap();
        let dm = all_pairs_distances(&k3).unwrap();
        assert_eq!(visibility_polynomial(&k3, &dm, &lim), Ok(poly(&[1, 3, 3, 1])));

        let c4 = cycle(4).unwrap();
        let dm = all_pairs_distances(&c4).unwrap();
        let t = enumerate_mv_sets(&c4, &dm, &lim).unwrap();
        assert_eq!(t.polynomial(), poly(&[1, 4, 6, 4]));
        assert_eq!(t.count(1, 0), 4);
        assert_eq!(t.count(2, 1), 4);
        assert_eq!(t.count(2, 2), 2);
        assert_eq!(mu(&c4, &dm, &lim), Ok(3));
        assert!(!is_mv_set(&c4, &dm, c4.vertices()));
    }

    #[test]
    fn restricted() {
        let lim = Limits::default();
        let p4 = path(4).unwrap();
        let dm = all_pairs_distances(&p4).unwrap();
        assert_eq!(
            restricted_visibility_polynomial(&p4, &dm, 2, &lim),
            Ok(poly(&[1, 4, 5]))
        );
        assert_eq!(
            restricted_visibility_polynomial(&p4, &dm, 0, &lim),
            Ok(poly(&[1, 4]))
        );
        let k2 = complete(2).unwrap();
        let dm = all_pairs_distances(&k2).unwrap();
        assert_eq!(
            restricted_visibility_polynomial(&k2, &dm, 2, &lim),
            Ok(poly(&[1, 2, 1]))
        );
    }

    #[test]
    fn cap_is_enforced() {
        let p = path(10).unwrap();
        let dm = all_pairs_distances(&p).unwrap();
        let lim = Limits {
            max_order: 8,
            ..Limits::default()
        };
        assert!(matches!(
            enumerate_mv_sets(&p, &dm, &lim),
            Err(Error::LimitExceeded { size: 10, limit: 8, .. })
        ));
    }

    #[test]
    fn separators() {
        let c5 = cycle(5).unwrap();
        let dm = all_pairs_distances(&c5).unwrap();
        assert_eq!(path_cut(&c5, &dm), c5.vertices());

        let p4 = path(4).unwrap();
        let dm = all_pairs_distances(&p4).unwrap();
        assert_eq!(path_cut(&p4, &dm), set(&[1, 2]));
        assert_eq!(is_set_separator(&p4, &dm, 1, set(&[0]), set(&[2, 3])), Ok(true));
        assert!(is_set_separator(&p4, &dm, 1, set(&[1]), set(&[2])).is_err());
        assert!(is_set_separator(&p4, &dm, 0, set(&[1, 2]), set(&[2])).is_err());

        let c6 = cycle(6).unwrap();
        let dm = all_pairs_distances(&c6).unwrap();
        assert_eq!(is_set_separator(&c6, &dm, 1, set(&[0]), set(&[3])), Ok(false));

        let k4 = complete(4).unwrap();
        let dm = all_pairs_distances(&k4).unwrap();
        assert!(path_cut(&k4, &dm).is_empty());
    }
}
