//! Brute-force oracles. Nothing here calls the library's visibility code:
//! distances come from Floyd–Warshall and visibility from listing every
//! geodesic explicitly.

#![allow(dead_code, clippy::needless_range_loop)]

use std::path::PathBuf;

use visipoly::{parse_graph6, Graph, Polynomial, VertexSet};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
        .join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).expect("fixture exists")
}

/// Connected graphs of the given order, one per isomorphism class.
pub fn connected_graphs(order: usize) -> Vec<Graph> {
    fixture_text(&format!("connected_order{order}.g6"))
        .lines()
        .map(|l| parse_graph6(l).expect("fixture parses"))
        .collect()
}

/// Every connected graph of order 2..=max_order.
pub fn corpus(max_order: usize) -> Vec<Graph> {
    (2..=max_order).flat_map(connected_graphs).collect()
}

pub fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

pub fn poly(c: &[i64]) -> Polynomial {
    Polynomial::from_coeffs(c.iter().copied())
}

pub const INF: u32 = u32::MAX / 4;

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every geodesic from `u` to `v`, as vertex sequences.
pub fn geodesics(g: &Graph, d: &[Vec<u32>], u: usize, v: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, d: &[Vec<u32>], at: usize, v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == v {
            out.push(path.clone());
            return;
        }
        for w in 0..g.order() {
            if g.has_edge(at, w) && d[w][v] + 1 == d[at][v] {
                path.push(w);
                go(g, d, w, v, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, d, u, v, &mut vec![u], &mut out);
    out
}

pub struct Oracle<'a> {
    pub g: &'a Graph,
    pub d: Vec<Vec<u32>>,
}

impl<'a> Oracle<'a> {
    pub fn new(g: &'a Graph) -> Self {
        Oracle {
            g,
            d: floyd_warshall(g),
        }
    }

    pub fn visible(&self, u: usize, v: usize, x: VertexSet) -> bool {
        geodesics(self.g, &self.d, u, v)
            .iter()
            .any(|p| p[1..p.len() - 1].iter().all(|w| !x.contains(*w)))
    }

    pub fn is_mv(&self, s: VertexSet) -> bool {
        let m = s.to_vec();
        m.iter()
            .enumerate()
            .all(|(i, &a)| m[i + 1..].iter().all(|&b| self.visible(a, b, s)))
    }

    pub fn all_subsets(&self) -> impl Iterator<Item = VertexSet> {
        (0u64..1 << self.g.order()).map(VertexSet::from_bits)
    }

    /// Coefficients of the visibility polynomial by filtering all subsets.
    pub fn visibility_coeffs(&self) -> Vec<i64> {
        let mut c = vec![0i64; self.g.order() + 1];
        for s in self.all_subsets().filter(|s| self.is_mv(*s)) {
            c[s.len()] += 1;
        }
        c
    }

    pub fn diameter_of(&self, s: VertexSet) -> u32 {
        let m = s.to_vec();
        let mut best = 0;
        for &a in &m {
            for &b in &m {
                best = best.max(self.d[a][b]);
            }
        }
        best
    }

    /// c_Q-visibility straight from the definition.
    pub fn is_cq(&self, q: VertexSet, w: VertexSet) -> bool {
        let wm = w.to_vec();
        let inside = wm
            .iter()
            .enumerate()
            .all(|(i, &a)| wm[i + 1..].iter().all(|&b| self.visible(a, b, q)));
        inside && q.iter().all(|u| w.iter().all(|v| self.visible(u, v, q)))
    }

    /// Maximal nonempty absolute c_Q-visible sets by scanning every subset
    /// of the complement.
    pub fn gamma(&self, q: VertexSet) -> Vec<VertexSet> {
        if !self.is_mv(q) {
            return Vec::new();
        }
        let comp = self.g.vertices().difference(q);
        let good: Vec<VertexSet> = self
            .all_subsets()
            .filter(|w| !w.is_empty() && w.is_subset(comp) && self.is_cq(q, *w))
            .collect();
        let mut maximal: Vec<VertexSet> = good
            .iter()
            .copied()
            .filter(|w| !good.iter().any(|b| b != w && w.is_subset(*b)))
            .collect();
        maximal.sort_by(VertexSet::canonical_cmp);
        maximal
    }

    /// Vertices lying on every geodesic of some pair of other vertices.
    pub fn path_cut(&self) -> VertexSet {
        let n = self.g.order();
        let mut out = VertexSet::empty();
        for u in 0..n {
            for v in u + 1..n {
                let paths = geodesics(self.g, &self.d, u, v);
                for w in 0..n {
                    if w != u && w != v && paths.iter().all(|p| p.contains(&w)) {
                        out.insert(w);
                    }
                }
            }
        }
        out
    }
}

/// Binomial coefficient in i64.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
