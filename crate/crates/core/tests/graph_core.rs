#![allow(clippy::needless_range_loop)]

mod common;

use common::{connected_graphs, floyd_warshall, INF};
use proptest::prelude::*;
use visipoly::graph::{complete, cycle, path};
use visipoly::{all_pairs_distances, corona, encode_graph6, parse_graph6, CoronaPosition, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(10)) {
        let s = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        prop_assert_eq!(encode_graph6(&parse_graph6(&s).unwrap()).unwrap(), s);
    }

    #[test]
    fn distances_agree_with_floyd_warshall(g in arb_graph(9)) {
        let fw = floyd_warshall(&g);
        let connected = fw[0].iter().all(|&d| d < INF);
        prop_assert_eq!(g.is_connected(), connected);
        if let Ok(dm) = all_pairs_distances(&g) {
            let n = g.order();
            for u in 0..n {
                for v in 0..n {
                    prop_assert_eq!(dm.get(u, v), fw[u][v]);
                    prop_assert_eq!(dm.get(u, v), dm.get(v, u));
                    prop_assert_eq!(dm.get(u, v) == 0, u == v);
                    for w in 0..n {
                        prop_assert!(dm.get(u, w) <= dm.get(u, v) + dm.get(v, w));
                    }
                }
            }
        } else {
            prop_assert!(!connected);
        }
    }
}

#[test]
fn graph6_round_trip_all_small_graphs() {
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| *e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let s = encode_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&s).unwrap(), g, "{s}");
        }
    }
}

#[test]
fn fixture_lines_are_canonical() {
    for order in 2..=6 {
        let text = common::fixture_text(&format!("connected_order{order}.g6"));
        for line in text.lines() {
            let g = parse_graph6(line).unwrap();
            assert_eq!(g.order(), order);
            assert!(g.is_connected());
            assert_eq!(encode_graph6(&g).unwrap(), line);
        }
    }
    assert_eq!(connected_graphs(5).len(), 21);
    assert_eq!(connected_graphs(6).len(), 112);
}

fn check_corona_law(g: &Graph, h: &Graph) {
    let (c, lab) = corona(g, h).unwrap();
    let (m, nh) = (g.order(), h.order());
    assert_eq!(c.order(), m * (1 + nh));
    assert_eq!(c.edge_count(), g.edge_count() + m * h.edge_count() + m * nh);
    assert!(c.is_connected());

    let dg = all_pairs_distances(g).unwrap();
    let dh = floyd_warshall(h);
    let dc = floyd_warshall(&c);
    for idx in 0..c.order() {
        assert_eq!(lab.position(idx).map(|p| match p {
            CoronaPosition::Base(w) => lab.base(w),
            CoronaPosition::Copy(w, j) => lab.copy(w, j),
        }), Some(idx));
    }
    for u in 0..m {
        for v in 0..m {
            let base = dg.get(u, v);
            assert_eq!(dc[lab.base(u)][lab.base(v)], base);
            for j in 0..nh {
                assert_eq!(dc[lab.base(u)][lab.copy(v, j)], base + 1);
                for i in 0..nh {
                    let expected = if u != v {
                        base + 2
                    } else if i == j {
                        0
                    } else {
                        dh[i][j].min(2)
                    };
                    assert_eq!(dc[lab.copy(u, i)][lab.copy(v, j)], expected);
                }
            }
        }
    }
}

#[test]
fn corona_structure() {
    let hs = [complete(1).unwrap(), complete(2).unwrap(), path(3).unwrap(), complete(3).unwrap(), path(4).unwrap()];
    for g in common::corpus(4).iter().chain([cycle(5).unwrap(), cycle(6).unwrap()].iter()) {
        for h in &hs {
            check_corona_law(g, h);
        }
    }
    // the copy graph does not need to be connected
    check_corona_law(&path(3).unwrap(), &Graph::empty(3).unwrap());
}

#[test]
fn corona_p3_k2_distances() {
    let (c, lab) = corona(&path(3).unwrap(), &complete(2).unwrap()).unwrap();
    let dm = all_pairs_distances(&c).unwrap();
    assert_eq!(dm.get(lab.copy(0, 0), lab.copy(2, 1)), 4);
    assert_eq!(dm.get(lab.copy(0, 1), lab.copy(1, 0)), 3);
}
