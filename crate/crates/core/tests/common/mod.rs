//! Oracles shared by the integration tests. None of them go through the
//! crate's BFS, enumeration or closed-form code.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use unicyclic_wiener::{CanonicalForm, Graph};

pub const INF: u64 = u64::MAX / 4;

/// Floyd–Warshall over an adjacency-matrix copy of `g`.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
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

/// Wiener index from the Floyd–Warshall matrix; `None` when disconnected.
pub fn wiener_fw(g: &Graph) -> Option<u64> {
    let d = floyd_warshall(g);
    let mut total = 0;
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if d[u][v] >= INF {
                return None;
            }
            total += d[u][v];
        }
    }
    Some(total)
}

pub fn transmission_fw(g: &Graph, v: usize) -> u64 {
    floyd_warshall(g)[v].iter().sum()
}

/// Union-find connectivity on an explicit edge list.
fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut comps = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps == 1
}

/// Part sizes `(p, q)`, `p <= q`, of a connected graph by DFS 2-coloring, or
/// `None` when an odd cycle exists.
fn two_coloring(n: usize, edges: &[(usize, usize)]) -> Option<(usize, usize)> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut color = vec![None; n];
    color[0] = Some(false);
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            match color[v] {
                None => {
                    color[v] = Some(!color[u].unwrap());
                    stack.push(v);
                }
                Some(c) if c == color[u].unwrap() => return None,
                _ => {}
            }
        }
    }
    let a = color.iter().filter(|c| **c == Some(true)).count();
    Some((a.min(n - a), a.max(n - a)))
}

/// Labeled enumeration: every graph on `n` vertices with exactly `n` edges,
/// filtered to connected bipartite ones, deduplicated by canonical form and
/// grouped by part sizes.
pub fn labeled_unicyclic_bipartite(n: usize) -> BTreeMap<(usize, usize), BTreeSet<CanonicalForm>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = pairs.len();
    let mut out: BTreeMap<(usize, usize), BTreeSet<CanonicalForm>> = BTreeMap::new();
    // Gosper's hack over m-bit masks with n bits set
    let mut mask: u64 = (1 << n) - 1;
    let limit: u64 = 1 << m;
    let mut edges = Vec::with_capacity(n);
    while mask < limit {
        edges.clear();
        edges.extend((0..m).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]));
        if connected(n, &edges) {
            if let Some(parts) = two_coloring(n, &edges) {
                let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
                out.entry(parts)
                    .or_default()
                    .insert(g.canonical_form().unwrap());
            }
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    out
}

/// Random connected graph: a random recursive tree plus up to `extra` chords.
pub fn connected_graph(max_n: usize, extra: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            Just(n),
            prop::collection::vec(any::<usize>(), n.saturating_sub(1)),
            prop::collection::vec((0..n, 0..n), 0..=extra),
        )
            .prop_map(|(n, parents, chords)| {
                let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
                for (i, p) in parents.iter().enumerate() {
                    let child = i + 1;
                    edges.insert((p % child, child));
                }
                for (a, b) in chords {
                    if a != b {
                        edges.insert((a.min(b), a.max(b)));
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
    })
}

/// Random graph, possibly disconnected.
pub fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
