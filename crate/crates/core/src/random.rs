//! Seeded random graphs for the lemma harness and property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{full_mask, Bits, Graph};

/// Uniform labeled tree on `n >= 1` vertices via a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    assert!(n >= 1);
    if n <= 2 {
        return Graph::from_edges(n, (1..n).map(|i| (0, i))).expect("tiny tree");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &code {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).expect("Prüfer decoding yields a tree")
}

/// Random connected graph: a uniform tree, plus with probability
/// `cycle_probability` one extra edge chosen uniformly among the non-edges.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, cycle_probability: f64) -> Graph {
    let tree = random_tree(rng, n);
    if n < 3 || !rng.gen_bool(cycle_probability) {
        return tree;
    }
    let non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| {
            let tree = &tree;
            Bits(!tree.neighbor_set(u) & full_mask(n) & !full_mask(u + 1)).map(move |v| (u, v))
        })
        .collect();
    match non_edges.choose(rng) {
        Some(&(u, v)) => tree.with_edge(u, v).expect("chosen pair is a non-edge"),
        None => tree,
    }
}

/// Random permutation of `0..n`, usable with [`Graph::relabel`].
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
