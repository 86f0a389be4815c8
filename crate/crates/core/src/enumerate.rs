//! Isomorphism-free generation of unicyclic bipartite graphs with given part sizes.
//!
//! Every unicyclic graph is a spanning tree plus one edge, and a cycle is even
//! exactly when the added edge joins two tree vertices at odd distance (at
//! least 3, since the tree has no multi-edges). The tree's 2-coloring is
//! preserved by such an edge, so trees with the wrong part sizes are skipped
//! wholesale. Candidates are deduplicated by canonical form; trees are
//! processed in parallel and the per-tree sets are merged into one ordered
//! map, which fixes the output order independently of scheduling.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{self, Write};

use rayon::prelude::*;

use crate::canon::CanonicalForm;
use crate::constructions::check_parts;
use crate::error::Error;
use crate::graph::{bit, Bits, Graph};
use crate::graph6;

/// Default bound on `p + q`.
pub const DEFAULT_MAX_N: usize = 14;

/// Hard bound on `p + q` regardless of `max_n`; rooted tree generation grows
/// past a few hundred thousand trees beyond this.
pub const ENUMERATION_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumSpec {
    pub p: usize,
    pub q: usize,
    pub max_n: usize,
}

impl EnumSpec {
    pub fn new(p: usize, q: usize) -> Result<Self, Error> {
        Self::with_max_n(p, q, DEFAULT_MAX_N)
    }

    pub fn with_max_n(p: usize, q: usize, max_n: usize) -> Result<Self, Error> {
        check_parts(p, q)?;
        if max_n > ENUMERATION_LIMIT {
            return Err(Error::MaxNTooLarge(max_n));
        }
        if p + q > max_n {
            return Err(Error::OrderAboveMax {
                order: p + q,
                max_n,
            });
        }
        Ok(Self { p, q, max_n })
    }

    pub fn order(&self) -> usize {
        self.p + self.q
    }
}

/// One isomorphism class: its canonical form and the canonically labeled graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicyclicClass {
    pub canonical: CanonicalForm,
    pub graph: Graph,
}

/// Rooted trees on `n` vertices as level sequences, in the successor order of
/// Beyer and Hedetniemi starting from the path `0, 1, .., n-1`.
fn rooted_level_sequences(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let mut seq: Vec<usize> = (0..n).collect();
    let mut out = vec![seq.clone()];
    loop {
        let Some(p) = (1..n).rev().find(|&i| seq[i] > 1) else {
            return out;
        };
        let q = (0..p)
            .rev()
            .find(|&i| seq[i] == seq[p] - 1)
            .expect("a level sequence has a parent level");
        let shift = p - q;
        for i in p..n {
            seq[i] = seq[i - shift];
        }
        out.push(seq.clone());
    }
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let mut adj = vec![0u64; levels.len()];
    for i in 1..levels.len() {
        let parent = (0..i)
            .rev()
            .find(|&j| levels[j] + 1 == levels[i])
            .expect("level sequence parent");
        adj[i] |= bit(parent);
        adj[parent] |= bit(i);
    }
    Graph::from_adjacency(adj)
}

/// One representative per isomorphism class of trees on `n` vertices,
/// canonically labeled and sorted by canonical form.
pub fn free_trees(n: usize) -> Vec<Graph> {
    assert!(
        n <= ENUMERATION_LIMIT,
        "tree order {n} above {ENUMERATION_LIMIT}"
    );
    let forms: BTreeSet<CanonicalForm> = rooted_level_sequences(n)
        .par_iter()
        .map(|levels| {
            tree_from_levels(levels)
                .canonical_form()
                .expect("tree order is within the canonical limit")
        })
        .collect();
    forms.iter().map(CanonicalForm::graph).collect()
}

fn classes_from_tree(tree: &Graph, p: usize, q: usize) -> BTreeMap<CanonicalForm, Graph> {
    let mut found = BTreeMap::new();
    let Ok(Some(parts)) = tree.bipartition() else {
        return found;
    };
    if parts.sizes() != (p, q) {
        return found;
    }
    let dist = tree.distances();
    for u in Bits(parts.part_p()) {
        for v in Bits(parts.part_q()) {
            if dist.raw(u, v) < 3 {
                continue;
            }
            let g = tree.with_edge(u, v).expect("non-adjacent pair");
            let canonical = g
                .canonical_form()
                .expect("order within the canonical limit");
            found.entry(canonical).or_insert_with_key(|c| c.graph());
        }
    }
    found
}

/// Every connected unicyclic bipartite graph with part sizes `(p, q)`, one per
/// isomorphism class, in canonical-form order.
pub fn enumerate_unicyclic_bipartite(spec: &EnumSpec) -> Result<Vec<UnicyclicClass>, Error> {
    let trees = free_trees(spec.order());
    let merged = trees
        .par_iter()
        .map(|t| classes_from_tree(t, spec.p, spec.q))
        .reduce(BTreeMap::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(merged
        .into_iter()
        .map(|(canonical, graph)| UnicyclicClass { canonical, graph })
        .collect())
}

pub fn count_classes(spec: &EnumSpec) -> Result<usize, Error> {
    Ok(enumerate_unicyclic_bipartite(spec)?.len())
}

/// Writes one graph6 line per class.
pub fn write_graph6<W: Write>(classes: &[UnicyclicClass], mut out: W) -> io::Result<()> {
    for c in classes {
        writeln!(out, "{}", graph6::encode(&c.graph))?;
    }
    Ok(())
}
