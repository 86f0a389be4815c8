//! Canonical forms for small graphs.
//!
//! The search is individualization-refinement without automorphism pruning:
//! refine the ordered vertex partition to an equitable one, individualize each
//! vertex of the first smallest non-singleton cell in turn, and recurse. Every
//! discrete partition is a candidate labeling, and the lexicographically
//! smallest relabeled adjacency wins. Refinement starts from the degree
//! partition. The only pruning is for twins (vertices with equal
//! neighborhoods apart from each other): the transposition of two twins is an
//! automorphism fixing the current partition, so only one of them is tried.
//!
//! This is exponential for graphs with large automorphism groups that are not
//! generated by twin swaps, which is why [`CANONICAL_MAX_VERTICES`] is small.
//! Trees and unicyclic graphs at enumeration scale are cheap.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::GraphError;
use crate::graph::{bit, Bits, Graph};
use crate::graph6;

/// Largest vertex count accepted by [`Graph::canonical_form`].
pub const CANONICAL_MAX_VERTICES: usize = 32;

/// A byte string equal for two graphs exactly when they are isomorphic.
///
/// The bytes are the graph6 encoding of the canonically relabeled graph, so a
/// canonical form is also a valid graph6 witness.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical form as a graph6 line.
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonically labeled graph this form encodes.
    pub fn graph(&self) -> Graph {
        graph6::decode_bytes(&self.0).expect("canonical forms are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

type Partition = Vec<Vec<usize>>;

/// Splits every cell by (number of neighbors in each current cell) until stable.
/// Cell order after a split follows the sorted signatures, so the result
/// depends only on the isomorphism type of (graph, partition).
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0, |acc, &v| acc | bit(v)))
            .collect();
        let mut next: Partition = Vec::with_capacity(g.order());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks
                        .iter()
                        .map(|m| (g.neighbor_set(v) & m).count_ones())
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let before = next.len();
            for (i, (sig, v)) in keyed.iter().enumerate() {
                if i == 0 || *sig != keyed[i - 1].0 {
                    next.push(Vec::new());
                }
                next.last_mut().unwrap().push(*v);
            }
            split |= next.len() - before > 1;
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

fn twins(g: &Graph, a: usize, b: usize) -> bool {
    g.neighbor_set(a) & !bit(b) == g.neighbor_set(b) & !bit(a)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn visit(&mut self, cells: Partition) {
        let cells = refine(self.g, cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[t] {
            if tried.iter().any(|&w| twins(self.g, v, w)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(vec![v]);
            child.push(cells[t].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[t + 1..]);
            self.visit(child);
        }
    }

    fn leaf(&mut self, cells: &Partition) {
        let mut label = vec![0; self.g.order()];
        for (i, c) in cells.iter().enumerate() {
            label[c[0]] = i;
        }
        let mut rows = vec![0u64; self.g.order()];
        for (old, &new) in label.iter().enumerate() {
            rows[new] = Bits(self.g.neighbor_set(old)).fold(0, |acc, w| acc | bit(label[w]));
        }
        if self.best.as_ref().is_none_or(|(b, _)| rows < *b) {
            self.best = Some((rows, label));
        }
    }
}

impl Graph {
    /// A relabeling (old id -> new id) that maps every graph in this graph's
    /// isomorphism class to the same labeled graph.
    pub fn canonical_labeling(&self) -> Result<Vec<usize>, GraphError> {
        let n = self.order();
        if n > CANONICAL_MAX_VERTICES {
            return Err(GraphError::CanonicalLimit {
                order: n,
                limit: CANONICAL_MAX_VERTICES,
            });
        }
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut by_degree: Vec<usize> = (0..n).collect();
        by_degree.sort_by_key(|&v| (self.degree(v), v));
        let mut cells: Partition = Vec::new();
        for (i, &v) in by_degree.iter().enumerate() {
            if i == 0 || self.degree(v) != self.degree(by_degree[i - 1]) {
                cells.push(Vec::new());
            }
            cells.last_mut().unwrap().push(v);
        }
        let mut search = Search {
            g: self,
            best: None,
        };
        search.visit(cells);
        Ok(search.best.expect("search reaches at least one leaf").1)
    }

    /// Canonically relabeled copy of this graph.
    pub fn canonical_graph(&self) -> Result<Graph, GraphError> {
        Ok(self.relabel_unchecked(&self.canonical_labeling()?))
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm, GraphError> {
        Ok(CanonicalForm(
            graph6::encode(&self.canonical_graph()?).into_bytes(),
        ))
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool, GraphError> {
        if self.order() != other.order() || self.size() != other.size() {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn c4_relabelings_agree() {
        let c4 = cycle(4);
        let a = c4.canonical_form().unwrap();
        let perms = [[1, 2, 3, 0], [0, 2, 1, 3], [3, 1, 0, 2]];
        for p in perms {
            assert_eq!(c4.relabel(&p).unwrap().canonical_form().unwrap(), a);
        }
        assert_eq!(a.graph().canonical_form().unwrap(), a);
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let k13 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(p4.canonical_form().unwrap(), k13.canonical_form().unwrap());
        assert!(!p4.is_isomorphic(&k13).unwrap());
    }

    #[test]
    fn regular_graphs_distinguished() {
        // C_6 and two triangles are both 2-regular on six vertices
        let c6 = cycle(6);
        let tt = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(c6.canonical_form().unwrap(), tt.canonical_form().unwrap());
        // K_{3,3} vs the prism, both 3-regular
        let k33 = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        let prism = Graph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_ne!(
            k33.canonical_form().unwrap(),
            prism.canonical_form().unwrap()
        );
    }

    #[test]
    fn limit_is_enforced() {
        let g = Graph::empty(CANONICAL_MAX_VERTICES + 1).unwrap();
        assert!(matches!(
            g.canonical_form(),
            Err(GraphError::CanonicalLimit { .. })
        ));
        // large twin classes are pruned, so these finish instantly
        let empty = Graph::empty(CANONICAL_MAX_VERTICES).unwrap();
        assert!(empty.canonical_form().is_ok());
        let star = Graph::from_edges(32, (1..32).map(|i| (0, i))).unwrap();
        assert!(star.canonical_form().is_ok());
    }

    #[test]
    fn petersen_relabeled() {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (i + 5, (i + 2) % 5 + 5)));
        let g = Graph::from_edges(10, edges).unwrap();
        let h = g.relabel(&[3, 7, 1, 9, 0, 2, 8, 4, 6, 5]).unwrap();
        assert_eq!(g.canonical_form().unwrap(), h.canonical_form().unwrap());
    }
}
