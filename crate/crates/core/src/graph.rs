//! Immutable simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Each vertex stores its neighborhood as a single `u64` bitset, which keeps
//! breadth-first traversal down to a handful of word operations per level.
//! That matters because the exhaustive search computes Wiener indices for
//! every candidate graph it generates.

use std::fmt;

use crate::error::GraphError;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// Iterator over the set bits of a `u64`, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph over vertex ids `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Self { adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Self-loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = Self::empty(n)?.adj;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u] & bit(v) != 0 {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Self { adj })
    }

    /// Caller guarantees a symmetric, loop-free adjacency with `len <= 64`.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!((0..adj.len()).all(|v| adj[v] & bit(v) == 0));
        debug_assert!((0..adj.len()).all(|u| Bits(adj[u]).all(|v| adj[v] & bit(u) != 0)));
        Self { adj }
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Neighborhood of `v` as a bitset. Panics if `v` is out of range.
    #[inline]
    pub fn neighbor_set(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> Bits {
        Bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & bit(v) != 0
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order())
            .flat_map(move |u| Bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// New graph with the extra edge `uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut adj = self.adj.clone();
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        Ok(Self { adj })
    }

    /// Relabels vertices so that old vertex `i` becomes `new_label[i]`.
    pub fn relabel(&self, new_label: &[usize]) -> Result<Graph, GraphError> {
        let n = self.order();
        if new_label.len() != n {
            return Err(GraphError::InvalidPermutation(n));
        }
        let mut seen = 0u64;
        for &x in new_label {
            if x >= n || seen & bit(x) != 0 {
                return Err(GraphError::InvalidPermutation(n));
            }
            seen |= bit(x);
        }
        Ok(self.relabel_unchecked(new_label))
    }

    pub(crate) fn relabel_unchecked(&self, new_label: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.order()];
        for (old, &new) in new_label.iter().enumerate() {
            adj[new] = Bits(self.adj[old]).fold(0, |acc, w| acc | bit(new_label[w]));
        }
        Self { adj }
    }

    /// Vertices reachable from `source`, as a bitset.
    pub fn component_of(&self, source: usize) -> u64 {
        let mut seen = bit(source);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    /// True for a nonempty graph whose vertices are mutually reachable.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.component_of(0) == full_mask(self.order())
    }

    /// Shortest-path hop counts between all vertex pairs, one BFS per source.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.order();
        let mut dist = vec![DistanceMatrix::UNREACHABLE; n * n];
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            let mut seen = bit(s);
            let mut frontier = seen;
            let mut d = 0u32;
            while frontier != 0 {
                for v in Bits(frontier) {
                    row[v] = d;
                }
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !seen;
                seen |= frontier;
                d += 1;
            }
        }
        DistanceMatrix { n, dist }
    }

    /// Sum of distances from `source` together with the set of reached vertices.
    #[inline]
    fn bfs_distance_sum(&self, source: usize) -> (u64, u64) {
        let mut seen = bit(source);
        let mut frontier = seen;
        let mut d = 0u64;
        let mut total = 0u64;
        while frontier != 0 {
            total += d * u64::from(frontier.count_ones());
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
            d += 1;
        }
        (total, seen)
    }

    /// Transmission of `v`: the sum of its distances to all other vertices.
    pub fn transmission(&self, v: usize) -> Result<u64, GraphError> {
        self.check_vertex(v)?;
        let (total, seen) = self.bfs_distance_sum(v);
        if seen != full_mask(self.order()) {
            return Err(GraphError::Disconnected);
        }
        Ok(total)
    }

    /// Transmissions of all vertices, indexed by vertex id.
    pub fn transmissions(&self) -> Result<Vec<u64>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok((0..self.order())
            .map(|v| self.bfs_distance_sum(v).0)
            .collect())
    }

    /// Wiener index: the sum of distances over all unordered vertex pairs.
    pub fn wiener_index(&self) -> Result<u64, GraphError> {
        Ok(self.transmissions()?.iter().sum::<u64>() / 2)
    }

    /// Two-coloring of a connected graph, `Ok(None)` when an odd cycle exists.
    pub fn bipartition(&self) -> Result<Option<Bipartition>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        // Layers alternate colors; an edge inside a layer means an odd cycle.
        let mut seen = 1u64;
        let mut frontier = 1u64;
        let mut color = [0u64; 2];
        let mut side = 0;
        while frontier != 0 {
            color[side] |= frontier;
            let mut next = 0;
            for v in Bits(frontier) {
                if self.adj[v] & frontier != 0 {
                    return Ok(None);
                }
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
            side ^= 1;
        }
        Ok(Some(Bipartition::from_sides(color[0], color[1])))
    }

    /// Connected with exactly one cycle, i.e. connected and `|E| = |V|`.
    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.size() == self.order()
    }

    /// Vertices lying on a cycle: what remains after repeatedly stripping
    /// vertices of degree at most one.
    pub fn cycle_vertices(&self) -> u64 {
        let mut alive = full_mask(self.order());
        loop {
            let strip = Bits(alive)
                .filter(|&v| (self.adj[v] & alive).count_ones() <= 1)
                .fold(0u64, |acc, v| acc | bit(v));
            if strip == 0 {
                return alive;
            }
            alive &= !strip;
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// The two color classes of a connected bipartite graph, smaller part first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bipartition {
    part_p: u64,
    part_q: u64,
}

impl Bipartition {
    /// Orders the sides so that `p <= q`; on a tie the side holding vertex 0 is `P`.
    fn from_sides(a: u64, b: u64) -> Self {
        let (ca, cb) = (a.count_ones(), b.count_ones());
        if ca < cb || (ca == cb && a & 1 != 0) {
            Self {
                part_p: a,
                part_q: b,
            }
        } else {
            Self {
                part_p: b,
                part_q: a,
            }
        }
    }

    pub fn p(&self) -> usize {
        self.part_p.count_ones() as usize
    }

    pub fn q(&self) -> usize {
        self.part_q.count_ones() as usize
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.p(), self.q())
    }

    /// Smaller part as a bitset.
    pub fn part_p(&self) -> u64 {
        self.part_p
    }

    /// Larger part as a bitset.
    pub fn part_q(&self) -> u64 {
        self.part_q
    }

    pub fn in_p(&self, v: usize) -> bool {
        self.part_p & bit(v) != 0
    }

    pub fn in_q(&self, v: usize) -> bool {
        self.part_q & bit(v) != 0
    }
}

/// Pairwise hop counts, with [`DistanceMatrix::UNREACHABLE`] for pairs in
/// different components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn order(&self) -> usize {
        self.n
    }

    /// Raw entry, possibly [`Self::UNREACHABLE`].
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        Some(self.raw(u, v)).filter(|&d| d != Self::UNREACHABLE)
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn all_reachable(&self) -> bool {
        !self.dist.contains(&Self::UNREACHABLE)
    }
}
