//! Graph families with fixed labelings, and their closed-form Wiener values.
//!
//! Labelings:
//!
//! * path: `0 - 1 - ... - (n-1)`; cycle: the same path closed by `(n-1) - 0`;
//!   star: center `0`, leaves `1..=k`.
//! * broom: path `x_1 .. x_a` on ids `0..a` with root `x_1 = 0`, pendants
//!   `a..a+b` attached to `x_a = a - 1`.
//! * onion `On(k, l, m)`: 4-cycle `0 - 1 - 2 - 3 - 0` with `u = 0` and
//!   `v = 2`; the `k` pendants of `v` are `4..4+k`; the path `u_1 .. u_l`
//!   starts at `u_1 = u` and continues on `4+k ..`; the `m` pendants of `u_l`
//!   come last. For `l = 1` the path is the single vertex `u`.
//! * minimum extremal graph for `(p, q)`: 4-cycle `0 - 1 - 2 - 3 - 0`, `q - 2`
//!   pendants on `0` followed by `p - 2` pendants on `1`.

use serde::Serialize;

use crate::error::ParamError;
use crate::graph::{Graph, MAX_VERTICES};

fn at_least(name: &'static str, value: usize, min: usize) -> Result<(), ParamError> {
    if value < min {
        Err(ParamError::BelowMinimum { name, value, min })
    } else {
        Ok(())
    }
}

fn check_order(order: usize) -> Result<(), ParamError> {
    if order > MAX_VERTICES {
        Err(ParamError::TooLarge {
            order,
            limit: MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Validates `2 <= p <= q`.
pub fn check_parts(p: usize, q: usize) -> Result<(), ParamError> {
    at_least("p", p, 2)?;
    if p > q {
        return Err(ParamError::UnorderedParts { p, q });
    }
    Ok(())
}

/// Exact integer division; a remainder means a formula was misread.
fn exact_div(num: u64, den: u64) -> u64 {
    assert_eq!(num % den, 0, "{num} is not divisible by {den}");
    num / den
}

fn binom2(n: u64) -> u64 {
    exact_div(n * n.saturating_sub(1), 2)
}

pub fn build_path(n: usize) -> Result<Graph, ParamError> {
    at_least("n", n, 1)?;
    check_order(n)?;
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?)
}

pub fn build_cycle(n: usize) -> Result<Graph, ParamError> {
    at_least("n", n, 3)?;
    check_order(n)?;
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

/// `K_{1,k}` with center 0.
pub fn build_star(k: usize) -> Result<Graph, ParamError> {
    check_order(k + 1)?;
    Ok(Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BroomParams {
    a: usize,
    b: usize,
}

impl BroomParams {
    pub fn new(a: usize, b: usize) -> Result<Self, ParamError> {
        at_least("a", a, 1)?;
        check_order(a + b)?;
        Ok(Self { a, b })
    }

    pub fn path_len(&self) -> usize {
        self.a
    }

    pub fn pendants(&self) -> usize {
        self.b
    }

    pub fn order(&self) -> usize {
        self.a + self.b
    }
}

/// A broom together with the ids of its root `x_1` and its last path vertex `x_a`.
#[derive(Debug, Clone)]
pub struct Broom {
    pub graph: Graph,
    pub root: usize,
    pub tip: usize,
}

pub fn build_broom(params: BroomParams) -> Broom {
    let BroomParams { a, b } = params;
    let tip = a - 1;
    let edges = (1..a)
        .map(|i| (i - 1, i))
        .chain((a..a + b).map(|x| (tip, x)));
    let graph = Graph::from_edges(a + b, edges).expect("broom labeling is valid");
    Broom {
        graph,
        root: 0,
        tip,
    }
}

/// Parameters of `On(k, l, m)`: `k` pendants at `v`, a path on `l` vertices
/// hanging from `u`, and `m` pendants at the far end `u_l` of that path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OnionParams {
    k: usize,
    l: usize,
    m: usize,
}

impl OnionParams {
    pub fn new(k: usize, l: usize, m: usize) -> Result<Self, ParamError> {
        at_least("l", l, 1)?;
        check_order(k + l + m + 3)?;
        Ok(Self { k, l, m })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `k + l + m + 3`.
    pub fn order(&self) -> usize {
        self.k + self.l + self.m + 3
    }
}

impl std::fmt::Display for OnionParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "On({},{},{})", self.k, self.l, self.m)
    }
}

/// An onion graph and the ids of its anchor vertices.
#[derive(Debug, Clone)]
pub struct Onion {
    pub params: OnionParams,
    pub graph: Graph,
    /// Cycle vertex carrying the path.
    pub u: usize,
    /// Cycle vertex antipodal to `u`, carrying the `k` pendants.
    pub v: usize,
    /// Far end of the path; equals `u` when `l = 1`.
    pub u_l: usize,
}

pub fn build_onion(params: OnionParams) -> Onion {
    let OnionParams { k, l, m } = params;
    let (u, v) = (0, 2);
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    let mut next = 4;
    for _ in 0..k {
        edges.push((v, next));
        next += 1;
    }
    let mut end = u;
    for _ in 1..l {
        edges.push((end, next));
        end = next;
        next += 1;
    }
    for _ in 0..m {
        edges.push((end, next));
        next += 1;
    }
    debug_assert_eq!(next, params.order());
    let graph = Graph::from_edges(next, edges).expect("onion labeling is valid");
    Onion {
        params,
        graph,
        u,
        v,
        u_l: end,
    }
}

/// Closed-form Wiener index of `On(k, l, m)`:
///
/// `k² + 7k + 8 + (l³ − l)/6 + m² + m(l² + l − 2)/2 + (k + 3)((l² − l)/2 + ml) + (l + m − 1)(3k + 4)`.
pub fn onion_wiener_closed_form(params: OnionParams) -> u64 {
    let (k, l, m) = (params.k as u64, params.l as u64, params.m as u64);
    let star_on_cycle = k * k + 7 * k + 8;
    let broom = exact_div(l * l * l - l, 6) + m * m + m * exact_div(l * l + l - 2, 2);
    let cross = (k + 3) * (exact_div(l * l - l, 2) + m * l) + (l + m - 1) * (3 * k + 4);
    star_on_cycle + broom + cross
}

/// Closed-form transmissions of `v` and `u_l` in `On(k, l, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OnionTransmissions {
    pub v: u64,
    pub u_l: u64,
}

/// `t(v) = k + 1 + C(l+2, 2) + m(l+2)` and `t(u_l) = m + C(l+2, 2) + l + k(l+2)`.
pub fn onion_transmissions(params: OnionParams) -> OnionTransmissions {
    let (k, l, m) = (params.k as u64, params.l as u64, params.m as u64);
    let c = binom2(l + 2);
    OnionTransmissions {
        v: k + 1 + c + m * (l + 2),
        u_l: m + c + l + k * (l + 2),
    }
}

/// Result of identifying a vertex of one graph with a vertex of another.
#[derive(Debug, Clone)]
pub struct Coalescence {
    pub graph: Graph,
    /// New id of each vertex of the first graph (the identity).
    pub first: Vec<usize>,
    /// New id of each vertex of the second graph.
    pub second: Vec<usize>,
}

impl Coalescence {
    /// Id of the identified vertex.
    pub fn joint(&self) -> usize {
        self.first
            .iter()
            .copied()
            .find(|x| self.second.contains(x))
            .expect("coalescence has a shared vertex")
    }
}

/// Identifies `u` of `g1` with `w` of `g2`. Vertices of `g1` keep their ids;
/// the other vertices of `g2` follow in their original order.
pub fn coalesce(g1: &Graph, u: usize, g2: &Graph, w: usize) -> Result<Coalescence, ParamError> {
    g1.check_vertex(u)?;
    g2.check_vertex(w)?;
    let (n1, n2) = (g1.order(), g2.order());
    check_order(n1 + n2 - 1)?;
    let first: Vec<usize> = (0..n1).collect();
    let second: Vec<usize> = (0..n2)
        .map(|x| match x.cmp(&w) {
            std::cmp::Ordering::Less => n1 + x,
            std::cmp::Ordering::Equal => u,
            std::cmp::Ordering::Greater => n1 + x - 1,
        })
        .collect();
    let edges = g1
        .edges()
        .chain(g2.edges().map(|(a, b)| (second[a], second[b])));
    let graph = Graph::from_edges(n1 + n2 - 1, edges)?;
    Ok(Coalescence {
        graph,
        first,
        second,
    })
}

/// The minimum-Wiener graph for a `(p, q)`-partition: a 4-cycle with `q - 2`
/// pendants on one cycle vertex and `p - 2` pendants on a neighbor of it.
pub fn build_min_extremal(p: usize, q: usize) -> Result<Graph, ParamError> {
    check_parts(p, q)?;
    check_order(p + q)?;
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    let mut next = 4;
    for (anchor, count) in [(0, q - 2), (1, p - 2)] {
        for _ in 0..count {
            edges.push((anchor, next));
            next += 1;
        }
    }
    Ok(Graph::from_edges(p + q, edges)?)
}

/// `On(⌊(q−p)/2⌋, 2p−3, ⌈(q−p)/2⌉)`, the claimed unique maximizer.
pub fn extremal_onion_params(p: usize, q: usize) -> Result<OnionParams, ParamError> {
    check_parts(p, q)?;
    let d = q - p;
    OnionParams::new(d / 2, 2 * p - 3, d.div_ceil(2))
}

/// The closed-form maximum as printed alongside the extremal onion, evaluated
/// verbatim:
///
/// `(2p−5)⌈d/2⌉⌊d/2⌋ + (p−7)⌈d/2⌉ + (13−7p)⌊d/2⌋ + 2p²q + d² + 2p³ − 37p + 66`
/// with `d = q − p`.
///
/// This does not agree with the actual maximum (for example it gives 63 at
/// `(3, 3)` where the maximum is 29), so it is only ever reported next to the
/// exhaustive result.
pub fn theorem_polynomial(p: usize, q: usize) -> Result<i64, ParamError> {
    check_parts(p, q)?;
    let (pi, qi) = (p as i64, q as i64);
    let d = qi - pi;
    let (lo, hi) = (d / 2, (d + 1) / 2);
    Ok((2 * pi - 5) * hi * lo
        + (pi - 7) * hi
        + (13 - 7 * pi) * lo
        + 2 * pi * pi * qi
        + d * d
        + 2 * pi * pi * pi
        - 37 * pi
        + 66)
}
