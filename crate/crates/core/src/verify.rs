//! Exhaustive extremal search over the enumeration, compared against the
//! onion construction, its closed forms, the minimum construction, and the
//! structural properties every maximizer is expected to have. Also hosts the
//! randomized checks of the coalescence identity and transplant monotonicity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::CanonicalForm;
use crate::constructions::{
    build_cycle, build_min_extremal, build_onion, coalesce, extremal_onion_params,
    onion_wiener_closed_form, theorem_polynomial,
};
use crate::enumerate::{enumerate_unicyclic_bipartite, EnumSpec, UnicyclicClass};
use crate::error::Error;
use crate::graph::{bit, Bits, Graph};
use crate::graph6;
use crate::random::random_connected;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Max,
    Min,
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Direction::Max => "max",
            Direction::Min => "min",
        })
    }
}

/// Outcome of one exhaustive extremal search for a fixed `(p, q)`.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalReport {
    pub p: usize,
    pub q: usize,
    pub direction: Direction,
    /// Number of isomorphism classes searched.
    pub classes: usize,
    pub optimum: u64,
    /// Canonical forms (graph6 witnesses) of all optimal classes.
    pub optimizers: Vec<CanonicalForm>,
    /// Human-readable name of the predicted optimizer.
    pub predicted_name: String,
    pub predicted_graph: CanonicalForm,
    /// Wiener index of the predicted graph, computed directly.
    pub predicted_value: u64,
    pub predicted_value_closed_form: Option<u64>,
    pub predicted_value_polynomial: Option<i64>,
    /// Every class expected to be optimal. For the minimum at `(3, 3)` this
    /// includes `C_6` next to the predicted graph.
    pub expected_optimizers: Vec<CanonicalForm>,
    pub value_match: bool,
    pub graph_match: bool,
    pub uniqueness: bool,
    pub optimizer_set_match: bool,
    /// Reported only; never part of [`ExtremalReport::passed`].
    pub polynomial_match: Option<bool>,
}

impl ExtremalReport {
    /// All asserted agreements hold. Uniqueness is asserted for the maximum only.
    pub fn passed(&self) -> bool {
        self.value_match
            && self.graph_match
            && self.optimizer_set_match
            && (self.direction == Direction::Min || self.uniqueness)
    }

    pub fn warnings(&self) -> Vec<String> {
        match (self.polynomial_match, self.predicted_value_polynomial) {
            (Some(false), Some(poly)) => vec![format!(
                "printed polynomial gives {poly} at (p,q) = ({},{}), exhaustive {} is {}",
                self.p, self.q, self.direction, self.optimum
            )],
            _ => Vec::new(),
        }
    }
}

fn wiener_of(class: &UnicyclicClass) -> u64 {
    class
        .graph
        .wiener_index()
        .expect("enumerated graphs are connected")
}

/// Builds the report for `direction` from an already enumerated class list.
pub fn report_from_classes(
    spec: &EnumSpec,
    direction: Direction,
    classes: &[UnicyclicClass],
) -> Result<ExtremalReport, Error> {
    let (p, q) = (spec.p, spec.q);
    let values: Vec<u64> = classes.par_iter().map(wiener_of).collect();
    let optimum = match direction {
        Direction::Max => values.iter().max(),
        Direction::Min => values.iter().min(),
    }
    .copied()
    .expect("every valid (p, q) has at least one class");
    let optimizers: Vec<CanonicalForm> = classes
        .iter()
        .zip(&values)
        .filter(|(_, &w)| w == optimum)
        .map(|(c, _)| c.canonical.clone())
        .collect();

    let (predicted_name, predicted, closed_form, polynomial) = match direction {
        Direction::Max => {
            let params = extremal_onion_params(p, q)?;
            (
                params.to_string(),
                build_onion(params).graph,
                Some(onion_wiener_closed_form(params)),
                Some(theorem_polynomial(p, q)?),
            )
        }
        Direction::Min => (
            format!(
                "C4 with {} and {} pendants on adjacent vertices",
                q - 2,
                p - 2
            ),
            build_min_extremal(p, q)?,
            None,
            None,
        ),
    };
    let predicted_graph = predicted.canonical_form()?;
    let predicted_value = predicted.wiener_index()?;

    let mut expected_optimizers = vec![predicted_graph.clone()];
    if direction == Direction::Min && (p, q) == (3, 3) {
        expected_optimizers.push(build_cycle(6)?.canonical_form()?);
    }
    expected_optimizers.sort();
    expected_optimizers.dedup();

    let value_match = optimum == predicted_value && closed_form.is_none_or(|w| w == optimum);
    Ok(ExtremalReport {
        p,
        q,
        direction,
        classes: classes.len(),
        optimum,
        graph_match: optimizers.contains(&predicted_graph),
        uniqueness: optimizers.len() == 1,
        optimizer_set_match: optimizers == expected_optimizers,
        polynomial_match: polynomial.map(|v| i128::from(v) == i128::from(optimum)),
        optimizers,
        predicted_name,
        predicted_graph,
        predicted_value,
        predicted_value_closed_form: closed_form,
        predicted_value_polynomial: polynomial,
        expected_optimizers,
        value_match,
    })
}

pub fn verify(spec: &EnumSpec, direction: Direction) -> Result<ExtremalReport, Error> {
    let classes = enumerate_unicyclic_bipartite(spec)?;
    report_from_classes(spec, direction, &classes)
}

/// Exhaustive maximum for `(p, q)` against the extremal onion.
pub fn verify_max(p: usize, q: usize) -> Result<ExtremalReport, Error> {
    verify(&EnumSpec::new(p, q)?, Direction::Max)
}

/// Exhaustive minimum for `(p, q)` against the minimum construction.
pub fn verify_min(p: usize, q: usize) -> Result<ExtremalReport, Error> {
    verify(&EnumSpec::new(p, q)?, Direction::Min)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckOutcome {
    Pass,
    Fail,
    Skipped,
}

impl CheckOutcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StructuralCheck {
    pub name: &'static str,
    pub outcome: CheckOutcome,
}

pub const CHECK_CYCLE: &str = "cycle_is_c4";
pub const CHECK_ANTIPODAL: &str = "antipodal_degree_two";
pub const CHECK_BROOMS: &str = "attached_trees_are_brooms";
pub const CHECK_PENDANTS: &str = "pendants_in_larger_part";

#[derive(Debug, Clone, Serialize)]
pub struct MaximizerChecks {
    pub witness: CanonicalForm,
    pub checks: Vec<StructuralCheck>,
}

impl MaximizerChecks {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != CheckOutcome::Fail)
    }

    pub fn outcome(&self, name: &str) -> Option<CheckOutcome> {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.outcome)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StructuralReport {
    pub p: usize,
    pub q: usize,
    pub maximizers: Vec<MaximizerChecks>,
}

impl StructuralReport {
    pub fn passed(&self) -> bool {
        self.maximizers.iter().all(MaximizerChecks::passed)
    }
}

/// Vertices reachable from `source` using only vertices in `allowed`.
fn reachable_within(g: &Graph, source: usize, allowed: u64) -> u64 {
    let mut seen = bit(source);
    let mut frontier = seen;
    while frontier != 0 {
        let next = Bits(frontier).fold(0, |acc, v| acc | g.neighbor_set(v)) & allowed;
        frontier = next & !seen;
        seen |= frontier;
    }
    seen
}

/// Whether the tree induced on `within` is a broom rooted at `root`: a path
/// leaving the root with every branch confined to its last vertex, whose
/// children are all leaves.
pub fn is_broom(g: &Graph, root: usize, within: u64) -> bool {
    let mut seen = bit(root);
    let mut cur = root;
    loop {
        let children = g.neighbor_set(cur) & within & !seen;
        match children.count_ones() {
            0 => return true,
            1 => {
                cur = children.trailing_zeros() as usize;
                seen |= bit(cur);
            }
            _ => {
                return Bits(children).all(|c| g.neighbor_set(c) & within & !bit(cur) == 0);
            }
        }
    }
}

/// The cycle of a unicyclic graph in traversal order, starting from its
/// smallest vertex.
fn cycle_order(g: &Graph) -> Option<Vec<usize>> {
    let on_cycle = g.cycle_vertices();
    if on_cycle == 0 {
        return None;
    }
    let start = on_cycle.trailing_zeros() as usize;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = Bits(g.neighbor_set(cur) & on_cycle).find(|&x| x != prev)?;
        if next == start {
            return Some(order);
        }
        if order.contains(&next) {
            return None;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
}

/// Structural checks on one maximizer of a `(p, q)` search.
pub fn structural_checks(g: &Graph, p: usize, q: usize) -> Vec<StructuralCheck> {
    let check = |name, outcome| StructuralCheck { name, outcome };
    let cycle = if g.is_unicyclic() {
        cycle_order(g)
    } else {
        None
    };
    let is_c4 = cycle.as_ref().is_some_and(|c| c.len() == 4);
    let mut checks = vec![check(CHECK_CYCLE, CheckOutcome::from_bool(is_c4))];

    // the antipodal pair of degree-2 vertices, and the other pair carrying the trees
    let split = cycle.filter(|_| is_c4).and_then(|c| {
        [(c[1], c[3], c[0], c[2]), (c[0], c[2], c[1], c[3])]
            .into_iter()
            .find(|&(a, b, _, _)| g.degree(a) == 2 && g.degree(b) == 2)
    });
    match split {
        None if !is_c4 => {
            checks.push(check(CHECK_ANTIPODAL, CheckOutcome::Skipped));
            checks.push(check(CHECK_BROOMS, CheckOutcome::Skipped));
        }
        None => {
            checks.push(check(CHECK_ANTIPODAL, CheckOutcome::Fail));
            checks.push(check(CHECK_BROOMS, CheckOutcome::Skipped));
        }
        Some((a, b, x, y)) => {
            checks.push(check(CHECK_ANTIPODAL, CheckOutcome::Pass));
            let cycle_mask = bit(a) | bit(b) | bit(x) | bit(y);
            let brooms = [x, y].into_iter().all(|root| {
                let allowed = !(cycle_mask & !bit(root));
                let tree = reachable_within(g, root, allowed);
                is_broom(g, root, tree)
            });
            checks.push(check(CHECK_BROOMS, CheckOutcome::from_bool(brooms)));
        }
    }

    let pendants = if p == q {
        CheckOutcome::Skipped
    } else {
        match g.bipartition() {
            Ok(Some(parts)) if parts.sizes() == (p, q) => CheckOutcome::from_bool(
                (0..g.order())
                    .filter(|&v| g.degree(v) == 1)
                    .all(|v| parts.in_q(v)),
            ),
            _ => CheckOutcome::Fail,
        }
    };
    checks.push(check(CHECK_PENDANTS, pendants));
    checks
}

pub fn structural_report(report: &ExtremalReport) -> StructuralReport {
    StructuralReport {
        p: report.p,
        q: report.q,
        maximizers: report
            .optimizers
            .iter()
            .map(|c| MaximizerChecks {
                witness: c.clone(),
                checks: structural_checks(&c.graph(), report.p, report.q),
            })
            .collect(),
    }
}

/// Runs the exhaustive maximum search and checks every maximizer's structure.
pub fn check_structural_consequences(p: usize, q: usize) -> Result<StructuralReport, Error> {
    Ok(structural_report(&verify_max(p, q)?))
}

/// Both searches and the structural checks for one `(p, q)`, from a single enumeration.
#[derive(Debug, Clone, Serialize)]
pub struct PairVerification {
    pub max: ExtremalReport,
    pub min: ExtremalReport,
    pub structure: StructuralReport,
}

impl PairVerification {
    pub fn passed(&self) -> bool {
        self.max.passed() && self.min.passed() && self.structure.passed()
    }
}

pub fn verify_pair(spec: &EnumSpec) -> Result<PairVerification, Error> {
    let classes = enumerate_unicyclic_bipartite(spec)?;
    let max = report_from_classes(spec, Direction::Max, &classes)?;
    let min = report_from_classes(spec, Direction::Min, &classes)?;
    let structure = structural_report(&max);
    Ok(PairVerification {
        max,
        min,
        structure,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    pub classes: usize,
    pub min_wiener: u64,
    pub min_graph_match: bool,
    pub min_optimizers: usize,
    pub min_set_match: bool,
    pub max_wiener: u64,
    pub max_closed_form: u64,
    pub max_value_match: bool,
    pub max_graph_match: bool,
    pub max_unique: bool,
    pub structure_ok: bool,
    pub polynomial: i64,
    pub polynomial_match: bool,
}

impl TableRow {
    /// Every asserted flag holds; the polynomial is excluded.
    pub fn passed(&self) -> bool {
        self.min_graph_match
            && self.min_set_match
            && self.max_value_match
            && self.max_graph_match
            && self.max_unique
            && self.structure_ok
    }

    fn from_pair(v: &PairVerification) -> Self {
        Self {
            p: v.max.p,
            q: v.max.q,
            n: v.max.p + v.max.q,
            classes: v.max.classes,
            min_wiener: v.min.optimum,
            min_graph_match: v.min.graph_match,
            min_optimizers: v.min.optimizers.len(),
            min_set_match: v.min.optimizer_set_match,
            max_wiener: v.max.optimum,
            max_closed_form: v.max.predicted_value_closed_form.unwrap_or_default(),
            max_value_match: v.max.value_match,
            max_graph_match: v.max.graph_match,
            max_unique: v.max.uniqueness,
            structure_ok: v.structure.passed(),
            polynomial: v.max.predicted_value_polynomial.unwrap_or_default(),
            polynomial_match: v.max.polynomial_match.unwrap_or(false),
        }
    }
}

/// All `(p, q)` with `2 <= p <= min(p_max, q)` and `p + q <= n_max`, in
/// order of `n`, then `p`.
pub fn table_pairs(p_max: usize, n_max: usize) -> Vec<(usize, usize)> {
    (4..=n_max)
        .flat_map(|n| {
            (2..=n / 2)
                .filter(move |&p| p <= p_max)
                .map(move |p| (p, n - p))
        })
        .collect()
}

pub fn extremal_table(p_max: usize, n_max: usize) -> Result<Vec<TableRow>, Error> {
    table_pairs(p_max, n_max)
        .into_iter()
        .map(|(p, q)| {
            let spec = EnumSpec::with_max_n(p, q, n_max)?;
            Ok(TableRow::from_pair(&verify_pair(&spec)?))
        })
        .collect()
}

/// A violated lemma instance, with graph6 witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub lemma: &'static str,
    pub first: String,
    pub first_vertices: Vec<usize>,
    pub second: String,
    pub second_vertex: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HarnessSummary {
    pub seed: u64,
    pub trials: usize,
    pub polansky_checked: usize,
    pub polansky_counterexamples: Vec<Counterexample>,
    pub du_checked: usize,
    /// Draws discarded because `t(u) = t(v)`.
    pub du_skipped: usize,
    pub du_counterexamples: Vec<Counterexample>,
}

impl HarnessSummary {
    pub fn counterexamples(&self) -> usize {
        self.polansky_counterexamples.len() + self.du_counterexamples.len()
    }
}

/// Both sides of the coalescence identity
/// `W(G) = W(G1) + W(G2) + (n1 - 1) t_G2(w) + (n2 - 1) t_G1(u)`.
pub fn polansky_sides(g1: &Graph, u: usize, g2: &Graph, w: usize) -> Result<(u64, u64), Error> {
    let joined = coalesce(g1, u, g2, w)?;
    let lhs = joined.graph.wiener_index()?;
    let (n1, n2) = (g1.order() as u64, g2.order() as u64);
    let rhs = g1.wiener_index()?
        + g2.wiener_index()?
        + (n1 - 1) * g2.transmission(w)?
        + (n2 - 1) * g1.transmission(u)?;
    Ok((lhs, rhs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DuOutcome {
    /// `t(u) = t(v)`: the strict premise does not hold.
    Skipped,
    Holds,
    Violated,
}

/// Transplant monotonicity: with `u, v` ordered so that `t(u) < t(v)`,
/// attaching `h` at `u` must give a strictly smaller Wiener index than at `v`.
pub fn du_check(g: &Graph, u: usize, v: usize, h: &Graph, w: usize) -> Result<DuOutcome, Error> {
    let (tu, tv) = (g.transmission(u)?, g.transmission(v)?);
    if tu == tv {
        return Ok(DuOutcome::Skipped);
    }
    let (near, far) = if tu < tv { (u, v) } else { (v, u) };
    let w_near = coalesce(g, near, h, w)?.graph.wiener_index()?;
    let w_far = coalesce(g, far, h, w)?.graph.wiener_index()?;
    Ok(if w_near < w_far {
        DuOutcome::Holds
    } else {
        DuOutcome::Violated
    })
}

const HARNESS_MAX_PART: usize = 12;
const HARNESS_MAX_JOINED: usize = 14;
const HARNESS_CYCLE_PROBABILITY: f64 = 0.5;

/// Runs `trials` coalescence-identity checks and `trials` premise-satisfying
/// transplant checks on seeded random connected graphs (trees, half of them
/// with one extra edge). Part sizes stay at most 12 and every coalescence has
/// at most 14 vertices.
pub fn lemma_harness(seed: u64, trials: usize) -> HarnessSummary {
    assert!(trials >= 1, "trials must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = HarnessSummary {
        seed,
        trials,
        polansky_checked: 0,
        polansky_counterexamples: Vec::new(),
        du_checked: 0,
        du_skipped: 0,
        du_counterexamples: Vec::new(),
    };

    for _ in 0..trials {
        let n1 = rng.gen_range(1..=HARNESS_MAX_PART);
        let n2 = rng.gen_range(1..=HARNESS_MAX_PART.min(HARNESS_MAX_JOINED + 1 - n1));
        let g1 = random_connected(&mut rng, n1, HARNESS_CYCLE_PROBABILITY);
        let g2 = random_connected(&mut rng, n2, HARNESS_CYCLE_PROBABILITY);
        let (u, w) = (rng.gen_range(0..n1), rng.gen_range(0..n2));
        let (lhs, rhs) = polansky_sides(&g1, u, &g2, w).expect("harness graphs are connected");
        summary.polansky_checked += 1;
        if lhs != rhs {
            summary.polansky_counterexamples.push(Counterexample {
                lemma: "polansky",
                first: graph6::encode(&g1),
                first_vertices: vec![u],
                second: graph6::encode(&g2),
                second_vertex: w,
                detail: format!("W(coalescence) = {lhs}, identity gives {rhs}"),
            });
        }
    }

    let max_attempts = trials.saturating_mul(100);
    let mut attempts = 0;
    while summary.du_checked < trials && attempts < max_attempts {
        attempts += 1;
        // G needs two vertices with different transmissions, H must be nontrivial
        let n1 = rng.gen_range(3..=HARNESS_MAX_PART);
        let n2 = rng.gen_range(2..=HARNESS_MAX_PART.min(HARNESS_MAX_JOINED + 1 - n1));
        let g = random_connected(&mut rng, n1, HARNESS_CYCLE_PROBABILITY);
        let h = random_connected(&mut rng, n2, HARNESS_CYCLE_PROBABILITY);
        let u = rng.gen_range(0..n1);
        let v = (u + rng.gen_range(1..n1)) % n1;
        let w = rng.gen_range(0..n2);
        match du_check(&g, u, v, &h, w).expect("harness graphs are connected") {
            DuOutcome::Skipped => summary.du_skipped += 1,
            DuOutcome::Holds => summary.du_checked += 1,
            DuOutcome::Violated => {
                summary.du_checked += 1;
                summary.du_counterexamples.push(Counterexample {
                    lemma: "du",
                    first: graph6::encode(&g),
                    first_vertices: vec![u, v],
                    second: graph6::encode(&h),
                    second_vertex: w,
                    detail: "t(u) < t(v) but W(GuH) >= W(GvH)".to_string(),
                });
            }
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_broom, build_path, build_star, BroomParams, OnionParams};

    #[test]
    fn broom_recognition() {
        let b = build_broom(BroomParams::new(4, 3).unwrap());
        assert!(is_broom(&b.graph, b.root, (1 << 7) - 1));
        // rooted at the tip the same tree is not a broom
        assert!(!is_broom(&b.graph, 4, (1 << 7) - 1));
        let star = build_star(4).unwrap();
        assert!(is_broom(&star, 0, 0b11111));
        // from a leaf: path of two vertices, the rest hang off its end
        assert!(is_broom(&star, 1, 0b11111));
        let p = build_path(5).unwrap();
        assert!(is_broom(&p, 0, 0b11111));
        assert!(!is_broom(&p, 2, 0b11111));
        // spider with legs of length 2 and 1
        let spider = Graph::from_edges(4, [(0, 1), (1, 2), (0, 3)]).unwrap();
        assert!(!is_broom(&spider, 0, 0b1111));
    }

    #[test]
    fn structure_of_onions() {
        let on = build_onion(OnionParams::new(1, 3, 1).unwrap());
        let checks = structural_checks(&on.graph, 3, 5);
        assert!(
            checks.iter().all(|c| c.outcome == CheckOutcome::Pass),
            "{checks:?}"
        );

        // C_6 fails the 4-cycle requirement
        let c6 = build_cycle(6).unwrap();
        let checks = structural_checks(&c6, 3, 3);
        assert_eq!(checks[0].outcome, CheckOutcome::Fail);
        assert_eq!(checks[3].outcome, CheckOutcome::Skipped);

        // min extremal graph for (3, 4): no degree-2 antipodal pair
        let g = build_min_extremal(3, 4).unwrap();
        let checks = structural_checks(&g, 3, 4);
        assert_eq!(checks[1].outcome, CheckOutcome::Fail);
        assert_eq!(checks[3].outcome, CheckOutcome::Fail);
    }

    #[test]
    fn polansky_smallest() {
        let k2 = build_path(2).unwrap();
        assert_eq!(polansky_sides(&k2, 0, &k2, 1).unwrap(), (4, 4));
    }

    #[test]
    fn du_premise_must_be_strict() {
        let c4 = build_cycle(4).unwrap();
        let k2 = build_path(2).unwrap();
        assert_eq!(du_check(&c4, 0, 2, &k2, 0).unwrap(), DuOutcome::Skipped);
        let p4 = build_path(4).unwrap();
        assert_eq!(du_check(&p4, 1, 0, &k2, 0).unwrap(), DuOutcome::Holds);
        assert_eq!(du_check(&p4, 0, 1, &k2, 0).unwrap(), DuOutcome::Holds);
    }

    #[test]
    fn harness_is_reproducible() {
        let a = lemma_harness(3, 200);
        let b = lemma_harness(3, 200);
        assert_eq!(a, b);
        assert_eq!(a.polansky_checked, 200);
        assert_eq!(a.du_checked, 200);
        assert_eq!(a.counterexamples(), 0);
    }

    #[test]
    fn table_pairs_layout() {
        assert_eq!(table_pairs(10, 6), vec![(2, 2), (2, 3), (2, 4), (3, 3)]);
        assert_eq!(table_pairs(2, 6), vec![(2, 2), (2, 3), (2, 4)]);
    }

    #[test]
    fn reports_small() {
        let r = verify_max(2, 2).unwrap();
        assert_eq!(r.optimum, 8);
        assert!(r.passed() && r.uniqueness);
        assert_eq!(r.polynomial_match, Some(false));
        let r = verify_max(3, 3).unwrap();
        assert_eq!((r.optimum, r.predicted_value_polynomial), (29, Some(63)));
        assert_eq!(r.warnings().len(), 1);
        let r = verify_min(3, 3).unwrap();
        assert_eq!(r.optimum, 27);
        assert_eq!(r.optimizers.len(), 2);
        assert!(r.passed() && !r.uniqueness);
    }
}
