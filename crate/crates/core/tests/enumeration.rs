mod common;

use std::collections::BTreeSet;

use common::labeled_unicyclic_bipartite;
use unicyclic_wiener::constructions::{build_min_extremal, build_onion, extremal_onion_params};
use unicyclic_wiener::enumerate::{
    count_classes, enumerate_unicyclic_bipartite, write_graph6, EnumSpec,
};
use unicyclic_wiener::graph6;

/// (p, q, classes) from an independent networkx run: non-isomorphic trees plus
/// one even-cycle-closing edge, deduplicated by VF2 isomorphism.
const FROZEN_COUNTS: [(usize, usize, usize); 25] = [
    (2, 2, 1),
    (2, 3, 1),
    (2, 4, 2),
    (3, 3, 3),
    (2, 5, 2),
    (3, 4, 8),
    (2, 6, 3),
    (3, 5, 14),
    (4, 4, 17),
    (2, 7, 3),
    (3, 6, 22),
    (4, 5, 60),
    (2, 8, 4),
    (3, 7, 31),
    (4, 6, 120),
    (5, 5, 99),
    (2, 9, 4),
    (3, 8, 42),
    (4, 7, 201),
    (5, 6, 443),
    (2, 10, 5),
    (3, 9, 55),
    (4, 8, 324),
    (5, 7, 922),
    (6, 6, 691),
];

#[test]
fn counts_match_frozen_oracle() {
    for (p, q, count) in FROZEN_COUNTS {
        assert_eq!(
            count_classes(&EnumSpec::new(p, q).unwrap()).unwrap(),
            count,
            "({p},{q})"
        );
    }
}

#[test]
fn matches_labeled_oracle_up_to_eight_vertices() {
    for n in 4..=8 {
        let oracle = labeled_unicyclic_bipartite(n);
        for (&(p, q), forms) in &oracle {
            let got: BTreeSet<_> = enumerate_unicyclic_bipartite(&EnumSpec::new(p, q).unwrap())
                .unwrap()
                .into_iter()
                .map(|c| c.canonical)
                .collect();
            assert_eq!(&got, forms, "({p},{q})");
        }
        // every valid split at this n appears in the oracle
        let splits: Vec<_> = (2..=n / 2).map(|p| (p, n - p)).collect();
        assert_eq!(oracle.keys().copied().collect::<Vec<_>>(), splits);
    }
}

#[test]
fn yielded_graphs_satisfy_the_contract() {
    for n in 4..=11 {
        for p in 2..=n / 2 {
            let q = n - p;
            let classes = enumerate_unicyclic_bipartite(&EnumSpec::new(p, q).unwrap()).unwrap();
            let mut seen = BTreeSet::new();
            for c in &classes {
                assert!(c.graph.is_unicyclic());
                assert_eq!(c.graph.bipartition().unwrap().unwrap().sizes(), (p, q));
                assert_eq!(c.graph.canonical_form().unwrap(), c.canonical);
                assert!(seen.insert(c.canonical.clone()), "duplicate class");
            }
            let onion = build_onion(extremal_onion_params(p, q).unwrap()).graph;
            assert!(seen.contains(&onion.canonical_form().unwrap()));
            let min = build_min_extremal(p, q).unwrap();
            assert!(seen.contains(&min.canonical_form().unwrap()));
        }
    }
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let spec = EnumSpec::new(5, 7).unwrap();
    let runs: Vec<_> = [1, 2, 4]
        .iter()
        .map(|&t| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .unwrap();
            pool.install(|| enumerate_unicyclic_bipartite(&spec).unwrap())
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    assert_eq!(runs[0], runs[2]);
}

#[test]
fn graph6_dump_round_trips() {
    let classes = enumerate_unicyclic_bipartite(&EnumSpec::new(3, 5).unwrap()).unwrap();
    let mut buf = Vec::new();
    write_graph6(&classes, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 14);
    for (line, class) in lines.iter().zip(&classes) {
        assert_eq!(graph6::decode(line).unwrap(), class.graph);
    }
}

#[test]
fn thirteen_and_fourteen_vertices_are_reachable() {
    // no frozen oracle here; checks the guard and the basic contract
    let spec = EnumSpec::new(6, 8).unwrap();
    let classes = enumerate_unicyclic_bipartite(&spec).unwrap();
    assert!(!classes.is_empty());
    assert!(classes.windows(2).all(|w| w[0].canonical < w[1].canonical));
    assert!(EnumSpec::new(7, 8).is_err());
}
