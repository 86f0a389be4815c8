mod common;

use common::{transmission_fw, wiener_fw};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unicyclic_wiener::constructions::*;
use unicyclic_wiener::random::random_connected;
use unicyclic_wiener::Graph;

fn onion_params_up_to(order: usize) -> impl Iterator<Item = OnionParams> {
    (0..=order).flat_map(move |k| {
        (1..=order).flat_map(move |l| {
            (0..=order)
                .filter(move |&m| k + l + m + 3 <= order)
                .map(move |m| OnionParams::new(k, l, m).unwrap())
        })
    })
}

#[test]
fn closed_forms_match_floyd_warshall() {
    for params in onion_params_up_to(14) {
        let on = build_onion(params);
        assert_eq!(on.graph.order(), params.order());
        assert_eq!(
            Some(onion_wiener_closed_form(params)),
            wiener_fw(&on.graph),
            "{params}"
        );
        let t = onion_transmissions(params);
        assert_eq!(t.v, transmission_fw(&on.graph, on.v), "t_v of {params}");
        assert_eq!(
            t.u_l,
            transmission_fw(&on.graph, on.u_l),
            "t_ul of {params}"
        );
    }
}

#[test]
fn onions_are_unicyclic_bipartite_with_two_antipodal_degree_two_vertices() {
    for params in onion_params_up_to(12) {
        let on = build_onion(params);
        let g = &on.graph;
        assert!(g.is_unicyclic());
        assert!(g.bipartition().unwrap().is_some());
        assert_eq!(g.cycle_vertices(), 0b1111);
        assert_eq!((g.degree(1), g.degree(3)), (2, 2));
        assert!(!g.has_edge(on.u, on.v));
    }
}

#[test]
fn frozen_onion_values() {
    // networkx oracle
    let cases = [
        ((0, 1, 0), 8, 4, 4),
        ((1, 1, 0), 16, 5, 7),
        ((0, 2, 0), 16, 7, 8),
        ((0, 3, 0), 29, 11, 13),
        ((1, 2, 1), 46, 12, 13),
        ((3, 4, 5), 378, 49, 42),
    ];
    for ((k, l, m), w, tv, tul) in cases {
        let p = OnionParams::new(k, l, m).unwrap();
        assert_eq!(onion_wiener_closed_form(p), w);
        assert_eq!(
            onion_transmissions(p),
            OnionTransmissions { v: tv, u_l: tul }
        );
        assert_eq!(build_onion(p).graph.wiener_index(), Ok(w));
    }
    let a = build_onion(OnionParams::new(1, 1, 0).unwrap()).graph;
    let b = build_onion(OnionParams::new(0, 2, 0).unwrap()).graph;
    assert_eq!(a.canonical_form().unwrap(), b.canonical_form().unwrap());
}

#[test]
fn swapped_l1_onions_are_isomorphic() {
    for a in 0..=6 {
        for b in 0..=6 {
            let x = build_onion(OnionParams::new(a, 1, b).unwrap()).graph;
            let y = build_onion(OnionParams::new(b, 1, a).unwrap()).graph;
            assert_eq!(
                x.canonical_form().unwrap(),
                y.canonical_form().unwrap(),
                "({a},1,{b})"
            );
        }
    }
}

#[test]
fn extremal_onion_has_requested_parts() {
    for p in 2..=20 {
        for q in p..=20 {
            let params = extremal_onion_params(p, q).unwrap();
            let g = build_onion(params).graph;
            assert_eq!(g.order(), p + q);
            assert_eq!(
                g.bipartition().unwrap().unwrap().sizes(),
                (p, q),
                "({p},{q})"
            );
        }
    }
}

#[test]
fn min_extremal_has_requested_parts() {
    for p in 2..=20 {
        for q in p..=20 {
            let g = build_min_extremal(p, q).unwrap();
            assert!(g.is_unicyclic());
            assert_eq!(g.bipartition().unwrap().unwrap().sizes(), (p, q));
        }
    }
}

#[test]
fn coalescing_star_and_path_gives_broom() {
    for a in 1..=6 {
        for b in 0..=5 {
            let star = build_star(b).unwrap();
            let path = build_path(a).unwrap();
            let c = coalesce(&path, a - 1, &star, 0).unwrap();
            let broom = build_broom(BroomParams::new(a, b).unwrap());
            assert_eq!(
                c.graph.canonical_form().unwrap(),
                broom.graph.canonical_form().unwrap()
            );
        }
    }
}

#[test]
fn broom_wiener_by_oracle() {
    assert_eq!(
        build_broom(BroomParams::new(2, 2).unwrap())
            .graph
            .wiener_index(),
        Ok(9)
    );
    for a in 1..=8 {
        for b in 0..=6 {
            let g = build_broom(BroomParams::new(a, b).unwrap()).graph;
            assert_eq!(g.wiener_index().ok(), wiener_fw(&g));
        }
    }
}

fn random_pair(rng: &mut ChaCha8Rng, min1: usize, min2: usize) -> (Graph, Graph) {
    let n1 = rng.gen_range(min1..=12);
    let n2 = rng.gen_range(min2..=12.min(15 - n1));
    (
        random_connected(rng, n1, 0.5),
        random_connected(rng, n2, 0.5),
    )
}

#[test]
fn polansky_identity_on_random_coalescences() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0A1);
    for _ in 0..1000 {
        let (g1, g2) = random_pair(&mut rng, 1, 1);
        let (u, w) = (rng.gen_range(0..g1.order()), rng.gen_range(0..g2.order()));
        let joined = coalesce(&g1, u, &g2, w).unwrap();
        assert!(joined.graph.order() <= 14);
        let (n1, n2) = (g1.order() as u64, g2.order() as u64);
        let rhs = wiener_fw(&g1).unwrap()
            + wiener_fw(&g2).unwrap()
            + (n1 - 1) * transmission_fw(&g2, w)
            + (n2 - 1) * transmission_fw(&g1, u);
        assert_eq!(wiener_fw(&joined.graph), Some(rhs));
        assert_eq!(joined.second[w], u);
    }
}

#[test]
fn du_monotonicity_on_random_transplants() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD0);
    let mut checked = 0;
    while checked < 1000 {
        let (g, h) = random_pair(&mut rng, 3, 2);
        let (u, v) = (rng.gen_range(0..g.order()), rng.gen_range(0..g.order()));
        let w = rng.gen_range(0..h.order());
        let (tu, tv) = (transmission_fw(&g, u), transmission_fw(&g, v));
        if tu >= tv {
            continue;
        }
        checked += 1;
        let at_u = coalesce(&g, u, &h, w).unwrap().graph;
        let at_v = coalesce(&g, v, &h, w).unwrap().graph;
        assert!(wiener_fw(&at_u) < wiener_fw(&at_v));
    }
}

proptest! {
    #[test]
    fn closed_form_divisions_are_exact(k in 0usize..20, l in 1usize..20, m in 0usize..20) {
        // panics on an inexact division
        let p = OnionParams::new(k, l, m).unwrap();
        let _ = onion_wiener_closed_form(p);
        let _ = onion_transmissions(p);
    }
}

#[test]
fn invalid_parameters() {
    assert!(OnionParams::new(0, 0, 0).is_err());
    assert!(OnionParams::new(30, 30, 10).is_err());
    assert!(extremal_onion_params(1, 1).is_err());
    assert!(extremal_onion_params(5, 4).is_err());
    assert!(build_min_extremal(1, 2).is_err());
    assert!(theorem_polynomial(0, 3).is_err());
}
