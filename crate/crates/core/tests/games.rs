mod common;

use common::{check_invariants, nth_params, random_graph_for, subgraph};
use pebble_core::analysis::extract_max_sparse;
use pebble_core::component::{detect_component_first, detect_component_second};
use pebble_core::{
    play_basic, play_component_with, Detection, Edge, Insertion, Oracle, PebbleGame,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn games_match_oracle_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(21);
    for round in 0..600 {
        let params = nth_params(4, round);
        let g = random_graph_for(&mut rng, params, 10);
        let oracle = Oracle::new(params);
        let expected = oracle.classify(&g).unwrap();
        let basic = play_basic(&g, params).unwrap();
        assert_eq!(
            basic.classification,
            expected,
            "{params} {:?}",
            g.edge_multiset()
        );
        for detection in [Detection::First, Detection::Second] {
            let (r, d) = play_component_with(&g, params, detection).unwrap();
            assert_eq!(r.classification, expected);
            let accepted = subgraph(&g, r.accepted());
            assert!(oracle.is_sparse(&accepted).unwrap());
            assert_eq!(accepted.m(), oracle.rank(&g).unwrap());
            assert_eq!(
                d.components,
                oracle.components(&accepted).unwrap(),
                "{params}"
            );
        }
    }
}

#[test]
fn extraction_is_a_maximal_sparse_subgraph() {
    let mut rng = StdRng::seed_from_u64(22);
    for round in 0..300 {
        let params = nth_params(3, round);
        let g = random_graph_for(&mut rng, params, 9);
        let oracle = Oracle::new(params);
        let sub = extract_max_sparse(&g, params).unwrap();
        assert!(oracle.is_sparse(&sub).unwrap());
        let kept: Vec<usize> = sub.edges().iter().map(|e| e.index).collect();
        for e in g.edges().iter().filter(|e| !kept.contains(&e.index)) {
            let mut more = sub.edges().to_vec();
            more.push(*e);
            assert!(
                !oracle.is_sparse(&subgraph(&g, &more)).unwrap(),
                "{params}: not maximal"
            );
        }
    }
}

#[test]
fn detections_agree_on_the_same_state() {
    let mut rng = StdRng::seed_from_u64(23);
    for round in 0..400 {
        let params = nth_params(3, round);
        if params.l() == 0 {
            // Detection I consults the previous component at l = 0; the
            // lock-step comparison in the acceptance suite covers it.
            continue;
        }
        let g = random_graph_for(&mut rng, params, 10);
        let mut state = PebbleGame::new(g.n(), params).unwrap();
        for &e in g.edges() {
            if state.try_insert_edge(e).unwrap() == Insertion::Accepted
                && state.endpoint_pebbles(e.u, e.v) == params.l()
            {
                let a = detect_component_first(&state, e.u, e.v, None).unwrap();
                let b = detect_component_second(&state, e.u, e.v).unwrap();
                assert_eq!(a, b, "{params} {:?}", g.edge_multiset());
            }
        }
    }
}

fn edge(u: usize, v: usize, index: usize) -> Edge {
    Edge {
        u,
        v,
        weight: None,
        index,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn invariants_hold_after_every_move(
        k in 1u32..4,
        l_frac in 0.0f64..1.0,
        n in 1usize..8,
        raw in prop::collection::vec((0usize..8, 0usize..8), 0..24),
    ) {
        let l = ((2 * k) as f64 * l_frac) as u32;
        let params = pebble_core::GameParams::new(k, l.min(2 * k - 1)).unwrap();
        let mut state = PebbleGame::new(n, params).unwrap();
        let mut failure = None;
        for (i, (a, b)) in raw.into_iter().enumerate() {
            state.try_insert_observed(edge(a % n, b % n, i), &mut |s| {
                if let Err(e) = check_invariants(s) {
                    failure.get_or_insert(e);
                }
            }).unwrap();
        }
        prop_assert_eq!(failure, None);
    }

    #[test]
    fn accepted_count_never_exceeds_bound(
        n in 1usize..10,
        raw in prop::collection::vec((0usize..10, 0usize..10), 0..40),
    ) {
        let params = pebble_core::GameParams::new(2, 3).unwrap();
        let mut state = PebbleGame::new(n, params).unwrap();
        for (i, (a, b)) in raw.into_iter().enumerate() {
            state.try_insert_edge(edge(a % n, b % n, i)).unwrap();
        }
        prop_assert!(state.accepted().len() <= params.sparsity_bound(n));
        prop_assert_eq!(state.free_pebbles(), 2 * n - state.accepted().len());
    }
}
