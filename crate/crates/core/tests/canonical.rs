mod common;

use common::all_params;
use pebble_core::analysis::min_degree_check;
use pebble_core::{canonical_tight, Oracle, PebbleError};

#[test]
fn canonical_graphs_are_tight_exactly_when_tight_graphs_exist() {
    for params in all_params(4) {
        let oracle = Oracle::new(params);
        for n in 1..=8 {
            match canonical_tight(params, n) {
                Ok(g) => {
                    assert!(params.admits_tight(n), "{params} n={n}");
                    assert!(
                        oracle.is_tight(&g).unwrap(),
                        "{params} n={n}: {:?}",
                        g.edge_multiset()
                    );
                    assert!(min_degree_check(&g, params), "{params} n={n}");
                }
                Err(e) => {
                    assert!(!params.admits_tight(n), "{params} n={n}");
                    assert_eq!(
                        e,
                        PebbleError::NoTightGraph {
                            k: params.k(),
                            l: params.l(),
                            n
                        }
                    );
                }
            }
        }
    }
}

#[test]
fn no_tight_graph_below_the_minimum_order() {
    // Exhaustive over multigraphs within the multiplicity bounds: where the
    // canonical construction refuses, nothing is tight.
    for params in all_params(3) {
        let oracle = Oracle::new(params);
        for n in 1..=4 {
            if params.admits_tight(n) {
                continue;
            }
            let mut any = false;
            common::enumerate_multigraphs(params, n, |g| any |= oracle.is_tight(g).unwrap());
            assert!(!any, "{params} n={n}");
        }
    }
}

#[test]
fn canonical_is_deterministic() {
    for params in all_params(3) {
        for n in 1..=6 {
            assert_eq!(canonical_tight(params, n), canonical_tight(params, n));
        }
    }
}
