//! Necessary conditions every tight graph satisfies, as standalone checks.

use crate::error::{PebbleError, Result};
use crate::graph::{MultiGraph, VertexId};
use crate::params::GameParams;

/// Whether at least `l(p - 1)` edges cross between the `p` parts.
///
/// The parts must be non-empty, disjoint and cover the vertex set; in the
/// upper range each part needs at least two vertices.
pub fn partition_bound_check(
    g: &MultiGraph,
    params: GameParams,
    partition: &[Vec<VertexId>],
) -> Result<bool> {
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    for (i, part) in partition.iter().enumerate() {
        if part.is_empty() {
            return Err(PebbleError::InvalidPartition(format!("part {i} is empty")));
        }
        if params.is_upper() && part.len() < 2 {
            return Err(PebbleError::InvalidPartition(format!(
                "part {i} has fewer than two vertices, which the upper range does not allow"
            )));
        }
        for &v in part {
            if v >= n {
                return Err(PebbleError::VertexOutOfRange { vertex: v, n });
            }
            if part_of[v] != usize::MAX {
                return Err(PebbleError::InvalidPartition(format!(
                    "vertex {v} appears twice"
                )));
            }
            part_of[v] = i;
        }
    }
    if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
        return Err(PebbleError::InvalidPartition(format!(
            "vertex {v} is in no part"
        )));
    }
    let crossing = g
        .edges()
        .iter()
        .filter(|e| part_of[e.u] != part_of[e.v])
        .count();
    let p = partition.len();
    Ok(crossing >= params.l() as usize * (p - 1))
}

/// Whether every vertex has degree at least `k` and, when `l > 0`, at least
/// one non-loop edge.
///
/// Tight graphs satisfy this once `k(n - 1) >= l`. Below that the other
/// `n - 1` vertices may span no edges at all (a single edge is tight in
/// (2,3)), so such graphs are not constrained and the check returns true.
pub fn min_degree_check(g: &MultiGraph, params: GameParams) -> bool {
    let k = params.k() as usize;
    if k * g.n().saturating_sub(1) < params.l() as usize {
        return true;
    }
    if g.degrees().iter().any(|&d| d < k) {
        return false;
    }
    if params.l() > 0 {
        let mut linked = vec![false; g.n()];
        for e in g.edges().iter().filter(|e| !e.is_loop()) {
            linked[e.u] = true;
            linked[e.v] = true;
        }
        return linked.iter().all(|&b| b);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_tight;

    fn p(k: u32, l: u32) -> GameParams {
        GameParams::new(k, l).unwrap()
    }

    #[test]
    fn tree_partitions() {
        let tree = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(partition_bound_check(&tree, p(1, 1), &[vec![0, 2], vec![1, 3]]).unwrap());
        assert!(partition_bound_check(&tree, p(1, 1), &[vec![0, 1, 2, 3]]).unwrap());
    }

    #[test]
    fn bound_can_fail_on_non_tight_input() {
        let two = MultiGraph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!partition_bound_check(&two, p(1, 1), &[vec![0, 1], vec![2, 3]]).unwrap());
    }

    #[test]
    fn invalid_partitions() {
        let g = canonical_tight(p(2, 3), 4).unwrap();
        let bad = |parts: &[Vec<usize>]| partition_bound_check(&g, p(2, 3), parts).is_err();
        assert!(bad(&[vec![0], vec![1, 2, 3]]));
        assert!(bad(&[vec![0, 1], vec![1, 2, 3]]));
        assert!(bad(&[vec![0, 1], vec![2]]));
        assert!(bad(&[vec![0, 1], vec![], vec![2, 3]]));
        assert!(!bad(&[vec![0, 1], vec![2, 3]]));
    }

    #[test]
    fn degree_checks() {
        let tri = MultiGraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(min_degree_check(&tri, p(2, 3)));
        assert!(min_degree_check(
            &canonical_tight(p(2, 1), 4).unwrap(),
            p(2, 1)
        ));
        assert!(min_degree_check(
            &canonical_tight(p(3, 5), 5).unwrap(),
            p(3, 5)
        ));
        let path = MultiGraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!min_degree_check(&path, p(2, 3)));
        // Loops only: enough degree but no tie to the rest when l > 0.
        let loops = MultiGraph::from_pairs(2, &[(0, 0), (0, 0), (1, 1), (1, 1)]).unwrap();
        assert!(!min_degree_check(&loops, p(2, 1)));
        assert!(min_degree_check(&loops, p(2, 0)));
    }
}
