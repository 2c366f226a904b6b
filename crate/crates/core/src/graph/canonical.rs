//! Canonical tight graphs, one recipe per parameter range.

use super::{MultiGraph, VertexId};
use crate::error::{PebbleError, Result};
use crate::params::GameParams;

/// A `(k, l)`-tight graph on `n` vertices.
///
/// * `l < k`: `k - l` loops per vertex plus `l` copies of the path `0-1-..-(n-1)`.
/// * `k <= l < 3k/2`: `2k - l` parallel edges on `{0, 1}`; every later vertex
///   gets `2k - l` edges to `0` and `l - k` edges to `1`.
/// * `3k/2 <= l < 2k`: for `n = 2` the `(2k - l)`-fold edge. Otherwise a
///   minimum-size tight seed on `c = ceil(l / (2k - l))` vertices (any
///   `kc - l` edges of the complete `(2k - l)`-multigraph, spread evenly over
///   the pairs), then `k` edges from each later vertex to vertices
///   `0..c-1`, filling each to multiplicity `2k - l` before moving on.
pub fn canonical_tight(params: GameParams, n: usize) -> Result<MultiGraph> {
    if !params.admits_tight(n) {
        return Err(PebbleError::NoTightGraph {
            k: params.k(),
            l: params.l(),
            n,
        });
    }
    let (k, l) = (params.k() as usize, params.l() as usize);
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();

    if l < k {
        for v in 0..n {
            pairs.extend(std::iter::repeat_n((v, v), k - l));
        }
        for _ in 0..l {
            pairs.extend((1..n).map(|v| (v - 1, v)));
        }
    } else if n == 1 {
        // l == k: the lone vertex with no edges.
    } else if !params.is_szego() || n == 2 {
        let d = 2 * k - l;
        pairs.extend(std::iter::repeat_n((0, 1), d));
        for v in 2..n {
            pairs.extend(std::iter::repeat_n((0, v), d));
            pairs.extend(std::iter::repeat_n((1, v), l - k));
        }
    } else {
        let d = 2 * k - l;
        let c = params.min_tight_order();
        let seed_pairs: Vec<_> = (0..c)
            .flat_map(|a| (a + 1..c).map(move |b| (a, b)))
            .collect();
        let seed_edges = k * c - l;
        pairs.extend(seed_pairs.iter().cycle().take(seed_edges).copied());
        for v in c..n {
            let mut left = k;
            for target in 0..c - 1 {
                let take = left.min(d);
                pairs.extend(std::iter::repeat_n((target, v), take));
                left -= take;
                if left == 0 {
                    break;
                }
            }
            debug_assert_eq!(left, 0);
        }
    }

    let g = MultiGraph::from_pairs(n, &pairs)?;
    debug_assert_eq!(Some(g.m()), params.tight_edge_count(n));
    Ok(g)
}
