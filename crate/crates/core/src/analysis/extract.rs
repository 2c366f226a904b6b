use crate::component::play_component;
use crate::error::{PebbleError, Result};
use crate::graph::MultiGraph;
use crate::params::GameParams;

/// A maximal sparse subgraph of `g`: the edges the component game accepts,
/// in input order and with their original indices.
pub fn extract_max_sparse(g: &MultiGraph, params: GameParams) -> Result<MultiGraph> {
    let (result, _) = play_component(g, params)?;
    let mut edges = result.accepted().to_vec();
    edges.sort_by_key(|e| e.index);
    MultiGraph::from_edges(g.n(), edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WeightOrder {
    /// Heaviest first: a maximum-weight basis.
    #[default]
    Descending,
    /// Lightest first: a minimum-weight basis.
    Ascending,
}

/// Maximum-weight sparse subgraph by the matroid greedy algorithm.
pub fn optimize(g: &MultiGraph, params: GameParams) -> Result<MultiGraph> {
    optimize_with(g, params, WeightOrder::Descending)
}

/// Greedy basis in the given weight order; ties go to the lower input index.
pub fn optimize_with(g: &MultiGraph, params: GameParams, order: WeightOrder) -> Result<MultiGraph> {
    if !g.is_weighted() && g.m() > 0 {
        return Err(PebbleError::Unweighted);
    }
    let mut positions: Vec<usize> = (0..g.m()).collect();
    let weight = |i: usize| g.edges()[i].weight.unwrap_or(0.0);
    positions.sort_by(|&a, &b| {
        let by_weight = match order {
            WeightOrder::Descending => weight(b).total_cmp(&weight(a)),
            WeightOrder::Ascending => weight(a).total_cmp(&weight(b)),
        };
        by_weight.then(g.edges()[a].index.cmp(&g.edges()[b].index))
    });
    extract_max_sparse(&g.permuted(&positions), params)
}
