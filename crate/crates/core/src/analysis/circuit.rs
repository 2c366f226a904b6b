//! Circuits of dependent edges, and redundancy built from them.

use crate::component::play_component;
use crate::error::{PebbleError, Result};
use crate::game::{Classification, Insertion, PebbleGame};
use crate::graph::{Edge, MultiGraph, VertexId};
use crate::params::GameParams;

/// A minimal sparsity violation: the accepted edges spanned by `vertices`
/// together with the dependent edge that closed it (always last).
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Edge>,
}

impl Circuit {
    /// The dependent edge the circuit was found for.
    pub fn trigger(&self) -> &Edge {
        self.edges
            .last()
            .expect("a circuit always holds its trigger edge")
    }
}

/// The circuit that the dependent edge `e` closes in the accepted graph.
///
/// Collects `l` pebbles on the endpoints of `e`; `Reach(u, v)` is then the
/// smallest block containing both, and the edges it spans plus `e` form the
/// circuit. Pebble moves made here are ordinary game moves.
pub fn find_circuit(state: &mut PebbleGame, e: Edge) -> Result<Circuit> {
    let params = state.params();
    let (k, l) = (params.k(), params.l());
    if e.is_loop() && l >= k {
        // No vertex can ever hold l + 1 pebbles; the loop alone violates
        // sparsity on its vertex.
        return Ok(Circuit {
            vertices: vec![e.u],
            edges: vec![e],
        });
    }
    let got = state.gather_pebbles(e.u, e.v, l + 1);
    if got > l {
        return Err(PebbleError::IndependentEdge { u: e.u, v: e.v });
    }
    if got < l {
        return Err(PebbleError::Internal(format!(
            "only {got} pebbles reachable on {}-{}, expected {l}",
            e.u, e.v
        )));
    }
    let reach = state.reach_mask(&[e.u, e.v]);
    let mut edges: Vec<Edge> = state
        .spanned_edges(&reach)
        .into_iter()
        .map(|id| state.accepted()[id])
        .collect();
    edges.sort_by_key(|x| x.index);
    edges.push(e);
    let vertices = crate::game::mask_vertices(&reach);
    Ok(Circuit { vertices, edges })
}

/// One circuit per rejected edge, in input order.
pub fn circuits(g: &MultiGraph, params: GameParams) -> Result<Vec<Circuit>> {
    let mut state = PebbleGame::new(g.n(), params)?;
    let mut found = Vec::new();
    for &e in g.edges() {
        if state.try_insert_edge(e)? == Insertion::Rejected {
            found.push(find_circuit(&mut state, e)?);
        }
    }
    Ok(found)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Redundancy {
    /// Spanning, and still spanning after deleting any single edge.
    pub is_redundant: bool,
    /// Edges lying in no circuit.
    pub bridges: Vec<Edge>,
    /// Components of the graph with its bridges removed, keeping only those
    /// that span at least one edge.
    pub redundant_components: Vec<Vec<VertexId>>,
}

pub fn redundancy(g: &MultiGraph, params: GameParams) -> Result<Redundancy> {
    // Work on positions so that circuit membership maps back to `g`.
    let work = g.reindexed();
    let mut state = PebbleGame::new(g.n(), params)?;
    let mut in_circuit = vec![false; g.m()];
    for &e in work.edges() {
        if state.try_insert_edge(e)? == Insertion::Rejected {
            for member in find_circuit(&mut state, e)?.edges {
                in_circuit[member.index] = true;
            }
        }
    }
    let spanning = matches!(
        state.classification(),
        Classification::WellConstrained | Classification::OverConstrained
    );
    let is_redundant = spanning && in_circuit.iter().all(|&b| b);

    let mut bridge_positions: Vec<usize> = state
        .accepted()
        .iter()
        .map(|e| e.index)
        .filter(|&i| !in_circuit[i])
        .collect();
    bridge_positions.sort_unstable();
    let bridges = bridge_positions.iter().map(|&i| g.edges()[i]).collect();

    let rest = g.edge_subgraph((0..g.m()).filter(|&i| in_circuit[i]));
    let (result, decomposition) = play_component(&rest, params)?;
    let redundant_components = decomposition
        .components
        .into_iter()
        .filter(|c| {
            result
                .accepted()
                .iter()
                .any(|e| c.binary_search(&e.u).is_ok() && c.binary_search(&e.v).is_ok())
        })
        .collect();

    Ok(Redundancy {
        is_redundant,
        bridges,
        redundant_components,
    })
}
