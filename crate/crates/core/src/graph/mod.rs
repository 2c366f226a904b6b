//! Undirected multigraphs with loops and parallel edges.

mod canonical;
mod format;

pub use canonical::canonical_tight;
pub use format::{parse_graph, serialize_graph};

use crate::error::{PebbleError, Result};

/// Dense 0-based vertex index.
pub type VertexId = usize;

/// One input edge. `u == v` is a loop.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Option<f64>,
    /// Position of the edge in the graph it was read or built from.
    pub index: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// Endpoints with the smaller one first.
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }
}

/// An immutable multigraph on vertices `0..n`; edges keep their input order.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<Edge>,
    weighted: bool,
}

impl MultiGraph {
    /// Builds an unweighted graph; edge indices follow slice order.
    pub fn from_pairs(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(index, &(u, v))| Edge {
                u,
                v,
                weight: None,
                index,
            })
            .collect();
        Self::from_edges(n, edges)
    }

    pub fn from_weighted(n: usize, triples: &[(VertexId, VertexId, f64)]) -> Result<Self> {
        let edges = triples
            .iter()
            .enumerate()
            .map(|(index, &(u, v, w))| Edge {
                u,
                v,
                weight: Some(w),
                index,
            })
            .collect();
        Self::from_edges(n, edges)
    }

    /// Builds a graph from explicit edges, keeping their `index` fields. Used
    /// for subgraphs whose edges should stay traceable to a parent graph.
    pub fn from_edges(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let weighted = edges.first().is_some_and(|e| e.weight.is_some());
        for e in &edges {
            for x in [e.u, e.v] {
                if x >= n {
                    return Err(PebbleError::VertexOutOfRange { vertex: x, n });
                }
            }
            match e.weight {
                Some(w) if !w.is_finite() => return Err(PebbleError::BadWeight(w.to_string())),
                Some(_) if !weighted => return Err(PebbleError::MixedWeights),
                None if weighted => return Err(PebbleError::MixedWeights),
                _ => {}
            }
        }
        Ok(Self { n, edges, weighted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    /// Number of incident edges; a loop counts once.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            if !e.is_loop() {
                deg[e.v] += 1;
            }
        }
        deg
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    /// Number of edges parallel to `{u, v}` (loops when `u == v`).
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let key = if u <= v { (u, v) } else { (v, u) };
        self.edges.iter().filter(|e| e.endpoints() == key).count()
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().filter_map(|e| e.weight).sum()
    }

    /// Same vertex set, edges picked by position, original indices kept.
    pub fn edge_subgraph(&self, positions: impl IntoIterator<Item = usize>) -> MultiGraph {
        let edges = positions.into_iter().map(|i| self.edges[i]).collect();
        MultiGraph {
            n: self.n,
            edges,
            weighted: self.weighted,
        }
    }

    /// Copy with edges renumbered `0..m` in their current order.
    pub fn reindexed(&self) -> MultiGraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(index, e)| Edge { index, ..*e })
            .collect();
        MultiGraph {
            n: self.n,
            edges,
            weighted: self.weighted,
        }
    }

    /// Copy with edges in the given permutation of positions, indices kept.
    pub fn permuted(&self, order: &[usize]) -> MultiGraph {
        debug_assert_eq!(order.len(), self.edges.len());
        self.edge_subgraph(order.iter().copied())
    }

    /// Sorted endpoint pairs; equal for graphs with the same edge multiset.
    pub fn edge_multiset(&self) -> Vec<(VertexId, VertexId)> {
        let mut pairs: Vec<_> = self.edges.iter().map(Edge::endpoints).collect();
        pairs.sort_unstable();
        pairs
    }
}
