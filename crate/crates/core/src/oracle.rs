//! Brute-force sparsity by enumerating every vertex subset.
//!
//! Exponential in `n` and meant only as ground truth for small graphs.

use crate::error::{PebbleError, Result};
use crate::game::Classification;
use crate::graph::{Edge, MultiGraph, VertexId};
use crate::params::GameParams;

pub const DEFAULT_ORACLE_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    params: GameParams,
    limit: usize,
}

impl Oracle {
    pub fn new(params: GameParams) -> Self {
        Self {
            params,
            limit: DEFAULT_ORACLE_LIMIT,
        }
    }

    /// Raise or lower the vertex cap (at most 24; memory is `4 * 2^n` bytes).
    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = limit.min(24);
        self
    }

    pub fn params(&self) -> GameParams {
        self.params
    }

    fn check_capacity(&self, g: &MultiGraph) -> Result<()> {
        if g.n() > self.limit {
            Err(PebbleError::OracleCapacity {
                limit: self.limit,
                n: g.n(),
            })
        } else {
            Ok(())
        }
    }

    fn bound(&self, mask: u32) -> u32 {
        self.params.sparsity_bound(mask.count_ones() as usize) as u32
    }

    pub fn is_sparse(&self, g: &MultiGraph) -> Result<bool> {
        self.check_capacity(g)?;
        let counts = induced_counts(g);
        Ok((1..counts.len()).all(|mask| counts[mask] <= self.bound(mask as u32)))
    }

    pub fn is_tight(&self, g: &MultiGraph) -> Result<bool> {
        Ok(self.is_sparse(g)? && Some(g.m()) == self.params.tight_edge_count(g.n()))
    }

    /// Positions of a maximal sparse subgraph, chosen greedily in edge order.
    pub fn greedy_basis(&self, g: &MultiGraph) -> Result<Vec<usize>> {
        self.check_capacity(g)?;
        let n = g.n();
        let full = (1u32 << n) - 1;
        let mut counts = vec![0u32; 1usize << n];
        let mut kept = Vec::new();
        for (pos, e) in g.edges().iter().enumerate() {
            let required = (1u32 << e.u) | (1u32 << e.v);
            let free = full & !required;
            if !for_each_superset(required, free, |mask| {
                counts[mask as usize] < self.bound(mask)
            }) {
                continue;
            }
            for_each_superset(required, free, |mask| {
                counts[mask as usize] += 1;
                true
            });
            kept.push(pos);
        }
        Ok(kept)
    }

    /// Size of a maximal sparse subgraph.
    pub fn rank(&self, g: &MultiGraph) -> Result<usize> {
        Ok(self.greedy_basis(g)?.len())
    }

    pub fn is_spanning(&self, g: &MultiGraph) -> Result<bool> {
        Ok(Some(self.rank(g)?) == self.params.tight_edge_count(g.n()))
    }

    pub fn classify(&self, g: &MultiGraph) -> Result<Classification> {
        let sparse = self.is_sparse(g)?;
        let spanning = self.is_spanning(g)?;
        Ok(match (sparse, spanning) {
            (true, true) => Classification::WellConstrained,
            (true, false) => Classification::UnderConstrained,
            (false, true) => Classification::OverConstrained,
            (false, false) => Classification::Other,
        })
    }

    /// Every vertex subset spanning exactly `k|V'| - l` edges, as bitmasks.
    pub fn block_masks(&self, g: &MultiGraph) -> Result<Vec<u32>> {
        self.check_capacity(g)?;
        let counts = induced_counts(g);
        let (k, l) = (self.params.k() as i64, self.params.l() as i64);
        Ok((1..counts.len() as u32)
            .filter(|&mask| counts[mask as usize] as i64 == k * mask.count_ones() as i64 - l)
            .collect())
    }

    pub fn blocks(&self, g: &MultiGraph) -> Result<Vec<Vec<VertexId>>> {
        let mut blocks: Vec<_> = self.block_masks(g)?.into_iter().map(mask_to_set).collect();
        blocks.sort();
        Ok(blocks)
    }

    /// Inclusion-maximal blocks of a sparse graph, sorted. For `l = 0` the
    /// union of all blocks is the single component.
    pub fn components(&self, g: &MultiGraph) -> Result<Vec<Vec<VertexId>>> {
        if !self.is_sparse(g)? {
            return Err(PebbleError::NotSparse);
        }
        let masks = self.block_masks(g)?;
        if self.params.l() == 0 {
            let union = masks.iter().fold(0u32, |acc, m| acc | m);
            return Ok(if union == 0 {
                Vec::new()
            } else {
                vec![mask_to_set(union)]
            });
        }
        let mut comps: Vec<_> = masks
            .iter()
            .filter(|&&m| !masks.iter().any(|&o| o != m && o & m == m))
            .map(|&m| mask_to_set(m))
            .collect();
        comps.sort();
        Ok(comps)
    }
}

pub(crate) fn mask_to_set(mask: u32) -> Vec<VertexId> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Number of edges (loops included) induced by every vertex subset.
pub(crate) fn induced_counts(g: &MultiGraph) -> Vec<u32> {
    let n = g.n();
    let mut adj = vec![0u32; n * n];
    for &Edge { u, v, .. } in g.edges() {
        adj[u * n + v] += 1;
        if u != v {
            adj[v * n + u] += 1;
        }
    }
    let mut counts = vec![0u32; 1usize << n];
    for mask in 1usize..counts.len() {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let row = &adj[v * n..(v + 1) * n];
        let mut c = counts[rest] + row[v];
        let mut r = rest;
        while r != 0 {
            let w = r.trailing_zeros() as usize;
            c += row[w];
            r &= r - 1;
        }
        counts[mask] = c;
    }
    counts
}

/// Calls `f` on `required | s` for every subset `s` of `free`; stops and
/// returns false as soon as `f` does.
fn for_each_superset(required: u32, free: u32, mut f: impl FnMut(u32) -> bool) -> bool {
    let mut s = free;
    loop {
        if !f(required | s) {
            return false;
        }
        if s == 0 {
            return true;
        }
        s = (s - 1) & free;
    }
}
