//! The `(k, l)` parameter pair and the range-dependent facts derived from it.

use std::fmt;

use crate::error::{PebbleError, Result};

/// Which side of the `l = k` threshold the parameters fall on.
///
/// The threshold itself is grouped with the lower range: components are
/// vertex-disjoint there, which is what the component bookkeeping cares about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Range {
    /// `l` in `[0, k]`.
    Lower,
    /// `l` in `(k, 2k)`.
    Upper,
}

/// Pebble game parameters: `k` pebbles per vertex, and `l + 1` pebbles
/// required on the endpoints of an edge before it is accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameParams {
    k: u32,
    l: u32,
}

impl GameParams {
    pub fn new(k: u32, l: u32) -> Result<Self> {
        if k == 0 {
            return Err(PebbleError::InvalidParams {
                k,
                l,
                reason: "k must be positive",
            });
        }
        if l >= 2 * k {
            return Err(PebbleError::InvalidParams {
                k,
                l,
                reason: "l must be below 2k, otherwise only the empty graph is sparse",
            });
        }
        Ok(Self { k, l })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn range(&self) -> Range {
        if self.l <= self.k {
            Range::Lower
        } else {
            Range::Upper
        }
    }

    pub fn is_upper(&self) -> bool {
        self.range() == Range::Upper
    }

    /// `l` in `[3k/2, 2k)`, where tight graphs on small vertex sets do not exist.
    pub fn is_szego(&self) -> bool {
        2 * self.l >= 3 * self.k
    }

    /// Maximum number of loops a sparse graph may carry on one vertex.
    pub fn loop_multiplicity(&self) -> u32 {
        self.k.saturating_sub(self.l)
    }

    /// Maximum multiplicity of a parallel class of non-loop edges.
    pub fn edge_multiplicity(&self) -> u32 {
        2 * self.k - self.l
    }

    /// Largest number of edges a set of `n` vertices may span: `max(0, kn - l)`.
    pub fn sparsity_bound(&self, n: usize) -> usize {
        (self.k as usize * n).saturating_sub(self.l as usize)
    }

    /// `kn - l` when non-negative: the edge count of a tight graph on `n` vertices.
    pub fn tight_edge_count(&self, n: usize) -> Option<usize> {
        (self.k as usize * n).checked_sub(self.l as usize)
    }

    /// `ceil(l / (2k - l))`, the order of the smallest non-trivial tight graphs
    /// in the Szegő range.
    fn szego_order(&self) -> usize {
        let d = self.edge_multiplicity() as usize;
        (self.l as usize).div_ceil(d)
    }

    /// Smallest vertex count from which tight graphs exist without gaps
    /// (apart from the isolated `n = 2` case of the Szegő range).
    pub fn min_tight_order(&self) -> usize {
        if self.l <= self.k {
            1
        } else if !self.is_szego() {
            2
        } else {
            self.szego_order()
        }
    }

    /// Whether tight graphs (hence a sparsity matroid with non-empty bases)
    /// exist on `n` vertices.
    pub fn admits_tight(&self, n: usize) -> bool {
        if n == 0 {
            return false;
        }
        if self.is_szego() {
            n == 2 || n >= self.szego_order()
        } else {
            n >= self.min_tight_order()
        }
    }

    /// Order at which a Henneberg reduction stops: the smallest `n` from
    /// which every order down to it admits tight graphs.
    pub fn base_case_order(&self) -> usize {
        let order = self.min_tight_order();
        if self.is_szego() && order <= 3 {
            2
        } else {
            order
        }
    }
}

impl fmt::Display for GameParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.l)
    }
}
