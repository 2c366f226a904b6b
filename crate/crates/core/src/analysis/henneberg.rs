//! Henneberg reduction: peel a tight graph down to a base case one vertex at
//! a time, keeping it tight after every step.

use std::collections::BTreeMap;

use crate::component::{play_component, ComponentGame, Detection};
use crate::error::{PebbleError, Result};
use crate::game::{Classification, Insertion};
use crate::graph::{Edge, MultiGraph, VertexId};
use crate::params::GameParams;

/// Removal of one vertex of degree `k + b` and insertion of `b` edges among
/// its neighbourhood. All vertex labels refer to the graph before the step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub removed_vertex: VertexId,
    pub removed_edges: Vec<(VertexId, VertexId)>,
    pub added_edges: Vec<(VertexId, VertexId)>,
    pub b: usize,
}

impl ReductionStep {
    /// Applies the step: drops the vertex and its edges, adds the new edges,
    /// and closes the gap in the labels.
    pub fn reduce(&self, g: &MultiGraph) -> MultiGraph {
        let v = self.removed_vertex;
        let down = |x: VertexId| if x > v { x - 1 } else { x };
        let pairs: Vec<_> = g
            .edges()
            .iter()
            .filter(|e| e.u != v && e.v != v)
            .map(|e| (e.u, e.v))
            .chain(self.added_edges.iter().copied())
            .map(|(a, b)| (down(a), down(b)))
            .collect();
        MultiGraph::from_pairs(g.n() - 1, &pairs).expect("relabelled endpoints stay in range")
    }

    /// The forward Henneberg move: undoes [`reduce`](Self::reduce) up to
    /// edge order.
    pub fn extend(&self, reduced: &MultiGraph) -> MultiGraph {
        let v = self.removed_vertex;
        let up = |x: VertexId| if x >= v { x + 1 } else { x };
        let mut pairs: Vec<_> = reduced.edges().iter().map(|e| (up(e.u), up(e.v))).collect();
        for &(a, b) in &self.added_edges {
            let pos = pairs
                .iter()
                .rposition(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b))
                .expect("added edge present in the reduced graph");
            pairs.remove(pos);
        }
        pairs.extend(self.removed_edges.iter().copied());
        MultiGraph::from_pairs(reduced.n() + 1, &pairs).expect("endpoints stay in range")
    }
}

fn is_tight(g: &MultiGraph, params: GameParams) -> Result<bool> {
    Ok(play_component(g, params)?.0.classification == Classification::WellConstrained)
}

/// One reduction step on a tight graph above the base-case order.
///
/// Removes the lowest-index vertex of minimum degree `k + b`, then inserts
/// `b` independent edges with both endpoints in its neighbour set (padded
/// with the lowest-index other vertices up to the smallest tight order in
/// the Szegő range), trying pairs in lexicographic order.
pub fn henneberg_step(g: &MultiGraph, params: GameParams) -> Result<ReductionStep> {
    if !is_tight(g, params)? {
        return Err(PebbleError::NotTight);
    }
    let n = g.n();
    if n <= params.base_case_order() {
        return Err(PebbleError::BaseCase { n });
    }
    let (k, l) = (params.k() as usize, params.l() as usize);

    let degrees = g.degrees();
    let (v, &degree) = degrees
        .iter()
        .enumerate()
        .min_by_key(|&(i, &d)| (d, i))
        .expect("graph has vertices");
    if degree < k || degree > 2 * k {
        return Err(PebbleError::Internal(format!(
            "minimum degree {degree} outside [k, 2k]"
        )));
    }
    let b = degree - k;

    let removed_edges: Vec<_> = g
        .edges()
        .iter()
        .filter(|e| e.u == v || e.v == v)
        .map(|e| (e.u, e.v))
        .collect();
    let down = |x: VertexId| if x > v { x - 1 } else { x };
    let up = |x: VertexId| if x >= v { x + 1 } else { x };

    let mut candidates: Vec<VertexId> = removed_edges
        .iter()
        .filter(|(a, c)| a != c)
        .map(|&(a, c)| down(if a == v { c } else { a }))
        .collect();
    candidates.sort_unstable();
    candidates.dedup();
    if params.is_szego() {
        let want = params.min_tight_order().min(n - 1);
        let mut x = 0;
        while candidates.len() < want {
            if candidates.binary_search(&x).is_err() {
                candidates.push(x);
                candidates.sort_unstable();
            }
            x += 1;
        }
    }

    let mut game = ComponentGame::new(n - 1, params, Detection::default())?;
    let mut multiplicity: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    let mut next_index = 0;
    for e in g.edges().iter().filter(|e| e.u != v && e.v != v) {
        let (a, c) = (down(e.u), down(e.v));
        *multiplicity.entry((a.min(c), a.max(c))).or_default() += 1;
        let reduced = Edge {
            u: a,
            v: c,
            weight: None,
            index: next_index,
        };
        next_index += 1;
        if game.insert(reduced)? != Insertion::Accepted {
            return Err(PebbleError::Internal(
                "subgraph of a tight graph is not sparse".into(),
            ));
        }
    }

    let mut added_edges = Vec::with_capacity(b);
    for _ in 0..b {
        let mut placed = None;
        'pairs: for (i, &a) in candidates.iter().enumerate() {
            for &c in &candidates[i..] {
                let cap = if a == c {
                    k.saturating_sub(l)
                } else {
                    2 * k - l
                };
                if multiplicity.get(&(a, c)).copied().unwrap_or(0) >= cap
                    || game.spanned_by_component(a, c)
                {
                    continue;
                }
                let e = Edge {
                    u: a,
                    v: c,
                    weight: None,
                    index: next_index,
                };
                next_index += 1;
                if game.insert(e)? == Insertion::Accepted {
                    placed = Some((a, c));
                    break 'pairs;
                }
            }
        }
        let (a, c) = placed.ok_or_else(|| {
            PebbleError::Internal(format!("no replacement edge among the neighbours of {v}"))
        })?;
        *multiplicity.entry((a, c)).or_default() += 1;
        added_edges.push((up(a), up(c)));
    }

    let step = ReductionStep {
        removed_vertex: v,
        removed_edges,
        added_edges,
        b,
    };
    if !is_tight(&step.reduce(g), params)? {
        return Err(PebbleError::Internal(format!(
            "reduction at vertex {v} lost tightness"
        )));
    }
    Ok(step)
}

#[derive(Debug, Clone, PartialEq)]
pub struct HennebergSequence {
    /// Steps in the order they were applied, largest graph first.
    pub steps: Vec<ReductionStep>,
    /// The tight graph the reduction ends at.
    pub base: MultiGraph,
}

impl HennebergSequence {
    /// Rebuilds the graphs forward from the base, smallest first; the last
    /// one matches the input up to edge order.
    pub fn replay(&self) -> Vec<MultiGraph> {
        let mut graphs = vec![self.base.clone()];
        for step in self.steps.iter().rev() {
            let next = step.extend(graphs.last().expect("non-empty"));
            graphs.push(next);
        }
        graphs
    }
}

/// Reduces a tight graph step by step until the base-case order.
pub fn henneberg_sequence(g: &MultiGraph, params: GameParams) -> Result<HennebergSequence> {
    let mut current = g.reindexed();
    let mut steps = Vec::new();
    loop {
        match henneberg_step(&current, params) {
            Ok(step) => {
                current = step.reduce(&current);
                steps.push(step);
            }
            Err(PebbleError::BaseCase { .. }) => break,
            Err(e) => return Err(e),
        }
    }
    Ok(HennebergSequence {
        steps,
        base: current,
    })
}
