//! The basic pebble game.
//!
//! Every vertex starts with `k` pebbles. Accepting an edge spends one pebble
//! from its tail and inserts it into a directed graph `D`. More pebbles are
//! brought to a vertex by depth-first search in `D`, reversing the path to
//! the pebble that is found. An edge is accepted once `l + 1` pebbles sit on
//! its endpoints.

use std::fmt::{self, Write as _};

use crate::error::{PebbleError, Result};
use crate::graph::{Edge, MultiGraph, VertexId};
use crate::params::GameParams;

/// Outcome of a game over a whole graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// Tight: every edge accepted and exactly `l` pebbles left.
    WellConstrained,
    /// Sparse but not tight.
    UnderConstrained,
    /// Spanning but not sparse.
    OverConstrained,
    /// Neither sparse nor spanning.
    Other,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::WellConstrained => "Well-constrained",
            Classification::UnderConstrained => "Under-constrained",
            Classification::OverConstrained => "Over-constrained",
            Classification::Other => "Other",
        }
    }

    fn from_counts(params: GameParams, n: usize, accepted: usize, rejected: usize) -> Self {
        let tight = params.tight_edge_count(n) == Some(accepted);
        match (tight, rejected == 0) {
            (true, true) => Classification::WellConstrained,
            (true, false) => Classification::OverConstrained,
            (false, true) => Classification::UnderConstrained,
            (false, false) => Classification::Other,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insertion {
    Accepted,
    Rejected,
}

/// A directed non-loop edge of `D`; `edge` indexes the accepted-edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub head: VertexId,
    pub edge: usize,
}

/// Board state: free pebbles, the oriented accepted edges, and the input
/// edges seen so far.
#[derive(Debug, Clone)]
pub struct PebbleGame {
    params: GameParams,
    peb: Vec<u32>,
    out: Vec<Vec<Arc>>,
    loops: Vec<Vec<usize>>,
    accepted: Vec<Edge>,
    rejected: Vec<Edge>,
    // DFS scratch space; `stamp[v] == epoch` means visited.
    stamp: Vec<u32>,
    epoch: u32,
    parent: Vec<(VertexId, usize)>,
}

impl PebbleGame {
    pub fn new(n: usize, params: GameParams) -> Result<Self> {
        if n == 0 {
            return Err(PebbleError::EmptyGraph);
        }
        Ok(Self {
            params,
            peb: vec![params.k(); n],
            out: vec![Vec::new(); n],
            loops: vec![Vec::new(); n],
            accepted: Vec::new(),
            rejected: Vec::new(),
            stamp: vec![0; n],
            epoch: 0,
            parent: vec![(0, 0); n],
        })
    }

    pub fn n(&self) -> usize {
        self.peb.len()
    }

    pub fn params(&self) -> GameParams {
        self.params
    }

    pub fn pebbles(&self, v: VertexId) -> u32 {
        self.peb[v]
    }

    pub fn free_pebbles(&self) -> usize {
        self.peb.iter().map(|&p| p as usize).sum()
    }

    pub fn out_arcs(&self, v: VertexId) -> &[Arc] {
        &self.out[v]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out[v].len()
    }

    pub fn loop_count(&self, v: VertexId) -> usize {
        self.loops[v].len()
    }

    /// Accepted input edges, in acceptance order.
    pub fn accepted(&self) -> &[Edge] {
        &self.accepted
    }

    pub fn rejected(&self) -> &[Edge] {
        &self.rejected
    }

    /// All directed non-loop edges of `D` as `(tail, head, accepted position)`.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(t, arcs)| arcs.iter().map(move |a| (t, a.head, a.edge)))
    }

    pub fn classification(&self) -> Classification {
        Classification::from_counts(
            self.params,
            self.n(),
            self.accepted.len(),
            self.rejected.len(),
        )
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
        self.epoch
    }

    /// Membership mask of the seeds plus everything reachable from them in `D`.
    pub fn reach_mask(&self, seeds: &[VertexId]) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        let mut stack = Vec::new();
        for &s in seeds {
            if !seen[s] {
                seen[s] = true;
                stack.push(s);
            }
        }
        while let Some(x) = stack.pop() {
            for a in &self.out[x] {
                if !seen[a.head] {
                    seen[a.head] = true;
                    stack.push(a.head);
                }
            }
        }
        seen
    }

    /// Sorted vertex set reachable from `seeds`, seeds included.
    pub fn reach(&self, seeds: &[VertexId]) -> Vec<VertexId> {
        mask_vertices(&self.reach_mask(seeds))
    }

    /// Moves one pebble to `target` along a directed path, reversing it.
    ///
    /// Vertices in `protected` are neither searched through nor robbed.
    /// Returns `Ok(false)`, leaving the state untouched, when no pebble is
    /// reachable.
    pub fn collect_pebble(&mut self, target: VertexId, protected: &[VertexId]) -> Result<bool> {
        if self.peb[target] >= self.params.k() {
            return Err(PebbleError::PebbleOverflow(target));
        }
        Ok(self.collect(target, protected))
    }

    fn collect(&mut self, target: VertexId, protected: &[VertexId]) -> bool {
        let epoch = self.next_epoch();
        self.stamp[target] = epoch;
        for &p in protected {
            self.stamp[p] = epoch;
        }

        let mut found = None;
        let mut frames: Vec<(VertexId, usize)> = vec![(target, 0)];
        'search: while let Some(frame) = frames.last_mut() {
            let (x, slot) = *frame;
            let Some(arc) = self.out[x].get(slot) else {
                frames.pop();
                continue;
            };
            frame.1 += 1;
            let h = arc.head;
            if self.stamp[h] == epoch {
                continue;
            }
            self.stamp[h] = epoch;
            self.parent[h] = (x, slot);
            if self.peb[h] > 0 {
                found = Some(h);
                break 'search;
            }
            frames.push((h, 0));
        }

        let Some(source) = found else {
            return false;
        };
        let mut cur = source;
        while cur != target {
            let (p, slot) = self.parent[cur];
            let arc = self.out[p].remove(slot);
            debug_assert_eq!(arc.head, cur);
            self.out[cur].push(Arc {
                head: p,
                edge: arc.edge,
            });
            cur = p;
        }
        self.peb[source] -= 1;
        self.peb[target] += 1;
        true
    }

    /// Collects pebbles on `u` (up to `k`) and then on `v` until they hold
    /// `goal` together or no more can be reached. Returns the total.
    fn gather(
        &mut self,
        u: VertexId,
        v: VertexId,
        goal: u32,
        observer: &mut dyn FnMut(&PebbleGame),
    ) -> u32 {
        let k = self.params.k();
        let protected = [u, v];
        if u == v {
            while self.peb[u] < goal.min(k) && self.collect(u, &protected) {
                observer(self);
            }
            return self.peb[u];
        }
        for target in [u, v] {
            while self.peb[u] + self.peb[v] < goal
                && self.peb[target] < k
                && self.collect(target, &protected)
            {
                observer(self);
            }
        }
        self.peb[u] + self.peb[v]
    }

    /// Pebbles on the endpoints of `{u, v}` (counted once for a loop).
    pub fn endpoint_pebbles(&self, u: VertexId, v: VertexId) -> u32 {
        if u == v {
            self.peb[u]
        } else {
            self.peb[u] + self.peb[v]
        }
    }

    pub fn try_insert_edge(&mut self, e: Edge) -> Result<Insertion> {
        self.try_insert_observed(e, &mut |_| {})
    }

    /// Like [`try_insert_edge`](Self::try_insert_edge), calling `observer`
    /// after every pebble move and after the insertion itself.
    pub fn try_insert_observed(
        &mut self,
        e: Edge,
        observer: &mut dyn FnMut(&PebbleGame),
    ) -> Result<Insertion> {
        let n = self.n();
        for x in [e.u, e.v] {
            if x >= n {
                return Err(PebbleError::VertexOutOfRange { vertex: x, n });
            }
        }
        let needed = self.params.l() + 1;
        if self.gather(e.u, e.v, needed, observer) < needed {
            self.rejected.push(e);
            return Ok(Insertion::Rejected);
        }
        self.insert_unchecked(e);
        observer(self);
        Ok(Insertion::Accepted)
    }

    /// Orients `e` away from an endpoint holding a pebble (`u` preferred).
    fn insert_unchecked(&mut self, e: Edge) {
        let id = self.accepted.len();
        self.accepted.push(e);
        let tail = if self.peb[e.u] > 0 { e.u } else { e.v };
        self.peb[tail] -= 1;
        if e.is_loop() {
            self.loops[tail].push(id);
        } else {
            let head = if tail == e.u { e.v } else { e.u };
            self.out[tail].push(Arc { head, edge: id });
        }
    }

    /// Records `e` as rejected without running any search.
    pub(crate) fn reject(&mut self, e: Edge) {
        self.rejected.push(e);
    }

    /// Gathers up to `goal` pebbles on `{u, v}` without inserting anything.
    pub(crate) fn gather_pebbles(&mut self, u: VertexId, v: VertexId, goal: u32) -> u32 {
        self.gather(u, v, goal, &mut |_| {})
    }

    /// Positions (in [`accepted`](Self::accepted)) of the accepted edges with
    /// both endpoints inside `set`.
    pub fn spanned_edges(&self, set: &[bool]) -> Vec<usize> {
        let mut ids: Vec<usize> = Vec::new();
        for (v, ls) in self.loops.iter().enumerate() {
            if set[v] {
                ids.extend(ls);
            }
        }
        ids.extend(
            self.arcs()
                .filter(|&(t, h, _)| set[t] && set[h])
                .map(|(_, _, id)| id),
        );
        ids.sort_unstable();
        ids
    }

    /// `D` in Graphviz format, vertices labelled with their free pebbles.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph D {\n");
        for (v, p) in self.peb.iter().enumerate() {
            let _ = writeln!(s, "  {v} [label=\"{v}: {p}\"];");
        }
        for (v, ls) in self.loops.iter().enumerate() {
            for _ in ls {
                let _ = writeln!(s, "  {v} -> {v};");
            }
        }
        for (t, h, _) in self.arcs() {
            let _ = writeln!(s, "  {t} -> {h};");
        }
        s.push_str("}\n");
        s
    }
}

pub(crate) fn mask_vertices(mask: &[bool]) -> Vec<VertexId> {
    mask.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(v, _)| v)
        .collect()
}

/// Final classification plus the game state it was read from.
#[derive(Debug, Clone)]
pub struct GameResult {
    pub classification: Classification,
    pub state: PebbleGame,
}

impl GameResult {
    pub fn accepted(&self) -> &[Edge] {
        self.state.accepted()
    }

    pub fn rejected(&self) -> &[Edge] {
        self.state.rejected()
    }
}

/// Runs the basic game over the edges of `g` in input order.
pub fn play_basic(g: &MultiGraph, params: GameParams) -> Result<GameResult> {
    let mut state = PebbleGame::new(g.n(), params)?;
    for &e in g.edges() {
        state.try_insert_edge(e)?;
    }
    Ok(GameResult {
        classification: state.classification(),
        state,
    })
}
