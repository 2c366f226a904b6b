//! The component pebble game.
//!
//! Components (maximal blocks) of the accepted graph are tracked as the game
//! runs. An edge with both endpoints in one component is dependent and is
//! rejected in constant time, which brings the whole game down to `O(n^2)`.

use std::collections::VecDeque;

use crate::error::{PebbleError, Result};
use crate::game::{mask_vertices, GameResult, Insertion, PebbleGame};
use crate::graph::{Edge, MultiGraph, VertexId};
use crate::params::{GameParams, Range};

/// Which algorithm finds the vertex set of a newly formed component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Detection {
    /// Grow the block `Reach(u, v)` breadth-first over incoming edges.
    First,
    /// Take the complement of everything that can still reach a free pebble.
    #[default]
    Second,
}

/// Component bookkeeping, shaped by the parameter range.
#[derive(Debug, Clone)]
pub enum ComponentStore {
    /// `l = 0`: at most one (possibly disconnected) component, kept as marks.
    Single { marked: Vec<bool> },
    /// `0 < l <= k`: vertex-disjoint components, kept as per-vertex labels.
    Labels { label: Vec<Option<u32>>, next: u32 },
    /// `k < l < 2k`: components may share one vertex. The list holds their
    /// vertex sets; the dense `n x n` matrix answers "share a component?".
    Overlapping {
        n: usize,
        sets: Vec<Vec<VertexId>>,
        shared: Vec<bool>,
    },
}

impl ComponentStore {
    pub fn new(n: usize, params: GameParams) -> Self {
        if params.l() == 0 {
            ComponentStore::Single {
                marked: vec![false; n],
            }
        } else if params.range() == Range::Lower {
            ComponentStore::Labels {
                label: vec![None; n],
                next: 0,
            }
        } else {
            ComponentStore::Overlapping {
                n,
                sets: Vec::new(),
                shared: vec![false; n * n],
            }
        }
    }

    /// Whether some component contains both `u` and `v`. For `u == v` this
    /// asks whether `u` lies in any component.
    pub fn in_common_component(&self, u: VertexId, v: VertexId) -> bool {
        match self {
            ComponentStore::Single { marked } => marked[u] && marked[v],
            ComponentStore::Labels { label, .. } => label[u].is_some() && label[u] == label[v],
            ComponentStore::Overlapping { n, shared, .. } => shared[u * n + v],
        }
    }

    pub fn update(&mut self, new_set: &[VertexId]) {
        match self {
            ComponentStore::Single { marked } => {
                for &v in new_set {
                    marked[v] = true;
                }
            }
            ComponentStore::Labels { label, next } => {
                for &v in new_set {
                    label[v] = Some(*next);
                }
                *next += 1;
            }
            ComponentStore::Overlapping { n, sets, shared } => {
                let n = *n;
                let mut inside = vec![false; n];
                for &v in new_set {
                    inside[v] = true;
                }
                let (absorbed, kept): (Vec<_>, Vec<_>) = std::mem::take(sets)
                    .into_iter()
                    .partition(|s| s.iter().all(|&v| inside[v]));
                *sets = kept;

                // Pairs inside an absorbed set are already marked; only pairs
                // across pieces can be new.
                let mut covered = vec![false; n];
                let mut pieces = absorbed;
                for s in &pieces {
                    for &v in s {
                        covered[v] = true;
                    }
                }
                pieces.extend(new_set.iter().filter(|&&v| !covered[v]).map(|&v| vec![v]));
                for (i, a_set) in pieces.iter().enumerate() {
                    for b_set in &pieces[i + 1..] {
                        for &a in a_set {
                            for &b in b_set {
                                shared[a * n + b] = true;
                                shared[b * n + a] = true;
                            }
                        }
                    }
                }
                for &v in new_set {
                    shared[v * n + v] = true;
                }
                sets.push(new_set.to_vec());
            }
        }
    }

    /// Stored components, each sorted, in lexicographic order.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut comps = match self {
            ComponentStore::Single { marked } => {
                let c = mask_vertices(marked);
                if c.is_empty() {
                    Vec::new()
                } else {
                    vec![c]
                }
            }
            ComponentStore::Labels { label, next } => {
                let mut groups = vec![Vec::new(); *next as usize];
                for (v, l) in label.iter().enumerate() {
                    if let Some(l) = l {
                        groups[*l as usize].push(v);
                    }
                }
                groups.retain(|g| !g.is_empty());
                groups
            }
            ComponentStore::Overlapping { sets, .. } => sets
                .iter()
                .map(|s| {
                    let mut s = s.clone();
                    s.sort_unstable();
                    s
                })
                .collect(),
        };
        comps.sort();
        comps
    }

    /// The unique component when `l = 0`.
    pub fn single_component(&self) -> Option<Vec<VertexId>> {
        match self {
            ComponentStore::Single { marked } => Some(mask_vertices(marked)),
            _ => None,
        }
    }

    /// Checks the range-specific structural invariants.
    pub fn is_consistent(&self) -> bool {
        match self {
            ComponentStore::Single { .. } => true,
            ComponentStore::Labels { .. } => true,
            ComponentStore::Overlapping { n, sets, shared } => {
                let n = *n;
                let mut expect = vec![false; n * n];
                for s in sets {
                    for &a in s {
                        for &b in s {
                            expect[a * n + b] = true;
                        }
                    }
                }
                let pairwise_ok = sets.iter().enumerate().all(|(i, a)| {
                    sets[i + 1..].iter().all(|b| {
                        let common = a.iter().filter(|x| b.contains(x)).count();
                        common <= 1 && common < a.len() && common < b.len()
                    })
                });
                expect == *shared && pairwise_ok
            }
        }
    }
}

/// `Reach(u, v)` as a mask, if it can still be a block: exactly `l` pebbles
/// on the endpoints and none anywhere else in the region.
fn block_candidate(state: &PebbleGame, u: VertexId, v: VertexId) -> Result<Option<Vec<bool>>> {
    let l = state.params().l();
    let on_endpoints = state.endpoint_pebbles(u, v);
    if on_endpoints < l {
        return Err(PebbleError::Internal(format!(
            "component detection needs {l} pebbles on {u}-{v}, found {on_endpoints}"
        )));
    }
    if on_endpoints > l {
        return Ok(None);
    }
    let reach = state.reach_mask(&[u, v]);
    let dry = reach
        .iter()
        .enumerate()
        .all(|(w, &inside)| !inside || w == u || w == v || state.pebbles(w) == 0);
    Ok(dry.then_some(reach))
}

fn incoming(state: &PebbleGame) -> Vec<Vec<VertexId>> {
    let mut inc = vec![Vec::new(); state.n()];
    for (t, h, _) in state.arcs() {
        inc[h].push(t);
    }
    inc
}

/// Component detection by breadth-first growth over incoming edges.
///
/// `previous` is the existing component when `l = 0`; it is merged into the
/// result. Returns an empty set when the new edge `uv` is free.
pub fn detect_component_first(
    state: &PebbleGame,
    u: VertexId,
    v: VertexId,
    previous: Option<&[VertexId]>,
) -> Result<Vec<VertexId>> {
    let Some(mut comp) = block_candidate(state, u, v)? else {
        return Ok(Vec::new());
    };
    let n = state.n();
    let inc = incoming(state);
    let mut enqueued = vec![false; n];
    let mut queue = VecDeque::new();
    let enqueue_into = |targets: &[VertexId],
                        comp: &[bool],
                        enqueued: &mut [bool],
                        queue: &mut VecDeque<VertexId>| {
        for &x in targets {
            for &t in &inc[x] {
                if !comp[t] && !enqueued[t] {
                    enqueued[t] = true;
                    queue.push_back(t);
                }
            }
        }
    };
    let initial = mask_vertices(&comp);
    enqueue_into(&initial, &comp, &mut enqueued, &mut queue);

    while let Some(w) = queue.pop_front() {
        if comp[w] {
            continue;
        }
        // Reach(w), stopping at the component, which has no way out.
        let mut seen = vec![false; n];
        let mut region = vec![w];
        let mut stack = vec![w];
        seen[w] = true;
        let mut dry = true;
        while let Some(x) = stack.pop() {
            if x != u && x != v && state.pebbles(x) > 0 {
                dry = false;
                break;
            }
            for a in state.out_arcs(x) {
                if !seen[a.head] && !comp[a.head] {
                    seen[a.head] = true;
                    region.push(a.head);
                    stack.push(a.head);
                }
            }
        }
        if !dry {
            continue;
        }
        for &x in &region {
            comp[x] = true;
        }
        enqueue_into(&region, &comp, &mut enqueued, &mut queue);
    }

    if state.params().l() == 0 {
        for &x in previous.unwrap_or(&[]) {
            comp[x] = true;
        }
    }
    Ok(mask_vertices(&comp))
}

/// Component detection as the complement of the vertices that can reach a
/// free pebble outside `Reach(u, v)`. Returns an empty set for a free edge.
pub fn detect_component_second(
    state: &PebbleGame,
    u: VertexId,
    v: VertexId,
) -> Result<Vec<VertexId>> {
    let Some(reach) = block_candidate(state, u, v)? else {
        return Ok(Vec::new());
    };
    let n = state.n();
    let inc = incoming(state);
    let mut visited = vec![false; n];
    let mut stack = Vec::new();
    for w in 0..n {
        if !reach[w] && state.pebbles(w) > 0 && !visited[w] {
            visited[w] = true;
            stack.push(w);
            while let Some(x) = stack.pop() {
                for &t in &inc[x] {
                    if !visited[t] {
                        visited[t] = true;
                        stack.push(t);
                    }
                }
            }
        }
    }
    Ok((0..n).filter(|&x| !visited[x]).collect())
}

/// Components, free vertices and free edges of the accepted graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub components: Vec<Vec<VertexId>>,
    pub free_vertices: Vec<VertexId>,
    pub free_edges: Vec<Edge>,
}

/// The component game, driven one edge at a time.
#[derive(Debug, Clone)]
pub struct ComponentGame {
    game: PebbleGame,
    store: ComponentStore,
    detection: Detection,
    last_component: Option<Vec<VertexId>>,
}

impl ComponentGame {
    pub fn new(n: usize, params: GameParams, detection: Detection) -> Result<Self> {
        let game = PebbleGame::new(n, params)?;
        Ok(Self {
            game,
            store: ComponentStore::new(n, params),
            detection,
            last_component: None,
        })
    }

    pub fn state(&self) -> &PebbleGame {
        &self.game
    }

    pub fn store(&self) -> &ComponentStore {
        &self.store
    }

    /// The component detected by the most recent insertion, if any.
    pub fn last_component(&self) -> Option<&[VertexId]> {
        self.last_component.as_deref()
    }

    /// Whether `{u, v}` would be rejected without a pebble search.
    pub fn spanned_by_component(&self, u: VertexId, v: VertexId) -> bool {
        let params = self.game.params();
        (u == v && params.l() >= params.k()) || self.store.in_common_component(u, v)
    }

    pub fn insert(&mut self, e: Edge) -> Result<Insertion> {
        self.last_component = None;
        let n = self.game.n();
        for x in [e.u, e.v] {
            if x >= n {
                return Err(PebbleError::VertexOutOfRange { vertex: x, n });
            }
        }
        if self.spanned_by_component(e.u, e.v) {
            self.game.reject(e);
            return Ok(Insertion::Rejected);
        }
        if self.game.try_insert_edge(e)? == Insertion::Rejected {
            return Ok(Insertion::Rejected);
        }
        if self.game.endpoint_pebbles(e.u, e.v) == self.game.params().l() {
            let found = match self.detection {
                Detection::First => {
                    let prev = self.store.single_component();
                    detect_component_first(&self.game, e.u, e.v, prev.as_deref())?
                }
                Detection::Second => detect_component_second(&self.game, e.u, e.v)?,
            };
            if !found.is_empty() {
                self.store.update(&found);
                self.last_component = Some(found);
            }
        }
        Ok(Insertion::Accepted)
    }

    pub fn decomposition(&self) -> Decomposition {
        let params = self.game.params();
        let n = self.game.n();
        let mut components = self.store.components();
        if params.l() == params.k() {
            // Every loop-free vertex is a block on its own at l = k.
            let mut covered = vec![false; n];
            for c in &components {
                for &v in c {
                    covered[v] = true;
                }
            }
            components.extend((0..n).filter(|&v| !covered[v]).map(|v| vec![v]));
            components.sort();
        }
        let mut in_comp = vec![false; n];
        for c in &components {
            for &v in c {
                in_comp[v] = true;
            }
        }
        let free_vertices = (0..n).filter(|&v| !in_comp[v]).collect();
        let mut free_edges: Vec<Edge> = self
            .game
            .accepted()
            .iter()
            .filter(|e| !self.store.in_common_component(e.u, e.v))
            .copied()
            .collect();
        free_edges.sort_by_key(|e| e.index);
        Decomposition {
            components,
            free_vertices,
            free_edges,
        }
    }

    pub fn into_result(self) -> (GameResult, Decomposition) {
        let decomposition = self.decomposition();
        let classification = self.game.classification();
        (
            GameResult {
                classification,
                state: self.game,
            },
            decomposition,
        )
    }
}

/// Runs the component game with the default detection algorithm.
pub fn play_component(g: &MultiGraph, params: GameParams) -> Result<(GameResult, Decomposition)> {
    play_component_with(g, params, Detection::default())
}

pub fn play_component_with(
    g: &MultiGraph,
    params: GameParams,
    detection: Detection,
) -> Result<(GameResult, Decomposition)> {
    let mut game = ComponentGame::new(g.n(), params, detection)?;
    for &e in g.edges() {
        game.insert(e)?;
    }
    Ok(game.into_result())
}
