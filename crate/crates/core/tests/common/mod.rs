//! Helpers shared by the integration tests: graph generators, exhaustive
//! enumeration and the per-move invariant check.

#![allow(dead_code)]

use pebble_core::{Edge, GameParams, MultiGraph, PebbleGame, VertexId};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn p(k: u32, l: u32) -> GameParams {
    GameParams::new(k, l).unwrap()
}

/// The parameter pairs of the exhaustive comparison.
pub const PAIRS: [(u32, u32); 10] = [
    (1, 0),
    (1, 1),
    (2, 0),
    (2, 1),
    (2, 2),
    (2, 3),
    (3, 0),
    (3, 2),
    (3, 4),
    (3, 5),
];

/// Every valid `(k, l)` with `k <= max_k`.
pub fn all_params(max_k: u32) -> Vec<GameParams> {
    (1..=max_k)
        .flat_map(|k| (0..2 * k).map(move |l| p(k, l)))
        .collect()
}

/// Random multigraph with `m` edges; loops appear with probability
/// `loop_rate` when the range allows them to be independent.
pub fn random_graph(rng: &mut impl Rng, n: usize, m: usize, loop_rate: f64) -> MultiGraph {
    let pairs: Vec<_> = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            if n == 1 || rng.gen_bool(loop_rate) {
                (u, u)
            } else {
                let mut v = rng.gen_range(0..n - 1);
                if v >= u {
                    v += 1;
                }
                (u, v)
            }
        })
        .collect();
    MultiGraph::from_pairs(n, &pairs).unwrap()
}

/// A random graph sized to straddle the tight edge count of `params`.
pub fn random_graph_for(rng: &mut impl Rng, params: GameParams, max_n: usize) -> MultiGraph {
    let n = rng.gen_range(1..=max_n);
    let tight = params.sparsity_bound(n);
    let m = rng.gen_range(0..=tight + tight / 2 + 2);
    let loop_rate = if params.l() < params.k() { 0.15 } else { 0.03 };
    random_graph(rng, n, m, loop_rate)
}

/// Calls `f` on every multigraph on `n` vertices whose loop counts are at
/// most `max(0, k - l) + 1`, pair multiplicities at most `2k - l + 1` and
/// edge count at most `kn - l + 2`. Edges are listed loops first, then
/// pairs in lexicographic order.
pub fn enumerate_multigraphs(params: GameParams, n: usize, mut f: impl FnMut(&MultiGraph)) {
    let (k, l) = (params.k() as i64, params.l() as i64);
    let loop_cap = (k - l).max(0) as usize + 1;
    let pair_cap = (2 * k - l) as usize + 1;
    let budget = (k * n as i64 - l + 2).max(0) as usize;
    let mut slots: Vec<((VertexId, VertexId), usize)> =
        (0..n).map(|v| ((v, v), loop_cap)).collect();
    for a in 0..n {
        for b in a + 1..n {
            slots.push(((a, b), pair_cap));
        }
    }
    let mut counts = vec![0usize; slots.len()];
    fn rec(
        i: usize,
        left: usize,
        n: usize,
        slots: &[((VertexId, VertexId), usize)],
        counts: &mut Vec<usize>,
        f: &mut dyn FnMut(&MultiGraph),
    ) {
        if i == slots.len() {
            let pairs: Vec<_> = slots
                .iter()
                .zip(counts.iter())
                .flat_map(|(&(e, _), &c)| std::iter::repeat_n(e, c))
                .collect();
            f(&MultiGraph::from_pairs(n, &pairs).unwrap());
            return;
        }
        for c in 0..=slots[i].1.min(left) {
            counts[i] = c;
            rec(i + 1, left - c, n, slots, counts, f);
        }
        counts[i] = 0;
    }
    rec(0, budget, n, &slots, &mut counts, &mut f);
}

fn vertex_set_counts(state: &PebbleGame, mask: u32) -> (u64, u64, u64) {
    let inside = |v: VertexId| mask >> v & 1 == 1;
    let (mut peb, mut span, mut out) = (0u64, 0u64, 0u64);
    for v in (0..state.n()).filter(|&v| inside(v)) {
        peb += state.pebbles(v) as u64;
        span += state.loop_count(v) as u64;
        for arc in state.out_arcs(v) {
            if inside(arc.head) {
                span += 1;
            } else {
                out += 1;
            }
        }
    }
    (peb, span, out)
}

/// Checks the orientation invariants on every vertex and every vertex
/// subset (n <= 20). In the upper range the subset inequalities only apply
/// to sets of at least two vertices.
pub fn check_invariants(state: &PebbleGame) -> Result<(), String> {
    let n = state.n();
    assert!(n <= 20, "exhaustive invariant check needs n <= 20");
    let params = state.params();
    let (k, l) = (params.k() as u64, params.l() as u64);
    for v in 0..n {
        let total =
            state.pebbles(v) as u64 + state.loop_count(v) as u64 + state.out_degree(v) as u64;
        if total != k {
            return Err(format!(
                "vertex {v}: peb + loops + out = {total}, expected {k}"
            ));
        }
    }
    for mask in 1u32..1 << n {
        let size = mask.count_ones() as u64;
        let (peb, span, out) = vertex_set_counts(state, mask);
        if peb + span + out != k * size {
            return Err(format!(
                "set {mask:b}: peb + span + out = {}",
                peb + span + out
            ));
        }
        if params.is_upper() && size < 2 {
            continue;
        }
        if peb + out < l {
            return Err(format!("set {mask:b}: peb + out = {} < l", peb + out));
        }
        if span + l > k * size {
            return Err(format!("set {mask:b}: span {span} exceeds k n' - l"));
        }
        let is_block = span + l == k * size;
        if is_block != (peb + out == l) {
            return Err(format!("set {mask:b}: block test disagrees with peb + out"));
        }
    }
    Ok(())
}

/// Edges of `g` at the given positions, as a graph on the same vertices.
pub fn subgraph(g: &MultiGraph, edges: &[Edge]) -> MultiGraph {
    MultiGraph::from_edges(g.n(), edges.to_vec()).unwrap()
}

/// A random tight graph: start from the canonical one and apply random
/// basis exchanges (drop an edge, add a random one), keeping a swap only if
/// the result is still tight.
pub fn random_tight(
    rng: &mut impl Rng,
    params: GameParams,
    n: usize,
    exchanges: usize,
) -> MultiGraph {
    let start = pebble_core::canonical_tight(params, n).unwrap();
    let mut pairs: Vec<_> = start.edges().iter().map(|e| (e.u, e.v)).collect();
    if pairs.is_empty() {
        return start;
    }
    let allow_loops = params.l() < params.k();
    for _ in 0..exchanges {
        let drop = rng.gen_range(0..pairs.len());
        let u = rng.gen_range(0..n);
        let v = if allow_loops && (n == 1 || rng.gen_bool(0.2)) {
            u
        } else if n == 1 {
            continue;
        } else {
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            v
        };
        let old = pairs[drop];
        pairs[drop] = (u, v);
        let g = MultiGraph::from_pairs(n, &pairs).unwrap();
        if !is_tight(&g, params) {
            pairs[drop] = old;
        }
    }
    pairs.shuffle(rng);
    MultiGraph::from_pairs(n, &pairs).unwrap()
}

pub fn is_tight(g: &MultiGraph, params: GameParams) -> bool {
    pebble_core::play_component(g, params)
        .unwrap()
        .0
        .classification
        == pebble_core::Classification::WellConstrained
}

/// Maximum-weight spanning forest weight by Kruskal with union-find.
pub fn kruskal_max_weight(g: &MultiGraph) -> f64 {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut edges = g.edges().to_vec();
    edges.sort_by(|a, b| b.weight.unwrap().total_cmp(&a.weight.unwrap()));
    let mut total = 0.0;
    for e in edges {
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a != b {
            parent[a] = b;
            total += e.weight.unwrap();
        }
    }
    total
}

/// Random connected simple graph with integer weights: a random spanning
/// tree plus extra random pairs.
pub fn random_connected_weighted(rng: &mut impl Rng, n: usize, extra: usize) -> MultiGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut seen = std::collections::BTreeSet::new();
    let mut pairs = Vec::new();
    for i in 1..n {
        let (a, b) = (order[i], order[rng.gen_range(0..i)]);
        seen.insert((a.min(b), a.max(b)));
        pairs.push((a, b));
    }
    let max_pairs = n * (n - 1) / 2;
    let mut tries = 0;
    while seen.len() < max_pairs && pairs.len() < n - 1 + extra && tries < 50 * (extra + 1) {
        tries += 1;
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && seen.insert((a.min(b), a.max(b))) {
            pairs.push((a, b));
        }
    }
    pairs.shuffle(rng);
    let triples: Vec<_> = pairs
        .into_iter()
        .map(|(a, b)| (a, b, rng.gen_range(1..=1000) as f64))
        .collect();
    MultiGraph::from_weighted(n, &triples).unwrap()
}

/// Largest total weight over the oracle-sparse edge subsets of maximum size.
pub fn brute_force_max_weight(g: &MultiGraph, params: GameParams) -> f64 {
    let oracle = pebble_core::Oracle::new(params);
    let m = g.m();
    assert!(m <= 16);
    let mut best: Option<(usize, f64)> = None;
    for mask in 0u32..1 << m {
        let picked: Vec<Edge> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| g.edges()[i])
            .collect();
        let sub = subgraph(g, &picked);
        if !oracle.is_sparse(&sub).unwrap() {
            continue;
        }
        let key = (picked.len(), sub.total_weight());
        best = match best {
            Some(b) if b.0 > key.0 || (b.0 == key.0 && b.1 >= key.1) => Some(b),
            _ => Some(key),
        };
    }
    best.unwrap().1
}

/// The `i`-th valid `(k, l)` with `k <= max_k`, cycling.
pub fn nth_params(max_k: u32, i: usize) -> GameParams {
    let all = all_params(max_k);
    all[i % all.len()]
}
