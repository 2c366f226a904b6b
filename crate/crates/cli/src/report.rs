//! Text and JSON renderings of solver results.

use std::fmt::Write as _;

use pebble_core::analysis::{Circuit, HennebergSequence, Redundancy};
use pebble_core::{Classification, Decomposition, Edge, MultiGraph, VertexId};
use serde::Serialize;

pub type Pair = [VertexId; 2];

fn pair(e: &Edge) -> Pair {
    [e.u, e.v]
}

fn pairs(edges: &[Edge]) -> Vec<Pair> {
    edges.iter().map(pair).collect()
}

/// Edges sorted by input index, as endpoint pairs.
fn in_input_order(edges: &[Edge]) -> Vec<Pair> {
    let mut sorted = edges.to_vec();
    sorted.sort_by_key(|e| e.index);
    pairs(&sorted)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn edge_list(edges: &[Pair]) -> String {
    join(edges.iter().map(|[u, v]| format!("{u}-{v}")))
}

#[derive(Serialize)]
pub struct Decision {
    pub classification: &'static str,
    pub accepted: Vec<Pair>,
    pub rejected: Vec<Pair>,
}

impl Decision {
    pub fn new(classification: Classification, accepted: &[Edge], rejected: &[Edge]) -> Self {
        Self {
            classification: classification.as_str(),
            accepted: in_input_order(accepted),
            rejected: in_input_order(rejected),
        }
    }

    pub fn text(&self) -> String {
        format!("{}\n", self.classification)
    }
}

#[derive(Serialize)]
pub struct Components {
    pub classification: &'static str,
    pub components: Vec<Vec<VertexId>>,
    pub free_vertices: Vec<VertexId>,
    pub free_edges: Vec<Pair>,
}

impl Components {
    pub fn new(classification: Classification, d: &Decomposition) -> Self {
        let mut components = d.components.clone();
        components.iter_mut().for_each(|c| c.sort_unstable());
        components.sort();
        Self {
            classification: classification.as_str(),
            components,
            free_vertices: d.free_vertices.clone(),
            free_edges: in_input_order(&d.free_edges),
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!(
            "{}\ncomponents: {}\n",
            self.classification,
            self.components.len()
        );
        for c in &self.components {
            let _ = writeln!(s, "  {}", join(c));
        }
        let _ = writeln!(s, "free vertices: {}", join(&self.free_vertices));
        let _ = writeln!(s, "free edges: {}", edge_list(&self.free_edges));
        s
    }
}

/// Oracle components carry no classification of their own.
#[derive(Serialize)]
pub struct OracleComponents {
    pub components: Vec<Vec<VertexId>>,
}

impl OracleComponents {
    pub fn text(&self) -> String {
        let mut s = format!("components: {}\n", self.components.len());
        for c in &self.components {
            let _ = writeln!(s, "  {}", join(c));
        }
        s
    }
}

#[derive(Serialize)]
pub struct Subgraph {
    pub accepted: Vec<Pair>,
    pub rejected: Vec<Pair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_weight: Option<f64>,
}

impl Subgraph {
    /// `sub` keeps the indices of `g`; everything else in `g` is rejected.
    pub fn new(g: &MultiGraph, sub: &MultiGraph) -> Self {
        let mut kept = vec![false; g.m()];
        for e in sub.edges() {
            kept[e.index] = true;
        }
        let rejected: Vec<Edge> = g
            .edges()
            .iter()
            .filter(|e| !kept[e.index])
            .copied()
            .collect();
        Self {
            accepted: in_input_order(sub.edges()),
            rejected: in_input_order(&rejected),
            total_weight: sub.is_weighted().then(|| sub.total_weight()),
        }
    }
}

#[derive(Serialize)]
pub struct CircuitReport {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Pair>,
}

#[derive(Serialize)]
pub struct Circuits {
    pub circuits: Vec<CircuitReport>,
}

impl Circuits {
    pub fn new(found: &[Circuit]) -> Self {
        let circuits = found
            .iter()
            .map(|c| CircuitReport {
                vertices: c.vertices.clone(),
                edges: pairs(&c.edges),
            })
            .collect();
        Self { circuits }
    }

    pub fn text(&self) -> String {
        let mut s = format!("circuits: {}\n", self.circuits.len());
        for c in &self.circuits {
            let _ = writeln!(s, "  [{}] {}", join(&c.vertices), edge_list(&c.edges));
        }
        s
    }
}

#[derive(Serialize)]
pub struct RedundancyReport {
    pub redundant: bool,
    pub bridges: Vec<Pair>,
    pub components: Vec<Vec<VertexId>>,
}

impl RedundancyReport {
    pub fn new(r: &Redundancy) -> Self {
        Self {
            redundant: r.is_redundant,
            bridges: pairs(&r.bridges),
            components: r.redundant_components.clone(),
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!("redundant: {}\n", if self.redundant { "yes" } else { "no" });
        let _ = writeln!(s, "bridges: {}", edge_list(&self.bridges));
        let _ = writeln!(s, "redundant components: {}", self.components.len());
        for c in &self.components {
            let _ = writeln!(s, "  {}", join(c));
        }
        s
    }
}

#[derive(Serialize)]
pub struct StepReport {
    pub removed_vertex: VertexId,
    pub b: usize,
    pub removed_edges: Vec<Pair>,
    pub added_edges: Vec<Pair>,
}

#[derive(Serialize)]
pub struct BaseReport {
    pub n: usize,
    pub edges: Vec<Pair>,
}

#[derive(Serialize)]
pub struct Henneberg {
    pub steps: Vec<StepReport>,
    pub base: BaseReport,
}

impl Henneberg {
    pub fn new(seq: &HennebergSequence) -> Self {
        let steps = seq
            .steps
            .iter()
            .map(|s| StepReport {
                removed_vertex: s.removed_vertex,
                b: s.b,
                removed_edges: s.removed_edges.iter().map(|&(a, b)| [a, b]).collect(),
                added_edges: s.added_edges.iter().map(|&(a, b)| [a, b]).collect(),
            })
            .collect();
        let base = BaseReport {
            n: seq.base.n(),
            edges: pairs(seq.base.edges()),
        };
        Self { steps, base }
    }

    pub fn text(&self) -> String {
        let mut s = format!("steps: {}\n", self.steps.len());
        for (i, st) in self.steps.iter().enumerate() {
            let _ = writeln!(
                s,
                "  {i}: remove {} (b={}) edges {} add {}",
                st.removed_vertex,
                st.b,
                edge_list(&st.removed_edges),
                edge_list(&st.added_edges)
            );
        }
        let _ = writeln!(
            s,
            "base: n={} edges {}",
            self.base.n,
            edge_list(&self.base.edges)
        );
        s
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}
