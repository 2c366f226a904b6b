//! `(k, l)`-pebble games for sparse multigraphs.
//!
//! A multigraph is `(k, l)`-sparse when every set of `n'` vertices spans at
//! most `max(0, kn' - l)` edges, and tight when it is sparse with exactly
//! `kn - l` edges. For `0 <= l < 2k` the sparse graphs form a matroid, and
//! the pebble games decide membership, extract maximal sparse subgraphs,
//! optimize over weights and report the component structure.
//!
//! * [`graph`]: multigraphs, the text format, canonical tight graphs.
//! * [`oracle`]: brute-force ground truth by subset enumeration.
//! * [`game`]: the basic pebble game.
//! * [`component`]: the component pebble game and component detection.
//! * [`analysis`]: extraction, optimization, circuits, redundancy,
//!   Henneberg reduction and the tight-graph property checks.

pub mod analysis;
pub mod component;
pub mod error;
pub mod game;
pub mod graph;
pub mod oracle;
pub mod params;

pub use component::{play_component, play_component_with, ComponentGame, Decomposition, Detection};
pub use error::{PebbleError, Result};
pub use game::{play_basic, Classification, GameResult, Insertion, PebbleGame};
pub use graph::{canonical_tight, parse_graph, serialize_graph, Edge, MultiGraph, VertexId};
pub use oracle::Oracle;
pub use params::{GameParams, Range};
