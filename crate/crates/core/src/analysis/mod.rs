//! Solvers built on top of the games.

mod checks;
mod circuit;
mod extract;
mod henneberg;

pub use checks::{min_degree_check, partition_bound_check};
pub use circuit::{circuits, find_circuit, redundancy, Circuit, Redundancy};
pub use extract::{extract_max_sparse, optimize, optimize_with, WeightOrder};
pub use henneberg::{henneberg_sequence, henneberg_step, HennebergSequence, ReductionStep};
