//! Exact k-coalition numbers of small graphs, polynomial-time verifiers,
//! closed-form values and bounds, and the extremal constructions that
//! attain them.

pub mod catalog;
pub mod checks;
pub mod domination;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod iso;
pub mod partitions;
pub mod solver;
pub mod witnesses;

pub use domination::{
    coalition_graph, coalition_graph_in_mode, forms_k_coalition, is_k_dominating,
    is_total_k_dominating, validate_partition, BlockEvidence, CoalitionCertificate, Mode,
    VertexPartition,
};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use formulas::{BoundKind, BoundReport};
pub use graph::{Bipartition, Graph};
pub use io::{emit_graph6, parse_graph6};
pub use iso::is_isomorphic_small;
pub use solver::{brute_force_oracle, exact_coalition_number, is_full_c2, SolveResult};
