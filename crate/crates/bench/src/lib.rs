//! Shared fixtures for the solver benchmarks.

use kcoal_core::families::{complete_bipartite, cycle, named_cubic, CubicName};
use kcoal_core::Graph;

/// Named graphs at the top of the exhaustive range, with the k each one is
/// benchmarked at.
pub fn solver_fixtures() -> Vec<(&'static str, Graph, usize)> {
    vec![
        ("petersen_k2", named_cubic(CubicName::Petersen), 2),
        ("petersen_k3", named_cubic(CubicName::Petersen), 3),
        ("k45_k2", complete_bipartite(4, 5).unwrap(), 2),
        ("c10_k2", cycle(10).unwrap(), 2),
    ]
}
