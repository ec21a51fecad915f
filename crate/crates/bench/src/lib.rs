//! Shared inputs for the benchmarks.

use extremal_core::builders::{b_m, greedy_tree, u_m};
use extremal_core::{DegreeSequence, Graph};

pub fn sequence(text: &str) -> DegreeSequence {
    text.parse().expect("valid sequence")
}

/// A greedy tree, `U_M` and `B_M` of moderate size.
pub fn constructions() -> Vec<(&'static str, Graph)> {
    vec![
        (
            "greedy_tree",
            greedy_tree(&sequence("5,4,3^3,2^9,1^10")).unwrap(),
        ),
        ("u_m", u_m(&sequence("5,4,3^3,2^10,1^8")).unwrap()),
        ("b_m", b_m(&sequence("5,4,3^3,2^9,1^6")).unwrap()),
    ]
}
