//! Odd colorings of k-trees.
//!
//! A proper coloring is *odd* when every non-isolated vertex sees some color
//! an odd number of times in its neighborhood. This crate builds odd
//! colorings of 2-trees with 4 colors, of 3-trees with 5 colors, and of
//! k-trees (k ≥ 7) with `k + 2⌊log₂k⌋ + 3` colors, and ships an exact
//! backtracking oracle, k-tree generators and a verifier to check them.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod branch;
pub mod coloring;
pub mod error;
pub mod extend;
pub mod graph;
pub mod ktree;
pub mod oracle;
pub mod threetree;
pub mod twotree;

pub use coloring::{is_odd_coloring, odd_condition_witness, verify_odd, verify_proper, Coloring, OddReport, Witness};
pub use error::{Error, Result};
pub use graph::{build_graph, good_addition_ordering, recognize_ktree, AdditionOrdering, Graph, GraphView, Subgraph};
