//! Ground truth: exact backtracking search for odd colorings, k-tree
//! generators, canonical forms for deduplication, and a probe for small
//! counterexamples to the `k + 2` color bound.

mod canon;
mod generate;
mod probe;
mod search;

pub use canon::{canonical_form, CanonForm};
pub use generate::{enumerate_small_ktrees, lower_bound_construction, random_ktree, GenSpec};
pub use probe::{probe_conjecture, probe_instance, probe_instances, InstanceStatus, ProbeInstance, ProbeMode, ProbeReport};
pub use search::{exists_odd_coloring, odd_chromatic_exact, ExactResult, SearchConfig, SearchOutcome};
