use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::canon::canonical_form;
use super::generate::{enumerate_small_ktrees, random_ktree, GenSpec};
use super::search::{exists_odd_coloring, SearchConfig, SearchOutcome};
use crate::coloring::Coloring;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum ProbeMode {
    /// Every k-tree up to isomorphism with `k + 1 <= n <= n_max`.
    Exhaustive,
    /// `trials` random k-trees with `n` cycling through `k + 1..=n_max`,
    /// seeded `seed, seed + 1, ...`.
    Sampled { trials: usize, seed: u64, attachment_bias: f64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InstanceStatus {
    Feasible,
    Infeasible,
    Budget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeInstance {
    pub n: usize,
    pub seed: Option<u64>,
    /// Canonical form in `n:u-v,...` text.
    pub canonical: String,
    pub status: InstanceStatus,
    /// Witness for feasible instances.
    pub coloring: Option<Coloring>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub k: usize,
    pub colors: u32,
    pub n_max: usize,
    pub instances: Vec<ProbeInstance>,
    /// Canonical forms of instances with no odd `(k+2)`-coloring.
    pub counterexamples: Vec<String>,
    /// Canonical forms of instances the search could not settle.
    pub budget_exceeded: Vec<String>,
}

impl ProbeReport {
    pub fn new(k: usize, n_max: usize, instances: Vec<ProbeInstance>) -> ProbeReport {
        let pick = |s: InstanceStatus| -> Vec<String> {
            instances.iter().filter(|i| i.status == s).map(|i| i.canonical.clone()).collect()
        };
        let counterexamples = pick(InstanceStatus::Infeasible);
        let budget_exceeded = pick(InstanceStatus::Budget);
        ProbeReport { k, colors: k as u32 + 2, n_max, instances, counterexamples, budget_exceeded }
    }

    pub fn clean(&self) -> bool {
        self.counterexamples.is_empty() && self.budget_exceeded.is_empty()
    }
}

/// Runs the `k + 2` color search on one instance.
pub fn probe_instance(g: &Graph, k: usize, seed: Option<u64>, cfg: &SearchConfig) -> ProbeInstance {
    let canonical = canonical_form(g).to_text();
    let (status, coloring) = match exists_odd_coloring(g, k as u32 + 2, cfg) {
        SearchOutcome::Feasible(c) => (InstanceStatus::Feasible, Some(c)),
        SearchOutcome::Infeasible => (InstanceStatus::Infeasible, None),
        SearchOutcome::BudgetExceeded => (InstanceStatus::Budget, None),
    };
    ProbeInstance { n: g.order(), seed, canonical, status, coloring }
}

/// The instances a probe would run, with their seeds.
pub fn probe_instances(k: usize, n_max: usize, mode: ProbeMode) -> Vec<(Graph, Option<u64>)> {
    let mut out = Vec::new();
    match mode {
        ProbeMode::Exhaustive => {
            for n in k + 1..=n_max {
                out.extend(enumerate_small_ktrees(n, k).into_iter().map(|g| (g, None)));
            }
        }
        ProbeMode::Sampled { trials, seed, attachment_bias } => {
            if n_max < k + 1 {
                return out;
            }
            let span = n_max - k;
            for t in 0..trials {
                let s = seed.wrapping_add(t as u64);
                let spec = GenSpec { n: k + 1 + t % span, k, seed: s, attachment_bias };
                if let Ok((g, _)) = random_ktree(&spec) {
                    out.push((g, Some(s)));
                }
            }
        }
    }
    out
}

/// Searches small k-trees for instances without an odd `(k+2)`-coloring.
/// Reports what it finds; it never claims the bound holds in general.
pub fn probe_conjecture(k: usize, n_max: usize, mode: ProbeMode, cfg: &SearchConfig) -> ProbeReport {
    let instances = probe_instances(k, n_max, mode)
        .into_iter()
        .map(|(g, seed)| probe_instance(&g, k, seed, cfg))
        .collect();
    ProbeReport::new(k, n_max, instances)
}
