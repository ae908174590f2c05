use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::graph::Graph;

/// Largest palette the search supports (parities live in a `u64`).
const MAX_SEARCH_COLORS: u32 = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Upper end of the range scanned by [`odd_chromatic_exact`].
    pub max_colors: u32,
    /// Maximum number of color assignments tried; `None` is unlimited.
    pub node_budget: Option<u64>,
    /// Precolor a maximal clique and only open one new color at a time.
    pub symmetry_breaking: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_colors: MAX_SEARCH_COLORS, node_budget: None, symmetry_breaking: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome {
    Feasible(Coloring),
    Infeasible,
    BudgetExceeded,
}

impl SearchOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, SearchOutcome::Feasible(_))
    }
}

/// Clique first, then maximum-cardinality search: each next vertex has the
/// most already-placed neighbors (smallest id on ties). For chordal graphs
/// every back-neighborhood is then a clique.
fn search_order(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.order();
    let start = (0..n).max_by_key(|&v| (g.degree(v), core::cmp::Reverse(v))).unwrap_or(0);
    let mut clique = vec![start];
    let mut by_deg: Vec<usize> = g.neighbors(start).to_vec();
    by_deg.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    for v in by_deg {
        if clique.iter().all(|&c| g.has_edge(c, v)) {
            clique.push(v);
        }
    }
    let q = clique.len();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let place = |v: usize, order: &mut Vec<usize>, placed: &mut Vec<bool>, weight: &mut Vec<usize>| {
        placed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            weight[u] += 1;
        }
    };
    for &v in &clique {
        place(v, &mut order, &mut placed, &mut weight);
    }
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
            .expect("unplaced vertex exists");
        place(v, &mut order, &mut placed, &mut weight);
    }
    (order, q)
}

struct State<'a> {
    g: &'a Graph,
    color: Vec<u32>,
    parity: Vec<u64>,
    open: Vec<usize>,
}

impl State<'_> {
    fn apply(&mut self, v: usize, c: u32) {
        self.color[v] = c;
        for &u in self.g.neighbors(v) {
            self.parity[u] ^= 1 << c;
            self.open[u] -= 1;
        }
    }

    fn undo(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = 0;
        for &u in self.g.neighbors(v) {
            self.parity[u] ^= 1 << c;
            self.open[u] += 1;
        }
    }

    fn proper(&self, v: usize, c: u32) -> bool {
        self.g.neighbors(v).iter().all(|&u| self.color[u] != c)
    }

    /// Every vertex whose neighborhood just became fully colored by `v`
    /// has an odd class.
    fn parity_ok(&self, v: usize) -> bool {
        let closed = |x: usize| self.open[x] != 0 || self.g.degree(x) == 0 || self.parity[x] != 0;
        closed(v) && self.g.neighbors(v).iter().all(|&u| closed(u))
    }
}

/// Depth-first search for an odd coloring with at most `c` colors.
pub fn exists_odd_coloring(g: &Graph, c: u32, cfg: &SearchConfig) -> SearchOutcome {
    let n = g.order();
    let c = c.min(MAX_SEARCH_COLORS);
    if n == 0 {
        return SearchOutcome::Feasible(Coloring::new(Vec::new(), c).expect("empty coloring"));
    }
    if c == 0 {
        return SearchOutcome::Infeasible;
    }
    let (order, q) = search_order(g);
    let fixed = if cfg.symmetry_breaking { q } else { 0 };
    if fixed as u32 > c {
        return SearchOutcome::Infeasible;
    }
    let mut st = State {
        g,
        color: vec![0; n],
        parity: vec![0; n],
        open: (0..n).map(|v| g.degree(v)).collect(),
    };
    // max_used[i] is the largest color among order[..i].
    let mut max_used = vec![0u32; n + 1];
    for (i, &v) in order[..fixed].iter().enumerate() {
        st.apply(v, i as u32 + 1);
        if !st.parity_ok(v) {
            return SearchOutcome::Infeasible;
        }
        max_used[i + 1] = i as u32 + 1;
    }
    let mut next = vec![1u32; n + 1];
    let mut nodes = 0u64;
    let mut i = fixed;
    loop {
        if i == n {
            let col = Coloring::new(st.color.clone(), c).expect("colors within palette");
            return SearchOutcome::Feasible(col);
        }
        let v = order[i];
        let limit = if cfg.symmetry_breaking { c.min(max_used[i] + 1) } else { c };
        let mut placed = false;
        while next[i] <= limit {
            let col = next[i];
            next[i] += 1;
            if !st.proper(v, col) {
                continue;
            }
            nodes += 1;
            if cfg.node_budget.is_some_and(|b| nodes > b) {
                return SearchOutcome::BudgetExceeded;
            }
            st.apply(v, col);
            if st.parity_ok(v) {
                placed = true;
                break;
            }
            st.undo(v);
        }
        if placed {
            max_used[i + 1] = max_used[i].max(st.color[v]);
            i += 1;
            next[i] = 1;
        } else {
            if i == fixed {
                return SearchOutcome::Infeasible;
            }
            i -= 1;
            st.undo(order[i]);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExactResult {
    Known { chi: u32, witness: Coloring },
    /// The search ran out of budget: `lo <= chi <= hi` (`hi` absent when no
    /// coloring was found within `max_colors`).
    Interval { lo: u32, hi: Option<u32>, witness: Option<Coloring> },
}

impl ExactResult {
    pub fn exact(&self) -> Option<u32> {
        match self {
            ExactResult::Known { chi, .. } => Some(*chi),
            ExactResult::Interval { .. } => None,
        }
    }
}

/// Smallest palette admitting an odd coloring, scanning upward from 1.
pub fn odd_chromatic_exact(g: &Graph, cfg: &SearchConfig) -> ExactResult {
    let mut lo = 1u32;
    let mut certain = true;
    for c in 1..=cfg.max_colors.min(MAX_SEARCH_COLORS) {
        match exists_odd_coloring(g, c, cfg) {
            SearchOutcome::Feasible(w) => {
                return if certain {
                    ExactResult::Known { chi: c, witness: w }
                } else {
                    ExactResult::Interval { lo, hi: Some(c), witness: Some(w) }
                };
            }
            SearchOutcome::Infeasible => {
                if certain {
                    lo = c + 1;
                }
            }
            SearchOutcome::BudgetExceeded => certain = false,
        }
    }
    ExactResult::Interval { lo, hi: None, witness: None }
}
