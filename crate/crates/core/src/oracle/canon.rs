use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Isomorphism-invariant form of a small graph: its edge list under a
/// canonical labeling. Equal forms mean isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonForm {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl CanonForm {
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n, &self.edges).expect("canonical edges are valid")
    }

    /// Compact text form `n:u-v,u-v,...`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{}:", self.n);
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{u}-{v}");
        }
        s
    }
}

/// Refines vertex colors until stable: the new color of `v` ranks the pair
/// (old color, sorted multiset of neighbor colors).
fn refine(g: &Graph, colors: &mut Vec<usize>) {
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..g.order())
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = {
            let mut keys: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
            keys.sort();
            keys.dedup();
            keys.into_iter().enumerate().map(|(i, s)| (s, i)).collect()
        };
        let new: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let before = count_distinct(colors);
        *colors = new;
        if count_distinct(colors) == before {
            return;
        }
    }
}

fn count_distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn relabeled_edges(g: &Graph, colors: &[usize]) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| {
            let (a, b) = (colors[u], colors[v]);
            if a < b { (a, b) } else { (b, a) }
        })
        .collect();
    e.sort_unstable();
    e
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<Vec<(usize, usize)>>) {
    let n = g.order();
    if count_distinct(&colors) == n {
        let e = relabeled_edges(g, &colors);
        if best.as_ref().is_none_or(|b| e < *b) {
            *best = Some(e);
        }
        return;
    }
    let mut size = vec![0usize; n];
    for &c in &colors {
        size[c] += 1;
    }
    let cell = (0..n).find(|&c| size[c] > 1).expect("non-discrete partition has a big cell");
    for v in 0..n {
        if colors[v] != cell {
            continue;
        }
        // Individualize v: it stays in front of the rest of its cell.
        let mut c: Vec<usize> = colors.iter().map(|&x| 2 * x + 1).collect();
        c[v] -= 1;
        refine(g, &mut c);
        search(g, c, best);
    }
}

/// Canonical form by color refinement with exhaustive individualization.
/// Intended for small graphs (a dozen vertices or so).
pub fn canonical_form(g: &Graph) -> CanonForm {
    let mut colors = vec![0usize; g.order()];
    refine(g, &mut colors);
    let mut best = None;
    search(g, colors, &mut best);
    CanonForm { n: g.order(), edges: best.unwrap_or_default() }
}
