//! Branches `B(V, u)`: a k-clique `V` together with the component of `G - V`
//! containing `u`, plus the special small branches used by the 2- and
//! 3-tree constructions.

mod config;

pub use config::*;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{internal, Error, Result};
use crate::graph::{AdditionOrdering, Graph, GraphView};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    /// Root clique, sorted.
    pub root: Vec<usize>,
    pub apex: usize,
    /// Interior vertices, sorted by id.
    pub interior: Vec<usize>,
}

impl Branch {
    /// Root followed by interior.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = self.root.clone();
        v.extend_from_slice(&self.interior);
        v
    }

    pub fn len(&self) -> usize {
        self.root.len() + self.interior.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Induced subgraph on root ∪ interior with the local-to-global id map.
    pub fn induced_graph(&self, g: &Graph) -> (Graph, Vec<usize>) {
        g.induced(&self.vertices())
    }
}

/// Interior of a branch in addition order, `u0` first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchOrdering {
    pub seq: Vec<usize>,
}

fn check_root<G: GraphView>(g: &G, root: &[usize], apex: usize) -> Result<()> {
    if !g.is_clique(root) {
        return Err(Error::RootNotClique);
    }
    if root.contains(&apex) || !root.iter().all(|&r| g.has_edge(r, apex)) {
        return Err(Error::ApexNotCommonNeighbor(apex));
    }
    Ok(())
}

/// Component of `g - root` containing `apex`, stopping once `cap` vertices
/// have been found. Returned in BFS order.
pub fn branch_interior_capped<G: GraphView>(g: &G, root: &[usize], apex: usize, cap: usize) -> Vec<usize> {
    let mut seen = vec![false; g.capacity()];
    for &r in root {
        seen[r] = true;
    }
    seen[apex] = true;
    let mut out = vec![apex];
    let mut queue = VecDeque::from([apex]);
    while let Some(v) = queue.pop_front() {
        if out.len() >= cap {
            break;
        }
        for u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                out.push(u);
                queue.push_back(u);
                if out.len() >= cap {
                    break;
                }
            }
        }
    }
    out
}

/// Extracts `B(root, apex)`.
pub fn extract_branch<G: GraphView>(g: &G, root: &[usize], apex: usize) -> Result<Branch> {
    check_root(g, root, apex)?;
    let mut interior = branch_interior_capped(g, root, apex, usize::MAX);
    interior.sort_unstable();
    let mut root = root.to_vec();
    root.sort_unstable();
    Ok(Branch { root, apex, interior })
}

/// Branch at 0-based position `i >= k` of `ord`, with its interior ordered by
/// position. The three ordering properties are re-checked.
pub fn branch_ordering<G: GraphView>(g: &G, ord: &AdditionOrdering, i: usize) -> Result<(Branch, BranchOrdering)> {
    let k = ord.k();
    if i < k || i >= ord.len() {
        return Err(internal!("branch position {i} outside {k}..{}", ord.len()));
    }
    let root = ord.back_clique(i).to_vec();
    let apex = ord.vertex(i);
    let b = extract_branch(g, &root, apex)?;
    let mut seq = b.interior.clone();
    seq.sort_by_key(|&v| ord.position(v));
    check_branch_ordering(g, &b, &seq)?;
    Ok((b, BranchOrdering { seq }))
}

/// Checks: `seq[0]` is the apex; every later vertex has exactly `k` neighbors
/// among root and earlier interior vertices; the common root neighborhood
/// shrinks by at most one per step.
pub fn check_branch_ordering<G: GraphView>(g: &G, b: &Branch, seq: &[usize]) -> Result<()> {
    let k = b.root.len();
    if seq.first() != Some(&b.apex) {
        return Err(internal!("branch ordering does not start at the apex"));
    }
    let mut placed = vec![false; g.capacity()];
    for &r in &b.root {
        placed[r] = true;
    }
    placed[b.apex] = true;
    let mut common: Vec<usize> = b.root.iter().copied().filter(|&r| g.has_edge(r, b.apex)).collect();
    for &u in &seq[1..] {
        let back = g.neighbors(u).filter(|&x| placed[x]).count();
        if back != k {
            return Err(internal!("interior vertex {u} has {back} earlier neighbors, expected {k}"));
        }
        let before = common.len();
        common.retain(|&r| g.has_edge(r, u));
        if common.len() + 1 < before {
            return Err(internal!("common root neighborhood drops by more than one at {u}"));
        }
        placed[u] = true;
    }
    Ok(())
}
