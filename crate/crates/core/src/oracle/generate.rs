use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::canon::{canonical_form, CanonForm};
use crate::error::{Error, Result};
use crate::graph::{AdditionOrdering, Graph};

/// Parameters of [`random_ktree`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    /// 0.5 attaches uniformly over recorded k-cliques. Larger values favor
    /// cliques that were attached to before (bushy, high-degree hubs);
    /// smaller values favor the newest cliques (long, path-like growth).
    pub attachment_bias: f64,
}

impl GenSpec {
    pub fn new(n: usize, k: usize, seed: u64) -> GenSpec {
        GenSpec { n, k, seed, attachment_bias: 0.5 }
    }
}

/// Random k-tree on `spec.n` vertices with randomly permuted labels, and the
/// addition ordering it was built by. Deterministic in `spec`.
pub fn random_ktree(spec: &GenSpec) -> Result<(Graph, AdditionOrdering)> {
    let GenSpec { n, k, seed, attachment_bias } = *spec;
    if k == 0 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    if n < k + 1 {
        return Err(Error::TooSmall { n, need: k + 1 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bias = attachment_bias.clamp(0.0, 1.0);
    let skew = (2.0 * bias - 1.0).abs();
    let mut edges = Vec::with_capacity(k * n);
    for i in 0..=k {
        for j in 0..i {
            edges.push((j, i));
        }
    }
    let mut cliques: Vec<Vec<usize>> = (0..=k).map(|x| (0..=k).filter(|&y| y != x).collect()).collect();
    let mut used: Vec<usize> = Vec::with_capacity(n);
    for v in k + 1..n {
        let idx = if skew > 0.0 && rng.gen_bool(skew) {
            if bias > 0.5 && !used.is_empty() {
                used[rng.gen_range(0..used.len())]
            } else {
                let recent = k.min(cliques.len());
                cliques.len() - 1 - rng.gen_range(0..recent)
            }
        } else {
            rng.gen_range(0..cliques.len())
        };
        used.push(idx);
        let base = cliques[idx].clone();
        for &b in &base {
            edges.push((b, v));
        }
        for x in 0..k {
            let mut c: Vec<usize> = base.iter().enumerate().filter(|&(i, _)| i != x).map(|(_, &y)| y).collect();
            c.push(v);
            cliques.push(c);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let edges: Vec<_> = edges.into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
    let g = Graph::from_edges(n, &edges)?;
    let order: Vec<usize> = (0..n).map(|i| perm[i]).collect();
    let ord = AdditionOrdering::new(&g, k, order)?;
    Ok((g, ord))
}

/// All k-cliques of a k-tree, read off an addition ordering.
fn k_cliques(ord: &AdditionOrdering) -> BTreeSet<Vec<usize>> {
    let k = ord.k();
    let mut big: Vec<Vec<usize>> = vec![ord.order()[..=k].to_vec()];
    for i in k + 1..ord.len() {
        let mut c = ord.back_clique(i).to_vec();
        c.push(ord.vertex(i));
        big.push(c);
    }
    let mut out = BTreeSet::new();
    for c in big {
        for x in 0..c.len() {
            let mut s: Vec<usize> = c.iter().enumerate().filter(|&(i, _)| i != x).map(|(_, &y)| y).collect();
            s.sort_unstable();
            out.insert(s);
        }
    }
    out
}

/// Every k-tree on `n` vertices up to isomorphism, in canonical labeling and
/// ascending canonical order.
pub fn enumerate_small_ktrees(n: usize, k: usize) -> Vec<Graph> {
    if k == 0 || n < k + 1 {
        return Vec::new();
    }
    let mut level: BTreeSet<CanonForm> = BTreeSet::new();
    level.insert(canonical_form(&Graph::complete(k + 1)));
    for m in k + 2..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let g = form.to_graph();
            let ord = crate::graph::recognize_ktree(&g, k).expect("enumerated graphs are k-trees");
            for c in k_cliques(&ord) {
                let mut edges: Vec<(usize, usize)> = g.edges().collect();
                edges.extend(c.iter().map(|&x| (x, m - 1)));
                let h = Graph::from_edges(m, &edges).expect("valid extension");
                next.insert(canonical_form(&h));
            }
        }
        level = next;
    }
    level.iter().map(|f| f.to_graph()).collect()
}

/// The clique `{v_1..v_k, u_0}` plus `u_1..u_k`, where `u_j` is adjacent to
/// `u_0` and every `v_i` with `i != j`. A k-tree with no odd
/// `(k+1)`-coloring.
///
/// Ids: `v_i = i - 1` for `i in 1..=k`, `u_0 = k`, `u_j = k + j`.
pub fn lower_bound_construction(k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..=k {
        for j in 0..i {
            edges.push((j, i));
        }
    }
    for j in 1..=k {
        let uj = k + j;
        edges.push((k, uj));
        for i in 1..=k {
            if i != j {
                edges.push((i - 1, uj));
            }
        }
    }
    Graph::from_edges(2 * k + 1, &edges).expect("valid construction")
}
