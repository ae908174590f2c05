//! Odd colorings of k-trees (k ≥ 7) with `k + 2⌊log₂k⌋ + 3` colors.
//!
//! Each reduction removes the interior of the heavy branch `B_t`: the branch
//! at the largest position with at least `k + r + 1` vertices. Its first `r`
//! later vertices are colored by the halving rule so every root vertex that
//! is adjacent to all of them gets an odd class among the reserved colors;
//! the apex and the remaining interior vertices pick colors outside the
//! reserved set that keep their already-colored neighbors odd.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::branch::{branch_interior_capped, branch_ordering};
use crate::coloring::{Coloring, PartialColoring};
use crate::error::{internal, Error, Result};
use crate::extend::Canon;
use crate::graph::{floor_log2, good_addition_ordering, AdditionOrdering, Graph, GraphView, Subgraph};

/// Palette used for a given k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorBudget {
    pub k: usize,
    pub r: usize,
    pub palette: usize,
}

impl ColorBudget {
    pub fn new(k: usize) -> ColorBudget {
        let r = floor_log2(k.max(1)) + 1;
        ColorBudget { k, r, palette: k + 2 * r + 1 }
    }
}

/// One reduction step, fixed when the branch is removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionFrame {
    /// 0-based position of the branch apex in the good ordering.
    pub t: usize,
    /// Root clique, the vertices of `w_bar` first, then `w0`.
    pub w: Vec<usize>,
    pub w_bar: Vec<usize>,
    pub w0: Vec<usize>,
    /// Branch interior in addition order: `u[0]` is the apex.
    pub u: Vec<usize>,
    /// `(w, i)`: the root vertex `w` is not adjacent to `u[i]`, and `i` is
    /// the first such index.
    pub sigma: Vec<(usize, usize)>,
}

/// What happened at one level during replay.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KtreeLevel {
    pub frame: ReductionFrame,
    /// Canonical color `i` is `permutation[i - 1]`.
    pub permutation: Vec<u32>,
    /// Reserved canonical colors `c_1..c_r`.
    pub reserved: Vec<u32>,
    /// `W_0 ⊇ W_1 ⊇ … ⊇ W_r`.
    pub halving: Vec<Vec<usize>>,
    /// Actual colors given to `u[0..]`.
    pub colors: Vec<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KtreeTrace {
    pub budget: Option<ColorBudget>,
    /// Vertices colored all-distinct at the bottom of the recursion.
    pub base: Vec<usize>,
    /// Levels in replay order (innermost first).
    pub levels: Vec<KtreeLevel>,
}

/// Largest position `i >= k` whose branch has at least `k + r + 1` vertices.
pub fn select_heavy_branch<G: GraphView>(g: &G, ord: &AdditionOrdering, k: usize, r: usize) -> Result<usize> {
    for i in (k..ord.len()).rev() {
        let interior = branch_interior_capped(g, ord.back_clique(i), ord.vertex(i), r + 1);
        if interior.len() > r {
            return Ok(i);
        }
    }
    Err(internal!("no branch with at least k+r+1 vertices"))
}

/// For each `w` in `w_bar`, the smallest `i` in `1..=r` with `w` not adjacent
/// to `u[i]`. Fails if two root vertices map to the same index.
pub fn build_injection<G: GraphView>(g: &G, w_bar: &[usize], u: &[usize], r: usize) -> Result<Vec<(usize, usize)>> {
    let mut used = vec![false; r + 1];
    let mut sigma = Vec::with_capacity(w_bar.len());
    for &w in w_bar {
        let i = (1..=r)
            .find(|&i| !g.has_edge(w, u[i]))
            .ok_or_else(|| internal!("root vertex {w} is adjacent to all of u1..ur"))?;
        if used[i] {
            return Err(internal!("two root vertices map to u{i}"));
        }
        used[i] = true;
        sigma.push((w, i));
    }
    Ok(sigma)
}

/// A color from `candidates` (tried in order) such that every vertex of
/// `constrained` still has an odd class once one more neighbor gets it.
pub fn choose_color_avoiding<G: GraphView>(
    g: &G,
    col: &PartialColoring,
    candidates: &[u32],
    constrained: &[usize],
) -> Result<u32> {
    if candidates.len() < constrained.len() + 1 {
        return Err(internal!(
            "{} candidates for {} constrained vertices",
            candidates.len(),
            constrained.len()
        ));
    }
    let summaries: Vec<_> = constrained.iter().map(|&x| col.odd_classes(g, x)).collect();
    candidates
        .iter()
        .copied()
        .find(|&c| summaries.iter().all(|s| s.survives(c)))
        .ok_or_else(|| internal!("every candidate color is forbidden"))
}

/// Colors `u[1..=r]` by the halving rule. `reserved[i-1]` is the canonical
/// `c_i`; returns the canonical colors used and the chain `W_0..W_r`.
pub fn halving_assignment<G: GraphView>(
    g: &G,
    col: &mut PartialColoring,
    canon: &Canon,
    frame: &ReductionFrame,
    reserved: &[u32],
    budget: ColorBudget,
) -> Result<(Vec<u32>, Vec<Vec<usize>>)> {
    let ColorBudget { k, r, .. } = budget;
    let mut chain = vec![frame.w0.clone()];
    let mut chosen = Vec::with_capacity(r);
    for i in 1..=r {
        let ui = frame.u[i];
        let ci = reserved[i - 1];
        let actual = canon.actual(ci);
        let prev = chain.last().expect("chain starts non-empty");
        let (odd, even): (Vec<usize>, Vec<usize>) =
            prev.iter().partition(|&&w| col.count_color(g, w, actual) % 2 == 1);
        let (c, next) = if odd.len() <= even.len() {
            (ci, odd)
        } else {
            ((k + r + i) as u32, even)
        };
        if next.len() > prev.len() / 2 {
            return Err(internal!("halving step {i} kept {} of {}", next.len(), prev.len()));
        }
        let a = canon.actual(c);
        if !col.proper_at(g, ui, a) {
            return Err(internal!("halving color {c} clashes at {ui}"));
        }
        col.set(ui, a);
        chosen.push(c);
        chain.push(next);
    }
    if !chain[r].is_empty() {
        return Err(internal!("halving chain does not end empty"));
    }
    Ok((chosen, chain))
}

fn build_frame<G: GraphView>(g: &G, ord: &AdditionOrdering, t: usize, budget: ColorBudget) -> Result<ReductionFrame> {
    let ColorBudget { k, r, .. } = budget;
    let (b, bo) = branch_ordering(g, ord, t)?;
    let u = bo.seq;
    if u.len() < r + 1 {
        return Err(internal!("heavy branch interior has {} < r+1 vertices", u.len()));
    }
    let (w0, w_bar): (Vec<usize>, Vec<usize>) =
        b.root.iter().partition(|&&w| (1..=r).all(|i| g.has_edge(w, u[i])));
    if w_bar.len() > r {
        return Err(internal!("|W̄| = {} exceeds r = {r}", w_bar.len()));
    }
    let sigma = build_injection(g, &w_bar, &u, r)?;
    for &x in &u[1..] {
        if g.degree(x) >= 2 * k {
            return Err(internal!("interior vertex {x} has degree {} >= 2k", g.degree(x)));
        }
    }
    let mut w = w_bar.clone();
    w.extend_from_slice(&w0);
    Ok(ReductionFrame { t, w, w_bar, w0, u, sigma })
}

/// Splits `g` into reduction frames (outermost first) and the base vertices.
pub fn decompose(g: &Graph, k: usize) -> Result<(Vec<ReductionFrame>, Vec<usize>)> {
    let budget = ColorBudget::new(k);
    let mut view = Subgraph::full(g);
    let mut ord = good_addition_ordering(&view, k)?;
    let mut frames = Vec::new();
    while view.order() > budget.palette {
        let t = select_heavy_branch(&view, &ord, k, budget.r)?;
        let frame = build_frame(&view, &ord, t, budget)?;
        for &x in &frame.u {
            view.remove(x);
        }
        frames.push(frame);
        if view.order() > k {
            ord = ord.restrict(&view)?;
        }
    }
    Ok((frames, view.vertices().collect()))
}

fn replay_level(g: &Graph, col: &mut PartialColoring, frame: &ReductionFrame, budget: ColorBudget) -> Result<KtreeLevel> {
    let ColorBudget { k, r, palette } = budget;
    let p = palette as u32;
    let canon = Canon::from_roots(col, &frame.w, p)?;
    let u = &frame.u;
    let s = u.len() - 1;
    let reserved: Vec<u32> = (1..=r)
        .map(|i| match frame.sigma.iter().position(|&(_, j)| j == i) {
            Some(j) => j as u32 + 1,
            None => (k + i) as u32,
        })
        .collect();
    let (_, halving) = halving_assignment(g, col, &canon, frame, &reserved, budget)?;
    let outside = |col: &PartialColoring, x: usize| -> Vec<u32> {
        let around = col.neighbor_colors(g, x);
        (1..=p)
            .filter(|c| !reserved.contains(c))
            .map(|c| canon.actual(c))
            .filter(|a| !around.contains(a))
            .collect()
    };
    let cand = outside(col, u[0]);
    let c0 = choose_color_avoiding(g, col, &cand, &frame.w_bar)?;
    col.set(u[0], c0);
    for i in r + 1..=s {
        let ui = u[i];
        let cand = outside(col, ui);
        // Root vertices in W0 keep their odd class in a reserved color, which
        // u_i never takes, so only u0 and W̄ need protecting here.
        let fix: Vec<usize> = g
            .neighbors(ui)
            .iter()
            .copied()
            .filter(|&x| x == u[0] || frame.w_bar.contains(&x))
            .collect();
        let c = choose_color_avoiding(g, col, &cand, &fix)?;
        col.set(ui, c);
    }
    for &x in frame.w.iter().chain(u.iter()) {
        if !col.has_odd(g, x) {
            return Err(internal!("vertex {x} is not odd after extending level t={}", frame.t));
        }
    }
    Ok(KtreeLevel {
        frame: frame.clone(),
        permutation: canon.as_slice().to_vec(),
        reserved,
        halving,
        colors: u.iter().map(|&x| col.get(x).unwrap_or(0)).collect(),
    })
}

/// Odd coloring of a k-tree (k ≥ 7) with the full trace.
pub fn color_ktree_traced(g: &Graph, k: usize) -> Result<(Coloring, KtreeTrace)> {
    if k < 7 {
        return Err(Error::KTooSmall { k, min: 7 });
    }
    let budget = ColorBudget::new(k);
    let (frames, base) = decompose(g, k)?;
    let mut col = PartialColoring::new(g.order());
    for (i, &v) in base.iter().enumerate() {
        col.set(v, i as u32 + 1);
    }
    let mut trace = KtreeTrace { budget: Some(budget), base, levels: Vec::with_capacity(frames.len()) };
    for frame in frames.iter().rev() {
        trace.levels.push(replay_level(g, &mut col, frame, budget)?);
    }
    Ok((col.finish(budget.palette as u32)?, trace))
}

/// Odd coloring of a k-tree (k ≥ 7) with `k + 2⌊log₂k⌋ + 3` colors.
pub fn color_ktree(g: &Graph, k: usize) -> Result<Coloring> {
    color_ktree_traced(g, k).map(|(c, _)| c)
}
