//! Odd 4-colorings of 2-trees.
//!
//! Every 2-tree on at least four vertices contains a member of the H- or
//! T-family that is not itself a hat or double hat. Removing its interior
//! leaves a smaller 2-tree; the coloring of the remainder is extended by one
//! of six fixed recipes.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::branch::{classify2, classify_h2, classify_t2, ConfigMatch, Ear2, Hat2, Special2, H2, T2};
use crate::coloring::{Coloring, PartialColoring};
use crate::error::{Error, Result};
use crate::extend::{CaseLevel, CaseTrace, Extender};
use crate::graph::{recognize_ktree, Graph, GraphView, Subgraph};

const PALETTE: u32 = 4;

/// The peeling sets `V_0..V_3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelingLevels {
    pub levels: [Vec<usize>; 4],
}

impl PeelingLevels {
    /// Vertices not in `V_0..V_{i-1}`.
    pub fn rest_after<G: GraphView>(&self, g: &G, i: usize) -> Vec<usize> {
        let gone: Vec<usize> = self.levels[..i].iter().flatten().copied().collect();
        g.vertices().filter(|v| !gone.contains(v)).collect()
    }
}

/// Peels vertices of degree `k` level by level (`k = 2` for 2-trees,
/// `k = 3` for 3-trees). A residue of exactly `k` vertices becomes the
/// next level in full.
pub fn peeling_levels<G: GraphView>(g: &G, k: usize) -> PeelingLevels {
    let n = g.capacity();
    let mut alive: Vec<bool> = (0..n).map(|v| g.contains(v)).collect();
    let mut levels: [Vec<usize>; 4] = Default::default();
    levels[0] = g.vertices().filter(|&v| g.degree(v) == k).collect();
    for &v in &levels[0] {
        alive[v] = false;
    }
    for level in levels.iter_mut().skip(1) {
        let rest: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        *level = if rest.len() > k {
            rest.iter()
                .copied()
                .filter(|&v| g.neighbors(v).filter(|&u| alive[u]).count() == k)
                .collect()
        } else if rest.len() == k {
            rest
        } else {
            Vec::new()
        };
        for &v in level.iter() {
            alive[v] = false;
        }
    }
    PeelingLevels { levels }
}

pub fn peeling_levels_2tree<G: GraphView>(g: &G) -> PeelingLevels {
    peeling_levels(g, 2)
}

/// A member of the H- or T-family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unavoidable2 {
    H(H2),
    T(T2),
}

impl Unavoidable2 {
    pub fn to_match(&self) -> ConfigMatch {
        match self {
            Unavoidable2::H(h) => h.to_match(),
            Unavoidable2::T(t) => t.to_match(),
        }
    }

    pub fn root(&self) -> [usize; 2] {
        match self {
            Unavoidable2::H(h) => h.root,
            Unavoidable2::T(t) => t.root,
        }
    }

    pub fn interior(&self) -> Vec<usize> {
        match self {
            Unavoidable2::H(h) => h.interior(),
            Unavoidable2::T(t) => t.interior(),
        }
    }
}

fn is_plain_special<G: GraphView>(g: &G, root: [usize; 2], u0: usize) -> bool {
    matches!(classify2(g, root[0], root[1], u0), Ok(Special2::Hat(_) | Special2::DoubleHat(_)))
}

/// The H-family member `B(root, u0)` unless it is a hat or double hat.
fn proper_h<G: GraphView>(g: &G, root: [usize; 2], u0: usize) -> Option<H2> {
    let h = classify_h2(g, root, u0).ok()?;
    (!is_plain_special(g, root, u0)).then_some(h)
}

fn t_among<G: GraphView>(g: &G, root: [usize; 2], apexes: &[usize]) -> Option<T2> {
    for (i, &u) in apexes.iter().enumerate() {
        for &w in &apexes[i + 1..] {
            if let Ok(t) = classify_t2(g, root, u, w) {
                return Some(t);
            }
        }
    }
    None
}

fn common_neighbors<G: GraphView>(g: &G, a: usize, b: usize) -> Vec<usize> {
    g.neighbors(a).filter(|&u| g.has_edge(u, b)).collect()
}

/// Exhaustive search over every triangle, used for the whole-graph shapes
/// where the peeling runs out.
fn scan_all<G: GraphView>(g: &G) -> Option<Unavoidable2> {
    for a in g.vertices() {
        let nb = g.neighbor_vec(a);
        for (i, &p) in nb.iter().enumerate() {
            for &q in &nb[i + 1..] {
                if !g.has_edge(p, q) {
                    continue;
                }
                for root in [[p, q], [q, p]] {
                    if let Some(h) = proper_h(g, root, a) {
                        return Some(Unavoidable2::H(h));
                    }
                }
                if a < p.min(q) {
                    if let Some(t) = t_among(g, [p, q], &common_neighbors(g, p, q)) {
                        return Some(Unavoidable2::T(t));
                    }
                }
            }
        }
    }
    None
}

/// A member of the H- or T-family that is neither a hat nor a double hat.
pub fn find_unavoidable_2tree<G: GraphView>(g: &G) -> Result<Unavoidable2> {
    if g.order() < 4 {
        return Err(Error::TooSmall { n: g.order(), need: 4 });
    }
    let peel = peeling_levels_2tree(g);
    let mut removed = vec![false; g.capacity()];
    for &v in &peel.levels[0] {
        removed[v] = true;
    }
    for i in 1..=3 {
        let rest = peel.rest_after(g, i);
        if rest.len() == 2 {
            let root = [rest[0], rest[1]];
            if let Some(t) = t_among(g, root, &common_neighbors(g, root[0], root[1])) {
                return Ok(Unavoidable2::T(t));
            }
            break;
        }
        if rest.len() < 2 {
            break;
        }
        for &v in &peel.levels[i] {
            let outer: Vec<usize> = g.neighbors(v).filter(|&u| !removed[u]).collect();
            if outer.len() != 2 {
                continue;
            }
            let cnt = |z: usize| g.neighbors(v).filter(|&u| removed[u] && g.has_edge(u, z)).count();
            let (x, y) = if cnt(outer[1]) > cnt(outer[0]) { (outer[1], outer[0]) } else { (outer[0], outer[1]) };
            let twins: Vec<usize> = g
                .neighbors(v)
                .filter(|&u| removed[u] && g.has_edge(u, x))
                .filter(|&u| g.neighbors(u).filter(|&z| !removed[z]).count() == 2)
                .collect();
            if let Some(t) = t_among(g, [v, x], &twins) {
                return Ok(Unavoidable2::T(t));
            }
            if let Some(h) = proper_h(g, [x, y], v) {
                return Ok(Unavoidable2::H(h));
            }
        }
        for &v in &peel.levels[i] {
            removed[v] = true;
        }
    }
    scan_all(g).ok_or_else(|| Error::NotFound("no unavoidable 2-tree configuration".to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    GoodHat,
    H100,
    H101OrH002,
    T200,
    TWithHat,
    TWithDoubleHat,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::GoodHat => "GOOD_HAT",
            CaseTag::H100 => "H100",
            CaseTag::H101OrH002 => "H101_OR_H002",
            CaseTag::T200 => "T200",
            CaseTag::TWithHat => "T_B>=1",
            CaseTag::TWithDoubleHat => "T_C>=1",
        })
    }
}

/// One reduction, oriented so the recipe can read its labels directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frame2 {
    /// `d(v1)` is 4 or odd.
    GoodHat { hat: Hat2, deg_v1: usize },
    /// `sides[0]` is the ear.
    H100(H2),
    /// `sides[0]` is a double hat, `sides[1]` an ear or double hat.
    H101(H2),
    T200(T2),
    /// `branches[0]` is a hat.
    THat(T2),
    /// `branches[0]` is a double hat.
    TDoubleHat(T2),
}

impl Frame2 {
    pub fn tag(&self) -> CaseTag {
        match self {
            Frame2::GoodHat { .. } => CaseTag::GoodHat,
            Frame2::H100(_) => CaseTag::H100,
            Frame2::H101(_) => CaseTag::H101OrH002,
            Frame2::T200(_) => CaseTag::T200,
            Frame2::THat(_) => CaseTag::TWithHat,
            Frame2::TDoubleHat(_) => CaseTag::TWithDoubleHat,
        }
    }

    pub fn root(&self) -> [usize; 2] {
        match self {
            Frame2::GoodHat { hat, .. } => hat.root,
            Frame2::H100(h) | Frame2::H101(h) => h.root,
            Frame2::T200(t) | Frame2::THat(t) | Frame2::TDoubleHat(t) => t.root,
        }
    }

    pub fn interior(&self) -> Vec<usize> {
        match self {
            Frame2::GoodHat { hat, .. } => hat.u.to_vec(),
            Frame2::H100(h) | Frame2::H101(h) => h.interior(),
            Frame2::T200(t) | Frame2::THat(t) | Frame2::TDoubleHat(t) => t.interior(),
        }
    }

    pub fn to_match(&self) -> ConfigMatch {
        match self {
            Frame2::GoodHat { hat, .. } => Special2::Hat(*hat).to_match(),
            Frame2::H100(h) | Frame2::H101(h) => h.to_match(),
            Frame2::T200(t) | Frame2::THat(t) | Frame2::TDoubleHat(t) => t.to_match(),
        }
    }
}

fn good_degree(d: usize) -> bool {
    d == 4 || d % 2 == 1
}

/// A hat whose first root vertex has degree 4 or odd degree.
pub fn find_good_hat<G: GraphView>(g: &G) -> Option<(Hat2, usize)> {
    for x in g.vertices().filter(|&x| g.degree(x) == 4) {
        let nb = g.neighbor_vec(x);
        for (i, &p) in nb.iter().enumerate() {
            for &q in &nb[i + 1..] {
                if !g.has_edge(p, q) {
                    continue;
                }
                if let Ok(s @ Special2::Hat(_)) = classify2(g, p, q, x) {
                    for first in [p, q] {
                        let d = g.degree(first);
                        if good_degree(d) {
                            if let Special2::Hat(h) = s.oriented(first) {
                                return Some((h, d));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Orients an H member into the frame its recipe expects.
pub fn frame_for_h2(h: H2) -> Result<Frame2> {
    let slot = |h: &H2, i: usize| h.sides[i].map(|s| s.slot());
    match h.counts() {
        (1, 0, 0) => {
            let h = if slot(&h, 0) == Some(0) { h } else { h.swapped() };
            Ok(Frame2::H100(h))
        }
        (1, 0, 1) | (0, 0, 2) => {
            let h = if slot(&h, 0) == Some(2) { h } else { h.swapped() };
            Ok(Frame2::H101(h))
        }
        _ => Err(Error::CaseDispatchExhausted(format!("{} without a good hat", h.kind()))),
    }
}

/// Orients a T member so a hat, else a double hat, comes first.
pub fn frame_for_t2(t: T2) -> Frame2 {
    let has = |s: usize| t.branches.iter().position(|b| b.slot() == s);
    let first = |i: usize| T2 { root: t.root, branches: [t.branches[i], t.branches[1 - i]] };
    if let Some(i) = has(1) {
        Frame2::THat(first(i))
    } else if let Some(i) = has(2) {
        Frame2::TDoubleHat(first(i))
    } else {
        Frame2::T200(t)
    }
}

/// Picks the reduction applied to `g`: a good hat if one exists, else the
/// unavoidable configuration.
pub fn choose_frame_2tree<G: GraphView>(g: &G) -> Result<Frame2> {
    if let Some((hat, deg_v1)) = find_good_hat(g) {
        return Ok(Frame2::GoodHat { hat, deg_v1 });
    }
    match find_unavoidable_2tree(g)? {
        Unavoidable2::H(h) => frame_for_h2(h),
        Unavoidable2::T(t) => Ok(frame_for_t2(t)),
    }
}

/// Splits a 2-tree into frames (outermost first) and the base vertices.
pub fn decompose_2tree(g: &Graph) -> Result<(Vec<Frame2>, Vec<usize>)> {
    let mut view = Subgraph::full(g);
    let mut frames = Vec::new();
    while view.order() > 4 {
        let f = choose_frame_2tree(&view)?;
        for x in f.interior() {
            view.remove(x);
        }
        frames.push(f);
    }
    Ok((frames, view.vertices().collect()))
}

fn near_odd(ext: &mut Extender<'_>, s: &Special2) -> Result<()> {
    let saved = ext.rebase(&s.root())?;
    let r1 = s.root()[1];
    match *s {
        Special2::Ear(e) => {
            ext.pick(e.u0, &[3, 4], &[r1])?;
        }
        Special2::Hat(h) => {
            let [a, x, y] = h.u;
            ext.set(a, 3)?;
            ext.pick(y, &[1, 4], &[r1])?;
            ext.pick(x, &[2, 4], &[a])?;
        }
        Special2::DoubleHat(d) => {
            let u = d.u;
            ext.set(u[0], 3)?;
            ext.set(u[1], 4)?;
            ext.set(u[2], 4)?;
            ext.pick(u[6], &[1, 3], &[r1])?;
            ext.pick(u[5], &[1, 2], &[u[2]])?;
            ext.pick(u[4], &[1, 2], &[u[0]])?;
            ext.pick(u[3], &[2, 3], &[u[1]])?;
        }
    }
    let mut all = vec![r1];
    all.extend(s.interior());
    ext.require_odd(&all, "near-odd extension")?;
    ext.canon = saved;
    Ok(())
}

/// Colors the interior of an ear, hat or double hat so that every vertex of
/// the branch except possibly `root[0]` has an odd class. Returns the
/// assignments made.
pub fn extend_near_odd_2tree(g: &Graph, s: &Special2, col: &mut PartialColoring) -> Result<Vec<(usize, u32)>> {
    let mut ext = Extender::new(g, col, &s.root(), PALETTE)?;
    near_odd(&mut ext, s)?;
    Ok(ext.assigned)
}

fn dhat(s: &Option<Special2>) -> Result<[usize; 7]> {
    match s {
        Some(Special2::DoubleHat(d)) => Ok(d.u),
        _ => Err(crate::error::internal!("expected a double hat")),
    }
}

fn apply_frame(ext: &mut Extender<'_>, f: &Frame2) -> Result<()> {
    let [v1, v2] = f.root();
    match *f {
        Frame2::GoodHat { hat, deg_v1 } => {
            if deg_v1 % 2 == 1 {
                near_odd(ext, &Special2::Hat(hat))?;
            } else {
                let [a, x, y] = hat.u;
                ext.set(a, 3)?;
                ext.set(x, 4)?;
                ext.pick(y, &[1, 4], &[v2])?;
                if ext.distinct_around(v1) < 3 || ext.distinct_around(a) < 3 {
                    return Err(crate::error::internal!("good hat: degree-4 vertex sees fewer than three colors"));
                }
            }
        }
        Frame2::H100(h) => {
            let u1 = h.sides[0].map(|s| s.apex()).unwrap_or(h.u0);
            ext.pick(h.u0, &[3, 4], &[v2])?;
            ext.pick(u1, &[2, 3, 4], &[v1])?;
        }
        Frame2::H101(h) => {
            let p = dhat(&h.sides[0])?;
            ext.set(p[0], 2)?;
            ext.set(p[1], 3)?;
            ext.set(p[3], 4)?;
            ext.pick(h.u0, &[3, 4], &[v1])?;
            if let Some(s) = h.sides[1] {
                near_odd(ext, &s.oriented(h.u0))?;
            }
            near_odd(ext, &Special2::Hat(Hat2 { root: [p[0], h.u0], u: [p[2], p[5], p[6]] }))?;
            near_odd(ext, &Special2::Ear(Ear2 { root: [p[1], p[0]], u0: p[4] }))?;
            if ext.distinct_around(p[1]) < 3 {
                return Err(crate::error::internal!("H101: u3 sees fewer than three colors"));
            }
        }
        Frame2::T200(t) => {
            ext.set(t.branches[0].apex(), 3)?;
            ext.set(t.branches[1].apex(), 3)?;
        }
        Frame2::THat(t) => {
            let [a, x, y] = match t.branches[0] {
                Special2::Hat(h) => h.u,
                _ => return Err(crate::error::internal!("expected a hat")),
            };
            ext.set(a, 3)?;
            ext.set(x, 4)?;
            near_odd(ext, &t.branches[1].oriented(v2))?;
            ext.pick(y, &[1, 4], &[v2])?;
            if ext.distinct_around(a) < 3 {
                return Err(crate::error::internal!("T with hat: u0 sees fewer than three colors"));
            }
        }
        Frame2::TDoubleHat(t) => {
            let u = dhat(&Some(t.branches[0]))?;
            ext.set(u[0], 3)?;
            ext.set(u[1], 4)?;
            ext.set(u[3], 2)?;
            near_odd(ext, &t.branches[1].oriented(v2))?;
            near_odd(ext, &Special2::Hat(Hat2 { root: [u[0], v2], u: [u[2], u[5], u[6]] }))?;
            ext.pick(u[4], &[1, 2], &[u[0]])?;
            if ext.distinct_around(u[1]) < 3 {
                return Err(crate::error::internal!("T with double hat: u1 sees fewer than three colors"));
            }
        }
    }
    Ok(())
}

/// Extends an odd coloring of `G - interior(f)` across the frame.
pub fn apply_case_2tree(g: &Graph, col: &mut PartialColoring, f: &Frame2) -> Result<CaseLevel> {
    let mut ext = Extender::new(g, col, &f.root(), PALETTE)?;
    let permutation = ext.canon.as_slice().to_vec();
    apply_frame(&mut ext, f)?;
    let mut all = f.root().to_vec();
    all.extend(f.interior());
    ext.require_odd(&all, "2-tree case")?;
    Ok(CaseLevel { case: f.tag().to_string(), config: f.to_match(), permutation, assigned: ext.assigned })
}

/// Odd 4-coloring of a 2-tree with the per-level trace.
pub fn color_2tree_traced(g: &Graph) -> Result<(Coloring, CaseTrace)> {
    recognize_ktree(g, 2)?;
    let (frames, base) = decompose_2tree(g)?;
    let mut col = PartialColoring::new(g.order());
    for (i, &v) in base.iter().enumerate() {
        col.set(v, i as u32 + 1);
    }
    let mut trace = CaseTrace { base, levels: Vec::with_capacity(frames.len()) };
    for f in frames.iter().rev() {
        trace.levels.push(apply_case_2tree(g, &mut col, f)?);
    }
    Ok((col.finish(PALETTE)?, trace))
}

/// Odd 4-coloring of a 2-tree.
pub fn color_2tree(g: &Graph) -> Result<Coloring> {
    color_2tree_traced(g).map(|(c, _)| c)
}
