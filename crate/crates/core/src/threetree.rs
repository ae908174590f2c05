//! Odd 5-colorings of 3-trees.
//!
//! Same scheme as the 2-tree construction with degree-3 peeling, the
//! ear / one-hat / one-hat plus family and thirteen reduction cases. Cases
//! that branch on the parity of color 4 around the root read it off the
//! coloring of the remainder at replay time.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::branch::{classify3, classify_h3, classify_t3, ConfigMatch, OneHat, Special3, H3, T3};
use crate::coloring::{Coloring, PartialColoring};
use crate::error::{internal, Error, Result};
use crate::extend::{CaseLevel, CaseTrace, Extender};
use crate::graph::{recognize_ktree, Graph, GraphView, Subgraph};
use crate::twotree::{peeling_levels, PeelingLevels};

const PALETTE: u32 = 5;

pub fn peeling_levels_3tree<G: GraphView>(g: &G) -> PeelingLevels {
    peeling_levels(g, 3)
}

/// A member of the 3-tree H- or T-family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unavoidable3 {
    H(H3),
    T(T3),
}

impl Unavoidable3 {
    pub fn to_match(&self) -> ConfigMatch {
        match self {
            Unavoidable3::H(h) => h.to_match(),
            Unavoidable3::T(t) => t.to_match(),
        }
    }

    pub fn root(&self) -> [usize; 3] {
        match self {
            Unavoidable3::H(h) => h.root,
            Unavoidable3::T(t) => t.root,
        }
    }

    pub fn interior(&self) -> Vec<usize> {
        match self {
            Unavoidable3::H(h) => h.interior(),
            Unavoidable3::T(t) => t.interior(),
        }
    }
}

fn is_plain_special<G: GraphView>(g: &G, root: [usize; 3], u0: usize) -> bool {
    matches!(classify3(g, root, u0), Ok(Special3::OneHat(_) | Special3::Plus(_)))
}

fn proper_h<G: GraphView>(g: &G, root: [usize; 3], u0: usize) -> Option<H3> {
    let h = classify_h3(g, root, u0).ok()?;
    (!is_plain_special(g, root, u0)).then_some(h)
}

fn t_among<G: GraphView>(g: &G, root: [usize; 3], apexes: &[usize]) -> Option<T3> {
    for (i, &u) in apexes.iter().enumerate() {
        for &w in &apexes[i + 1..] {
            if let Ok(t) = classify_t3(g, root, u, w) {
                return Some(t);
            }
        }
    }
    None
}

fn common3<G: GraphView>(g: &G, a: usize, b: usize, c: usize) -> Vec<usize> {
    g.neighbors(a).filter(|&u| g.has_edge(u, b) && g.has_edge(u, c)).collect()
}

fn scan_all<G: GraphView>(g: &G) -> Option<Unavoidable3> {
    for a in g.vertices() {
        let nb = g.neighbor_vec(a);
        for (i, &p) in nb.iter().enumerate() {
            for (j, &q) in nb.iter().enumerate().skip(i + 1) {
                if !g.has_edge(p, q) {
                    continue;
                }
                for &r in &nb[j + 1..] {
                    if !g.has_edge(p, r) || !g.has_edge(q, r) {
                        continue;
                    }
                    if let Some(h) = proper_h(g, [p, q, r], a) {
                        return Some(Unavoidable3::H(h));
                    }
                    if a < p.min(q).min(r) {
                        if let Some(t) = t_among(g, [p, q, r], &common3(g, p, q, r)) {
                            return Some(Unavoidable3::T(t));
                        }
                    }
                }
            }
        }
    }
    None
}

/// A member of the H- or T-family that is neither a one-hat nor a one-hat
/// plus.
pub fn find_unavoidable_3tree<G: GraphView>(g: &G) -> Result<Unavoidable3> {
    if g.order() < 5 {
        return Err(Error::TooSmall { n: g.order(), need: 5 });
    }
    let peel = peeling_levels_3tree(g);
    let mut removed = vec![false; g.capacity()];
    for &v in &peel.levels[0] {
        removed[v] = true;
    }
    for i in 1..=3 {
        let rest = peel.rest_after(g, i);
        if rest.len() == 3 {
            let root = [rest[0], rest[1], rest[2]];
            if let Some(t) = t_among(g, root, &common3(g, root[0], root[1], root[2])) {
                return Ok(Unavoidable3::T(t));
            }
            break;
        }
        if rest.len() < 3 {
            break;
        }
        for &v in &peel.levels[i] {
            let outer: Vec<usize> = g.neighbors(v).filter(|&u| !removed[u]).collect();
            if outer.len() != 3 {
                continue;
            }
            let cnt = |a: usize, b: usize| {
                g.neighbors(v).filter(|&u| removed[u] && g.has_edge(u, a) && g.has_edge(u, b)).count()
            };
            // x, y: the pair with the most shared removed neighbors; y is the
            // end of that pair sharing more with z.
            let pairs = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];
            let (a, b, c) = pairs
                .into_iter()
                .max_by_key(|&(a, b, _)| (cnt(outer[a], outer[b]), core::cmp::Reverse(a)))
                .expect("three pairs");
            let (x, y, z) = if cnt(outer[a], outer[c]) > cnt(outer[b], outer[c]) {
                (outer[b], outer[a], outer[c])
            } else {
                (outer[a], outer[b], outer[c])
            };
            let twins: Vec<usize> = g
                .neighbors(v)
                .filter(|&u| removed[u] && g.has_edge(u, x) && g.has_edge(u, y))
                .filter(|&u| g.neighbors(u).filter(|&w| !removed[w]).count() == 3)
                .collect();
            if let Some(t) = t_among(g, [v, x, y], &twins) {
                return Ok(Unavoidable3::T(t));
            }
            if let Some(h) = proper_h(g, [x, y, z], v) {
                return Ok(Unavoidable3::H(h));
            }
        }
        for &v in &peel.levels[i] {
            removed[v] = true;
        }
    }
    scan_all(g).ok_or_else(|| Error::NotFound("no unavoidable 3-tree configuration".to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case3Tag {
    GoodHat,
    HPlus,
    HPlusSub,
    H200,
    H300,
    H110,
    H210,
    H020,
    H120OrH030,
    TPlus,
    T200,
    T110,
    T020A,
    T020B,
}

impl fmt::Display for Case3Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case3Tag::GoodHat => "GOOD_HAT3",
            Case3Tag::HPlus => "H_C>=1",
            Case3Tag::HPlusSub => "H_C>=1_SUB",
            Case3Tag::H200 => "H200",
            Case3Tag::H300 => "H300",
            Case3Tag::H110 => "H110",
            Case3Tag::H210 => "H210",
            Case3Tag::H020 => "H020",
            Case3Tag::H120OrH030 => "H120_OR_H030",
            Case3Tag::TPlus => "T_C>=1",
            Case3Tag::T200 => "T200",
            Case3Tag::T110 => "T110",
            Case3Tag::T020A => "T020(a)",
            Case3Tag::T020B => "T020(b)",
        })
    }
}

/// One reduction, oriented so the recipe can read its labels directly.
/// Faces of an oriented H are `B1 = faces[0]` on `{v1, v2, u0}`,
/// `B2 = faces[1]` on `{v2, v3, u0}` and `B3 = faces[2]` on `{v3, v1, u0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frame3 {
    /// One-hat or one-hat plus whose root vertex `spare` has degree 4 or odd.
    GoodHat { branch: Special3, spare: usize, deg: usize },
    /// `B1` is a one-hat plus whose third root vertex is `v2`.
    HPlus(H3),
    /// `B1` is a one-hat plus whose third root vertex is `u0`.
    HPlusSub { h: H3, deg_u0: usize },
    /// Ears on `B1` and `B2`.
    H200(H3),
    H300(H3),
    /// One-hat `B1` with its hat vertex on `v2` and `u0`, ear `B2`.
    H110(H3),
    /// One-hat `B1` with its hat vertex on `v1` and `v2`, ears `B2`, `B3`.
    H210(H3),
    /// One-hat `B1` with its hat vertex on `v1` and `v2`, one-hat `B2`.
    H020(H3),
    /// One-hats `B1`, `B2`; `B3` has `d(u0) = 3` inside it.
    H120 { h: H3, deg_u0: usize },
    /// `branches[0]` is a one-hat plus.
    TPlus(T3),
    T200(T3),
    /// `branches[0]` is a one-hat, `branches[1]` an ear.
    T110(T3),
    /// Two one-hats; `roots` is `[v1, v2, v3]` with the first hat on
    /// `v1, v2` and the second on `v1, v2` (`same`) or `v2, v3`.
    T020 { t: T3, roots: [usize; 3], same: bool },
}

impl Frame3 {
    pub fn tag(&self) -> Case3Tag {
        match self {
            Frame3::GoodHat { .. } => Case3Tag::GoodHat,
            Frame3::HPlus(_) => Case3Tag::HPlus,
            Frame3::HPlusSub { .. } => Case3Tag::HPlusSub,
            Frame3::H200(_) => Case3Tag::H200,
            Frame3::H300(_) => Case3Tag::H300,
            Frame3::H110(_) => Case3Tag::H110,
            Frame3::H210(_) => Case3Tag::H210,
            Frame3::H020(_) => Case3Tag::H020,
            Frame3::H120 { .. } => Case3Tag::H120OrH030,
            Frame3::TPlus(_) => Case3Tag::TPlus,
            Frame3::T200(_) => Case3Tag::T200,
            Frame3::T110(_) => Case3Tag::T110,
            Frame3::T020 { same: true, .. } => Case3Tag::T020A,
            Frame3::T020 { same: false, .. } => Case3Tag::T020B,
        }
    }

    /// Root vertices in the order that fixes the canonical palette.
    pub fn root(&self) -> [usize; 3] {
        match self {
            Frame3::GoodHat { branch, .. } => branch.root(),
            Frame3::HPlus(h)
            | Frame3::HPlusSub { h, .. }
            | Frame3::H200(h)
            | Frame3::H300(h)
            | Frame3::H110(h)
            | Frame3::H210(h)
            | Frame3::H020(h)
            | Frame3::H120 { h, .. } => h.root,
            Frame3::TPlus(t) | Frame3::T110(t) => t.branches[0].root(),
            Frame3::T200(t) => t.root,
            Frame3::T020 { roots, .. } => *roots,
        }
    }

    pub fn interior(&self) -> Vec<usize> {
        match self {
            Frame3::GoodHat { branch, .. } => branch.interior(),
            Frame3::HPlus(h)
            | Frame3::HPlusSub { h, .. }
            | Frame3::H200(h)
            | Frame3::H300(h)
            | Frame3::H110(h)
            | Frame3::H210(h)
            | Frame3::H020(h)
            | Frame3::H120 { h, .. } => h.interior(),
            Frame3::TPlus(t) | Frame3::T200(t) | Frame3::T110(t) | Frame3::T020 { t, .. } => t.interior(),
        }
    }

    pub fn to_match(&self) -> ConfigMatch {
        match self {
            Frame3::GoodHat { branch, .. } => branch.to_match(),
            Frame3::HPlus(h)
            | Frame3::HPlusSub { h, .. }
            | Frame3::H200(h)
            | Frame3::H300(h)
            | Frame3::H110(h)
            | Frame3::H210(h)
            | Frame3::H020(h)
            | Frame3::H120 { h, .. } => h.to_match(),
            Frame3::TPlus(t) | Frame3::T200(t) | Frame3::T110(t) | Frame3::T020 { t, .. } => t.to_match(),
        }
    }
}

fn good_degree(d: usize) -> bool {
    d == 4 || d % 2 == 1
}

/// A one-hat or one-hat plus with a root vertex of degree 4 or odd degree.
pub fn find_good_hat_3tree<G: GraphView>(g: &G) -> Option<(Special3, usize, usize)> {
    for x in g.vertices().filter(|&x| matches!(g.degree(x), 4 | 6)) {
        let nb = g.neighbor_vec(x);
        for (i, &p) in nb.iter().enumerate() {
            for (j, &q) in nb.iter().enumerate().skip(i + 1) {
                if !g.has_edge(p, q) {
                    continue;
                }
                for &r in &nb[j + 1..] {
                    if !g.has_edge(p, r) || !g.has_edge(q, r) {
                        continue;
                    }
                    match classify3(g, [p, q, r], x) {
                        Ok(s @ (Special3::OneHat(_) | Special3::Plus(_))) => {
                            for y in s.root() {
                                let d = g.degree(y);
                                if good_degree(d) {
                                    return Some((s, y, d));
                                }
                            }
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    None
}

fn hat_on(s: &Option<Special3>, a: usize, b: usize) -> bool {
    match s {
        Some(Special3::OneHat(h)) => {
            let r = h.root;
            (r[0] == a && r[1] == b) || (r[0] == b && r[1] == a)
        }
        _ => false,
    }
}

fn is_ear(s: &Option<Special3>) -> bool {
    matches!(s, Some(Special3::Ear(_)))
}

fn is_hat(s: &Option<Special3>) -> bool {
    matches!(s, Some(Special3::OneHat(_)))
}

fn plus_third(s: &Option<Special3>) -> Option<usize> {
    match s {
        Some(Special3::Plus(p)) => Some(p.root[2]),
        _ => None,
    }
}

/// Number of neighbors of `v` inside the branch `s`.
fn deg_in<G: GraphView>(g: &G, s: &Option<Special3>, v: usize) -> usize {
    match s {
        None => 2,
        Some(s) => s.root().iter().copied().chain(s.interior()).filter(|&w| w != v && g.has_edge(v, w)).count(),
    }
}

fn orient(h: &H3, f: impl Fn(&H3) -> bool) -> Option<H3> {
    h.symmetries().into_iter().find(|s| f(s))
}

fn exhausted(what: impl fmt::Display) -> Error {
    Error::CaseDispatchExhausted(format!("{what} without a good hat"))
}

/// Orients an H-family member for its reduction case.
pub fn frame_for_h3<G: GraphView>(g: &G, h: H3) -> Result<Frame3> {
    let u0 = h.u0;
    let (a, b, c) = h.counts();
    if c >= 1 {
        if let Some(o) = orient(&h, |s| plus_third(&s.faces[0]) == Some(u0)) {
            return Ok(Frame3::HPlusSub { h: o, deg_u0: g.degree(u0) });
        }
        if let Some(o) = orient(&h, |s| plus_third(&s.faces[0]) == Some(s.root[1])) {
            return Ok(Frame3::HPlus(o));
        }
        return Err(exhausted(h.kind()));
    }
    let found = match (a, b) {
        (2, 0) => orient(&h, |s| is_ear(&s.faces[0]) && is_ear(&s.faces[1])).map(Frame3::H200),
        (3, 0) => Some(Frame3::H300(h)),
        (1, 1) => orient(&h, |s| hat_on(&s.faces[0], s.root[1], u0) && is_ear(&s.faces[1])).map(Frame3::H110),
        (2, 1) => orient(&h, |s| hat_on(&s.faces[0], s.root[0], s.root[1])).map(Frame3::H210),
        (0, 2) => orient(&h, |s| hat_on(&s.faces[0], s.root[0], s.root[1]) && is_hat(&s.faces[1])).map(Frame3::H020),
        (1, 2) | (0, 3) => {
            let d = g.degree(u0);
            orient(&h, |s| {
                is_hat(&s.faces[0]) && is_hat(&s.faces[1]) && s.faces[2].is_some() && deg_in(g, &s.faces[2], u0) == 3
            })
            .filter(|s| d == 6 || (d == 8 && deg_in(g, &s.faces[0], u0) == 4 && deg_in(g, &s.faces[1], u0) == 4))
            .map(|o| Frame3::H120 { h: o, deg_u0: d })
        }
        _ => None,
    };
    found.ok_or_else(|| exhausted(h.kind()))
}

/// Orients a T-family member for its reduction case.
pub fn frame_for_t3(t: T3) -> Result<Frame3> {
    let first = |i: usize| T3 { root: t.root, branches: [t.branches[i], t.branches[1 - i]] };
    let has = |s: usize| t.branches.iter().position(|b| b.slot() == s);
    if let Some(i) = has(2) {
        return Ok(Frame3::TPlus(first(i)));
    }
    match t.counts() {
        (2, 0, 0) => Ok(Frame3::T200(t)),
        (1, 1, 0) => Ok(Frame3::T110(first(has(1).unwrap_or(0)))),
        (0, 2, 0) => {
            let [ru, rw] = [t.branches[0].root(), t.branches[1].root()];
            let (pu, pw) = ([ru[0], ru[1]], [rw[0], rw[1]]);
            if pw.contains(&pu[0]) && pw.contains(&pu[1]) {
                Ok(Frame3::T020 { t, roots: ru, same: true })
            } else {
                let v2 = if pw.contains(&pu[0]) { pu[0] } else { pu[1] };
                let v1 = if v2 == pu[0] { pu[1] } else { pu[0] };
                let v3 = if v2 == pw[0] { pw[1] } else { pw[0] };
                Ok(Frame3::T020 { t, roots: [v1, v2, v3], same: false })
            }
        }
        k => Err(internal!("unexpected T-family counts {k:?}")),
    }
}

/// Picks the reduction applied to `g`.
pub fn choose_frame_3tree<G: GraphView>(g: &G) -> Result<Frame3> {
    if let Some((branch, spare, deg)) = find_good_hat_3tree(g) {
        return Ok(Frame3::GoodHat { branch, spare, deg });
    }
    match find_unavoidable_3tree(g)? {
        Unavoidable3::H(h) => frame_for_h3(g, h),
        Unavoidable3::T(t) => frame_for_t3(t),
    }
}

/// Splits a 3-tree into frames (outermost first) and the base vertices.
pub fn decompose_3tree(g: &Graph) -> Result<(Vec<Frame3>, Vec<usize>)> {
    let mut view = Subgraph::full(g);
    let mut frames = Vec::new();
    while view.order() > 5 {
        let f = choose_frame_3tree(&view)?;
        for x in f.interior() {
            view.remove(x);
        }
        frames.push(f);
    }
    Ok((frames, view.vertices().collect()))
}

/// The one-hat `B({P1, P2, u0}, u1)` inside a one-hat plus.
fn inner_hat(s: &Special3) -> Result<Special3> {
    match s {
        Special3::Plus(p) => Ok(Special3::OneHat(OneHat { root: [p.root[0], p.u[0], p.root[1]], u: [p.u[1], p.u[3]] })),
        _ => Err(internal!("expected a one-hat plus")),
    }
}

/// Near-odd extension with spare index `i`: ears spare `root[i], root[i+1]`,
/// one-hats and pluses spare `root[i]` only.
fn near3(ext: &mut Extender<'_>, s: &Special3, i: usize) -> Result<()> {
    let r = s.root();
    let saved = ext.rebase(&r)?;
    let spared: Vec<usize> = match s {
        Special3::Ear(_) => vec![r[i], r[(i + 1) % 3]],
        _ => vec![r[i]],
    };
    match *s {
        Special3::Ear(e) => {
            ext.pick(e.u0, &[4, 5], &[r[(i + 2) % 3]])?;
        }
        Special3::OneHat(h) => {
            let [x, y] = h.u;
            match i {
                0 | 1 => {
                    ext.rebase(&[r[i], r[1 - i], r[2]])?;
                    ext.pick(x, &[4, 5], &[r[2]])?;
                    ext.pick(y, &[3, 4, 5], &[r[1 - i]])?;
                }
                _ => {
                    ext.pick_pair((x, y), &[(4, 3), (4, 5), (5, 3)], &[r[0], r[1]])?;
                }
            }
        }
        Special3::Plus(p) => {
            let q = p.u;
            let inner = inner_hat(s)?;
            ext.set(q[0], 4)?;
            match i {
                0 | 1 => {
                    ext.pick(q[2], &[1, 5], &[r[2]])?;
                    near3(ext, &inner, if i == 0 { 0 } else { 2 })?;
                }
                _ => {
                    ext.set(q[2], 5)?;
                    near3(ext, &inner, 1)?;
                    if ext.distinct_around(q[0]) < 4 {
                        return Err(internal!("one-hat plus: apex sees fewer than four colors"));
                    }
                }
            }
        }
    }
    let mut check: Vec<usize> = r.iter().copied().filter(|v| !spared.contains(v)).collect();
    check.extend(s.interior());
    ext.require_odd(&check, "3-tree near-odd extension")?;
    ext.canon = saved;
    Ok(())
}

/// Near-odd extension choosing the spare so that every vertex of `fix` ends
/// up odd (one vertex for ears, at most two otherwise).
fn near3_fixing(ext: &mut Extender<'_>, s: &Special3, fix: &[usize]) -> Result<()> {
    let r = s.root();
    let i = if s.is_ear() {
        match fix {
            [f] => (r.iter().position(|v| v == f).ok_or_else(|| internal!("{f} is not a root vertex"))? + 1) % 3,
            _ => return Err(internal!("an ear fixes exactly one root vertex")),
        }
    } else {
        r.iter().position(|v| !fix.contains(v)).ok_or_else(|| internal!("cannot fix all three root vertices"))?
    };
    near3(ext, s, i)
}

/// Colors the interior of an ear, one-hat or one-hat plus. Ears spare
/// `root[i]` and `root[i+1]`; the others spare `root[i]` alone. Returns the
/// assignments made.
pub fn extend_near_odd_3tree(
    g: &Graph,
    s: &Special3,
    col: &mut PartialColoring,
    spare_index: usize,
) -> Result<Vec<(usize, u32)>> {
    if spare_index > 2 {
        return Err(internal!("spare index {spare_index} out of range"));
    }
    let mut ext = Extender::new(g, col, &s.root(), PALETTE)?;
    near3(&mut ext, s, spare_index)?;
    Ok(ext.assigned)
}

fn need_colors(ext: &Extender<'_>, v: usize, k: usize, what: &str) -> Result<()> {
    if ext.distinct_around(v) < k {
        return Err(internal!("{what}: vertex {v} sees fewer than {k} colors"));
    }
    Ok(())
}

fn face(h: &H3, i: usize) -> Result<Special3> {
    h.faces[i].ok_or_else(|| internal!("face {i} is empty"))
}

fn plus_of(s: &Special3) -> Result<[usize; 4]> {
    match s {
        Special3::Plus(p) => Ok(p.u),
        _ => Err(internal!("expected a one-hat plus")),
    }
}

fn hat_of(s: &Special3) -> Result<[usize; 2]> {
    match s {
        Special3::OneHat(h) => Ok(h.u),
        _ => Err(internal!("expected a one-hat")),
    }
}

fn is_even4(ext: &Extender<'_>, v: usize) -> bool {
    !ext.count_is_odd(v, 4)
}

fn case_plus_sub(ext: &mut Extender<'_>, h: &H3, deg_u0: usize) -> Result<()> {
    let [_, _, v3] = h.root;
    let u0 = h.u0;
    let b1 = face(h, 0)?;
    let q = plus_of(&b1)?;
    let inner = inner_hat(&b1)?;
    if h.faces[1].is_none() && h.faces[2].is_none() {
        return Err(exhausted("one-hat plus with two empty faces"));
    }
    ext.set(u0, 4)?;
    ext.set(q[0], 5)?;
    ext.set(q[2], 3)?;
    if deg_u0 <= 7 {
        for s in h.faces[1..].iter().flatten() {
            near3_fixing(ext, s, &[v3])?;
        }
        near3(ext, &inner, 1)?;
        need_colors(ext, u0, 4, "H_C>=1 subcase")?;
    } else {
        let strong = (1..3).find(|&i| h.faces[i].is_some_and(|s| !s.is_ear()));
        let strong = strong.ok_or_else(|| exhausted("d(u0) >= 8 with no one-hat beside the plus"))?;
        if let Some(s) = h.faces[3 - strong] {
            near3_fixing(ext, &s, &[v3])?;
        }
        near3_fixing(ext, &face(h, strong)?, &[v3, u0])?;
        near3(ext, &inner, 1)?;
    }
    need_colors(ext, q[0], 4, "H_C>=1 subcase")
}

fn case_plus(ext: &mut Extender<'_>, h: &H3) -> Result<()> {
    let [v1, v2, v3] = h.root;
    let u0 = h.u0;
    let b1 = face(h, 0)?;
    let (p_root, q) = match b1 {
        Special3::Plus(p) => (p.root, p.u),
        _ => return Err(internal!("expected a one-hat plus")),
    };
    let inner = inner_hat(&b1)?;
    let u0_at = if p_root[0] == u0 { 0 } else { 2 };
    match (h.faces[1], h.faces[2]) {
        (None, None) => {
            ext.pick_pair((u0, q[0]), &[(4, 5), (5, 4)], &[v3])?;
            ext.pick_any(q[2], PALETTE, &[v2])?;
            near3(ext, &inner, u0_at)?;
            need_colors(ext, u0, 4, "H_C>=1")?;
        }
        (Some(b2), Some(b3)) => {
            ext.set(u0, 4)?;
            ext.set(q[0], 5)?;
            ext.set(q[2], 3)?;
            near3_fixing(ext, &b2, &[v2])?;
            near3_fixing(ext, &b3, &[v3])?;
            near3(ext, &inner, 1)?;
            need_colors(ext, q[0], 4, "H_C>=1")?;
        }
        (Some(b2), None) if hat_on(&Some(b2), v2, u0) || hat_on(&Some(b2), v3, u0) => {
            ext.set(u0, 4)?;
            ext.set(q[0], 5)?;
            ext.set(q[2], 3)?;
            near3_fixing(ext, &b2, &[v2, v3])?;
            near3(ext, &inner, 1)?;
            need_colors(ext, q[0], 4, "H_C>=1")?;
        }
        (None, Some(b3)) if hat_on(&Some(b3), v3, u0) || hat_on(&Some(b3), v1, u0) => {
            let x = p_root[0];
            ext.set(u0, 4)?;
            ext.set(q[0], 5)?;
            ext.set(q[1], 3)?;
            ext.pick_any(q[2], PALETTE, &[v2])?;
            let fix: Vec<usize> = b3.root().iter().copied().filter(|&w| w != x).collect();
            near3_fixing(ext, &b3, &fix)?;
            ext.pick(q[3], &[1, 2, 4], &[x])?;
            need_colors(ext, q[0], 4, "H_C>=1")?;
        }
        _ => return Err(exhausted(h.kind())),
    }
    let _ = v1;
    Ok(())
}

fn case_h200(ext: &mut Extender<'_>, h: &H3) -> Result<()> {
    let [v1, v2, v3] = h.root;
    let (u1, u2) = (face(h, 0)?.apex(), face(h, 1)?.apex());
    if is_even4(ext, v2) {
        ext.set(h.u0, 4)?;
        ext.pick(u1, &[3, 5], &[v1])?;
        ext.pick(u2, &[1, 5], &[v3])?;
    } else if is_even4(ext, v1) {
        ext.set(h.u0, 4)?;
        ext.pick(u2, &[1, 5], &[v3])?;
        ext.pick(u1, &[3, 5], &[v2])?;
    } else if is_even4(ext, v3) {
        ext.set(h.u0, 4)?;
        ext.pick(u1, &[3, 5], &[v1])?;
        ext.pick(u2, &[1, 5], &[v2])?;
    } else {
        ext.set(h.u0, 5)?;
        ext.set(u1, 3)?;
        ext.set(u2, 1)?;
    }
    Ok(())
}

fn case_h300(ext: &mut Extender<'_>, h: &H3) -> Result<()> {
    for s in h.symmetries().into_iter().take(3) {
        if is_even4(ext, s.root[0]) {
            ext.rebase(&s.root)?;
            let [_, v2, v3] = s.root;
            ext.set(s.u0, 4)?;
            ext.set(face(&s, 0)?.apex(), 5)?;
            ext.pick(face(&s, 1)?.apex(), &[1, 5], &[v2])?;
            ext.pick(face(&s, 2)?.apex(), &[2, 5], &[v3])?;
            return need_colors(ext, s.u0, 4, "H300");
        }
    }
    ext.set(h.u0, 5)?;
    for i in 0..3 {
        ext.set(face(h, i)?.apex(), 4)?;
    }
    Ok(())
}

fn case_h120(ext: &mut Extender<'_>, h: &H3, deg_u0: usize) -> Result<()> {
    let color_rest = |ext: &mut Extender<'_>, s: &H3| -> Result<()> {
        ext.set(s.u0, 4)?;
        let b3 = face(s, 2)?;
        ext.set(b3.apex(), 5)?;
        if let Special3::OneHat(t) = b3 {
            ext.set(t.u[1], 2)?;
        }
        Ok(())
    };
    if deg_u0 == 6 {
        color_rest(ext, h)?;
        near3_fixing(ext, &face(h, 0)?, &[h.root[0], h.root[1]])?;
        near3_fixing(ext, &face(h, 1)?, &[h.root[1], h.root[2]])?;
        return need_colors(ext, h.u0, 4, "H120");
    }
    // d(u0) = 8: B1 and B2 both have their hat vertex on u0.
    let b3 = face(h, 2)?.apex();
    let mirror = orient(h, |s| s.faces[2].map(|f| f.apex()) == Some(b3) && s.root[1] == h.root[1] && s.root != h.root)
        .ok_or_else(|| internal!("H120: no mirror orientation"))?;
    let sides = [*h, mirror];
    for s in sides {
        if is_even4(ext, s.root[0]) {
            ext.rebase(&s.root)?;
            color_rest(ext, &s)?;
            near3_fixing(ext, &face(&s, 1)?, &[s.root[1], s.root[2]])?;
            near3_fixing(ext, &face(&s, 0)?, &[s.root[1], s.u0])?;
            return Ok(());
        }
    }
    let [v1, v2, v3] = h.root;
    if is_even4(ext, v2) {
        color_rest(ext, h)?;
        near3_fixing(ext, &face(h, 0)?, &[v1, h.u0])?;
        near3_fixing(ext, &face(h, 1)?, &[v3, h.u0])?;
        return Ok(());
    }
    ext.set(h.u0, 5)?;
    let mut rest = Vec::new();
    for i in 0..3 {
        let s = face(h, i)?;
        ext.set(s.apex(), 4)?;
        rest.extend(s.interior().into_iter().skip(1));
    }
    for x in rest {
        ext.pick_any(x, PALETTE, &[])?;
    }
    Ok(())
}

fn apply_frame(ext: &mut Extender<'_>, f: &Frame3) -> Result<()> {
    match f {
        Frame3::GoodHat { branch, spare, .. } => {
            let i = branch.root().iter().position(|v| v == spare).ok_or_else(|| internal!("spare not in root"))?;
            near3(ext, branch, i)?;
        }
        Frame3::HPlusSub { h, deg_u0 } => case_plus_sub(ext, h, *deg_u0)?,
        Frame3::HPlus(h) => case_plus(ext, h)?,
        Frame3::H200(h) => case_h200(ext, h)?,
        Frame3::H300(h) => case_h300(ext, h)?,
        Frame3::H110(h) => {
            let [v1, v2, v3] = h.root;
            ext.set(h.u0, 4)?;
            ext.pick(face(h, 1)?.apex(), &[1, 5], &[v3])?;
            near3_fixing(ext, &face(h, 0)?, &[v1, v2])?;
            if ext.col.count_color(ext.g, h.u0, ext.canon.actual(2)) != 1 {
                return Err(internal!("H110: color 2 is not unique around u0"));
            }
        }
        Frame3::H210(h) => {
            let [v1, v2, v3] = h.root;
            ext.set(h.u0, 4)?;
            ext.set(face(h, 1)?.apex(), 5)?;
            ext.pick(face(h, 2)?.apex(), &[2, 5], &[v3])?;
            near3_fixing(ext, &face(h, 0)?, &[v1, v2])?;
            need_colors(ext, h.u0, 4, "H210")?;
        }
        Frame3::H020(h) => {
            let [v1, v2, v3] = h.root;
            let [u1, u3] = hat_of(&face(h, 0)?)?;
            ext.set(h.u0, 4)?;
            ext.set(u1, 5)?;
            ext.pick(u3, &[3, 4], &[v1])?;
            near3_fixing(ext, &face(h, 1)?, &[v2, v3])?;
            need_colors(ext, h.u0, 4, "H020")?;
        }
        Frame3::H120 { h, deg_u0 } => case_h120(ext, h, *deg_u0)?,
        Frame3::TPlus(t) => {
            let b = t.branches[0];
            let q = plus_of(&b)?;
            let [_, _, p3] = b.root();
            ext.set(q[0], 4)?;
            ext.set(q[2], 5)?;
            near3_fixing(ext, &t.branches[1], &[p3])?;
            near3(ext, &inner_hat(&b)?, 1)?;
            need_colors(ext, q[0], 4, "T_C>=1")?;
        }
        Frame3::T200(t) => {
            ext.set(t.branches[0].apex(), 4)?;
            ext.set(t.branches[1].apex(), 4)?;
        }
        Frame3::T110(t) => {
            let [v1, v2, _] = t.branches[0].root();
            let [u0, u1] = hat_of(&t.branches[0])?;
            let c = ext.pick(u1, &[3, 4, 5], &[v1, v2])?;
            let j = if c == 4 { 5 } else { 4 };
            ext.set(u0, j)?;
            ext.set(t.branches[1].apex(), j)?;
        }
        Frame3::T020 { t, roots, same } => {
            let [u0, u1] = hat_of(&t.branches[0])?;
            let [w0, w1] = hat_of(&t.branches[1])?;
            if *same {
                ext.set(u0, 4)?;
                ext.set(w0, 4)?;
                ext.set(u1, 5)?;
                ext.set(w1, 5)?;
            } else {
                let [v1, v2, v3] = *roots;
                ext.set(u0, 4)?;
                ext.pick_where(w0, &[4, 5], |e| e.count_is_odd(v1, 4))?;
                ext.pick(w1, &[1, 4, 5], &[v3])?;
                ext.pick(u1, &[3, 5], &[v2])?;
            }
        }
    }
    Ok(())
}

/// Extends an odd coloring of `G - interior(f)` across the frame.
pub fn apply_case_3tree(g: &Graph, col: &mut PartialColoring, f: &Frame3) -> Result<CaseLevel> {
    let mut ext = Extender::new(g, col, &f.root(), PALETTE)?;
    let permutation = ext.canon.as_slice().to_vec();
    apply_frame(&mut ext, f)?;
    let mut all = f.root().to_vec();
    all.extend(f.interior());
    ext.require_odd(&all, "3-tree case")?;
    Ok(CaseLevel { case: f.tag().to_string(), config: f.to_match(), permutation, assigned: ext.assigned })
}

/// Odd 5-coloring of a 3-tree with the per-level trace.
pub fn color_3tree_traced(g: &Graph) -> Result<(Coloring, CaseTrace)> {
    recognize_ktree(g, 3)?;
    let (frames, base) = decompose_3tree(g)?;
    let mut col = PartialColoring::new(g.order());
    for (i, &v) in base.iter().enumerate() {
        col.set(v, i as u32 + 1);
    }
    let mut trace = CaseTrace { base, levels: Vec::with_capacity(frames.len()) };
    for f in frames.iter().rev() {
        trace.levels.push(apply_case_3tree(g, &mut col, f)?);
    }
    Ok((col.finish(PALETTE)?, trace))
}

/// Odd 5-coloring of a 3-tree.
pub fn color_3tree(g: &Graph) -> Result<Coloring> {
    color_3tree_traced(g).map(|(c, _)| c)
}
