//! Special branches (ears, hats, double hats, one-hats, one-hat pluses), the
//! H- and T-families built from them, and their serializable form.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use super::{branch_interior_capped, Branch};
use crate::graph::GraphView;

/// Why a candidate failed to match; the first failed condition.
pub type Mismatch = &'static str;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConfigKind {
    Ear2,
    Hat,
    DoubleHat,
    Ear3,
    OneHat,
    OneHatPlus,
    H2(u8, u8, u8),
    T2(u8, u8, u8),
    H3(u8, u8, u8),
    T3(u8, u8, u8),
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigKind::Ear2 => write!(f, "EAR2"),
            ConfigKind::Hat => write!(f, "HAT"),
            ConfigKind::DoubleHat => write!(f, "DOUBLE_HAT"),
            ConfigKind::Ear3 => write!(f, "EAR3"),
            ConfigKind::OneHat => write!(f, "ONE_HAT"),
            ConfigKind::OneHatPlus => write!(f, "ONE_HAT_PLUS"),
            ConfigKind::H2(a, b, c) => write!(f, "H2({a},{b},{c})"),
            ConfigKind::T2(a, b, c) => write!(f, "T2({a},{b},{c})"),
            ConfigKind::H3(a, b, c) => write!(f, "H3({a},{b},{c})"),
            ConfigKind::T3(a, b, c) => write!(f, "T3({a},{b},{c})"),
        }
    }
}

/// A located configuration with named vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigMatch {
    pub kind: ConfigKind,
    pub root: Vec<usize>,
    pub labels: BTreeMap<String, usize>,
    /// Sub-branches of H- and T-family members.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<ConfigMatch>,
}

impl ConfigMatch {
    fn new(kind: ConfigKind, root: &[usize], names: &[&str], ids: &[usize]) -> Self {
        let labels = names.iter().map(|s| s.to_string()).zip(ids.iter().copied()).collect();
        ConfigMatch { kind, root: root.to_vec(), labels, parts: Vec::new() }
    }

    pub fn label(&self, role: &str) -> Option<usize> {
        self.labels.get(role).copied()
    }

    /// All vertices named by this match and its parts.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.labels.values().copied().collect();
        for p in &self.parts {
            v.extend(p.vertices());
        }
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Re-reads the configuration from the graph and checks every defining
    /// neighborhood.
    pub fn validate<G: GraphView>(&self, g: &G) -> Result<(), String> {
        let l = |r: &str| self.label(r).ok_or_else(|| format!("missing label {r}"));
        let err = |m: Mismatch| format!("{}: {m}", self.kind);
        match self.kind {
            ConfigKind::Ear2 | ConfigKind::Hat | ConfigKind::DoubleHat => {
                let s = classify2(g, l("v1")?, l("v2")?, l("u0")?).map_err(err)?;
                if s.to_match() != *self {
                    return Err(format!("{}: labels differ from the graph", self.kind));
                }
            }
            ConfigKind::Ear3 | ConfigKind::OneHat | ConfigKind::OneHatPlus => {
                let s = classify3(g, [l("v1")?, l("v2")?, l("v3")?], l("u0")?).map_err(err)?;
                if s.to_match() != *self {
                    return Err(format!("{}: labels differ from the graph", self.kind));
                }
            }
            ConfigKind::H2(..) => {
                let h = classify_h2(g, [l("v1")?, l("v2")?], l("u0")?).map_err(err)?;
                if h.to_match() != *self {
                    return Err(format!("{}: labels differ from the graph", self.kind));
                }
            }
            ConfigKind::H3(..) => {
                let h = classify_h3(g, [l("v1")?, l("v2")?, l("v3")?], l("u0")?).map_err(err)?;
                if h.to_match() != *self {
                    return Err(format!("{}: labels differ from the graph", self.kind));
                }
            }
            ConfigKind::T2(..) => {
                let t = classify_t2(g, [l("v1")?, l("v2")?], l("u0")?, l("w0")?).map_err(err)?;
                if t.to_match() != *self {
                    return Err(format!("{}: labels differ from the graph", self.kind));
                }
            }
            ConfigKind::T3(..) => {
                let t = classify_t3(g, [l("v1")?, l("v2")?, l("v3")?], l("u0")?, l("w0")?).map_err(err)?;
                if t.to_match() != *self {
                    return Err(format!("{}: labels differ from the graph", self.kind));
                }
            }
        }
        for p in &self.parts {
            p.validate(g)?;
        }
        Ok(())
    }
}

impl fmt::Display for ConfigMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} root={:?}", self.kind, self.root)?;
        for (k, v) in &self.labels {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

/// Classification outcome for a branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Match(ConfigMatch),
    Other(Mismatch),
}

fn exact<G: GraphView>(g: &G, v: usize, nb: &[usize]) -> bool {
    g.degree(v) == nb.len() && nb.iter().all(|&u| u != v && g.has_edge(v, u))
}

fn distinct(ids: &[usize]) -> bool {
    ids.iter().enumerate().all(|(i, a)| !ids[i + 1..].contains(a))
}

/// Common neighbors of `a` and `b`, minus `excl`.
fn common<G: GraphView>(g: &G, a: usize, b: usize, excl: &[usize]) -> Vec<usize> {
    let (x, y) = if g.degree(a) <= g.degree(b) { (a, b) } else { (b, a) };
    g.neighbors(x).filter(|&u| !excl.contains(&u) && g.has_edge(u, y)).collect()
}

fn one(v: Vec<usize>, what: Mismatch) -> Result<usize, Mismatch> {
    if v.len() == 1 { Ok(v[0]) } else { Err(what) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ear2 {
    pub root: [usize; 2],
    pub u0: usize,
}

/// `u[0]` is the apex, `u[1]` hangs off `root[0]`, `u[2]` off `root[1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Hat2 {
    pub root: [usize; 2],
    pub u: [usize; 3],
}

/// Labels `u[0..7]` follow the standard double-hat drawing: `u1` on the
/// `root[0]` side, `u2` on the `root[1]` side, `u3,u4` hanging off `u1`,
/// `u5,u6` off `u2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DoubleHat2 {
    pub root: [usize; 2],
    pub u: [usize; 7],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Special2 {
    Ear(Ear2),
    Hat(Hat2),
    DoubleHat(DoubleHat2),
}

impl Special2 {
    pub fn root(&self) -> [usize; 2] {
        match self {
            Special2::Ear(e) => e.root,
            Special2::Hat(h) => h.root,
            Special2::DoubleHat(d) => d.root,
        }
    }

    pub fn apex(&self) -> usize {
        match self {
            Special2::Ear(e) => e.u0,
            Special2::Hat(h) => h.u[0],
            Special2::DoubleHat(d) => d.u[0],
        }
    }

    pub fn interior(&self) -> Vec<usize> {
        match self {
            Special2::Ear(e) => vec![e.u0],
            Special2::Hat(h) => h.u.to_vec(),
            Special2::DoubleHat(d) => d.u.to_vec(),
        }
    }

    pub fn kind(&self) -> ConfigKind {
        match self {
            Special2::Ear(_) => ConfigKind::Ear2,
            Special2::Hat(_) => ConfigKind::Hat,
            Special2::DoubleHat(_) => ConfigKind::DoubleHat,
        }
    }

    /// 0 for ears, 1 for hats, 2 for double hats.
    pub fn slot(&self) -> usize {
        match self {
            Special2::Ear(_) => 0,
            Special2::Hat(_) => 1,
            Special2::DoubleHat(_) => 2,
        }
    }

    /// Same branch with the two root vertices exchanged.
    pub fn swapped(&self) -> Special2 {
        match *self {
            Special2::Ear(e) => Special2::Ear(Ear2 { root: [e.root[1], e.root[0]], u0: e.u0 }),
            Special2::Hat(h) => Special2::Hat(Hat2 { root: [h.root[1], h.root[0]], u: [h.u[0], h.u[2], h.u[1]] }),
            Special2::DoubleHat(d) => {
                let u = d.u;
                Special2::DoubleHat(DoubleHat2 {
                    root: [d.root[1], d.root[0]],
                    u: [u[0], u[2], u[1], u[6], u[5], u[4], u[3]],
                })
            }
        }
    }

    /// Orients the branch so that `first` is `root[0]`.
    pub fn oriented(&self, first: usize) -> Special2 {
        if self.root()[0] == first { *self } else { self.swapped() }
    }

    pub fn to_match(&self) -> ConfigMatch {
        let r = self.root();
        match self {
            Special2::Ear(e) => ConfigMatch::new(ConfigKind::Ear2, &r, &["v1", "v2", "u0"], &[r[0], r[1], e.u0]),
            Special2::Hat(h) => ConfigMatch::new(
                ConfigKind::Hat,
                &r,
                &["v1", "v2", "u0", "u1", "u2"],
                &[r[0], r[1], h.u[0], h.u[1], h.u[2]],
            ),
            Special2::DoubleHat(d) => {
                let mut ids = vec![r[0], r[1]];
                ids.extend_from_slice(&d.u);
                ConfigMatch::new(
                    ConfigKind::DoubleHat,
                    &r,
                    &["v1", "v2", "u0", "u1", "u2", "u3", "u4", "u5", "u6"],
                    &ids,
                )
            }
        }
    }
}

/// Classifies `B({p, q}, a)` as an ear, hat or double hat with `root = [p, q]`.
pub fn classify2<G: GraphView>(g: &G, p: usize, q: usize, a: usize) -> Result<Special2, Mismatch> {
    if !distinct(&[p, q, a]) || !g.is_clique(&[p, q, a]) {
        return Err("root and apex do not form a triangle");
    }
    match g.degree(a) {
        2 => Ok(Special2::Ear(Ear2 { root: [p, q], u0: a })),
        4 => {
            let x = one(common(g, a, p, &[q]), "apex has no unique second neighbor on the first side")?;
            let y = one(common(g, a, q, &[p]), "apex has no unique second neighbor on the second side")?;
            if !distinct(&[p, q, a, x, y]) {
                return Err("hat labels collide");
            }
            if !exact(g, a, &[p, q, x, y]) || !exact(g, x, &[p, a]) || !exact(g, y, &[q, a]) {
                return Err("hat neighborhoods differ");
            }
            Ok(Special2::Hat(Hat2 { root: [p, q], u: [a, x, y] }))
        }
        6 => {
            let u1 = one(common(g, a, p, &[q]), "apex has no unique second neighbor on the first side")?;
            let u2 = one(common(g, a, q, &[p]), "apex has no unique second neighbor on the second side")?;
            let u4 = one(common(g, a, u1, &[p]), "no unique vertex on edge u0u1")?;
            let u5 = one(common(g, a, u2, &[q]), "no unique vertex on edge u0u2")?;
            let u3 = one(common(g, p, u1, &[a]), "no unique vertex on edge v1u1")?;
            let u6 = one(common(g, q, u2, &[a]), "no unique vertex on edge v2u2")?;
            let u = [a, u1, u2, u3, u4, u5, u6];
            if !distinct(&[p, q, a, u1, u2, u3, u4, u5, u6]) {
                return Err("double hat labels collide");
            }
            let ok = exact(g, a, &[p, q, u1, u2, u4, u5])
                && exact(g, u1, &[p, a, u3, u4])
                && exact(g, u2, &[q, a, u5, u6])
                && exact(g, u3, &[p, u1])
                && exact(g, u4, &[a, u1])
                && exact(g, u5, &[a, u2])
                && exact(g, u6, &[q, u2]);
            if !ok {
                return Err("double hat neighborhoods differ");
            }
            Ok(Special2::DoubleHat(DoubleHat2 { root: [p, q], u }))
        }
        _ => Err("apex degree is not 2, 4 or 6"),
    }
}

/// Branch `B({v1, v2}, u0)` of the H-family; `sides[i]` is the special
/// branch rooted at `[root[i], u0]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct H2 {
    pub root: [usize; 2],
    pub u0: usize,
    pub sides: [Option<Special2>; 2],
}

impl H2 {
    pub fn counts(&self) -> (u8, u8, u8) {
        counts(self.sides.iter().flatten().map(|s| s.slot()))
    }

    pub fn kind(&self) -> ConfigKind {
        let (a, b, c) = self.counts();
        ConfigKind::H2(a, b, c)
    }

    /// Same configuration with `v1` and `v2` exchanged.
    pub fn swapped(&self) -> H2 {
        H2 { root: [self.root[1], self.root[0]], u0: self.u0, sides: [self.sides[1], self.sides[0]] }
    }

    pub fn interior(&self) -> Vec<usize> {
        let mut v = vec![self.u0];
        for s in self.sides.iter().flatten() {
            v.extend(s.interior());
        }
        v
    }

    pub fn to_match(&self) -> ConfigMatch {
        let mut m = ConfigMatch::new(self.kind(), &self.root, &["v1", "v2", "u0"], &[self.root[0], self.root[1], self.u0]);
        for (i, s) in self.sides.iter().enumerate() {
            if let Some(s) = s {
                m.labels.insert(format!("u{}", i + 1), s.apex());
                m.parts.push(s.to_match());
            }
        }
        m
    }
}

fn counts(slots: impl Iterator<Item = usize>) -> (u8, u8, u8) {
    let mut c = [0u8; 3];
    for s in slots {
        c[s] += 1;
    }
    (c[0], c[1], c[2])
}

fn branch_size_is<G: GraphView>(g: &G, root: &[usize], apex: usize, interior: usize) -> bool {
    branch_interior_capped(g, root, apex, interior + 1).len() == interior
}

/// Checks membership of `B({v1, v2}, u0)` in the H-family.
pub fn classify_h2<G: GraphView>(g: &G, root: [usize; 2], u0: usize) -> Result<H2, Mismatch> {
    let [v1, v2] = root;
    if !distinct(&[v1, v2, u0]) || !g.is_clique(&[v1, v2, u0]) {
        return Err("root and apex do not form a triangle");
    }
    let mut sides = [None, None];
    for (i, (p, q)) in [(v1, v2), (v2, v1)].into_iter().enumerate() {
        let s = common(g, u0, p, &[q]);
        match s.len() {
            0 => {}
            1 => sides[i] = Some(classify2(g, p, u0, s[0])?),
            _ => return Err("apex and a root vertex share more than two neighbors"),
        }
    }
    if sides.iter().all(|s| s.is_none()) {
        return Err("no side branch");
    }
    let h = H2 { root, u0, sides };
    if !branch_size_is(g, &root, u0, h.interior().len()) {
        return Err("branch has vertices outside its side branches");
    }
    Ok(h)
}

/// Two special branches sharing the root edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct T2 {
    pub root: [usize; 2],
    pub branches: [Special2; 2],
}

impl T2 {
    pub fn counts(&self) -> (u8, u8, u8) {
        counts(self.branches.iter().map(|s| s.slot()))
    }

    pub fn kind(&self) -> ConfigKind {
        let (a, b, c) = self.counts();
        ConfigKind::T2(a, b, c)
    }

    pub fn interior(&self) -> Vec<usize> {
        let mut v = self.branches[0].interior();
        v.extend(self.branches[1].interior());
        v
    }

    pub fn to_match(&self) -> ConfigMatch {
        let ids = [self.root[0], self.root[1], self.branches[0].apex(), self.branches[1].apex()];
        let mut m = ConfigMatch::new(self.kind(), &self.root, &["v1", "v2", "u0", "w0"], &ids);
        m.parts = self.branches.iter().map(|b| b.to_match()).collect();
        m
    }
}

pub fn classify_t2<G: GraphView>(g: &G, root: [usize; 2], u0: usize, w0: usize) -> Result<T2, Mismatch> {
    if u0 == w0 {
        return Err("the two apexes coincide");
    }
    let a = classify2(g, root[0], root[1], u0)?;
    let b = classify2(g, root[0], root[1], w0)?;
    let ia = a.interior();
    if b.interior().iter().any(|x| ia.iter().any(|&y| y == *x || g.has_edge(*x, y))) {
        return Err("the two branches overlap");
    }
    Ok(T2 { root, branches: [a, b] })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ear3 {
    pub root: [usize; 3],
    pub u0: usize,
}

/// `u[0]` is the apex and `u[1]` is adjacent to `root[0]`, `root[1]`, `u[0]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OneHat {
    pub root: [usize; 3],
    pub u: [usize; 2],
}

/// Standard labels: `N(u0) = root ∪ {u1,u2,u3}`, `N(u1) = {r0,r1,u0,u3}`,
/// `N(u2) = {r1,r2,u0}`, `N(u3) = {r0,u0,u1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OneHatPlus {
    pub root: [usize; 3],
    pub u: [usize; 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Special3 {
    Ear(Ear3),
    OneHat(OneHat),
    Plus(OneHatPlus),
}

impl Special3 {
    pub fn root(&self) -> [usize; 3] {
        match self {
            Special3::Ear(e) => e.root,
            Special3::OneHat(h) => h.root,
            Special3::Plus(p) => p.root,
        }
    }

    pub fn apex(&self) -> usize {
        match self {
            Special3::Ear(e) => e.u0,
            Special3::OneHat(h) => h.u[0],
            Special3::Plus(p) => p.u[0],
        }
    }

    pub fn interior(&self) -> Vec<usize> {
        match self {
            Special3::Ear(e) => vec![e.u0],
            Special3::OneHat(h) => h.u.to_vec(),
            Special3::Plus(p) => p.u.to_vec(),
        }
    }

    pub fn kind(&self) -> ConfigKind {
        match self {
            Special3::Ear(_) => ConfigKind::Ear3,
            Special3::OneHat(_) => ConfigKind::OneHat,
            Special3::Plus(_) => ConfigKind::OneHatPlus,
        }
    }

    pub fn slot(&self) -> usize {
        match self {
            Special3::Ear(_) => 0,
            Special3::OneHat(_) => 1,
            Special3::Plus(_) => 2,
        }
    }

    pub fn is_ear(&self) -> bool {
        matches!(self, Special3::Ear(_))
    }

    /// The root order [`classify3`] would produce when given `order`, a
    /// permutation of the root.
    pub fn rerooted(&self, order: [usize; 3]) -> Special3 {
        match *self {
            Special3::Ear(e) => Special3::Ear(Ear3 { root: order, u0: e.u0 }),
            Special3::OneHat(h) => {
                let mut root = [h.root[2]; 3];
                let mut i = 0;
                for v in order.into_iter().filter(|&v| v != h.root[2]) {
                    root[i] = v;
                    i += 1;
                }
                Special3::OneHat(OneHat { root, u: h.u })
            }
            Special3::Plus(p) => Special3::Plus(p),
        }
    }

    pub fn to_match(&self) -> ConfigMatch {
        let r = self.root();
        match self {
            Special3::Ear(e) => ConfigMatch::new(ConfigKind::Ear3, &r, &["v1", "v2", "v3", "u0"], &[r[0], r[1], r[2], e.u0]),
            Special3::OneHat(h) => ConfigMatch::new(
                ConfigKind::OneHat,
                &r,
                &["v1", "v2", "v3", "u0", "u1"],
                &[r[0], r[1], r[2], h.u[0], h.u[1]],
            ),
            Special3::Plus(p) => ConfigMatch::new(
                ConfigKind::OneHatPlus,
                &r,
                &["v1", "v2", "v3", "u0", "u1", "u2", "u3"],
                &[r[0], r[1], r[2], p.u[0], p.u[1], p.u[2], p.u[3]],
            ),
        }
    }
}

const PERMS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Classifies `B(root, x)` as an ear, one-hat or one-hat plus.
///
/// Ears keep the given root order. One-hats list the two root vertices
/// adjacent to the hat vertex first (in their given relative order). One-hat
/// pluses use the unique standard labeling.
pub fn classify3<G: GraphView>(g: &G, root: [usize; 3], x: usize) -> Result<Special3, Mismatch> {
    let [a, b, c] = root;
    if !distinct(&[a, b, c, x]) || !g.is_clique(&[a, b, c, x]) {
        return Err("root and apex do not form a K4");
    }
    let extra: Vec<usize> = g.neighbors(x).filter(|u| !root.contains(u)).collect();
    match g.degree(x) {
        3 => Ok(Special3::Ear(Ear3 { root, u0: x })),
        4 => {
            let y = extra[0];
            if g.degree(y) != 3 || !g.has_edge(x, y) {
                return Err("hat vertex does not have degree 3");
            }
            let adj: Vec<usize> = root.iter().copied().filter(|&r| g.has_edge(r, y)).collect();
            if adj.len() != 2 {
                return Err("hat vertex is not adjacent to exactly two root vertices");
            }
            let missing = root.iter().copied().find(|r| !adj.contains(r)).unwrap_or(c);
            Ok(Special3::OneHat(OneHat { root: [adj[0], adj[1], missing], u: [x, y] }))
        }
        6 => {
            for rp in PERMS3 {
                let [p1, p2, p3] = [root[rp[0]], root[rp[1]], root[rp[2]]];
                for ip in PERMS3 {
                    let [q1, q2, q3] = [extra[ip[0]], extra[ip[1]], extra[ip[2]]];
                    if exact(g, q1, &[p1, p2, x, q3]) && exact(g, q2, &[p2, p3, x]) && exact(g, q3, &[p1, x, q1]) {
                        return Ok(Special3::Plus(OneHatPlus { root: [p1, p2, p3], u: [x, q1, q2, q3] }));
                    }
                }
            }
            Err("one-hat plus neighborhoods differ")
        }
        _ => Err("apex degree is not 3, 4 or 6"),
    }
}

/// Branch `B({v1, v2, v3}, u0)` of the 3-tree H-family. `faces[i]` is the
/// special branch on the face `{root[i], root[i+1], u0}` (indices mod 3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct H3 {
    pub root: [usize; 3],
    pub u0: usize,
    pub faces: [Option<Special3>; 3],
}

impl H3 {
    pub fn counts(&self) -> (u8, u8, u8) {
        counts(self.faces.iter().flatten().map(|s| s.slot()))
    }

    pub fn kind(&self) -> ConfigKind {
        let (a, b, c) = self.counts();
        ConfigKind::H3(a, b, c)
    }

    /// Same branch with faces re-rooted to match `root`.
    fn relabeled(&self, root: [usize; 3], faces: [Option<Special3>; 3]) -> H3 {
        let mut out = H3 { root, u0: self.u0, faces };
        for (i, f) in out.faces.iter_mut().enumerate() {
            *f = f.map(|s| s.rerooted([root[i], root[(i + 1) % 3], self.u0]));
        }
        out
    }

    /// `(v1, v2, v3) -> (v2, v3, v1)`.
    pub fn rotated(&self) -> H3 {
        let [a, b, c] = self.root;
        let [f0, f1, f2] = self.faces;
        self.relabeled([b, c, a], [f1, f2, f0])
    }

    /// `(v1, v2, v3) -> (v2, v1, v3)`.
    pub fn reflected(&self) -> H3 {
        let [a, b, c] = self.root;
        let [f0, f1, f2] = self.faces;
        self.relabeled([b, a, c], [f0, f2, f1])
    }

    /// All six relabelings of the root.
    pub fn symmetries(&self) -> [H3; 6] {
        let r0 = *self;
        let r1 = r0.rotated();
        let r2 = r1.rotated();
        [r0, r1, r2, r0.reflected(), r1.reflected(), r2.reflected()]
    }

    pub fn interior(&self) -> Vec<usize> {
        let mut v = vec![self.u0];
        for s in self.faces.iter().flatten() {
            v.extend(s.interior());
        }
        v
    }

    pub fn to_match(&self) -> ConfigMatch {
        let r = self.root;
        let mut m = ConfigMatch::new(self.kind(), &r, &["v1", "v2", "v3", "u0"], &[r[0], r[1], r[2], self.u0]);
        for (i, f) in self.faces.iter().enumerate() {
            if let Some(f) = f {
                m.labels.insert(format!("u{}", i + 1), f.apex());
                m.parts.push(f.to_match());
            }
        }
        m
    }
}

/// Checks membership of `B(root, u0)` in the 3-tree H-family.
pub fn classify_h3<G: GraphView>(g: &G, root: [usize; 3], u0: usize) -> Result<H3, Mismatch> {
    if !distinct(&[root[0], root[1], root[2], u0]) || !g.is_clique(&[root[0], root[1], root[2], u0]) {
        return Err("root and apex do not form a K4");
    }
    let mut faces = [None; 3];
    for (i, face) in faces.iter_mut().enumerate() {
        let (p, q, t) = (root[i], root[(i + 1) % 3], root[(i + 2) % 3]);
        let s: Vec<usize> = common(g, u0, p, &[q, t]).into_iter().filter(|&w| g.has_edge(w, q)).collect();
        match s.len() {
            0 => {}
            1 => *face = Some(classify3(g, [p, q, u0], s[0])?),
            _ => return Err("a face carries more than one branch"),
        }
    }
    if faces.iter().all(|f| f.is_none()) {
        return Err("no face branch");
    }
    let h = H3 { root, u0, faces };
    if !branch_size_is(g, &root, u0, h.interior().len()) {
        return Err("branch has vertices outside its face branches");
    }
    Ok(h)
}

/// Two special branches sharing a root triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct T3 {
    pub root: [usize; 3],
    pub branches: [Special3; 2],
}

impl T3 {
    pub fn counts(&self) -> (u8, u8, u8) {
        counts(self.branches.iter().map(|s| s.slot()))
    }

    pub fn kind(&self) -> ConfigKind {
        let (a, b, c) = self.counts();
        ConfigKind::T3(a, b, c)
    }

    pub fn interior(&self) -> Vec<usize> {
        let mut v = self.branches[0].interior();
        v.extend(self.branches[1].interior());
        v
    }

    pub fn to_match(&self) -> ConfigMatch {
        let r = self.root;
        let ids = [r[0], r[1], r[2], self.branches[0].apex(), self.branches[1].apex()];
        let mut m = ConfigMatch::new(self.kind(), &r, &["v1", "v2", "v3", "u0", "w0"], &ids);
        m.parts = self.branches.iter().map(|b| b.to_match()).collect();
        m
    }
}

pub fn classify_t3<G: GraphView>(g: &G, root: [usize; 3], u0: usize, w0: usize) -> Result<T3, Mismatch> {
    if u0 == w0 {
        return Err("the two apexes coincide");
    }
    let a = classify3(g, root, u0)?;
    let b = classify3(g, root, w0)?;
    let ia = a.interior();
    if b.interior().iter().any(|x| ia.iter().any(|&y| y == *x || g.has_edge(*x, y))) {
        return Err("the two branches overlap");
    }
    Ok(T3 { root, branches: [a, b] })
}

/// Classifies a branch with a 2-vertex root.
pub fn classify_branch_2tree<G: GraphView>(g: &G, b: &Branch) -> Classification {
    if b.root.len() != 2 {
        return Classification::Other("root does not have two vertices");
    }
    if !matches!(b.interior.len(), 1 | 3 | 7) {
        return Classification::Other("interior size is not 1, 3 or 7");
    }
    match classify2(g, b.root[0], b.root[1], b.apex) {
        Ok(s) if s.interior().len() == b.interior.len() => Classification::Match(s.to_match()),
        Ok(_) => Classification::Other("interior size disagrees with the configuration"),
        Err(m) => Classification::Other(m),
    }
}

/// Classifies a branch with a 3-vertex root.
pub fn classify_branch_3tree<G: GraphView>(g: &G, b: &Branch) -> Classification {
    if b.root.len() != 3 {
        return Classification::Other("root does not have three vertices");
    }
    if !matches!(b.interior.len(), 1 | 2 | 4) {
        return Classification::Other("interior size is not 1, 2 or 4");
    }
    match classify3(g, [b.root[0], b.root[1], b.root[2]], b.apex) {
        Ok(s) if s.interior().len() == b.interior.len() => Classification::Match(s.to_match()),
        Ok(_) => Classification::Other("interior size disagrees with the configuration"),
        Err(m) => Classification::Other(m),
    }
}
