//! Shared machinery for the case recipes: canonical palettes and
//! parity-filtered color picks on a partial coloring.

use alloc::vec::Vec;

use crate::coloring::PartialColoring;
use crate::error::{internal, Result};
use crate::graph::Graph;

/// Canonical color `i` (1-based) maps to `map[i - 1]`.
///
/// The first entries are the colors of the given root vertices in order and
/// the rest are the unused palette colors in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canon {
    map: Vec<u32>,
}

impl Canon {
    pub fn from_roots(col: &PartialColoring, roots: &[usize], palette: u32) -> Result<Canon> {
        let mut map = Vec::with_capacity(palette as usize);
        for &r in roots {
            let c = col.get(r).ok_or_else(|| internal!("root vertex {r} is uncolored"))?;
            if map.contains(&c) {
                return Err(internal!("root vertices share color {c}"));
            }
            map.push(c);
        }
        for c in 1..=palette {
            if !map.contains(&c) {
                map.push(c);
            }
        }
        if map.len() != palette as usize {
            return Err(internal!("root colors exceed the palette"));
        }
        Ok(Canon { map })
    }

    pub fn actual(&self, c: u32) -> u32 {
        self.map[c as usize - 1]
    }

    pub fn canonical(&self, actual: u32) -> u32 {
        self.map.iter().position(|&x| x == actual).map(|i| i as u32 + 1).unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.map
    }

    pub fn palette(&self) -> u32 {
        self.map.len() as u32
    }
}

/// Applies a recipe to a partial coloring, recording every assignment.
pub struct Extender<'a> {
    pub g: &'a Graph,
    pub col: &'a mut PartialColoring,
    pub canon: Canon,
    pub assigned: Vec<(usize, u32)>,
}

impl<'a> Extender<'a> {
    pub fn new(g: &'a Graph, col: &'a mut PartialColoring, roots: &[usize], palette: u32) -> Result<Self> {
        let canon = Canon::from_roots(col, roots, palette)?;
        Ok(Extender { g, col, canon, assigned: Vec::new() })
    }

    /// Switches to the canonical palette of `roots`, returning the old one.
    pub fn rebase(&mut self, roots: &[usize]) -> Result<Canon> {
        let next = Canon::from_roots(self.col, roots, self.canon.palette())?;
        Ok(core::mem::replace(&mut self.canon, next))
    }

    /// Canonical color of a colored vertex.
    pub fn canon_of(&self, v: usize) -> u32 {
        self.col.get(v).map(|c| self.canon.canonical(c)).unwrap_or(0)
    }

    fn try_set(&mut self, x: usize, c: u32) -> bool {
        let a = self.canon.actual(c);
        if self.col.is_colored(x) || !self.col.proper_at(self.g, x, a) {
            return false;
        }
        self.col.set(x, a);
        true
    }

    /// Assigns canonical color `c` to `x`, which must be proper.
    pub fn set(&mut self, x: usize, c: u32) -> Result<()> {
        if !self.try_set(x, c) {
            return Err(internal!("prescribed color {c} is not available at {x}"));
        }
        self.assigned.push((x, self.canon.actual(c)));
        Ok(())
    }

    /// First color of `choices` (canonical) that is proper at `x` and leaves
    /// every vertex of `fix` with an odd class.
    pub fn pick(&mut self, x: usize, choices: &[u32], fix: &[usize]) -> Result<u32> {
        for &c in choices {
            if self.try_set(x, c) {
                if fix.iter().all(|&y| self.col.has_odd(self.g, y)) {
                    self.assigned.push((x, self.canon.actual(c)));
                    return Ok(c);
                }
                self.col.unset(x);
            }
        }
        Err(internal!("no color in {choices:?} works at {x} fixing {fix:?}"))
    }

    /// First color of `choices` that is proper at `x` and satisfies `ok`
    /// once assigned.
    pub fn pick_where(&mut self, x: usize, choices: &[u32], ok: impl Fn(&Self) -> bool) -> Result<u32> {
        for &c in choices {
            if self.try_set(x, c) {
                if ok(self) {
                    self.assigned.push((x, self.canon.actual(c)));
                    return Ok(c);
                }
                self.col.unset(x);
            }
        }
        Err(internal!("no color in {choices:?} meets the condition at {x}"))
    }

    /// Like [`Extender::pick`] for two vertices colored together.
    pub fn pick_pair(&mut self, xs: (usize, usize), choices: &[(u32, u32)], fix: &[usize]) -> Result<(u32, u32)> {
        for &(a, b) in choices {
            if self.try_set(xs.0, a) {
                if self.try_set(xs.1, b) {
                    if fix.iter().all(|&y| self.col.has_odd(self.g, y)) {
                        self.assigned.push((xs.0, self.canon.actual(a)));
                        self.assigned.push((xs.1, self.canon.actual(b)));
                        return Ok((a, b));
                    }
                    self.col.unset(xs.1);
                }
                self.col.unset(xs.0);
            }
        }
        Err(internal!("no pair in {choices:?} works at {xs:?} fixing {fix:?}"))
    }

    /// Smallest canonical color proper at `x` that fixes `fix`.
    pub fn pick_any(&mut self, x: usize, palette: u32, fix: &[usize]) -> Result<u32> {
        let all: Vec<u32> = (1..=palette).collect();
        self.pick(x, &all, fix)
    }

    /// Parity of canonical color `c` among colored neighbors of `v`.
    pub fn count_is_odd(&self, v: usize, c: u32) -> bool {
        self.col.count_color(self.g, v, self.canon.actual(c)) % 2 == 1
    }

    /// Errors unless every vertex of `vs` has an odd class.
    pub fn require_odd(&self, vs: &[usize], what: &str) -> Result<()> {
        for &v in vs {
            if !self.col.has_odd(self.g, v) {
                return Err(internal!("{what}: vertex {v} fails the odd condition"));
            }
        }
        Ok(())
    }

    /// Number of distinct canonical colors on colored neighbors of `v`.
    pub fn distinct_around(&self, v: usize) -> usize {
        let mut cs = self.col.neighbor_colors(self.g, v);
        cs.dedup();
        cs.len()
    }
}

/// One reduction level of the 2- and 3-tree constructions, as replayed.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CaseLevel {
    pub case: alloc::string::String,
    pub config: crate::branch::ConfigMatch,
    /// Canonical color `i` is `permutation[i - 1]`.
    pub permutation: Vec<u32>,
    /// `(vertex, actual color)` in assignment order.
    pub assigned: Vec<(usize, u32)>,
}

/// Full record of a 2- or 3-tree coloring run.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CaseTrace {
    /// Vertices colored all-distinct at the bottom of the recursion.
    pub base: Vec<usize>,
    /// Levels in replay order (innermost first).
    pub levels: Vec<CaseLevel>,
}
