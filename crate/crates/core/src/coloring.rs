//! Colorings, the odd-coloring verifier, and partial colorings used while
//! extending a coloring one vertex at a time.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{internal, Error, Result};
use crate::graph::{Graph, GraphView};

/// Total coloring with colors in `1..=palette`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<u32>,
    palette: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, palette: u32) -> Result<Coloring> {
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 || c > palette {
                return Err(Error::ColorOutOfPalette { v, color: c, palette });
            }
        }
        Ok(Coloring { colors, palette })
    }

    /// Palette is the largest color used.
    pub fn from_colors(colors: Vec<u32>) -> Result<Coloring> {
        let palette = colors.iter().copied().max().unwrap_or(0);
        Coloring::new(colors, palette)
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn distinct_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    fn check_size(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.order() {
            return Err(Error::SizeMismatch { got: self.colors.len(), n: g.order() });
        }
        Ok(())
    }
}

/// Returns the first monochromatic edge in lexicographic order, if any.
pub fn verify_proper(g: &Graph, c: &Coloring) -> Result<Option<(usize, usize)>> {
    c.check_size(g)?;
    Ok(g.edges().find(|&(u, v)| c.color(u) == c.color(v)))
}

/// Per-vertex outcome of the odd condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// Smallest color appearing an odd number of times in the neighborhood.
    Color(u32),
    /// Every color appears an even number of times.
    Fail,
    /// Isolated vertex, not subject to the condition.
    Exempt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddReport {
    pub entries: Vec<Witness>,
    pub all_odd: bool,
}

impl OddReport {
    pub fn failing(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, w)| **w == Witness::Fail)
            .map(|(v, _)| v)
            .collect()
    }
}

/// Sorted neighbor colors of `v`, ignoring uncolored (0) entries.
fn neighbor_colors<G: GraphView>(g: &G, colors: &[u32], v: usize) -> Vec<u32> {
    let mut cs: Vec<u32> = g.neighbors(v).map(|u| colors[u]).filter(|&c| c != 0).collect();
    cs.sort_unstable();
    cs
}

/// Runs of equal values in a sorted slice as `(value, count)`.
fn runs(sorted: &[u32]) -> impl Iterator<Item = (u32, usize)> + '_ {
    let mut i = 0;
    core::iter::from_fn(move || {
        if i >= sorted.len() {
            return None;
        }
        let c = sorted[i];
        let start = i;
        while i < sorted.len() && sorted[i] == c {
            i += 1;
        }
        Some((c, i - start))
    })
}

/// Smallest color with an odd number of occurrences around `v`.
pub fn odd_condition_witness(g: &Graph, c: &Coloring, v: usize) -> Option<u32> {
    let cs = neighbor_colors(g, c.colors(), v);
    let w = runs(&cs).find(|&(_, n)| n % 2 == 1).map(|(col, _)| col);
    w
}

/// Checks properness, then reports the odd condition at every vertex.
pub fn verify_odd(g: &Graph, c: &Coloring) -> Result<OddReport> {
    if let Some((u, v)) = verify_proper(g, c)? {
        return Err(Error::NotProper(u, v));
    }
    let mut entries = Vec::with_capacity(g.order());
    let mut all_odd = true;
    for v in 0..g.order() {
        if g.degree(v) == 0 {
            entries.push(Witness::Exempt);
            continue;
        }
        let cs = neighbor_colors(g, c.colors(), v);
        let total: usize = runs(&cs).map(|(_, n)| n).sum();
        if total != g.degree(v) {
            return Err(internal!("class sizes at {v} sum to {total}, degree is {}", g.degree(v)));
        }
        let w = runs(&cs).find(|&(_, n)| n % 2 == 1);
        match w {
            Some((col, _)) => entries.push(Witness::Color(col)),
            None => {
                all_odd = false;
                entries.push(Witness::Fail)
            }
        }
    }
    Ok(OddReport { entries, all_odd })
}

/// True when `c` is a proper coloring satisfying the odd condition everywhere.
pub fn is_odd_coloring(g: &Graph, c: &Coloring) -> bool {
    matches!(verify_odd(g, c), Ok(r) if r.all_odd)
}

/// Odd classes around a vertex, summarized for single-color updates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OddClasses {
    None,
    One(u32),
    Many,
}

impl OddClasses {
    /// Whether the vertex still has an odd class after one more neighbor of
    /// color `c` is added.
    pub fn survives(self, c: u32) -> bool {
        match self {
            OddClasses::None => true,
            OddClasses::One(x) => x != c,
            OddClasses::Many => true,
        }
    }

    pub fn is_odd(self) -> bool {
        self != OddClasses::None
    }
}

/// Coloring under construction; color 0 means uncolored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialColoring {
    colors: Vec<u32>,
}

impl PartialColoring {
    pub fn new(n: usize) -> Self {
        PartialColoring { colors: vec![0; n] }
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        match self.colors[v] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn is_colored(&self, v: usize) -> bool {
        self.colors[v] != 0
    }

    pub fn set(&mut self, v: usize, c: u32) {
        debug_assert!(c != 0);
        self.colors[v] = c;
    }

    pub fn unset(&mut self, v: usize) {
        self.colors[v] = 0;
    }

    pub fn raw(&self) -> &[u32] {
        &self.colors
    }

    /// Colors of colored neighbors of `v`, sorted.
    pub fn neighbor_colors<G: GraphView>(&self, g: &G, v: usize) -> Vec<u32> {
        neighbor_colors(g, &self.colors, v)
    }

    /// Whether `c` differs from every colored neighbor of `v`.
    pub fn proper_at<G: GraphView>(&self, g: &G, v: usize, c: u32) -> bool {
        g.neighbors(v).all(|u| self.colors[u] != c)
    }

    /// Odd classes among the colored neighbors of `v`.
    pub fn odd_classes<G: GraphView>(&self, g: &G, v: usize) -> OddClasses {
        let cs = self.neighbor_colors(g, v);
        let mut found = OddClasses::None;
        for (col, n) in runs(&cs) {
            if n % 2 == 1 {
                if found != OddClasses::None {
                    return OddClasses::Many;
                }
                found = OddClasses::One(col);
            }
        }
        found
    }

    pub fn has_odd<G: GraphView>(&self, g: &G, v: usize) -> bool {
        self.odd_classes(g, v).is_odd()
    }

    /// Number of colored neighbors of `v` with color `c`.
    pub fn count_color<G: GraphView>(&self, g: &G, v: usize, c: u32) -> usize {
        g.neighbors(v).filter(|&u| self.colors[u] == c).count()
    }

    /// Converts to a total coloring; fails if some vertex is uncolored.
    pub fn finish(self, palette: u32) -> Result<Coloring> {
        if let Some(v) = self.colors.iter().position(|&c| c == 0) {
            return Err(internal!("vertex {v} left uncolored"));
        }
        Coloring::new(self.colors, palette)
    }
}
