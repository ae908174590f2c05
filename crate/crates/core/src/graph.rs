//! Simple undirected graphs, induced-subgraph views, k-tree recognition and
//! addition orderings.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{internal, Error, Result};

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

/// Result of [`build_graph`]: the graph and how many duplicate edges were dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuiltGraph {
    pub graph: Graph,
    pub duplicates: usize,
}

impl BuiltGraph {
    pub fn had_duplicates(&self) -> bool {
        self.duplicates > 0
    }
}

/// Builds a canonical graph from an edge list, collapsing duplicate edges.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<BuiltGraph> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        for id in [u, v] {
            if id >= n {
                return Err(Error::OutOfRange { id, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut twice = 0;
    let mut raw = 0;
    for list in adj.iter_mut() {
        raw += list.len();
        list.sort_unstable();
        list.dedup();
        twice += list.len();
    }
    Ok(BuiltGraph {
        graph: Graph { adj, edges: twice / 2 },
        duplicates: (raw - twice) / 2,
    })
}

impl Graph {
    /// Convenience wrapper around [`build_graph`] that ignores duplicates.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        build_graph(n, edges).map(|b| b.graph)
    }

    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n], edges: 0 }
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph { adj, edges: n * n.saturating_sub(1) / 2 }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices`, relabeled to `0..vertices.len()` in
    /// the given order. Returns the graph and the map new id -> old id.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = local[u];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(vertices.len(), &edges).expect("induced edges are valid");
        (g, vertices.to_vec())
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.order(), &edges).expect("permutation keeps edges valid")
    }
}

/// Read access shared by [`Graph`] and [`Subgraph`]. Vertex ids always refer
/// to the underlying graph.
pub trait GraphView {
    /// Exclusive upper bound on vertex ids.
    fn capacity(&self) -> usize;
    fn contains(&self, v: usize) -> bool;
    /// Number of vertices present.
    fn order(&self) -> usize;
    fn degree(&self, v: usize) -> usize;
    fn has_edge(&self, u: usize, v: usize) -> bool;
    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_;

    fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.capacity()).filter(move |&v| self.contains(v))
    }

    fn neighbor_vec(&self, v: usize) -> Vec<usize> {
        self.neighbors(v).collect()
    }

    /// True when every vertex of `set` is adjacent to every other.
    fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }
}

impl GraphView for Graph {
    fn capacity(&self) -> usize {
        self.order()
    }
    fn contains(&self, v: usize) -> bool {
        v < self.order()
    }
    fn order(&self) -> usize {
        Graph::order(self)
    }
    fn degree(&self, v: usize) -> usize {
        Graph::degree(self, v)
    }
    fn has_edge(&self, u: usize, v: usize) -> bool {
        Graph::has_edge(self, u, v)
    }
    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }
}

/// Induced subgraph of a [`Graph`] obtained by deleting vertices.
#[derive(Clone, Debug)]
pub struct Subgraph<'a> {
    base: &'a Graph,
    alive: Vec<bool>,
    deg: Vec<usize>,
    order: usize,
}

impl<'a> Subgraph<'a> {
    pub fn full(base: &'a Graph) -> Self {
        Subgraph {
            base,
            alive: vec![true; base.order()],
            deg: (0..base.order()).map(|v| base.degree(v)).collect(),
            order: base.order(),
        }
    }

    pub fn base(&self) -> &'a Graph {
        self.base
    }

    pub fn remove(&mut self, v: usize) {
        if !self.alive[v] {
            return;
        }
        self.alive[v] = false;
        self.order -= 1;
        for &u in self.base.neighbors(v) {
            if self.alive[u] {
                self.deg[u] -= 1;
            }
        }
    }
}

impl GraphView for Subgraph<'_> {
    fn capacity(&self) -> usize {
        self.base.order()
    }
    fn contains(&self, v: usize) -> bool {
        self.alive[v]
    }
    fn order(&self) -> usize {
        self.order
    }
    fn degree(&self, v: usize) -> usize {
        self.deg[v]
    }
    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.alive[u] && self.alive[v] && self.base.has_edge(u, v)
    }
    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.base.neighbors(v).iter().copied().filter(move |&u| self.alive[u])
    }
}

/// Vertex sequence certifying that a graph is a k-tree.
///
/// Positions are 0-based: `order[..=k]` is the initial clique and every later
/// vertex has exactly `k` earlier neighbors forming a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditionOrdering {
    k: usize,
    order: Vec<usize>,
    pos: Vec<usize>,
    back: Vec<Vec<usize>>,
}

impl AdditionOrdering {
    /// Builds and validates an ordering of the vertices of `g`.
    pub fn new<G: GraphView>(g: &G, k: usize, order: Vec<usize>) -> Result<Self> {
        let not = |reason: alloc::string::String| Error::NotKTree { k, reason };
        if k == 0 {
            return Err(not("k must be positive".into()));
        }
        if order.len() != g.order() {
            return Err(not(format!("ordering has {} of {} vertices", order.len(), g.order())));
        }
        if order.len() < k + 1 {
            return Err(Error::TooSmall { n: order.len(), need: k + 1 });
        }
        let mut pos = vec![usize::MAX; g.capacity()];
        for (i, &v) in order.iter().enumerate() {
            if v >= g.capacity() || !g.contains(v) || pos[v] != usize::MAX {
                return Err(not(format!("ordering entry {v} is invalid or repeated")));
            }
            pos[v] = i;
        }
        if !g.is_clique(&order[..=k]) {
            return Err(not("first k+1 vertices are not a clique".into()));
        }
        let mut back = Vec::with_capacity(order.len() - k);
        let mut first: Vec<usize> = order[..k].to_vec();
        first.sort_unstable();
        back.push(first);
        for i in k + 1..order.len() {
            let v = order[i];
            let mut b: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] < i).collect();
            b.sort_unstable();
            if b.len() != k || !g.is_clique(&b) {
                return Err(not(format!("vertex {v} at position {i} has no k-clique back-neighborhood")));
            }
            back.push(b);
        }
        Ok(AdditionOrdering { k, order, pos, back })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn vertex(&self, i: usize) -> usize {
        self.order[i]
    }

    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    /// Earlier neighbors of the vertex at position `i >= k`, sorted by id.
    /// For `i == k` these are the first `k` vertices.
    pub fn back_clique(&self, i: usize) -> &[usize] {
        &self.back[i - self.k]
    }

    /// The same ordering with the vertices missing from `g` dropped. Valid
    /// when the dropped vertices form the interior of a branch that does not
    /// meet the initial clique: no kept vertex has a dropped back-neighbor.
    pub fn restrict<G: GraphView>(&self, g: &G) -> Result<AdditionOrdering> {
        let k = self.k;
        let order: Vec<usize> = self.order.iter().copied().filter(|&v| g.contains(v)).collect();
        if order.len() < k + 1 || order[..=k] != self.order[..=k] {
            return Err(internal!("restriction removes part of the initial clique"));
        }
        let mut pos = vec![usize::MAX; self.pos.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut back = Vec::with_capacity(order.len() - k);
        back.push(self.back[0].clone());
        for &v in &order[k + 1..] {
            let b = self.back[self.pos[v] - k].clone();
            if b.iter().any(|&x| !g.contains(x)) {
                return Err(internal!("vertex {v} loses a back-neighbor in the restriction"));
            }
            back.push(b);
        }
        Ok(AdditionOrdering { k, order, pos, back })
    }

    /// Edge list obtained by replaying the construction.
    pub fn replay_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..=self.k {
            for j in 0..i {
                edges.push((self.order[j], self.order[i]));
            }
        }
        for i in self.k + 1..self.order.len() {
            for &b in self.back_clique(i) {
                edges.push((b, self.order[i]));
            }
        }
        edges
    }
}

fn alive_neighbors<G: GraphView>(g: &G, alive: &[bool], v: usize) -> Vec<usize> {
    g.neighbors(v).filter(|&u| alive[u]).collect()
}

fn pairwise_adjacent<G: GraphView>(g: &G, set: &[usize]) -> bool {
    g.is_clique(set)
}

/// Repeatedly removes simplicial vertices of degree `k`, taking the smallest
/// id each time, until `keep_min` vertices remain. `skip` vertices are never
/// removed. Returns the eliminated vertices in removal order.
fn eliminate<G: GraphView>(
    g: &G,
    k: usize,
    skip: &[usize],
    strict: bool,
) -> Result<(Vec<usize>, Vec<bool>)> {
    let cap = g.capacity();
    let mut alive = vec![false; cap];
    let mut deg = vec![0usize; cap];
    for v in g.vertices() {
        alive[v] = true;
        deg[v] = g.degree(v);
    }
    let mut frozen = vec![false; cap];
    for &s in skip {
        frozen[s] = true;
    }
    let mut cand: BTreeSet<usize> = g
        .vertices()
        .filter(|&v| deg[v] == k && !frozen[v])
        .collect();
    let mut remaining = g.order();
    let mut elim = Vec::with_capacity(remaining.saturating_sub(k + 1));
    let not = |reason| Error::NotKTree { k, reason };
    while remaining > k + 1 {
        let v = loop {
            match cand.pop_first() {
                Some(v) if alive[v] && deg[v] == k => break Some(v),
                Some(_) => continue,
                None => break None,
            }
        };
        let Some(v) = v else {
            return Err(if strict {
                not(format!("no simplicial vertex of degree {k} with {remaining} vertices left"))
            } else {
                internal!("elimination stalled with {remaining} vertices left")
            });
        };
        let nb = alive_neighbors(g, &alive, v);
        if !pairwise_adjacent(g, &nb) {
            return Err(not(format!("vertex {v} has degree {k} but is not simplicial")));
        }
        alive[v] = false;
        remaining -= 1;
        for &u in &nb {
            deg[u] -= 1;
            if deg[u] < k {
                return Err(not(format!("vertex {u} drops below degree {k}")));
            }
            if deg[u] == k && !frozen[u] {
                cand.insert(u);
            }
        }
        elim.push(v);
    }
    Ok((elim, alive))
}

/// Recognizes a k-tree and returns a validated addition ordering.
pub fn recognize_ktree<G: GraphView>(g: &G, k: usize) -> Result<AdditionOrdering> {
    if k == 0 {
        return Err(Error::NotKTree { k, reason: "k must be positive".into() });
    }
    if g.order() < k + 1 {
        return Err(Error::TooSmall { n: g.order(), need: k + 1 });
    }
    let (elim, alive) = eliminate(g, k, &[], true)?;
    let residue: Vec<usize> = g.vertices().filter(|&v| alive[v]).collect();
    if !g.is_clique(&residue) {
        return Err(Error::NotKTree { k, reason: "residue is not a clique on k+1 vertices".into() });
    }
    let mut order = residue;
    order.extend(elim.iter().rev());
    AdditionOrdering::new(g, k, order)
}

/// Addition ordering whose first vertex has degree exactly `k`.
pub fn good_addition_ordering<G: GraphView>(g: &G, k: usize) -> Result<AdditionOrdering> {
    let base = recognize_ktree(g, k)?;
    if g.order() == k + 1 {
        return Ok(base);
    }
    let s = g
        .vertices()
        .find(|&v| g.degree(v) == k)
        .ok_or_else(|| internal!("k-tree without a vertex of degree k"))?;
    let mut closed: Vec<usize> = g.neighbors(s).collect();
    closed.push(s);
    let (elim, _) = eliminate(g, k, &closed, false)?;
    let mut order = Vec::with_capacity(g.order());
    order.push(s);
    let mut nb: Vec<usize> = g.neighbors(s).collect();
    nb.sort_unstable();
    order.extend(nb);
    order.extend(elim.iter().rev());
    let ord = AdditionOrdering::new(g, k, order).map_err(|e| internal!("good ordering invalid: {e}"))?;
    if g.degree(ord.vertex(0)) != k {
        return Err(internal!("good ordering starts at a vertex of degree != k"));
    }
    Ok(ord)
}

/// Minimum degree, or 0 for the empty graph.
pub fn min_degree<G: GraphView>(g: &G) -> usize {
    g.vertices().map(|v| g.degree(v)).min().unwrap_or(0)
}

/// `⌊log₂ k⌋` for `k >= 1`.
pub fn floor_log2(k: usize) -> usize {
    (usize::BITS - 1 - k.leading_zeros()) as usize
}
