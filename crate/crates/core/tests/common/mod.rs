//! Independent reference implementations used as test oracles, plus
//! builders for planting special branches.
#![allow(dead_code)]

use std::collections::BTreeSet;

use oddcolor_core::Graph;

/// Proper and odd, counted directly from the edge list.
pub fn brute_is_odd(n: usize, edges: &[(usize, usize)], col: &[u32]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        if col[a] == col[b] {
            return false;
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    adj.iter().all(|nb| {
        nb.is_empty()
            || nb.iter().any(|&x| nb.iter().filter(|&&y| col[y] == col[x]).count() % 2 == 1)
    })
}

pub fn brute_is_odd_graph(g: &Graph, col: &[u32]) -> bool {
    let e: Vec<_> = g.edges().collect();
    brute_is_odd(g.order(), &e, col)
}

/// Every assignment of `1..=c` to the vertices, in lexicographic order.
pub fn all_colorings(n: usize, c: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = (c as u64).pow(n as u32);
    (0..total).map(move |mut x| {
        (0..n)
            .map(|_| {
                let d = (x % c as u64) as u32 + 1;
                x /= c as u64;
                d
            })
            .collect()
    })
}

/// Smallest `c` admitting an odd coloring, by exhaustive assignment.
pub fn brute_odd_chromatic(g: &Graph) -> u32 {
    let e: Vec<_> = g.edges().collect();
    (1..=g.order() as u32)
        .find(|&c| all_colorings(g.order(), c).any(|col| brute_is_odd(g.order(), &e, &col)))
        .unwrap_or(g.order() as u32)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Lexicographically least sorted edge list over all relabelings.
pub fn brute_canon(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                .collect();
            e.sort();
            e
        })
        .min()
        .unwrap_or_default()
}

/// Isomorphism classes of k-trees on `n` vertices, by extending every
/// addition sequence from `K_{k+1}` and comparing brute-force canonical
/// forms.
pub fn brute_ktree_classes(n: usize, k: usize) -> usize {
    let perms = permutations(n);
    let mut seqs: Vec<Vec<(usize, usize)>> = vec![(0..=k).flat_map(|i| (0..i).map(move |j| (j, i))).collect()];
    for m in k + 1..n {
        let step_perms = permutations(m + 1);
        let mut next = Vec::new();
        let mut seen = BTreeSet::new();
        for e in &seqs {
            let adj = |a: usize, b: usize| e.contains(&(a.min(b), a.max(b)));
            for c in k_subsets(m, k) {
                if c.iter().enumerate().all(|(i, &a)| c[i + 1..].iter().all(|&b| adj(a, b))) {
                    let mut f = e.clone();
                    f.extend(c.iter().map(|&a| (a, m)));
                    let key = brute_canon(&f, &step_perms);
                    if seen.insert(key) {
                        next.push(f);
                    }
                }
            }
        }
        seqs = next;
    }
    let classes: BTreeSet<_> = seqs.iter().map(|e| brute_canon(e, &perms)).collect();
    classes.len()
}

pub fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if m < k {
        return vec![];
    }
    let mut out = k_subsets(m - 1, k);
    for mut s in k_subsets(m - 1, k - 1) {
        s.push(m - 1);
        out.push(s);
    }
    out
}

/// True when the graph can be reduced to `K_{k+1}` by deleting, in some
/// order, vertices of degree `k` with complete neighborhoods; tries every
/// choice.
pub fn brute_is_ktree(n: usize, edges: &[(usize, usize)], k: usize) -> bool {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    fn go(adj: &[Vec<bool>], alive: &mut Vec<bool>, k: usize) -> bool {
        let live: Vec<usize> = (0..alive.len()).filter(|&v| alive[v]).collect();
        if live.len() == k + 1 {
            return live.iter().all(|&a| live.iter().all(|&b| a == b || adj[a][b]));
        }
        if live.len() < k + 1 {
            return false;
        }
        for &v in &live {
            let nb: Vec<usize> = live.iter().copied().filter(|&u| adj[v][u]).collect();
            if nb.len() == k && nb.iter().all(|&a| nb.iter().all(|&b| a == b || adj[a][b])) {
                alive[v] = false;
                let ok = go(adj, alive, k);
                alive[v] = true;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    let mut alive = vec![true; n];
    go(&adj, &mut alive, k)
}

/// Edge-list builder for planting branches onto a host graph.
pub struct Plant {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Plant {
    pub fn on(g: &Graph) -> Plant {
        Plant { n: g.order(), edges: g.edges().collect() }
    }

    pub fn vertex(&mut self, adj: &[usize]) -> usize {
        let x = self.n;
        self.n += 1;
        self.edges.extend(adj.iter().map(|&a| (a, x)));
        x
    }

    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.n, &self.edges).unwrap()
    }

    /// Ear on `{p, q}`; returns the apex.
    pub fn ear2(&mut self, p: usize, q: usize) -> usize {
        self.vertex(&[p, q])
    }

    /// Hat on `[v1, v2]`; returns `[u0, u1, u2]`.
    pub fn hat(&mut self, v1: usize, v2: usize) -> [usize; 3] {
        let u0 = self.vertex(&[v1, v2]);
        let u1 = self.vertex(&[v1, u0]);
        let u2 = self.vertex(&[v2, u0]);
        [u0, u1, u2]
    }

    /// Double hat on `[v1, v2]`; returns `[u0, .., u6]`.
    pub fn double_hat(&mut self, v1: usize, v2: usize) -> [usize; 7] {
        let u0 = self.vertex(&[v1, v2]);
        let u1 = self.vertex(&[v1, u0]);
        let u2 = self.vertex(&[v2, u0]);
        let u3 = self.vertex(&[v1, u1]);
        let u4 = self.vertex(&[u0, u1]);
        let u5 = self.vertex(&[u0, u2]);
        let u6 = self.vertex(&[v2, u2]);
        [u0, u1, u2, u3, u4, u5, u6]
    }

    pub fn ear3(&mut self, r: [usize; 3]) -> usize {
        self.vertex(&r)
    }

    /// One-hat on `[v1, v2, v3]` with the hat vertex on `v1, v2`.
    pub fn one_hat(&mut self, r: [usize; 3]) -> [usize; 2] {
        let u0 = self.vertex(&r);
        let u1 = self.vertex(&[r[0], r[1], u0]);
        [u0, u1]
    }

    /// One-hat plus on `[v1, v2, v3]` in the standard labeling.
    pub fn plus(&mut self, r: [usize; 3]) -> [usize; 4] {
        let u0 = self.vertex(&r);
        let u1 = self.vertex(&[r[0], r[1], u0]);
        let u2 = self.vertex(&[r[1], r[2], u0]);
        let u3 = self.vertex(&[r[0], u0, u1]);
        [u0, u1, u2, u3]
    }

    /// Attaches special 3-tree branch number `kind` to the triangle `r`:
    /// 0 none, 1 ear, 2..=4 one-hat rotations, 5..=10 one-hat plus
    /// orientations.
    pub fn special3(&mut self, r: [usize; 3], kind: u32) {
        match kind {
            0 => {}
            1 => {
                self.ear3(r);
            }
            2..=4 => {
                let s = (kind - 2) as usize;
                self.one_hat([r[s], r[(s + 1) % 3], r[(s + 2) % 3]]);
            }
            _ => {
                let s = (kind - 5) as usize;
                let (a, b) = (s % 3, (s % 3 + 1 + s / 3) % 3);
                let c = 3 - a - b;
                self.plus([r[a], r[b], r[c]]);
            }
        }
    }
}
