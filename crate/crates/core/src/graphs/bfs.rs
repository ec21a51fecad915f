//! Recognition of BFS-graphs.
//!
//! A connected graph is a BFS-graph when some ordering `v_1 ≺ ... ≺ v_n` of
//! its vertices is non-increasing in degree and non-decreasing in distance
//! from `v_1`, and for `u ≺ w` on one layer every `v ∈ N(u)\N(w)` precedes
//! every `z ∈ N(w)\N(u)` on the next layer.
//!
//! The search fixes a maximum-degree root, then orders each layer in turn.
//! The order of layer `k` induces precedence constraints on layer `k + 1`;
//! layer `k + 1` is ordered by degree with ties broken by backtracking over
//! the linear extensions of those constraints. Vertices with identical
//! parents and children are interchangeable, and a failed layer is memoized
//! by the sequence of child sets it presents to the next layer.

use std::collections::HashSet;

use serde::Serialize;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BfsWitness {
    pub ordering: Vec<usize>,
}

/// Checks a concrete ordering against the BFS-graph definition.
pub fn satisfies_bfs_ordering(g: &Graph, ordering: &[usize]) -> bool {
    let n = g.n();
    if ordering.len() != n {
        return false;
    }
    if n == 0 {
        return true;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in ordering.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    let Some(height) = g
        .distances_from(ordering[0])
        .into_iter()
        .collect::<Option<Vec<_>>>()
    else {
        return false;
    };
    for pair in ordering.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if g.degree(a) < g.degree(b) || height[a] > height[b] {
            return false;
        }
    }
    for (i, &u) in ordering.iter().enumerate() {
        for &w in &ordering[i + 1..] {
            if height[u] != height[w] {
                continue;
            }
            let next = height[u] + 1;
            for &v in g.neighbors(u) {
                if height[v] != next || g.has_edge(w, v) {
                    continue;
                }
                for &z in g.neighbors(w) {
                    if height[z] == next && !g.has_edge(u, z) && pos[v] > pos[z] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Returns a witness ordering if `g` is a BFS-graph, `None` otherwise.
pub fn is_bfs_graph(g: &Graph) -> Result<Option<BfsWitness>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if g.n() == 0 {
        return Ok(Some(BfsWitness {
            ordering: Vec::new(),
        }));
    }
    let max = g.max_degree();
    for root in (0..g.n()).filter(|&v| g.degree(v) == max) {
        if let Some(ordering) = Searcher::new(g, root).run() {
            debug_assert!(satisfies_bfs_ordering(g, &ordering));
            return Ok(Some(BfsWitness { ordering }));
        }
    }
    Ok(None)
}

struct Searcher<'a> {
    g: &'a Graph,
    height: Vec<usize>,
    layers: Vec<Vec<usize>>,
    failed: HashSet<(usize, Vec<Vec<usize>>)>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, root: usize) -> Self {
        let height: Vec<usize> = g
            .distances_from(root)
            .into_iter()
            .map(|h| h.expect("connected"))
            .collect();
        let depth = height.iter().copied().max().unwrap_or(0);
        let mut layers = vec![Vec::new(); depth + 1];
        for (v, &h) in height.iter().enumerate() {
            layers[h].push(v);
        }
        Searcher {
            g,
            height,
            layers,
            failed: HashSet::new(),
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        for k in 1..self.layers.len() {
            let above = self.layers[k - 1]
                .iter()
                .map(|&v| self.g.degree(v))
                .min()
                .unwrap();
            let here = self.layers[k]
                .iter()
                .map(|&v| self.g.degree(v))
                .max()
                .unwrap();
            if here > above {
                return None;
            }
        }
        let root = self.layers[0][0];
        let mut tail = Vec::new();
        if self.descend(0, &[root], &mut tail) {
            let mut ordering = vec![root];
            for layer in tail.into_iter().rev() {
                ordering.extend(layer);
            }
            Some(ordering)
        } else {
            None
        }
    }

    fn neighbors_at(&self, v: usize, level: usize) -> Vec<usize> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.height[u] == level)
            .collect()
    }

    /// Given a fixed order of layer `k`, try to order all deeper layers.
    /// On success the deeper layer orders are pushed onto `tail` deepest
    /// first.
    fn descend(&mut self, k: usize, order: &[usize], tail: &mut Vec<Vec<usize>>) -> bool {
        if k + 1 >= self.layers.len() {
            return true;
        }
        let next = self.layers[k + 1].clone();
        let mut rank = vec![usize::MAX; self.g.n()];
        for (i, &u) in order.iter().enumerate() {
            rank[u] = i;
        }
        // parent ranks and children for each vertex of the next layer
        let parents: Vec<Vec<usize>> = next
            .iter()
            .map(|&v| {
                let mut p: Vec<usize> = self.neighbors_at(v, k).iter().map(|&u| rank[u]).collect();
                p.sort_unstable();
                p
            })
            .collect();
        let children: Vec<Vec<usize>> = next.iter().map(|&v| self.neighbors_at(v, k + 2)).collect();

        let size = next.len();
        let mut before = vec![Vec::new(); size];
        let mut indegree = vec![0usize; size];
        for a in 0..size {
            for b in 0..size {
                if a == b || !must_precede(&parents[a], &parents[b]) {
                    continue;
                }
                let (da, db) = (self.g.degree(next[a]), self.g.degree(next[b]));
                if da < db {
                    return false;
                }
                if da == db {
                    before[a].push(b);
                    indegree[b] += 1;
                }
            }
        }
        let mut state = Extension {
            next: &next,
            parents: &parents,
            children: &children,
            before: &before,
            indegree,
            placed: vec![false; size],
            prefix: Vec::with_capacity(size),
        };
        self.extend(k, &mut state, tail)
    }

    fn extend(&mut self, k: usize, st: &mut Extension<'_>, tail: &mut Vec<Vec<usize>>) -> bool {
        let size = st.next.len();
        if st.prefix.len() == size {
            let order: Vec<usize> = st.prefix.iter().map(|&i| st.next[i]).collect();
            let key: Vec<Vec<usize>> = st
                .prefix
                .iter()
                .map(|&i| st.children[i].clone())
                .filter(|c| !c.is_empty())
                .collect();
            let memo = (k + 1, key);
            if self.failed.contains(&memo) {
                return false;
            }
            if self.descend(k + 1, &order, tail) {
                tail.push(order);
                return true;
            }
            self.failed.insert(memo);
            return false;
        }
        let top = (0..size)
            .filter(|&i| !st.placed[i])
            .map(|i| self.g.degree(st.next[i]))
            .max()
            .unwrap();
        let mut tried: Vec<usize> = Vec::new();
        for i in 0..size {
            if st.placed[i] || st.indegree[i] > 0 || self.g.degree(st.next[i]) != top {
                continue;
            }
            if tried
                .iter()
                .any(|&j| st.parents[j] == st.parents[i] && st.children[j] == st.children[i])
            {
                continue;
            }
            tried.push(i);
            st.placed[i] = true;
            st.prefix.push(i);
            for &b in &st.before[i] {
                st.indegree[b] -= 1;
            }
            let ok = self.extend(k, st, tail);
            for &b in &st.before[i] {
                st.indegree[b] += 1;
            }
            st.prefix.pop();
            st.placed[i] = false;
            if ok {
                return true;
            }
        }
        false
    }
}

struct Extension<'s> {
    next: &'s [usize],
    parents: &'s [Vec<usize>],
    children: &'s [Vec<usize>],
    before: &'s [Vec<usize>],
    indegree: Vec<usize>,
    placed: Vec<bool>,
    prefix: Vec<usize>,
}

/// Whether a vertex with parent ranks `pa` must precede one with parent
/// ranks `pb`: some parent of `a` only, ranked before some parent of `b`
/// only.
fn must_precede(pa: &[usize], pb: &[usize]) -> bool {
    let only_a = pa
        .iter()
        .copied()
        .filter(|x| pb.binary_search(x).is_err())
        .min();
    let only_b = pb
        .iter()
        .copied()
        .filter(|x| pa.binary_search(x).is_err())
        .max();
    matches!((only_a, only_b), (Some(a), Some(b)) if a < b)
}
