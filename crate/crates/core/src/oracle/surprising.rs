//! Surprising vertices: `w ∈ N(q) \ (V(P_pq) ∪ N[p])` for some shortest
//! `p`–`q` path `P_pq`, such that the degrees of `N(q) \ {w, p}` are
//! dominated one-to-one by degrees in `N(p) \ {q}`. Moving `w` from `q` to
//! `p` then strictly increases `M_f` for good-escalating `f`.

use std::collections::VecDeque;

use crate::graphs::{Graph, GraphError};

/// Shortest-path distances and path counts from `root` (counts saturate).
fn bfs_counts(g: &Graph, root: usize) -> (Vec<Option<usize>>, Vec<u64>) {
    let mut dist = vec![None; g.n()];
    let mut count = vec![0u64; g.n()];
    let mut queue = VecDeque::from([root]);
    dist[root] = Some(0);
    count[root] = 1;
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &v in g.neighbors(u) {
            match dist[v] {
                None => {
                    dist[v] = Some(du + 1);
                    count[v] = count[u];
                    queue.push_back(v);
                }
                Some(dv) if dv == du + 1 => count[v] = count[v].saturating_add(count[u]),
                _ => {}
            }
        }
    }
    (dist, count)
}

/// `w` (a neighbor of `q`) avoids at least one shortest `p`–`q` path.
fn avoids_some_shortest_path(dist: &[Option<usize>], count: &[u64], q: usize, w: usize) -> bool {
    let (Some(dq), Some(dw)) = (dist[q], dist[w]) else {
        return false;
    };
    // every shortest path through w ends with the edge wq, so w lies on all
    // of them exactly when it carries all of q's path count
    !(dw + 1 == dq && count[w] == count[q])
}

/// Degrees of `small` can be matched injectively into `large` with
/// `d(large_i) >= d(small_i)`.
fn dominated(g: &Graph, large: &[usize], small: &[usize]) -> bool {
    if small.len() > large.len() {
        return false;
    }
    let mut a: Vec<usize> = large.iter().map(|&v| g.degree(v)).collect();
    let mut b: Vec<usize> = small.iter().map(|&v| g.degree(v)).collect();
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    a.iter().zip(&b).all(|(x, y)| x >= y)
}

fn surprising_with(
    g: &Graph,
    dist: &[Option<usize>],
    count: &[u64],
    p: usize,
    q: usize,
    w: usize,
) -> bool {
    if w == p || w == q || !g.has_edge(q, w) || g.has_edge(p, w) {
        return false;
    }
    if !avoids_some_shortest_path(dist, count, q, w) {
        return false;
    }
    let rest_q: Vec<usize> = g
        .neighbors(q)
        .iter()
        .copied()
        .filter(|&z| z != w && z != p)
        .collect();
    let rest_p: Vec<usize> = g.neighbors(p).iter().copied().filter(|&z| z != q).collect();
    dominated(g, &rest_p, &rest_q)
}

/// Whether `w` is a surprising vertex for the pair `(p, q)`.
pub fn is_surprising(g: &Graph, p: usize, q: usize, w: usize) -> bool {
    if p == q || p >= g.n() || q >= g.n() || w >= g.n() {
        return false;
    }
    let (dist, count) = bfs_counts(g, p);
    surprising_with(g, &dist, &count, p, q, w)
}

/// The smallest-labelled surprising vertex for `(p, q)`, if any.
pub fn find_surprising_vertex(g: &Graph, p: usize, q: usize) -> Result<Option<usize>, GraphError> {
    for x in [p, q] {
        if x >= g.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: x,
                n: g.n(),
            });
        }
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if p == q || g.degree(p) < g.degree(q) {
        return Err(GraphError::PreconditionViolated(format!(
            "need distinct p, q with d(p) >= d(q), got d({p}) = {}, d({q}) = {}",
            g.degree(p),
            g.degree(q)
        )));
    }
    let (dist, count) = bfs_counts(g, p);
    Ok(g.neighbors(q)
        .iter()
        .copied()
        .find(|&w| surprising_with(g, &dist, &count, p, q, w)))
}

/// The hypotheses of the shift move `G + wu - wv`: `d(u) >= d(v) >= 2` and
/// `w` is surprising for `(u, v)`.
pub fn shift_hypotheses_hold(g: &Graph, u: usize, v: usize, w: usize) -> bool {
    u != v && g.degree(u) >= g.degree(v) && g.degree(v) >= 2 && is_surprising(g, u, v, w)
}
