//! Deterministic constructions of extremal graphs.
//!
//! Sequence-driven builders label vertex `i` with the `i`-th largest degree
//! `d_{i+1}` and grow the graph breadth-first: after the initial core is
//! placed, each vertex in label order takes the next unused labels as new
//! neighbors until its degree is reached.

use serde::Serialize;
use thiserror::Error;

use crate::degseq::{format_degrees, CyclicClass, DegreeSequence};
use crate::graphs::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("{0} is not a tree degree sequence")]
    NotTreeSequence(String),
    #[error("{0} is not a unicyclic degree sequence")]
    NotUnicyclicSequence(String),
    #[error("{0} is not a bicyclic degree sequence")]
    NotBicyclicSequence(String),
    #[error("too few vertices: need at least {needed}, got {got}")]
    TooFewVertices { needed: usize, got: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("sequence {0} cannot be grown breadth-first from the given core")]
    NotGrowable(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `k` lengths summing to `total`, differing pairwise by at most one, longest
/// first.
pub fn split_almost_equal(total: usize, k: usize) -> Result<Vec<usize>, BuildError> {
    if k == 0 {
        return Err(BuildError::BadParameter(
            "cannot split into zero parts".into(),
        ));
    }
    if total < k {
        return Err(BuildError::TooFewVertices {
            needed: k,
            got: total,
        });
    }
    let (q, r) = (total / k, total % k);
    Ok((0..k).map(|i| q + usize::from(i < r)).collect())
}

/// Grow `core` breadth-first to realize `degrees` (sorted non-increasing).
/// `core` must use exactly the labels `0..next`.
fn grow(degrees: &[usize], core: &[(usize, usize)], mut next: usize) -> Result<Graph, BuildError> {
    let n = degrees.len();
    let fail = || BuildError::NotGrowable(format_degrees(degrees));
    let mut deg = vec![0usize; n];
    let mut edges = core.to_vec();
    for &(u, v) in core {
        deg[u] += 1;
        deg[v] += 1;
    }
    for i in 0..n {
        let need = degrees[i].checked_sub(deg[i]).ok_or_else(fail)?;
        if need > 0 && i >= next {
            return Err(fail());
        }
        for _ in 0..need {
            if next >= n {
                return Err(fail());
            }
            edges.push((i, next));
            deg[i] += 1;
            deg[next] += 1;
            next += 1;
        }
    }
    if next != n {
        return Err(fail());
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Attach paths of the given lengths at `center`, numbering new vertices
/// layer by layer starting from `next`.
fn attach_paths(
    edges: &mut Vec<(usize, usize)>,
    center: usize,
    lengths: &[usize],
    mut next: usize,
) -> usize {
    let mut tips = vec![center; lengths.len()];
    let depth = lengths.iter().copied().max().unwrap_or(0);
    for t in 0..depth {
        for (tip, &len) in tips.iter_mut().zip(lengths) {
            if t < len {
                edges.push((*tip, next));
                *tip = next;
                next += 1;
            }
        }
    }
    next
}

/// The greedy (BFS) tree with degree sequence `pi`.
pub fn greedy_tree(pi: &DegreeSequence) -> Result<Graph, BuildError> {
    if pi.cyclic_class() != CyclicClass::TREE {
        return Err(BuildError::NotTreeSequence(pi.to_string()));
    }
    grow(pi.degrees(), &[], 1)
}

/// `U_M(π)`: a triangle on `v1 v2 v3` grown breadth-first; the cycle `C_n`
/// when every degree is 2.
pub fn u_m(pi: &DegreeSequence) -> Result<Graph, BuildError> {
    if pi.cyclic_class() != CyclicClass::UNICYCLIC {
        return Err(BuildError::NotUnicyclicSequence(pi.to_string()));
    }
    let n = pi.len();
    if pi.min_degree() == 2 {
        return Ok(cycle(n));
    }
    grow(pi.degrees(), &[(0, 1), (0, 2), (1, 2)], 3)
}

/// Which construction `b_m` uses for a bicyclic sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BicyclicCase {
    /// `d_n = 1`, `d_2 >= 3`: `K_4 - e` grown breadth-first.
    KiteCore,
    /// `d_n = 1`, `d_2 = 2`: two triangles at `v1` plus pendant paths.
    BowtieWithPaths,
    /// `(4, 2, ..., 2)`: two cycles sharing a vertex.
    TwoCycles,
    /// `(3, 3, 2, ..., 2)`: a theta graph.
    Theta,
}

pub fn bicyclic_case(pi: &DegreeSequence) -> Result<BicyclicCase, BuildError> {
    if pi.cyclic_class() != CyclicClass::BICYCLIC {
        return Err(BuildError::NotBicyclicSequence(pi.to_string()));
    }
    Ok(match (pi.min_degree(), pi.d(2), pi.d(1)) {
        (1, d2, _) if d2 >= 3 => BicyclicCase::KiteCore,
        (1, _, _) => BicyclicCase::BowtieWithPaths,
        (_, _, 4) => BicyclicCase::TwoCycles,
        _ => BicyclicCase::Theta,
    })
}

/// `B_M(π)` for a bicyclic sequence.
pub fn b_m(pi: &DegreeSequence) -> Result<Graph, BuildError> {
    let n = pi.len();
    match bicyclic_case(pi)? {
        BicyclicCase::KiteCore => {
            // v1, v2 have degree 3 in the core; v3 v4 is the missing edge
            grow(pi.degrees(), &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], 4)
        }
        BicyclicCase::BowtieWithPaths => {
            let mut edges = BaseBicyclic::B2.edges();
            let lengths = split_almost_equal(n - 5, pi.d(1) - 4)?;
            attach_paths(&mut edges, 0, &lengths, 5);
            Ok(Graph::from_edge_list(n, &edges)?)
        }
        BicyclicCase::TwoCycles => {
            let sizes = split_almost_equal(n + 1, 2)?;
            BaseBicyclic::B3 {
                first: sizes[0],
                second: sizes[1],
            }
            .graph()
        }
        BicyclicCase::Theta => {
            let internal = split_almost_equal(n - 2, 2)?;
            BaseBicyclic::Theta {
                lengths: [1, internal[0] + 1, internal[1] + 1],
            }
            .graph()
        }
    }
}

/// Bicyclic graphs of minimum degree at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BaseBicyclic {
    /// `K_4 - e`; vertices 0 and 1 have degree 3.
    B1,
    /// Two triangles sharing vertex 0.
    B2,
    /// Two cycles of the given lengths sharing vertex 0.
    B3 { first: usize, second: usize },
    /// Two vertex-disjoint cycles joined by a path of `bridge >= 1` edges.
    B4 {
        first: usize,
        second: usize,
        bridge: usize,
    },
    /// Three internally disjoint paths with the given numbers of edges
    /// between vertices 0 and 1.
    Theta { lengths: [usize; 3] },
}

impl BaseBicyclic {
    fn check(&self) -> Result<(), BuildError> {
        let bad = |msg: &str| Err(BuildError::BadParameter(format!("{self:?}: {msg}")));
        match *self {
            BaseBicyclic::B3 { first, second } | BaseBicyclic::B4 { first, second, .. }
                if first < 3 || second < 3 =>
            {
                bad("cycles need at least 3 vertices")
            }
            BaseBicyclic::B4 { bridge: 0, .. } => bad("bridge needs at least one edge"),
            BaseBicyclic::Theta { lengths } => {
                let mut l = lengths;
                l.sort_unstable();
                if l[0] == 0 || l[1] < 2 {
                    bad("at most one path may be a single edge")
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            BaseBicyclic::B1 => 4,
            BaseBicyclic::B2 => 5,
            BaseBicyclic::B3 { first, second } => first + second - 1,
            BaseBicyclic::B4 {
                first,
                second,
                bridge,
            } => first + second + bridge - 1,
            BaseBicyclic::Theta { lengths } => lengths.iter().sum::<usize>() - 1,
        }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let cycle_at = |edges: &mut Vec<(usize, usize)>, anchor: usize, len: usize, next: usize| {
            let mut prev = anchor;
            for v in next..next + len - 1 {
                edges.push((prev, v));
                prev = v;
            }
            edges.push((prev, anchor));
            next + len - 1
        };
        let mut edges = Vec::new();
        match *self {
            BaseBicyclic::B1 => edges.extend([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
            BaseBicyclic::B2 => edges.extend([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
            BaseBicyclic::B3 { first, second } => {
                let next = cycle_at(&mut edges, 0, first, 1);
                cycle_at(&mut edges, 0, second, next);
            }
            BaseBicyclic::B4 {
                first,
                second,
                bridge,
            } => {
                let next = cycle_at(&mut edges, 0, first, 1);
                let mut prev = 0;
                for v in next..next + bridge {
                    edges.push((prev, v));
                    prev = v;
                }
                cycle_at(&mut edges, prev, second, next + bridge);
            }
            BaseBicyclic::Theta { lengths } => {
                let mut next = 2;
                for len in lengths {
                    let mut prev = 0;
                    for _ in 1..len {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                    edges.push((prev, 1));
                }
            }
        }
        edges
    }

    pub fn graph(&self) -> Result<Graph, BuildError> {
        self.check()?;
        Ok(Graph::from_edge_list(self.vertex_count(), &self.edges())?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Tree,
    Unicyclic,
    Bicyclic,
}

/// `F_n(k)`, `F'_n(k)`, `F''_n(k)`: `k` paths of almost equal lengths at an
/// isolated vertex, a vertex of `C_3`, or the degree-4 vertex of `B2`.
/// The attachment vertex is 0.
pub fn pendant_path_family(kind: FamilyKind, n: usize, k: usize) -> Result<Graph, BuildError> {
    let min_k = if kind == FamilyKind::Tree { 2 } else { 1 };
    if k < min_k {
        return Err(BuildError::BadParameter(format!(
            "k must be at least {min_k}, got {k}"
        )));
    }
    let (mut edges, core) = match kind {
        FamilyKind::Tree => (Vec::new(), 1),
        FamilyKind::Unicyclic => (vec![(0, 1), (0, 2), (1, 2)], 3),
        FamilyKind::Bicyclic => (BaseBicyclic::B2.edges(), 5),
    };
    if n < core + k {
        return Err(BuildError::TooFewVertices {
            needed: core + k,
            got: n,
        });
    }
    let lengths = split_almost_equal(n - core, k)?;
    attach_paths(&mut edges, 0, &lengths, core);
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// `S^(c)_n`: the star, the star plus an edge between two leaves, and `B1`
/// with `n - 4` pendants at a degree-3 vertex.
pub fn s_c_n(c: usize, n: usize) -> Result<Graph, BuildError> {
    let needed = match c {
        0 => 2,
        1 => 3,
        2 => 4,
        _ => {
            return Err(BuildError::BadParameter(format!(
                "c must be 0, 1 or 2, got {c}"
            )))
        }
    };
    if n < needed {
        return Err(BuildError::TooFewVertices { needed, got: n });
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    match c {
        1 => edges.push((1, 2)),
        2 => edges.extend([(1, 2), (1, 3)]),
        _ => {}
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edge_list(n, &edges).expect("cycle is simple for n >= 3")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{base_graph, is_bfs_graph};

    fn pi(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    fn round_trips(g: &Graph, p: &DegreeSequence) {
        assert_eq!(g.degree_sequence().unwrap(), *p);
        assert!(g.is_connected());
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_almost_equal(7, 3).unwrap(), vec![3, 2, 2]);
        assert_eq!(split_almost_equal(6, 3).unwrap(), vec![2, 2, 2]);
        assert_eq!(split_almost_equal(5, 1).unwrap(), vec![5]);
        assert_eq!(
            split_almost_equal(2, 3),
            Err(BuildError::TooFewVertices { needed: 3, got: 2 })
        );
    }

    #[test]
    fn greedy_tree_examples() {
        let star = greedy_tree(&pi("3,1,1,1")).unwrap();
        assert_eq!(star.degree(0), 3);
        let path = greedy_tree(&pi("2,2,2,1,1")).unwrap();
        assert_eq!(path.max_degree(), 2);
        round_trips(&path, &pi("2,2,2,1,1"));
        let p = pi("3,3,2,2,1,1,1,1");
        let g = greedy_tree(&p).unwrap();
        round_trips(&g, &p);
        assert!(is_bfs_graph(&g).unwrap().is_some());
        assert!(matches!(
            greedy_tree(&pi("2,2,2")),
            Err(BuildError::NotTreeSequence(_))
        ));
    }

    #[test]
    fn u_m_on_twenty_three_vertices() {
        let p = pi("5,4,3,3,3,2^10,1^8");
        let g = u_m(&p).unwrap();
        assert_eq!(g.n(), 23);
        round_trips(&g, &p);
        assert_eq!(g.neighbors(0), &[1, 2, 3, 4, 5]);
        assert!(g.is_triangle(0, 1, 2));
        let base = base_graph(&g).unwrap();
        assert_eq!(base.vertices, vec![0, 1, 2]);
        assert!(is_bfs_graph(&g).unwrap().is_some());
    }

    #[test]
    fn u_m_small_cases() {
        assert_eq!(u_m(&pi("2,2,2")).unwrap(), cycle(3));
        assert_eq!(u_m(&pi("2^6")).unwrap(), cycle(6));
        let g = u_m(&pi("3,2,2,1")).unwrap();
        assert!(g.is_triangle(0, 1, 2) && g.has_edge(0, 3));
        assert!(matches!(
            u_m(&pi("3,1,1,1")),
            Err(BuildError::NotUnicyclicSequence(_))
        ));
    }

    #[test]
    fn b_m_cases() {
        let p = pi("3,3,2,2");
        assert_eq!(bicyclic_case(&p).unwrap(), BicyclicCase::Theta);
        let g = b_m(&p).unwrap();
        round_trips(&g, &p);
        assert_eq!(g, BaseBicyclic::B1.graph().unwrap().relabel(&[0, 1, 2, 3]));

        let p = pi("4,3,3,2,2,1,1");
        assert_eq!(bicyclic_case(&p).unwrap(), BicyclicCase::KiteCore);
        let g = b_m(&p).unwrap();
        round_trips(&g, &p);
        assert!(is_bfs_graph(&g).unwrap().is_some());
        assert_eq!(base_graph(&g).unwrap().vertices, vec![0, 1, 2, 3]);

        let p = pi("6,2,2,2,2,2,1,1");
        assert_eq!(bicyclic_case(&p).unwrap(), BicyclicCase::BowtieWithPaths);
        let g = b_m(&p).unwrap();
        round_trips(&g, &p);
        assert_eq!(g.degree(0), 6);

        let p = pi("4,2^6");
        assert_eq!(bicyclic_case(&p).unwrap(), BicyclicCase::TwoCycles);
        round_trips(&b_m(&p).unwrap(), &p);

        for n in 4..10 {
            let p: DegreeSequence = format!("3,3,2^{}", n - 2).parse().unwrap();
            let g = b_m(&p).unwrap();
            round_trips(&g, &p);
            assert!(g.has_edge(0, 1));
        }
        assert!(matches!(
            b_m(&pi("2,2,2")),
            Err(BuildError::NotBicyclicSequence(_))
        ));
    }

    #[test]
    fn base_bicyclic_graphs_are_their_own_base() {
        let kinds = [
            BaseBicyclic::B1,
            BaseBicyclic::B2,
            BaseBicyclic::B3 {
                first: 4,
                second: 5,
            },
            BaseBicyclic::B4 {
                first: 3,
                second: 4,
                bridge: 2,
            },
            BaseBicyclic::Theta { lengths: [1, 2, 3] },
            BaseBicyclic::Theta { lengths: [2, 2, 2] },
        ];
        for kind in kinds {
            let g = kind.graph().unwrap();
            assert!(g.is_connected(), "{kind:?}");
            assert_eq!(g.m(), g.n() + 1, "{kind:?}");
            assert_eq!(base_graph(&g).unwrap().graph, g, "{kind:?}");
        }
        assert!(BaseBicyclic::Theta { lengths: [1, 1, 3] }.graph().is_err());
        assert!(BaseBicyclic::B3 {
            first: 2,
            second: 3
        }
        .graph()
        .is_err());
    }

    #[test]
    fn pendant_families() {
        let p5 = pendant_path_family(FamilyKind::Tree, 5, 2).unwrap();
        assert_eq!(p5.max_degree(), 2);
        assert_eq!(p5.m(), 4);
        let f = pendant_path_family(FamilyKind::Unicyclic, 6, 1).unwrap();
        assert_eq!(f.degree_sequence().unwrap(), pi("3,2,2,2,2,1"));
        for (kind, core) in [
            (FamilyKind::Tree, 0),
            (FamilyKind::Unicyclic, 2),
            (FamilyKind::Bicyclic, 4),
        ] {
            for k in 2..5 {
                let g = pendant_path_family(kind, 12, k).unwrap();
                assert!(g.is_connected());
                assert_eq!(g.degree(0), k + core);
                assert_eq!(g.degrees().iter().filter(|&&d| d == 1).count(), k);
            }
        }
        assert!(pendant_path_family(FamilyKind::Bicyclic, 6, 2).is_err());
        assert!(pendant_path_family(FamilyKind::Tree, 6, 1).is_err());
    }

    #[test]
    fn s_c_n_sequences() {
        assert_eq!(s_c_n(0, 5).unwrap().degree_sequence().unwrap(), pi("4,1^4"));
        assert_eq!(
            s_c_n(1, 4).unwrap().degree_sequence().unwrap(),
            pi("3,2,2,1")
        );
        assert_eq!(
            s_c_n(2, 6).unwrap().degree_sequence().unwrap(),
            pi("5,3,2,2,1,1")
        );
        assert!(s_c_n(2, 3).is_err());
        assert!(s_c_n(3, 8).is_err());
    }

    #[test]
    fn builders_are_deterministic() {
        let p = pi("4,4,3,3,2,2,1,1,1,1");
        assert_eq!(b_m(&p).unwrap(), b_m(&p).unwrap());
    }
}
