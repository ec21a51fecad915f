//! Simple undirected graphs on vertices `0..n`.
//!
//! Graphs are immutable values; transformations return new graphs and never
//! relabel vertices.

mod bfs;
mod io;
mod layers;
mod transform;

pub use bfs::{is_bfs_graph, satisfies_bfs_ordering, BfsWitness};
pub use io::{parse_edge_list, to_dot, to_edge_list};
pub use layers::{base_graph, layer_decomposition, BaseGraph, LayerDecomposition};
pub use transform::{edge_switch, shift, EdgeSwitch};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::degseq::{DegSeqError, DegreeSequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {0}-{1} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    DegreeSequence(#[from] DegSeqError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds from adjacency lists that are already known to be simple and
    /// symmetric.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut total = 0;
        for list in &mut adj {
            list.sort_unstable();
            total += list.len();
        }
        Graph { adj, m: total / 2 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Degrees sorted non-increasing, without any validation.
    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn degree_sequence(&self) -> Result<DegreeSequence, GraphError> {
        Ok(DegreeSequence::from_degrees(self.degrees())?)
    }

    /// `{u ∈ N(v) : d(u) >= p}`.
    pub fn neighbors_with_min_degree(&self, v: usize, p: usize) -> Vec<usize> {
        self.adj[v]
            .iter()
            .copied()
            .filter(|&u| self.degree(u) >= p)
            .collect()
    }

    /// Breadth-first distances from `root`; `None` for unreachable vertices.
    pub fn distances_from(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[root] = Some(0);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn is_triangle(&self, a: usize, b: usize, c: usize) -> bool {
        a != b
            && b != c
            && a != c
            && self.has_edge(a, b)
            && self.has_edge(b, c)
            && self.has_edge(a, c)
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&u| index[u] != usize::MAX)
                    .map(|&u| index[u])
                    .collect()
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for (v, list) in self.adj.iter().enumerate() {
            adj[perm[v]] = list.iter().map(|&u| perm[u]).collect();
        }
        Graph::from_adjacency(adj)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        for (a, b) in [(u, v), (v, u)] {
            let pos = self.adj[a].binary_search(&b).unwrap_err();
            self.adj[a].insert(pos, b);
        }
        self.m += 1;
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        for (a, b) in [(u, v), (v, u)] {
            let pos = self.adj[a].binary_search(&b).expect("edge present");
            self.adj[a].remove(pos);
        }
        self.m -= 1;
    }
}

pub fn degree_sequence_of(g: &Graph) -> Result<DegreeSequence, GraphError> {
    g.degree_sequence()
}

pub fn is_connected(g: &Graph) -> bool {
    g.is_connected()
}

pub fn neighbors_with_min_degree(g: &Graph, v: usize, p: usize) -> Vec<usize> {
    g.neighbors_with_min_degree(v, p)
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n(),
            edges: self.edges().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        Graph::from_edge_list(repr.n, &repr.edges).map_err(serde::de::Error::custom)
    }
}
