use serde::Serialize;

use super::{Graph, GraphError};

/// Breadth-first layers `A_0 = {root}, A_1, ...` of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerDecomposition {
    pub root: usize,
    pub height: Vec<usize>,
    pub layers: Vec<Vec<usize>>,
}

impl LayerDecomposition {
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }
}

pub fn layer_decomposition(g: &Graph, root: usize) -> Result<LayerDecomposition, GraphError> {
    if root >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: root,
            n: g.n(),
        });
    }
    let dist = g.distances_from(root);
    let height: Vec<usize> = dist
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(GraphError::Disconnected)?;
    let depth = height.iter().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth + 1];
    for (v, &h) in height.iter().enumerate() {
        layers[h].push(v);
    }
    Ok(LayerDecomposition {
        root,
        height,
        layers,
    })
}

/// The 2-core of a graph together with the original labels of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseGraph {
    pub graph: Graph,
    /// `vertices[i]` is the original label of vertex `i` in `graph`.
    pub vertices: Vec<usize>,
}

/// Strip pendant vertices until none remain. Trees reduce to the empty graph.
pub fn base_graph(g: &Graph) -> Result<BaseGraph, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let mut degree = g.degrees();
    let mut alive = vec![true; g.n()];
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &u in g.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    stack.push(u);
                }
            }
        }
    }
    let vertices: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
    Ok(BaseGraph {
        graph: g.induced_subgraph(&vertices),
        vertices,
    })
}
