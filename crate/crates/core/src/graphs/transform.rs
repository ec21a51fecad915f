use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Replace edges `u1w1`, `u2w2` by `w1w2`, `u1u2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSwitch {
    pub u1: usize,
    pub w1: usize,
    pub u2: usize,
    pub w2: usize,
}

impl EdgeSwitch {
    pub fn new(u1: usize, w1: usize, u2: usize, w2: usize) -> Self {
        EdgeSwitch { u1, w1, u2, w2 }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let EdgeSwitch { u1, w1, u2, w2 } = *self;
        for v in [u1, w1, u2, w2] {
            if v >= g.n() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: g.n(),
                });
            }
        }
        let vs = [u1, w1, u2, w2];
        for i in 0..4 {
            for j in i + 1..4 {
                if vs[i] == vs[j] {
                    return Err(GraphError::PreconditionViolated(format!(
                        "switch vertices must be distinct, got {vs:?}"
                    )));
                }
            }
        }
        if !g.has_edge(u1, w1) || !g.has_edge(u2, w2) {
            return Err(GraphError::PreconditionViolated(format!(
                "edges {u1}-{w1} and {u2}-{w2} must be present"
            )));
        }
        if g.has_edge(w1, w2) || g.has_edge(u1, u2) {
            return Err(GraphError::PreconditionViolated(format!(
                "edges {w1}-{w2} and {u1}-{u2} must be absent"
            )));
        }
        Ok(())
    }
}

/// Degree-preserving two-edge switch. The result may be disconnected.
pub fn edge_switch(g: &Graph, s: EdgeSwitch) -> Result<Graph, GraphError> {
    s.validate(g)?;
    let mut out = g.clone();
    out.delete_edge(s.u1, s.w1);
    out.delete_edge(s.u2, s.w2);
    out.insert_edge(s.w1, s.w2);
    out.insert_edge(s.u1, s.u2);
    Ok(out)
}

/// `G + wu - wv`: move neighbor `w` from `v` to `u`.
///
/// Requires `wv ∈ E`, `w ∉ N[u]` and `d(u) >= d(v) >= 2`.
pub fn shift(g: &Graph, u: usize, v: usize, w: usize) -> Result<Graph, GraphError> {
    for x in [u, v, w] {
        if x >= g.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: x,
                n: g.n(),
            });
        }
    }
    if u == v {
        return Err(GraphError::PreconditionViolated(
            "u and v must differ".into(),
        ));
    }
    if !g.has_edge(w, v) {
        return Err(GraphError::PreconditionViolated(format!(
            "{w}-{v} is not an edge"
        )));
    }
    if w == u || g.has_edge(w, u) {
        return Err(GraphError::PreconditionViolated(format!(
            "{w} lies in N[{u}]"
        )));
    }
    if g.degree(u) < g.degree(v) || g.degree(v) < 2 {
        return Err(GraphError::PreconditionViolated(format!(
            "need d({u}) >= d({v}) >= 2, got {} and {}",
            g.degree(u),
            g.degree(v)
        )));
    }
    let mut out = g.clone();
    out.delete_edge(w, v);
    out.insert_edge(w, u);
    Ok(out)
}
