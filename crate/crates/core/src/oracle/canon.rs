//! Canonical forms of small graphs.
//!
//! The canonical code of a graph is the largest adjacency code over the
//! leaves of an individualization-refinement search tree, where the code of
//! an ordering `σ` reads the upper triangle of the relabelled adjacency
//! matrix row by row, most significant bit first. Branches that differ only
//! by swapping two twins (`N(a) \ {b} = N(b) \ {a}`) are explored once.

use crate::graphs::Graph;

/// Largest `n` the bitmask representation supports.
pub const CANON_MAX_N: usize = 16;

pub type Code = u128;

/// Adjacency as one bitmask per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Bits {
    pub adj: Vec<u16>,
}

impl Bits {
    pub fn from_graph(g: &Graph) -> Self {
        assert!(
            g.n() <= CANON_MAX_N,
            "graph too large for bitmask canonical form"
        );
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u16, |acc, &u| acc | 1 << u))
            .collect();
        Bits { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    fn code_of(&self, order: &[usize]) -> Code {
        let n = self.n();
        let mut code: Code = 0;
        for i in 0..n {
            let row = self.adj[order[i]];
            for &v in &order[i + 1..] {
                code = code << 1 | Code::from(row >> v & 1);
            }
        }
        code
    }
}

/// Rebuild the graph on `n` vertices whose canonical code is `code`.
pub fn graph_from_code(n: usize, code: Code) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut adj = vec![Vec::new(); n];
    let mut bit = pairs;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if code >> bit & 1 == 1 {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    Graph::from_adjacency(adj)
}

pub fn canonical_code(g: &Graph) -> Code {
    canonical_code_bits(&Bits::from_graph(g))
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_code(g.n(), canonical_code(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_code(a) == canonical_code(b)
}

pub(crate) fn canonical_code_bits(bits: &Bits) -> Code {
    let n = bits.n();
    if n <= 1 {
        return 0;
    }
    let twin = twin_classes(bits);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut by_degree: Vec<(u32, usize)> = (0..n).map(|v| (bits.adj[v].count_ones(), v)).collect();
    by_degree.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (d, v) in by_degree {
        match cells.last_mut() {
            Some(cell) if bits.adj[cell[0]].count_ones() == d => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    refine(bits, &mut cells);
    let mut best = None;
    search(bits, &twin, cells, &mut best);
    best.expect("search visits at least one leaf")
}

fn twin_classes(bits: &Bits) -> Vec<usize> {
    let n = bits.n();
    let mut class: Vec<usize> = (0..n).collect();
    for a in 0..n {
        if class[a] != a {
            continue;
        }
        for (b, cb) in class.iter_mut().enumerate().skip(a + 1) {
            if bits.adj[a] & !(1 << b) == bits.adj[b] & !(1 << a) {
                *cb = a;
            }
        }
    }
    class
}

/// Split cells by neighbor counts into each cell until the partition is
/// equitable. Sub-cells are ordered by decreasing count, so the result
/// depends only on the graph structure and the incoming cell order.
fn refine(bits: &Bits, cells: &mut Vec<Vec<usize>>) {
    let mut changed = true;
    while changed {
        changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: u16 = cells[s].iter().fold(0, |acc, &v| acc | 1 << v);
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.drain(..) {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((bits.adj[v] & splitter).count_ones(), v))
                    .collect();
                keyed.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if keyed[0].0 != keyed[keyed.len() - 1].0 {
                    changed = true;
                }
            }
            *cells = next;
            s += 1;
        }
    }
}

fn search(bits: &Bits, twin: &[usize], cells: Vec<Vec<usize>>, best: &mut Option<Code>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let code = bits.code_of(&order);
        if best.is_none_or(|b| code > b) {
            *best = Some(code);
        }
        return;
    };
    let mut seen: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        if seen.contains(&twin[v]) {
            continue;
        }
        seen.push(twin[v]);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend(cells[..target].iter().cloned());
        child.push(vec![v]);
        child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
        child.extend(cells[target + 1..].iter().cloned());
        refine(bits, &mut child);
        search(bits, twin, child, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k == p.len() {
                out.push(p.clone());
                return;
            }
            for i in k..p.len() {
                p.swap(k, i);
                rec(k + 1, p, out);
                p.swap(k, i);
            }
        }
        rec(0, &mut p, &mut out);
        out
    }

    #[test]
    fn code_roundtrip() {
        let g =
            Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let c = canonical_code(&g);
        let h = graph_from_code(5, c);
        assert_eq!(canonical_code(&h), c);
        assert_eq!(h.m(), 6);
    }

    #[test]
    fn invariant_under_relabelling() {
        let graphs = [
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap(),
            Graph::from_edge_list(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)]).unwrap(),
            Graph::from_edge_list(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3)])
                .unwrap(),
        ];
        for g in &graphs {
            let c = canonical_code(g);
            for perm in all_permutations(6) {
                assert_eq!(canonical_code(&g.relabel(&perm)), c);
            }
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let c6 =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let two_triangles =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles));
        assert!(are_isomorphic(&c6, &c6.relabel(&[3, 1, 4, 0, 5, 2])));
    }

    #[test]
    fn matches_permutation_maximum_on_small_graphs() {
        // the search returns the maximum over a subset of orderings that
        // contains every ordering compatible with the refined partition;
        // compare against the full maximum for every graph on 5 vertices
        let n = 5;
        let perms = all_permutations(n);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let mut by_search = std::collections::HashMap::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let bits = Bits::from_graph(&g);
            let full = perms.iter().map(|p| bits.code_of(p)).max().unwrap();
            let ours = canonical_code(&g);
            // equal codes for isomorphic graphs and only for them
            let prev = by_search.insert(full, ours);
            if let Some(prev) = prev {
                assert_eq!(prev, ours);
            }
        }
        let distinct: std::collections::HashSet<_> = by_search.values().collect();
        assert_eq!(distinct.len(), 34);
    }
}
