//! Batch verification over every sequence of a class up to a size bound.

use serde::Serialize;

use super::extremal::{Direction, ExtremalReport, MajorizationVerdict, Oracle};
use super::surprising::{find_surprising_vertex, shift_hypotheses_hold};
use super::OracleError;
use crate::degseq::{enumerate_sequences, CyclicClass, DegreeSequence};
use crate::graphs::{shift, Graph};
use crate::indices::{
    classify, connectivity_function, BivariateFunction, Value, DEFAULT_GRID_BOUND,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Tree,
    Unicyclic,
    Bicyclic,
}

impl Suite {
    pub fn class(self) -> CyclicClass {
        match self {
            Suite::Tree => CyclicClass::TREE,
            Suite::Unicyclic => CyclicClass::UNICYCLIC,
            Suite::Bicyclic => CyclicClass::BICYCLIC,
        }
    }
}

/// Smallest order considered by the batch suites; `K_2` is outside the
/// domain of several catalog functions.
const MIN_N: usize = 3;

/// Checked extremal reports for every sequence of the suite's class with
/// `3 <= n <= max_n`.
pub fn verify_suite(
    suite: Suite,
    max_n: usize,
    f: &BivariateFunction,
    oracle: &Oracle,
) -> Result<Vec<ExtremalReport>, OracleError> {
    let class = classify(f, DEFAULT_GRID_BOUND.max(max_n));
    let mut out = Vec::new();
    for n in MIN_N..=max_n {
        for pi in enumerate_sequences(n, suite.class(), 1) {
            out.push(oracle.checked_extremal(&pi, f, &class)?);
        }
    }
    Ok(out)
}

/// Every strictly comparable pair `π ◁ π'` of class `c` with
/// `3 <= n <= max_n`.
pub fn verify_majorization_suite(
    c: CyclicClass,
    max_n: usize,
    f: &BivariateFunction,
    oracle: &Oracle,
) -> Result<Vec<MajorizationVerdict>, OracleError> {
    let mut out = Vec::new();
    for n in MIN_N..=max_n {
        let seqs = enumerate_sequences(n, c, 1);
        for a in &seqs {
            for b in &seqs {
                if a != b && a.majorized_by(b) {
                    out.push(oracle.majorization(a, b, f)?);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct SurprisingRecord {
    pub pi: DegreeSequence,
    pub pi_prime: DegreeSequence,
    /// 1-based positions: `d'_p = d_p + 1`, `d'_q = d_q - 1`.
    pub p: usize,
    pub q: usize,
    /// `(optimizer index, v_p, v_q, w)` of the first surprising vertex found
    /// in an extremal graph of `Γ(π)`.
    pub witness: Option<(usize, usize, usize, usize)>,
    /// `M_f` of the witness graph after moving `w` to `v_p`.
    pub shifted_value: Option<Value>,
    pub max_pi: Value,
    pub max_pi_prime: Value,
    pub strict: bool,
}

impl SurprisingRecord {
    /// A surprising vertex implies the strict increase.
    pub fn holds(&self) -> bool {
        self.witness.is_none() || self.strict
    }
}

/// Pairs `π ◁ π'` differing by one unit in positions `p < q`, with a search
/// for surprising vertices in the maximizers of `Γ(π)`.
pub fn verify_surprising_suite(
    c: CyclicClass,
    max_n: usize,
    f: &BivariateFunction,
    oracle: &Oracle,
) -> Result<Vec<SurprisingRecord>, OracleError> {
    let mut out = Vec::new();
    for n in MIN_N..=max_n {
        for pi in enumerate_sequences(n, c, 1) {
            let d = pi.degrees();
            for p in 0..n {
                for q in p + 1..n {
                    let mut raised = d.to_vec();
                    raised[p] += 1;
                    raised[q] -= 1;
                    let sorted = raised.windows(2).all(|w| w[0] >= w[1]);
                    if !sorted || raised[q] == 0 {
                        continue;
                    }
                    let Ok(pi_prime) = DegreeSequence::from_degrees(raised) else {
                        continue;
                    };
                    out.push(surprising_record(&pi, &pi_prime, p, q, f, oracle)?);
                }
            }
        }
    }
    Ok(out)
}

fn surprising_record(
    pi: &DegreeSequence,
    pi_prime: &DegreeSequence,
    p: usize,
    q: usize,
    f: &BivariateFunction,
    oracle: &Oracle,
) -> Result<SurprisingRecord, OracleError> {
    let low = oracle.extremal(pi, f, Direction::Max)?;
    let high = oracle.extremal(pi_prime, f, Direction::Max)?;
    let (dp, dq) = (pi.d(p + 1), pi.d(q + 1));
    let mut witness = None;
    let mut shifted_value = None;
    'search: for (index, g) in low.optimizers.iter().enumerate() {
        for a in (0..g.n()).filter(|&v| g.degree(v) == dp) {
            for b in (0..g.n()).filter(|&v| v != a && g.degree(v) == dq) {
                if let Some(w) = find_surprising_vertex(g, a, b)? {
                    witness = Some((index, a, b, w));
                    let moved = move_neighbor(g, a, b, w);
                    shifted_value = Some(connectivity_function(&moved, f)?);
                    break 'search;
                }
            }
        }
    }
    let strict = low
        .optimum_value
        .compare(high.optimum_value, pi.edge_count())
        == std::cmp::Ordering::Less;
    Ok(SurprisingRecord {
        pi: pi.clone(),
        pi_prime: pi_prime.clone(),
        p: p + 1,
        q: q + 1,
        witness,
        shifted_value,
        max_pi: low.optimum_value,
        max_pi_prime: high.optimum_value,
        strict,
    })
}

/// `G + pw - qw` without the degree precondition of [`shift`].
fn move_neighbor(g: &Graph, p: usize, q: usize, w: usize) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(x, y)| !((x, y) == (q.min(w), q.max(w))))
        .chain(std::iter::once((p, w)))
        .collect();
    Graph::from_edge_list(g.n(), &edges).expect("w is not adjacent to p")
}

/// Every connected graph on `n` vertices up to isomorphism.
pub fn enumerate_connected(n: usize, oracle: &Oracle) -> Result<Vec<Graph>, OracleError> {
    if n == 1 {
        // the only degree sequence, (0), has no positive entries
        return Ok(vec![Graph::empty(1)]);
    }
    let max_c = (n * n.saturating_sub(1) / 2 + 1).saturating_sub(n);
    let mut out = Vec::new();
    for c in 0..=max_c {
        for pi in enumerate_sequences(n, CyclicClass(c), 1) {
            out.extend(oracle.realizations(&pi)?.iter().cloned());
        }
    }
    Ok(out)
}

pub fn count_connected_graphs(n: usize, oracle: &Oracle) -> Result<usize, OracleError> {
    Ok(enumerate_connected(n, oracle)?.len())
}

/// Optimum of `M_f` over all connected `c`-cyclic graphs on `n` vertices,
/// optionally restricted to graphs with exactly `pendants` vertices of
/// degree 1.
#[derive(Debug, Clone, Serialize)]
pub struct ClassOptimum {
    pub n: usize,
    pub c: usize,
    pub pendants: Option<usize>,
    pub direction: Direction,
    pub value: Value,
    pub optimizers: Vec<Graph>,
}

pub fn class_extremal(
    n: usize,
    c: CyclicClass,
    pendants: Option<usize>,
    f: &BivariateFunction,
    direction: Direction,
    oracle: &Oracle,
) -> Result<ClassOptimum, OracleError> {
    let mut best: Option<(Value, Vec<Graph>)> = None;
    for pi in enumerate_sequences(n, c, 1) {
        if pendants.is_some_and(|k| pi.pendant_count() != k) {
            continue;
        }
        let report = oracle.extremal(&pi, f, direction)?;
        let edges = pi.edge_count();
        match &mut best {
            None => best = Some((report.optimum_value, report.optimizers)),
            Some((value, graphs)) => match report.optimum_value.compare(*value, edges) {
                std::cmp::Ordering::Equal => graphs.extend(report.optimizers),
                ord if (ord == std::cmp::Ordering::Greater) == (direction == Direction::Max) => {
                    *value = report.optimum_value;
                    *graphs = report.optimizers;
                }
                _ => {}
            },
        }
    }
    let (value, optimizers) = best.ok_or_else(|| {
        OracleError::NotComparable(format!("no {c} graph on {n} vertices matches the filter"))
    })?;
    Ok(ClassOptimum {
        n,
        c: c.0,
        pendants,
        direction,
        value,
        optimizers,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ShiftInstance {
    pub graph: Graph,
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub before: Value,
    pub after: Value,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ShiftSummary {
    pub graphs_checked: usize,
    pub instances: usize,
    pub failures: Vec<ShiftInstance>,
}

/// Apply every admissible shift to every connected graph with
/// `3 <= n <= max_n` and record those that do not strictly increase `M_f`.
pub fn verify_shift_lemma(
    max_n: usize,
    f: &BivariateFunction,
    oracle: &Oracle,
) -> Result<ShiftSummary, OracleError> {
    let mut summary = ShiftSummary::default();
    for n in MIN_N..=max_n {
        for g in enumerate_connected(n, oracle)? {
            summary.graphs_checked += 1;
            let before = connectivity_function(&g, f)?;
            for u in 0..n {
                for v in (0..n).filter(|&v| v != u) {
                    for &w in g.neighbors(v) {
                        if !shift_hypotheses_hold(&g, u, v, w) {
                            continue;
                        }
                        summary.instances += 1;
                        let after = connectivity_function(&shift(&g, u, v, w)?, f)?;
                        if after.compare(before, g.m()) != std::cmp::Ordering::Greater {
                            summary.failures.push(ShiftInstance {
                                graph: g.clone(),
                                u,
                                v,
                                w,
                                before,
                                after,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::builtin;
    use crate::oracle::EnumerationOptions;

    #[test]
    fn connected_counts() {
        let oracle = Oracle::new(EnumerationOptions::default());
        let counts: Vec<usize> = (1..=6)
            .map(|n| count_connected_graphs(n, &oracle).unwrap())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn small_suites_pass() {
        let oracle = Oracle::new(EnumerationOptions::default());
        let m2 = builtin("second_zagreb", None).unwrap();
        for suite in [Suite::Tree, Suite::Unicyclic, Suite::Bicyclic] {
            for r in verify_suite(suite, 6, &m2, &oracle).unwrap() {
                assert!(r.passed(), "{suite:?} {}", r.pi);
            }
        }
        let summary = verify_shift_lemma(5, &m2, &oracle).unwrap();
        assert!(summary.instances > 0);
        assert!(summary.failures.is_empty());
    }
}
