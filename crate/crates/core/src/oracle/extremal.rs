use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use super::enumerate::{enumerate_realizations, EnumerationOptions};
use super::OracleError;
use crate::builders::{b_m, greedy_tree, u_m};
use crate::degseq::{CyclicClass, DegreeSequence};
use crate::graphs::{is_bfs_graph, Graph};
use crate::indices::{
    classify, connectivity_function, BivariateFunction, FunctionClass, Value, Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Max,
    Min,
}

impl Direction {
    /// The direction in which `verdict` makes the constructions extremal.
    pub fn for_verdict(verdict: Verdict) -> Option<Direction> {
        match verdict {
            Verdict::Escalating => Some(Direction::Max),
            Verdict::DeEscalating => Some(Direction::Min),
            _ => None,
        }
    }

    fn improves(self, ord: Ordering) -> bool {
        match self {
            Direction::Max => ord == Ordering::Greater,
            Direction::Min => ord == Ordering::Less,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalReport {
    pub pi: DegreeSequence,
    pub f: String,
    pub direction: Direction,
    pub optimum_value: Value,
    /// Canonical forms of every optimizer, in canonical-code order.
    pub optimizers: Vec<Graph>,
    pub constructor: Option<&'static str>,
    pub constructor_value: Option<Value>,
    pub constructor_matches: Option<bool>,
    pub count_enumerated: usize,
    /// Some optimizer is a BFS-graph (checked when `d_n = 1`).
    pub bfs_optimizer: Option<bool>,
    /// Some optimizer has a triangle on vertices of degrees `d_1, d_2, d_3`
    /// (checked when `d_n = 1` and the graph has a cycle).
    pub triangle_optimizer: Option<bool>,
}

impl ExtremalReport {
    /// No recorded check failed.
    pub fn passed(&self) -> bool {
        [
            self.constructor_matches,
            self.bfs_optimizer,
            self.triangle_optimizer,
        ]
        .iter()
        .all(|c| *c != Some(false))
    }
}

/// Whether a strict inequality is a proven claim or only probed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Theorem,
    ConjectureCheck,
}

#[derive(Debug, Clone, Serialize)]
pub struct MajorizationVerdict {
    pub pi: DegreeSequence,
    pub pi_prime: DegreeSequence,
    pub f: String,
    pub direction: Direction,
    pub claim: Claim,
    pub value_pi: Value,
    pub value_pi_prime: Value,
    /// `max Γ(π) < max Γ(π')` for `Max`, `min Γ(π') < min Γ(π)` for `Min`.
    pub strict_inequality_holds: bool,
}

/// Enumeration results shared across many queries.
pub struct Oracle {
    pub opts: EnumerationOptions,
    cache: Mutex<HashMap<Vec<usize>, Arc<Vec<Graph>>>>,
}

impl Oracle {
    pub fn new(opts: EnumerationOptions) -> Self {
        Oracle {
            opts,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn realizations(&self, pi: &DegreeSequence) -> Result<Arc<Vec<Graph>>, OracleError> {
        if let Some(hit) = self.cache.lock().expect("cache lock").get(pi.degrees()) {
            return Ok(Arc::clone(hit));
        }
        let graphs = Arc::new(enumerate_realizations(pi, &self.opts)?);
        self.cache
            .lock()
            .expect("cache lock")
            .insert(pi.degrees().to_vec(), Arc::clone(&graphs));
        Ok(graphs)
    }

    /// Brute-force optimum of `M_f` over `Γ(π)` with the matching
    /// construction's value.
    pub fn extremal(
        &self,
        pi: &DegreeSequence,
        f: &BivariateFunction,
        direction: Direction,
    ) -> Result<ExtremalReport, OracleError> {
        let graphs = self.realizations(pi)?;
        let edges = pi.edge_count();
        let mut best: Option<Value> = None;
        let mut optimizers = Vec::new();
        for g in graphs.iter() {
            let v = connectivity_function(g, f)?;
            match best.map(|b| v.compare(b, edges)) {
                None => {
                    best = Some(v);
                    optimizers = vec![g.clone()];
                }
                Some(ord) if direction.improves(ord) => {
                    best = Some(v);
                    optimizers = vec![g.clone()];
                }
                Some(Ordering::Equal) => optimizers.push(g.clone()),
                Some(_) => {}
            }
        }
        let optimum_value = best.ok_or_else(|| {
            OracleError::NotComparable(format!("{pi} has no connected realization"))
        })?;
        let (constructor, built) = match pi.cyclic_class() {
            CyclicClass::TREE => (Some("greedy_tree"), Some(greedy_tree(pi)?)),
            CyclicClass::UNICYCLIC => (Some("u_m"), Some(u_m(pi)?)),
            CyclicClass::BICYCLIC => (Some("b_m"), Some(b_m(pi)?)),
            _ => (None, None),
        };
        let constructor_value = built
            .as_ref()
            .map(|g| connectivity_function(g, f))
            .transpose()?;
        let constructor_matches =
            constructor_value.map(|v| v.compare(optimum_value, edges) == Ordering::Equal);
        Ok(ExtremalReport {
            pi: pi.clone(),
            f: f.to_string(),
            direction,
            optimum_value,
            optimizers,
            constructor,
            constructor_value,
            constructor_matches,
            count_enumerated: graphs.len(),
            bfs_optimizer: None,
            triangle_optimizer: None,
        })
    }

    /// The extremal report plus the structural checks on the optimizers.
    pub fn checked_extremal(
        &self,
        pi: &DegreeSequence,
        f: &BivariateFunction,
        class: &FunctionClass,
    ) -> Result<ExtremalReport, OracleError> {
        let direction = Direction::for_verdict(class.verdict)
            .ok_or_else(|| OracleError::NotClassified(f.to_string()))?;
        let mut report = self.extremal(pi, f, direction)?;
        if pi.min_degree() == 1 {
            let mut bfs = false;
            for g in &report.optimizers {
                if is_bfs_graph(g)?.is_some() {
                    bfs = true;
                    break;
                }
            }
            report.bfs_optimizer = Some(bfs);
            if pi.cyclic_class().0 >= 1 {
                let top = [pi.d(1), pi.d(2), pi.d(3)];
                report.triangle_optimizer =
                    Some(report.optimizers.iter().any(|g| has_top_triangle(g, top)));
            }
        }
        Ok(report)
    }

    pub fn majorization(
        &self,
        pi: &DegreeSequence,
        pi_prime: &DegreeSequence,
        f: &BivariateFunction,
    ) -> Result<MajorizationVerdict, OracleError> {
        if pi == pi_prime || pi.len() != pi_prime.len() || !pi.majorized_by(pi_prime) {
            return Err(OracleError::NotComparable(format!(
                "{pi} is not strictly below {pi_prime}"
            )));
        }
        let grid = grid_bound(pi_prime);
        let class = classify(f, grid);
        let (direction, claim) = match class.verdict {
            Verdict::Escalating if class.good => (Direction::Max, Claim::Theorem),
            Verdict::Escalating => (Direction::Max, Claim::ConjectureCheck),
            Verdict::DeEscalating => (Direction::Min, Claim::ConjectureCheck),
            _ => return Err(OracleError::NotClassified(f.to_string())),
        };
        let a = self.extremal(pi, f, direction)?.optimum_value;
        let b = self.extremal(pi_prime, f, direction)?.optimum_value;
        let edges = pi.edge_count();
        let strict = match direction {
            Direction::Max => a.compare(b, edges) == Ordering::Less,
            Direction::Min => b.compare(a, edges) == Ordering::Less,
        };
        Ok(MajorizationVerdict {
            pi: pi.clone(),
            pi_prime: pi_prime.clone(),
            f: f.to_string(),
            direction,
            claim,
            value_pi: a,
            value_pi_prime: b,
            strict_inequality_holds: strict,
        })
    }
}

/// Default classification grid for a run over `pi`: `max(12, d_1 + 1)`.
pub(crate) fn grid_bound(pi: &DegreeSequence) -> usize {
    crate::indices::DEFAULT_GRID_BOUND.max(pi.max_degree() + 1)
}

fn has_top_triangle(g: &Graph, top: [usize; 3]) -> bool {
    let mut want = top;
    want.sort_unstable();
    let candidates: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= want[0]).collect();
    for (i, &a) in candidates.iter().enumerate() {
        for (j, &b) in candidates.iter().enumerate().skip(i + 1) {
            if !g.has_edge(a, b) {
                continue;
            }
            for &c in &candidates[j + 1..] {
                let mut got = [g.degree(a), g.degree(b), g.degree(c)];
                got.sort_unstable();
                if got == want && g.is_triangle(a, b, c) {
                    return true;
                }
            }
        }
    }
    false
}

pub fn extremal_by_bruteforce(
    pi: &DegreeSequence,
    f: &BivariateFunction,
    direction: Direction,
    opts: &EnumerationOptions,
) -> Result<ExtremalReport, OracleError> {
    Oracle::new(*opts).extremal(pi, f, direction)
}

/// Fails with `ConstructionMismatch` unless the construction attains the
/// optimum in the direction given by `class` and the optimizer structure
/// checks pass.
pub fn verify_extremal_construction(
    pi: &DegreeSequence,
    f: &BivariateFunction,
    class: &FunctionClass,
    opts: &EnumerationOptions,
) -> Result<ExtremalReport, OracleError> {
    let report = Oracle::new(*opts).checked_extremal(pi, f, class)?;
    if report.passed() {
        Ok(report)
    } else {
        Err(OracleError::ConstructionMismatch(Box::new(report)))
    }
}

pub fn verify_majorization(
    pi: &DegreeSequence,
    pi_prime: &DegreeSequence,
    f: &BivariateFunction,
    opts: &EnumerationOptions,
) -> Result<MajorizationVerdict, OracleError> {
    Oracle::new(*opts).majorization(pi, pi_prime, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::builtin;

    fn pi(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    fn opts() -> EnumerationOptions {
        EnumerationOptions::default()
    }

    #[test]
    fn cycle_four() {
        let f = builtin("second_zagreb", None).unwrap();
        let r = extremal_by_bruteforce(&pi("2,2,2,2"), &f, Direction::Max, &opts()).unwrap();
        assert_eq!(r.optimum_value, Value::Exact(16));
        assert_eq!(r.count_enumerated, 1);
        assert_eq!(r.constructor_matches, Some(true));
    }

    #[test]
    fn small_unicyclic_and_tree() {
        let m2 = builtin("second_zagreb", None).unwrap();
        let r = extremal_by_bruteforce(&pi("3,2,2,2,1"), &m2, Direction::Max, &opts()).unwrap();
        assert_eq!(r.constructor_matches, Some(true));
        let z2 = builtin("reformulated_zagreb", None).unwrap();
        let r = extremal_by_bruteforce(&pi("3,2,1,1,1"), &z2, Direction::Max, &opts()).unwrap();
        assert_eq!(r.constructor, Some("greedy_tree"));
        assert_eq!(r.constructor_matches, Some(true));
    }

    #[test]
    fn checked_report_for_kite_sequence() {
        let z2 = builtin("reformulated_zagreb", None).unwrap();
        let class = classify(&z2, 12);
        let r = verify_extremal_construction(&pi("4,3,3,2,2,1,1"), &z2, &class, &opts()).unwrap();
        assert_eq!(r.bfs_optimizer, Some(true));
        assert_eq!(r.triangle_optimizer, Some(true));
    }

    #[test]
    fn majorization_example() {
        let z2 = builtin("reformulated_zagreb", None).unwrap();
        let v = verify_majorization(&pi("2^5"), &pi("3,2,2,2,1"), &z2, &opts()).unwrap();
        assert_eq!(v.claim, Claim::Theorem);
        assert!(v.strict_inequality_holds);
        assert_eq!(v.value_pi, Value::Exact(20));
        assert!(matches!(
            verify_majorization(&pi("2^5"), &pi("2^5"), &z2, &opts()),
            Err(OracleError::NotComparable(_))
        ));
    }

    #[test]
    fn top_triangle_detection() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        assert!(has_top_triangle(&g, [3, 2, 2]));
        assert!(!has_top_triangle(&g, [3, 2, 1]));
    }
}
