//! Connected realizations of a degree sequence, one per isomorphism class.
//!
//! Vertices are processed in degree order. Vertex `i` picks its remaining
//! neighbors among later vertices; later vertices with the same degree and
//! the same neighbors among `0..i` are interchangeable, so only prefixes of
//! each such class are chosen. Branches die when the residual degrees stop
//! being graphical or a finished component closes off early. Survivors are
//! deduplicated by canonical code.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canon::{canonical_code_bits, graph_from_code, Bits, Code, CANON_MAX_N};
use super::OracleError;
use crate::degseq::{erdos_gallai_violation, CyclicClass, DegreeSequence};
use crate::graphs::Graph;

/// Environment variable overriding the default enumeration bound.
pub const MAX_N_ENV: &str = "EXTREMAL_MAX_N";
pub const DEFAULT_MAX_N: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub max_n: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        let max_n = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_N)
            .min(CANON_MAX_N);
        EnumerationOptions {
            max_n,
            workers: None,
        }
    }
}

impl EnumerationOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers.max(1));
        self
    }

    pub(crate) fn run<R: Send>(&self, job: impl FnOnce() -> R + Send) -> R {
        match self.workers {
            Some(w) => match rayon::ThreadPoolBuilder::new().num_threads(w).build() {
                Ok(pool) => pool.install(job),
                Err(_) => job(),
            },
            None => job(),
        }
    }
}

/// Every connected graph with degree sequence `pi`, one per isomorphism
/// class, as canonical forms in increasing code order.
pub fn enumerate_realizations(
    pi: &DegreeSequence,
    opts: &EnumerationOptions,
) -> Result<Vec<Graph>, OracleError> {
    let n = pi.len();
    if n > opts.max_n {
        return Err(OracleError::TooLarge { n, max: opts.max_n });
    }
    let codes = opts.run(|| realization_codes(pi.degrees()));
    Ok(codes.into_iter().map(|c| graph_from_code(n, c)).collect())
}

/// Every connected graph on `n` vertices with cyclomatic number `c`.
pub fn enumerate_class(
    n: usize,
    c: CyclicClass,
    opts: &EnumerationOptions,
) -> Result<Vec<(DegreeSequence, Vec<Graph>)>, OracleError> {
    crate::degseq::enumerate_sequences(n, c, 1)
        .into_iter()
        .map(|pi| enumerate_realizations(&pi, opts).map(|gs| (pi, gs)))
        .collect()
}

fn realization_codes(degrees: &[usize]) -> BTreeSet<Code> {
    let n = degrees.len();
    if n == 1 {
        return BTreeSet::from([0]);
    }
    let root = State::new(degrees);
    let shards = root.choices(0);
    shards
        .into_par_iter()
        .map(|chosen| {
            let mut found = BTreeSet::new();
            let mut st = root.clone();
            st.connect(0, chosen);
            if st.viable(0) {
                st.descend(1, &mut found);
            }
            found
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

#[derive(Clone)]
struct State<'a> {
    degrees: &'a [usize],
    residual: Vec<usize>,
    adj: Vec<u16>,
}

impl<'a> State<'a> {
    fn new(degrees: &'a [usize]) -> Self {
        State {
            degrees,
            residual: degrees.to_vec(),
            adj: vec![0; degrees.len()],
        }
    }

    fn n(&self) -> usize {
        self.degrees.len()
    }

    /// Neighbor sets for vertex `i` among later vertices, up to swapping
    /// interchangeable candidates.
    fn choices(&self, i: usize) -> Vec<u16> {
        let n = self.n();
        let earlier: u16 = ((1u32 << i) - 1) as u16;
        // group candidates j > i with positive residual into classes
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut keys: Vec<(usize, u16)> = Vec::new();
        for j in i + 1..n {
            if self.residual[j] == 0 {
                continue;
            }
            let key = (self.degrees[j], self.adj[j] & earlier);
            match keys.iter().position(|k| *k == key) {
                Some(c) => classes[c].push(j),
                None => {
                    keys.push(key);
                    classes.push(vec![j]);
                }
            }
        }
        let mut out = Vec::new();
        pick(&classes, 0, self.residual[i], 0, &mut out);
        out
    }

    fn connect(&mut self, i: usize, chosen: u16) {
        for j in 0..self.n() {
            if chosen >> j & 1 == 1 {
                self.adj[i] |= 1 << j;
                self.adj[j] |= 1 << i;
                self.residual[j] -= 1;
            }
        }
        self.residual[i] = 0;
    }

    /// After vertices `0..=i` are complete: residuals of the rest are
    /// graphical and no completed component is cut off from the rest.
    fn viable(&self, i: usize) -> bool {
        let n = self.n();
        let mut rest: Vec<usize> = self.residual[i + 1..].to_vec();
        rest.sort_unstable_by(|a, b| b.cmp(a));
        if erdos_gallai_violation(&rest).is_some() {
            return false;
        }
        // a component made only of saturated vertices must be everything
        let mut seen: u16 = 0;
        for start in 0..=i {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp: u16 = 1 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u16;
                for v in 0..n {
                    if frontier >> v & 1 == 1 {
                        next |= self.adj[v];
                    }
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            let open = (0..n).any(|v| comp >> v & 1 == 1 && self.residual[v] > 0);
            if !open && (comp.count_ones() as usize) < n {
                return false;
            }
        }
        true
    }

    fn descend(&mut self, i: usize, found: &mut BTreeSet<Code>) {
        let n = self.n();
        if i == n {
            let bits = Bits {
                adj: self.adj.clone(),
            };
            if is_connected(&bits) {
                found.insert(canonical_code_bits(&bits));
            }
            return;
        }
        if self.residual[i] == 0 {
            if self.viable(i) {
                self.descend(i + 1, found);
            }
            return;
        }
        for chosen in self.choices(i) {
            let saved = (self.residual.clone(), self.adj.clone());
            self.connect(i, chosen);
            if self.viable(i) {
                self.descend(i + 1, found);
            }
            (self.residual, self.adj) = saved;
        }
    }
}

/// All ways of taking `need` vertices as prefixes of the classes from
/// `classes[c..]`.
fn pick(classes: &[Vec<usize>], c: usize, need: usize, acc: u16, out: &mut Vec<u16>) {
    if need == 0 {
        out.push(acc);
        return;
    }
    if c == classes.len() {
        return;
    }
    let available: usize = classes[c..].iter().map(Vec::len).sum();
    if available < need {
        return;
    }
    let mut mask = acc;
    pick(classes, c + 1, need, acc, out);
    for (taken, &v) in classes[c].iter().enumerate().take(need) {
        mask |= 1 << v;
        pick(classes, c + 1, need - taken - 1, mask, out);
    }
}

fn is_connected(bits: &Bits) -> bool {
    let n = bits.n();
    let all: u16 = ((1u32 << n) - 1) as u16;
    let mut comp: u16 = 1;
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0u16;
        for v in 0..n {
            if frontier >> v & 1 == 1 {
                next |= bits.adj[v];
            }
        }
        frontier = next & !comp;
        comp |= next;
    }
    comp == all
}
