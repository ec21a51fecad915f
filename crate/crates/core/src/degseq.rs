//! Degree sequences: validation, cyclic class, majorization and unit
//! transformations.
//!
//! A [`DegreeSequence`] is always stored sorted non-increasing. Positions used
//! by [`UnitTransformation`] are 1-based indices into that sorted order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegSeqError {
    #[error("degree sequence is empty")]
    Empty,
    #[error("entry {index} is {value}, degrees must be positive")]
    NonPositiveEntry { index: usize, value: i64 },
    #[error("degree sequence is not graphical: {0}")]
    NotGraphical(String),
    #[error("degree sum {sum} is too small to connect {n} vertices")]
    NotConnectable { n: usize, sum: usize },
    #[error("unit transformation {from}->{to} needs d_{from} >= d_{to} + 2")]
    GapTooSmall { from: usize, to: usize },
    #[error("invalid unit transformation positions {from}->{to} for length {len}")]
    BadPositions { from: usize, to: usize, len: usize },
    #[error("sequences are not comparable under majorization")]
    NotComparable,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

/// A validated, connected-realizable degree sequence sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

/// Number of independent cycles `c`, so that `m = n + c - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicClass(pub usize);

impl CyclicClass {
    pub const TREE: CyclicClass = CyclicClass(0);
    pub const UNICYCLIC: CyclicClass = CyclicClass(1);
    pub const BICYCLIC: CyclicClass = CyclicClass(2);
}

impl fmt::Display for CyclicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Move one unit of degree from position `from` to position `to` (1-based,
/// `from < to`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitTransformation {
    pub from: usize,
    pub to: usize,
}

impl UnitTransformation {
    pub fn new(from: usize, to: usize) -> Self {
        UnitTransformation { from, to }
    }
}

/// Erdős–Gallai test on a non-increasing slice. Returns the first failing
/// `k` (1-based) if the sequence is not graphical; odd sums report `k = 0`.
pub fn erdos_gallai_violation(sorted: &[usize]) -> Option<usize> {
    let sum: usize = sorted.iter().sum();
    if sum % 2 == 1 {
        return Some(0);
    }
    let n = sorted.len();
    let mut lhs = 0usize;
    for k in 1..=n {
        lhs += sorted[k - 1];
        let rhs = k * (k - 1) + sorted[k..].iter().map(|&d| d.min(k)).sum::<usize>();
        if lhs > rhs {
            return Some(k);
        }
    }
    None
}

/// True iff the (unsorted) multiset of degrees is realizable by a simple graph.
pub fn is_graphical(degrees: &[usize]) -> bool {
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    erdos_gallai_violation(&sorted).is_none()
}

impl DegreeSequence {
    /// Validate a raw list of integers. The list need not be sorted.
    pub fn validate(raw: &[i64]) -> Result<Self, DegSeqError> {
        if raw.is_empty() {
            return Err(DegSeqError::Empty);
        }
        let mut degrees = Vec::with_capacity(raw.len());
        for (index, &value) in raw.iter().enumerate() {
            if value <= 0 {
                return Err(DegSeqError::NonPositiveEntry { index, value });
            }
            degrees.push(value as usize);
        }
        Self::from_degrees(degrees)
    }

    /// Validate an unsigned degree list. The list need not be sorted.
    pub fn from_degrees(mut degrees: Vec<usize>) -> Result<Self, DegSeqError> {
        if degrees.is_empty() {
            return Err(DegSeqError::Empty);
        }
        if let Some(index) = degrees.iter().position(|&d| d == 0) {
            return Err(DegSeqError::NonPositiveEntry { index, value: 0 });
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let n = degrees.len();
        let sum: usize = degrees.iter().sum();
        match erdos_gallai_violation(&degrees) {
            Some(0) => return Err(DegSeqError::NotGraphical(format!("odd degree sum {sum}"))),
            Some(k) => {
                return Err(DegSeqError::NotGraphical(format!(
                    "Erdős–Gallai inequality fails at k={k}"
                )))
            }
            None => {}
        }
        if sum / 2 + 1 < n {
            return Err(DegSeqError::NotConnectable { n, sum });
        }
        Ok(DegreeSequence { degrees })
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degree_sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn edge_count(&self) -> usize {
        self.degree_sum() / 2
    }

    /// `d_i` with 1-based `i`.
    pub fn d(&self, i: usize) -> usize {
        self.degrees[i - 1]
    }

    pub fn max_degree(&self) -> usize {
        self.degrees[0]
    }

    pub fn min_degree(&self) -> usize {
        *self.degrees.last().expect("non-empty")
    }

    pub fn pendant_count(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    pub fn cyclic_class(&self) -> CyclicClass {
        // validation guarantees sum/2 >= n - 1
        CyclicClass(self.edge_count() + 1 - self.len())
    }

    /// `self ◁ other`.
    pub fn majorized_by(&self, other: &DegreeSequence) -> bool {
        majorizes(&self.degrees, &other.degrees)
    }

    pub fn apply(&self, t: UnitTransformation) -> Result<DegreeSequence, DegSeqError> {
        let next = apply_unit_transformation(&self.degrees, t)?;
        DegreeSequence::from_degrees(next)
    }
}

/// Cyclic class of a validated sequence, as a free function.
pub fn cyclic_class(seq: &DegreeSequence) -> CyclicClass {
    seq.cyclic_class()
}

/// Cyclic class for a raw list; `NotConnectable` when it would be negative.
pub fn cyclic_class_of(degrees: &[usize]) -> Result<CyclicClass, DegSeqError> {
    let n = degrees.len();
    let sum: usize = degrees.iter().sum();
    if sum / 2 + 1 < n {
        return Err(DegSeqError::NotConnectable { n, sum });
    }
    Ok(CyclicClass(sum / 2 + 1 - n))
}

/// `pi ◁ pi_prime`: different, same length and sum, and every prefix sum of
/// `pi` is at most the corresponding prefix sum of `pi_prime`. Both slices are
/// expected non-increasing; incomparable input yields `false`.
pub fn majorizes(pi: &[usize], pi_prime: &[usize]) -> bool {
    if pi.len() != pi_prime.len() || pi == pi_prime {
        return false;
    }
    if pi.iter().sum::<usize>() != pi_prime.iter().sum::<usize>() {
        return false;
    }
    let mut a = 0usize;
    let mut b = 0usize;
    for (x, y) in pi.iter().zip(pi_prime) {
        a += x;
        b += y;
        if a > b {
            return false;
        }
    }
    true
}

/// Apply a unit transformation to a non-increasing slice and re-sort.
pub fn apply_unit_transformation(
    degrees: &[usize],
    t: UnitTransformation,
) -> Result<Vec<usize>, DegSeqError> {
    let len = degrees.len();
    if t.from == 0 || t.from >= t.to || t.to > len {
        return Err(DegSeqError::BadPositions {
            from: t.from,
            to: t.to,
            len,
        });
    }
    if degrees[t.from - 1] < degrees[t.to - 1] + 2 {
        return Err(DegSeqError::GapTooSmall {
            from: t.from,
            to: t.to,
        });
    }
    let mut out = degrees.to_vec();
    out[t.from - 1] -= 1;
    out[t.to - 1] += 1;
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// A chain `pi_prime = σ_0, σ_1, ..., σ_k = pi` of unit transformations.
///
/// Each step picks the first position `j` where the current sequence falls
/// below `pi` and the last position `i < j` where it exceeds `pi`, then moves
/// one unit from `i` to `j`. Entries strictly between `i` and `j` already
/// agree with `pi`, so the step never needs re-sorting and every intermediate
/// sequence still majorizes `pi`.
pub fn muirhead_chain(
    pi: &DegreeSequence,
    pi_prime: &DegreeSequence,
) -> Result<Vec<DegreeSequence>, DegSeqError> {
    if !pi.majorized_by(pi_prime) {
        return Err(DegSeqError::NotComparable);
    }
    let target = pi.degrees();
    let mut chain = vec![pi_prime.clone()];
    let mut current = pi_prime.degrees().to_vec();
    while current != target {
        let j = (0..current.len())
            .find(|&k| current[k] < target[k])
            .expect("majorization guarantees a deficit position");
        let i = (0..j)
            .rev()
            .find(|&k| current[k] > target[k])
            .expect("majorization guarantees a surplus before the first deficit");
        current = apply_unit_transformation(&current, UnitTransformation::new(i + 1, j + 1))?;
        chain.push(DegreeSequence::from_degrees(current.clone())?);
    }
    Ok(chain)
}

/// All connected-realizable `c`-cyclic sequences of length `n` with
/// `d_n >= min_degree`, in ascending lexicographic order.
pub fn enumerate_sequences(n: usize, c: CyclicClass, min_degree: usize) -> Vec<DegreeSequence> {
    if n < 2 {
        return Vec::new();
    }
    let total = 2 * (n + c.0 - 1);
    let min_degree = min_degree.max(1);
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(n);
    partitions(total, n, n - 1, min_degree, &mut parts, &mut out);
    out.sort();
    out
}

fn partitions(
    remaining: usize,
    slots: usize,
    max_part: usize,
    min_part: usize,
    parts: &mut Vec<usize>,
    out: &mut Vec<DegreeSequence>,
) {
    if slots == 0 {
        if remaining == 0 {
            if let Ok(seq) = DegreeSequence::from_degrees(parts.clone()) {
                out.push(seq);
            }
        }
        return;
    }
    if remaining < slots * min_part || remaining > slots * max_part {
        return;
    }
    let hi = max_part.min(remaining - (slots - 1) * min_part);
    for part in (min_part..=hi).rev() {
        parts.push(part);
        partitions(remaining - part, slots - 1, part, min_part, parts, out);
        parts.pop();
    }
}

/// Parse `5,4,3^3,2^10,1^8` into a raw integer list. Whitespace is ignored.
pub fn parse_degrees(text: &str) -> Result<Vec<i64>, DegSeqError> {
    let mut out = Vec::new();
    let mut offset = 0usize;
    for token in text.split(',') {
        let start = offset + (token.len() - token.trim_start().len());
        offset += token.len() + 1;
        let token = token.trim();
        if token.is_empty() {
            return Err(DegSeqError::Parse {
                position: start,
                message: "empty entry".into(),
            });
        }
        let (value, count) = match token.split_once('^') {
            Some((v, k)) => (v.trim(), Some((k.trim(), start + v.len() + 1))),
            None => (token, None),
        };
        let value: i64 = value.parse().map_err(|_| DegSeqError::Parse {
            position: start,
            message: format!("expected an integer, found {value:?}"),
        })?;
        let count = match count {
            Some((k, position)) => k.parse::<usize>().map_err(|_| DegSeqError::Parse {
                position,
                message: format!("expected a repeat count, found {k:?}"),
            })?,
            None => 1,
        };
        out.extend(std::iter::repeat_n(value, count));
    }
    if out.is_empty() {
        return Err(DegSeqError::Empty);
    }
    Ok(out)
}

impl FromStr for DegreeSequence {
    type Err = DegSeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DegreeSequence::validate(&parse_degrees(s)?)
    }
}

impl TryFrom<Vec<usize>> for DegreeSequence {
    type Error = DegSeqError;

    fn try_from(value: Vec<usize>) -> Result<Self, Self::Error> {
        DegreeSequence::from_degrees(value)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(value: DegreeSequence) -> Self {
        value.degrees
    }
}

/// Run-length form, e.g. `5,4,3^3,2^10,1^8`.
pub fn format_degrees(degrees: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < degrees.len() {
        let d = degrees[i];
        let run = degrees[i..].iter().take_while(|&&x| x == d).count();
        parts.push(if run > 1 {
            format!("{d}^{run}")
        } else {
            d.to_string()
        });
        i += run;
    }
    parts.join(",")
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_degrees(&self.degrees))
    }
}
