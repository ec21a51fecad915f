//! Grid classification of symmetric functions.
//!
//! `f` is escalating when
//! `f(x1, x2) + f(y1, y2) >= f(x2, y1) + f(x1, y2)` for all `x1 >= y1`,
//! `x2 >= y2`, strictly when `x1 > y1` and `x2 > y2`; de-escalating with the
//! inequality reversed. Both are checked over integers in `[1, D]`.

use std::cmp::Ordering;

use serde::Serialize;

use super::{BivariateFunction, IndexError, Value};

pub const DEFAULT_GRID_BOUND: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Escalating,
    DeEscalating,
    BothDegenerate,
    Neither,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Escalating => "escalating",
            Verdict::DeEscalating => "de-escalating",
            Verdict::BothDegenerate => "both-degenerate",
            Verdict::Neither => "neither",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Quadruple {
    pub x1: usize,
    pub y1: usize,
    pub x2: usize,
    pub y2: usize,
}

impl Quadruple {
    fn is_strict(&self) -> bool {
        self.x1 > self.y1 && self.x2 > self.y2
    }
}

/// Where the good-escalating conditions first fail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum GoodWitness {
    FirstDerivative { x: f64, y: f64, value: f64 },
    SecondDerivative { x: f64, y: f64, value: f64 },
    Discrete { x1: usize, y1: usize, x2: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GoodCheck {
    pub holds: bool,
    pub witness: Option<GoodWitness>,
    /// Discrete instances skipped because an argument left the domain
    /// (always including every `y1 = 1` instance for the catalog).
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FunctionClass {
    pub name: String,
    pub alpha: Option<f64>,
    #[serde(rename = "D")]
    pub grid_bound: usize,
    pub verdict: Verdict,
    pub good: bool,
    /// First quadruple (lexicographic in `x1, y1, x2, y2`) violating the
    /// escalating condition, unless the verdict is escalating.
    pub witness: Option<Quadruple>,
    /// Same for the de-escalating condition.
    pub de_escalating_witness: Option<Quadruple>,
    pub good_witness: Option<GoodWitness>,
    pub skipped_quadruples: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sign {
    Neg,
    Zero,
    Pos,
}

fn sign_of(lhs: [Value; 2], rhs: [Value; 2]) -> Sign {
    let diff = (lhs[0] + lhs[1]) - (rhs[0] + rhs[1]);
    match diff {
        Value::Exact(d) => match d.cmp(&0) {
            Ordering::Less => Sign::Neg,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Pos,
        },
        Value::Real(d) => {
            let scale = lhs
                .iter()
                .chain(&rhs)
                .map(|v| v.as_f64().abs())
                .sum::<f64>()
                .max(1.0);
            let tol = 1e-12 * scale;
            if d > tol {
                Sign::Pos
            } else if d < -tol {
                Sign::Neg
            } else {
                Sign::Zero
            }
        }
    }
}

fn values<const K: usize>(f: &BivariateFunction, args: [(usize, usize); K]) -> Option<[Value; K]> {
    let mut out = [Value::Exact(0); K];
    for (slot, (x, y)) in out.iter_mut().zip(args) {
        if x == 0 || y == 0 {
            return None;
        }
        *slot = f.value(x, y).ok()?;
    }
    Some(out)
}

/// Classify `f` on the integer grid `[1, D]`.
pub fn classify(f: &BivariateFunction, d: usize) -> FunctionClass {
    let mut esc_witness = None;
    let mut de_witness = None;
    let mut ge_everywhere = true;
    let mut le_everywhere = true;
    let mut skipped = 0;
    for x1 in 1..=d {
        for y1 in 1..=x1 {
            for x2 in 1..=d {
                for y2 in 1..=x2 {
                    let q = Quadruple { x1, y1, x2, y2 };
                    let Some([a, b, c, e]) = values(f, [(x1, x2), (y1, y2), (x2, y1), (x1, y2)])
                    else {
                        skipped += 1;
                        continue;
                    };
                    let s = sign_of([a, b], [c, e]);
                    ge_everywhere &= s != Sign::Neg;
                    le_everywhere &= s != Sign::Pos;
                    let esc_ok = if q.is_strict() {
                        s == Sign::Pos
                    } else {
                        s != Sign::Neg
                    };
                    let de_ok = if q.is_strict() {
                        s == Sign::Neg
                    } else {
                        s != Sign::Pos
                    };
                    if !esc_ok && esc_witness.is_none() {
                        esc_witness = Some(q);
                    }
                    if !de_ok && de_witness.is_none() {
                        de_witness = Some(q);
                    }
                }
            }
        }
    }
    let verdict = match (esc_witness, de_witness) {
        (None, _) => Verdict::Escalating,
        (_, None) => Verdict::DeEscalating,
        _ if ge_everywhere && le_everywhere => Verdict::BothDegenerate,
        _ => Verdict::Neither,
    };
    let (good, good_witness) = if verdict == Verdict::Escalating {
        let check = good_conditions(f, d);
        (check.holds, check.witness)
    } else {
        (false, None)
    };
    FunctionClass {
        name: f.name().to_string(),
        alpha: f.alpha(),
        grid_bound: d,
        verdict,
        good,
        witness: esc_witness,
        de_escalating_witness: de_witness,
        good_witness,
        skipped_quadruples: skipped,
    }
}

/// Check the good-escalating conditions. Requires `f` to classify as
/// escalating on the same grid.
pub fn check_good_escalating(f: &BivariateFunction, d: usize) -> Result<GoodCheck, IndexError> {
    let class = classify(f, d);
    if class.verdict != Verdict::Escalating {
        return Err(IndexError::NotEscalating(f.to_string()));
    }
    Ok(good_conditions(f, d))
}

const FIRST_STEP: f64 = 1e-4;
const SECOND_STEP: f64 = 1e-2;

/// Central difference for `∂f/∂x` with step `1e-4`.
pub fn finite_difference_dx(f: &BivariateFunction, x: f64, y: f64) -> f64 {
    let h = FIRST_STEP;
    (f.eval(x + h, y) - f.eval(x - h, y)) / (2.0 * h)
}

/// Central second difference for `∂²f/∂x²`, Richardson-extrapolated from
/// steps `h` and `h/2`.
pub fn finite_difference_dxx(f: &BivariateFunction, x: f64, y: f64) -> f64 {
    let second = |h: f64| (f.eval(x + h, y) - 2.0 * f.eval(x, y) + f.eval(x - h, y)) / (h * h);
    let (coarse, fine) = (second(SECOND_STEP), second(SECOND_STEP / 2.0));
    (4.0 * fine - coarse) / 3.0
}

fn good_conditions(f: &BivariateFunction, d: usize) -> GoodCheck {
    // integer and half-integer points of [1, D]^2
    let points: Vec<f64> = (2..=2 * d).map(|k| k as f64 / 2.0).collect();
    for &x in &points {
        for &y in &points {
            if !f.in_domain_real(x, y) {
                continue;
            }
            let scale = f.eval(x, y).abs().max(1.0);
            let (first, closed_first) = match f.dx(x, y) {
                Some(v) => (v, true),
                None => (finite_difference_dx(f, x, y), false),
            };
            if first.is_nan() || first <= 0.0 || (!closed_first && first <= 1e-9 * scale) {
                return GoodCheck {
                    holds: false,
                    witness: Some(GoodWitness::FirstDerivative { x, y, value: first }),
                    skipped: 0,
                };
            }
            let (second, tol) = match f.dxx(x, y) {
                Some(v) => (v, 1e-12 * scale),
                None => (finite_difference_dxx(f, x, y), 1e-6 * scale),
            };
            if second.is_nan() || second < -tol {
                return GoodCheck {
                    holds: false,
                    witness: Some(GoodWitness::SecondDerivative {
                        x,
                        y,
                        value: second,
                    }),
                    skipped: 0,
                };
            }
        }
    }
    let mut skipped = 0;
    for x1 in 1..=d {
        for y1 in 1..=x1 {
            for x2 in 1..=d {
                let args = [(x1 + 1, x2), (x1 + 1, y1 - 1), (x2, y1), (x1, y1)];
                let Some([a, b, c, e]) = values(f, args) else {
                    skipped += 1;
                    continue;
                };
                if sign_of([a, b], [c, e]) == Sign::Neg {
                    return GoodCheck {
                        holds: false,
                        witness: Some(GoodWitness::Discrete { x1, y1, x2 }),
                        skipped,
                    };
                }
            }
        }
    }
    GoodCheck {
        holds: true,
        witness: None,
        skipped,
    }
}
