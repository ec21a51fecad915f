//! Connectivity functions `M_f(G) = Σ_{uv ∈ E} f(d(u), d(v))` for symmetric
//! bivariate `f`, the built-in catalog of degree-based indices, and the
//! escalating / de-escalating classification of `f`.

mod catalog;
mod classify;

pub use catalog::{builtin, parse_function, CATALOG_NAMES};
pub use classify::{
    check_good_escalating, classify, finite_difference_dx, finite_difference_dxx, FunctionClass,
    GoodCheck, GoodWitness, Quadruple, Verdict, DEFAULT_GRID_BOUND,
};

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graphs::{EdgeSwitch, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error("{name} is undefined at degree pair ({x}, {y})")]
    DomainViolation { name: String, x: usize, y: usize },
    #[error("unknown function {0:?}")]
    UnknownName(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("{0} is not escalating on the grid")]
    NotEscalating(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An index value: exact for integer-valued functions, floating otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Exact(i128),
    Real(f64),
}

/// Absolute tolerance per edge used when comparing real-valued indices.
pub const REAL_TOLERANCE: f64 = 1e-9;

impl Value {
    pub fn as_f64(self) -> f64 {
        match self {
            Value::Exact(v) => v as f64,
            Value::Real(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Value::Exact(_))
    }

    /// Compare two values of graphs with `edges` edges. Exact values compare
    /// exactly; otherwise values within `REAL_TOLERANCE * edges` are equal.
    pub fn compare(self, other: Value, edges: usize) -> Ordering {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a.cmp(&b),
            (a, b) => {
                let (a, b) = (a.as_f64(), b.as_f64());
                if (a - b).abs() <= REAL_TOLERANCE * edges.max(1) as f64 {
                    Ordering::Equal
                } else {
                    a.partial_cmp(&b).unwrap_or(Ordering::Equal)
                }
            }
        }
    }
}

impl std::ops::Add for Value {
    type Output = Value;

    fn add(self, other: Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a + b),
            (a, b) => Value::Real(a.as_f64() + b.as_f64()),
        }
    }
}

impl std::ops::Sub for Value {
    type Output = Value;

    fn sub(self, other: Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a - b),
            (a, b) => Value::Real(a.as_f64() - b.as_f64()),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(v) => write!(f, "{v}"),
            Value::Real(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match *self {
            Value::Exact(v) if i64::try_from(v).is_ok() => serializer.serialize_i64(v as i64),
            Value::Exact(v) => serializer.serialize_f64(v as f64),
            Value::Real(v) => serializer.serialize_f64(v),
        }
    }
}

type RealFn = dyn Fn(f64, f64) -> f64 + Send + Sync;
type DomainFn = dyn Fn(f64, f64) -> bool + Send + Sync;

/// User-supplied function pieces for [`BivariateFunction::custom`].
pub struct CustomParts {
    pub eval: Box<RealFn>,
    pub dx: Option<Box<RealFn>>,
    pub dxx: Option<Box<RealFn>>,
    pub domain: Option<Box<DomainFn>>,
}

#[derive(Clone)]
enum Kind {
    /// `scale * (xy)^alpha`
    Product {
        alpha: f64,
        scale: f64,
    },
    /// `scale * (x + y + shift)^alpha`
    Sum {
        alpha: f64,
        shift: i64,
        scale: f64,
    },
    /// `sqrt((x + y - 2) / (xy))`
    Abc,
    Custom(Arc<CustomParts>),
}

/// A symmetric function of two degrees.
///
/// Evaluation always orders the arguments as `(min, max)`, so `f(x, y)` and
/// `f(y, x)` are bit-identical.
#[derive(Clone)]
pub struct BivariateFunction {
    name: String,
    alpha: Option<f64>,
    kind: Kind,
}

impl fmt::Debug for BivariateFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BivariateFunction")
            .field("name", &self.name)
            .field("alpha", &self.alpha)
            .field("exact", &self.is_exact())
            .finish()
    }
}

impl fmt::Display for BivariateFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.alpha {
            Some(a) => write!(f, "{}:{}", self.name, a),
            None => f.write_str(&self.name),
        }
    }
}

fn integral_exponent(alpha: f64) -> Option<u32> {
    (alpha >= 0.0 && alpha.fract() == 0.0 && alpha <= 16.0).then_some(alpha as u32)
}

impl BivariateFunction {
    /// `(xy)^alpha`, the general Randić index `W_α`.
    pub fn general_randic(alpha: f64) -> Self {
        BivariateFunction {
            name: "general_randic".into(),
            alpha: Some(alpha),
            kind: Kind::Product { alpha, scale: 1.0 },
        }
    }

    /// `(x + y)^alpha`, the general sum-connectivity index `χ_α`.
    pub fn general_sum_connectivity(alpha: f64) -> Self {
        BivariateFunction {
            name: "general_sum_connectivity".into(),
            alpha: Some(alpha),
            kind: Kind::Sum {
                alpha,
                shift: 0,
                scale: 1.0,
            },
        }
    }

    /// `(x + y - 2)^alpha`, the general reformulated Zagreb index `Z_α`.
    pub fn general_reformulated_zagreb(alpha: f64) -> Self {
        BivariateFunction {
            name: "general_reformulated_zagreb".into(),
            alpha: Some(alpha),
            kind: Kind::Sum {
                alpha,
                shift: -2,
                scale: 1.0,
            },
        }
    }

    /// Atom-bond connectivity `sqrt((x + y - 2) / (xy))`.
    pub fn abc() -> Self {
        BivariateFunction {
            name: "abc".into(),
            alpha: None,
            kind: Kind::Abc,
        }
    }

    /// Harmonic index `2 / (x + y)`, i.e. `2 χ_{-1}`.
    pub fn harmonic() -> Self {
        BivariateFunction {
            name: "harmonic".into(),
            alpha: None,
            kind: Kind::Sum {
                alpha: -1.0,
                shift: 0,
                scale: 2.0,
            },
        }
    }

    /// A library-defined function. `parts.eval` must be symmetric; it is
    /// only ever called with `x <= y`.
    pub fn custom(name: impl Into<String>, parts: CustomParts) -> Self {
        BivariateFunction {
            name: name.into(),
            alpha: None,
            kind: Kind::Custom(Arc::new(parts)),
        }
    }

    pub(crate) fn renamed(mut self, name: &str, keep_alpha: bool) -> Self {
        self.name = name.into();
        if !keep_alpha {
            self.alpha = None;
        }
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alpha(&self) -> Option<f64> {
        self.alpha
    }

    /// Integer-valued on integer arguments, evaluated in exact arithmetic.
    pub fn is_exact(&self) -> bool {
        match self.kind {
            Kind::Product { alpha, scale } | Kind::Sum { alpha, scale, .. } => {
                scale == 1.0 && integral_exponent(alpha).is_some()
            }
            _ => false,
        }
    }

    /// Whether `f` is defined at the real point `(x, y)`.
    pub fn in_domain_real(&self, x: f64, y: f64) -> bool {
        if !(x >= 1.0 && y >= 1.0) {
            return false;
        }
        match &self.kind {
            Kind::Product { .. } => true,
            Kind::Sum { shift, alpha, .. } => {
                let t = x + y + *shift as f64;
                // (x + y - 2)^α is only considered where x + y >= 3
                if *shift < 0 {
                    t >= 1.0
                } else {
                    t > 0.0 || *alpha > 0.0
                }
            }
            Kind::Abc => x + y >= 3.0,
            Kind::Custom(parts) => parts.domain.as_ref().is_none_or(|d| d(x.min(y), x.max(y))),
        }
    }

    pub fn in_domain(&self, x: usize, y: usize) -> bool {
        self.in_domain_real(x as f64, y as f64)
    }

    /// Floating-point evaluation; the caller is responsible for the domain.
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        match &self.kind {
            Kind::Product { alpha, scale } => {
                let p = a * b;
                scale * if *alpha == 1.0 { p } else { p.powf(*alpha) }
            }
            Kind::Sum {
                alpha,
                shift,
                scale,
            } => {
                let t = a + b + *shift as f64;
                scale * if *alpha == 1.0 { t } else { t.powf(*alpha) }
            }
            Kind::Abc => ((a + b - 2.0) / (a * b)).sqrt(),
            Kind::Custom(parts) => (parts.eval)(a, b),
        }
    }

    fn eval_exact(&self, x: usize, y: usize) -> Option<i128> {
        match self.kind {
            Kind::Product { alpha, scale: 1.0 } => {
                integral_exponent(alpha).map(|k| ((x * y) as i128).pow(k))
            }
            Kind::Sum {
                alpha,
                shift,
                scale: 1.0,
            } => integral_exponent(alpha).map(|k| ((x + y) as i128 + shift as i128).pow(k)),
            _ => None,
        }
    }

    /// `f(x, y)` on integer degrees, exact when possible.
    pub fn value(&self, x: usize, y: usize) -> Result<Value, IndexError> {
        if !self.in_domain(x, y) {
            return Err(IndexError::DomainViolation {
                name: self.to_string(),
                x,
                y,
            });
        }
        Ok(match self.eval_exact(x, y) {
            Some(v) => Value::Exact(v),
            None => Value::Real(self.eval(x as f64, y as f64)),
        })
    }

    /// Closed-form `∂f/∂x` when known.
    pub fn dx(&self, x: f64, y: f64) -> Option<f64> {
        match &self.kind {
            Kind::Product { alpha, scale } => {
                Some(scale * alpha * x.powf(alpha - 1.0) * y.powf(*alpha))
            }
            Kind::Sum {
                alpha,
                shift,
                scale,
            } => {
                let t = x + y + *shift as f64;
                Some(scale * alpha * t.powf(alpha - 1.0))
            }
            Kind::Abc => {
                let g = (x + y - 2.0) / (x * y);
                let gx = (2.0 - y) / (x * x * y);
                Some(gx / (2.0 * g.sqrt()))
            }
            Kind::Custom(parts) => parts.dx.as_ref().map(|d| d(x, y)),
        }
    }

    /// Closed-form `∂²f/∂x²` when known.
    pub fn dxx(&self, x: f64, y: f64) -> Option<f64> {
        match &self.kind {
            Kind::Product { alpha, scale } => {
                Some(scale * alpha * (alpha - 1.0) * x.powf(alpha - 2.0) * y.powf(*alpha))
            }
            Kind::Sum {
                alpha,
                shift,
                scale,
            } => {
                let t = x + y + *shift as f64;
                Some(scale * alpha * (alpha - 1.0) * t.powf(alpha - 2.0))
            }
            Kind::Abc => {
                let g = (x + y - 2.0) / (x * y);
                let gx = (2.0 - y) / (x * x * y);
                let gxx = 2.0 * (y - 2.0) / (x * x * x * y);
                Some(gxx / (2.0 * g.sqrt()) - gx * gx / (4.0 * g.powf(1.5)))
            }
            Kind::Custom(parts) => parts.dxx.as_ref().map(|d| d(x, y)),
        }
    }

    fn zero(&self) -> Value {
        if self.is_exact() {
            Value::Exact(0)
        } else {
            Value::Real(0.0)
        }
    }
}

/// `M_f(G)`.
pub fn connectivity_function(g: &Graph, f: &BivariateFunction) -> Result<Value, IndexError> {
    connectivity_over(g, g.edges(), f)
}

/// Sum of `f` over a subset of the edges of `g`, using degrees in `g`.
pub fn connectivity_over(
    g: &Graph,
    edges: impl IntoIterator<Item = (usize, usize)>,
    f: &BivariateFunction,
) -> Result<Value, IndexError> {
    let mut total = f.zero();
    for (u, v) in edges {
        total = total + f.value(g.degree(u), g.degree(v))?;
    }
    Ok(total)
}

/// `M_f(G') - M_f(G)` for the switch `s`, from the degrees of the four
/// endpoints alone.
pub fn switch_delta(g: &Graph, s: &EdgeSwitch, f: &BivariateFunction) -> Result<Value, IndexError> {
    s.validate(g)?;
    let d = |v: usize| g.degree(v);
    let gained = f.value(d(s.w1), d(s.w2))? + f.value(d(s.u1), d(s.u2))?;
    let lost = f.value(d(s.u2), d(s.w2))? + f.value(d(s.u1), d(s.w1))?;
    Ok(gained - lost)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn cycle_and_star_values() {
        let m2 = BivariateFunction::general_randic(1.0);
        assert_eq!(
            connectivity_function(&cycle(5), &m2).unwrap(),
            Value::Exact(20)
        );
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(connectivity_function(&star, &m2).unwrap(), Value::Exact(9));
        let randic = BivariateFunction::general_randic(-0.5);
        let r = connectivity_function(&cycle(7), &randic).unwrap().as_f64();
        assert!((r - 3.5).abs() < 1e-12);
    }

    #[test]
    fn single_values() {
        let m2 = BivariateFunction::general_randic(1.0);
        assert_eq!(m2.value(3, 2).unwrap(), Value::Exact(6));
        let z2 = BivariateFunction::general_reformulated_zagreb(2.0);
        assert_eq!(z2.value(3, 2).unwrap(), Value::Exact(9));
        let abc = BivariateFunction::abc();
        assert!((abc.value(1, 2).unwrap().as_f64() - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn abc_on_single_edge_is_domain_violation() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            connectivity_function(&k2, &BivariateFunction::abc()),
            Err(IndexError::DomainViolation { x: 1, y: 1, .. })
        ));
    }

    #[test]
    fn exactness_flags() {
        assert!(BivariateFunction::general_randic(1.0).is_exact());
        assert!(BivariateFunction::general_sum_connectivity(2.0).is_exact());
        assert!(!BivariateFunction::general_randic(-0.5).is_exact());
        assert!(!BivariateFunction::harmonic().is_exact());
        assert!(!BivariateFunction::abc().is_exact());
    }

    #[test]
    fn value_comparison_tolerance() {
        assert_eq!(
            Value::Real(1.0).compare(Value::Real(1.0 + 1e-12), 3),
            Ordering::Equal
        );
        assert_eq!(
            Value::Real(1.0).compare(Value::Real(1.1), 3),
            Ordering::Less
        );
        assert_eq!(
            Value::Exact(3).compare(Value::Exact(2), 1),
            Ordering::Greater
        );
    }

    #[test]
    fn switch_delta_on_c6_is_zero() {
        let g = cycle(6);
        let s = EdgeSwitch::new(3, 2, 5, 0);
        let f = BivariateFunction::general_randic(1.0);
        assert_eq!(switch_delta(&g, &s, &f).unwrap(), Value::Exact(0));
    }

    #[test]
    fn custom_function_symmetric_evaluation() {
        let f = BivariateFunction::custom(
            "min",
            CustomParts {
                eval: Box::new(|a, _b| a),
                dx: None,
                dxx: None,
                domain: None,
            },
        );
        assert_eq!(f.eval(3.0, 5.0), f.eval(5.0, 3.0));
        assert_eq!(f.eval(5.0, 3.0), 3.0);
    }
}
