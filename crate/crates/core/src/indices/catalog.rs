use super::{BivariateFunction, IndexError};

/// Names accepted by [`builtin`] and [`parse_function`].
pub const CATALOG_NAMES: &[&str] = &[
    "general_randic",
    "randic",
    "second_zagreb",
    "general_sum_connectivity",
    "sum_connectivity",
    "first_zagreb",
    "third_zagreb",
    "harmonic",
    "general_reformulated_zagreb",
    "reformulated_zagreb",
    "abc",
];

/// Look up a catalog function. Families named `general_*` require `alpha`;
/// `reformulated_zagreb` defaults to `alpha = 2`; the rest take no parameter.
pub fn builtin(name: &str, alpha: Option<f64>) -> Result<BivariateFunction, IndexError> {
    if let Some(a) = alpha {
        if !a.is_finite() {
            return Err(IndexError::BadParameter(format!(
                "alpha must be finite, got {a}"
            )));
        }
    }
    let need = |alpha: Option<f64>| {
        alpha.ok_or_else(|| IndexError::BadParameter(format!("{name} requires an exponent")))
    };
    let fixed = |f: BivariateFunction| {
        if alpha.is_some() {
            Err(IndexError::BadParameter(format!(
                "{name} takes no exponent"
            )))
        } else {
            Ok(f.renamed(name, false))
        }
    };
    match name {
        "general_randic" => Ok(BivariateFunction::general_randic(need(alpha)?)),
        "randic" => fixed(BivariateFunction::general_randic(-0.5)),
        "second_zagreb" => fixed(BivariateFunction::general_randic(1.0)),
        "general_sum_connectivity" => Ok(BivariateFunction::general_sum_connectivity(need(alpha)?)),
        "sum_connectivity" => fixed(BivariateFunction::general_sum_connectivity(-0.5)),
        "first_zagreb" => fixed(BivariateFunction::general_sum_connectivity(1.0)),
        "third_zagreb" => fixed(BivariateFunction::general_sum_connectivity(2.0)),
        "harmonic" => fixed(BivariateFunction::harmonic()),
        "general_reformulated_zagreb" => {
            Ok(BivariateFunction::general_reformulated_zagreb(need(alpha)?))
        }
        "reformulated_zagreb" => Ok(BivariateFunction::general_reformulated_zagreb(
            alpha.unwrap_or(2.0),
        )
        .renamed(name, true)),
        "abc" => fixed(BivariateFunction::abc()),
        _ => Err(IndexError::UnknownName(name.to_string())),
    }
}

/// Parse `name` or `name:alpha`.
pub fn parse_function(text: &str) -> Result<BivariateFunction, IndexError> {
    let text = text.trim();
    match text.split_once(':') {
        None => builtin(text, None),
        Some((name, alpha)) => {
            let a: f64 = alpha
                .trim()
                .parse()
                .map_err(|_| IndexError::BadParameter(format!("bad exponent {alpha:?}")))?;
            builtin(name.trim(), Some(a))
        }
    }
}
