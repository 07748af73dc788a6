//! Output formatting: 9 significant digits, JSON records, CSV tables.

use crate::schema::matrix_to_spec;
use serde_json::{json, Value};
use specdist::solver::{Distance, SolverResult};

/// Round to 9 significant decimal digits (ties to even, like the standard
/// float formatter) so printed values sit below solver tolerance but above
/// float noise.
pub fn sig9(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.8e}").parse().unwrap_or(x)
}

/// Render a distance as a JSON value; infinity becomes the string `"inf"`.
pub fn distance_value(d: &Distance<f64>) -> Value {
    match d {
        Distance::Finite(v) => json!(sig9(*v)),
        Distance::Infinite => json!("inf"),
    }
}

/// Format a finite distance for CSV cells.
pub fn csv_cell(x: f64) -> String {
    if x.is_infinite() {
        "inf".to_string()
    } else {
        let rounded = sig9(x);
        format!("{rounded}")
    }
}

/// The record printed by the `distance` command.
pub fn distance_record(res: &SolverResult<f64>) -> Value {
    let mut record = json!({
        "distance": distance_value(&res.distance),
        "finite": res.distance.is_finite(),
        "method": res.method.as_str(),
    });
    let obj = record.as_object_mut().expect("record is an object");
    if let Some(c) = res.seminorm_certificate {
        obj.insert("seminorm_certificate".into(), json!(sig9(c)));
    }
    if let Some(c) = res.objective_certificate {
        obj.insert("objective_certificate".into(), json!(sig9(c)));
    }
    if let Some(e) = &res.optimal_element {
        obj.insert("optimal_element".into(), json!(matrix_to_spec(e.matrix())));
    }
    if let Some((lo, hi)) = res.iterations.bracket {
        obj.insert("bracket".into(), json!([sig9(lo), sig9(hi)]));
    }
    record
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[allow(clippy::approx_constant)] // the rounded literal is the point
    fn sig9_rounds_to_nine_digits() {
        assert_eq!(sig9(std::f64::consts::SQRT_2), 1.41421356);
        assert_eq!(sig9(1.2), 1.2);
        assert_eq!(sig9(0.0), 0.0);
        assert_eq!(sig9(-123456789.123), -123456789.0);
    }

    #[test]
    fn csv_cell_renders_inf() {
        assert_eq!(csv_cell(f64::INFINITY), "inf");
        assert_eq!(csv_cell(0.25), "0.25");
    }
}
