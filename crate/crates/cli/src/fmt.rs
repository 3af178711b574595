//! Deterministic numeric formatting: every float that reaches an output
//! file is rounded to 12 significant digits first, so identical configs
//! and seeds produce byte-identical reports.

use serde_json::Value;

/// Round to 12 significant digits (via the shortest `e`-notation form).
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("round-trip of a finite float")
}

/// Scientific-notation string with exactly 12 significant digits.
pub fn fmt12(x: f64) -> String {
    format!("{x:.11e}")
}

/// JSON number rounded to 12 significant digits; non-finite becomes null.
pub fn json_f(x: f64) -> Value {
    serde_json::Number::from_f64(sig12(x)).map_or(Value::Null, Value::Number)
}
