//! Stable JSON text: every float rounded to 12 significant digits, `-0`
//! written as `0`, non-finite values as `null`.

use serde::Serialize;
use serde_json::{Number, Value};

pub const SIGNIFICANT_DIGITS: usize = 12;

pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().expect("formatted float parses");
    if r == 0.0 { 0.0 } else { r }
}

/// Rounds every float inside `v` in place.
pub fn normalize(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if let Some(x) = n.as_f64().filter(|_| n.is_f64()) {
                *v = Number::from_f64(round_sig(x)).map_or(Value::Null, Value::Number);
            }
        }
        Value::Array(items) => items.iter_mut().for_each(normalize),
        Value::Object(map) => map.values_mut().for_each(normalize),
        _ => {}
    }
}

/// Pretty JSON with a trailing newline, floats normalized.
pub fn to_text<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut v = serde_json::to_value(value)?;
    normalize(&mut v);
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn twelve_digits() {
        assert_eq!(round_sig(49.99999999999636), 50.0);
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333);
        assert_eq!(round_sig(-1e-300 * 1e-300), 0.0);
        assert!(round_sig(-0.0).is_sign_positive());
        assert_eq!(round_sig(123456789012345.0), 123456789012000.0);
    }

    #[test]
    fn normalizes_nested_values() {
        let v = json!({"a": [1, -0.0, 2.0000000000001], "b": {"c": 0.1 + 0.2}, "d": "x"});
        let text = to_text(&v).unwrap();
        assert_eq!(text, "{\n  \"a\": [\n    1,\n    0.0,\n    2.0\n  ],\n  \"b\": {\n    \"c\": 0.3\n  },\n  \"d\": \"x\"\n}\n");
    }

    #[test]
    fn non_finite_becomes_null() {
        assert_eq!(to_text(&f64::NAN).unwrap(), "null\n");
        assert_eq!(to_text(&Some(f64::INFINITY)).unwrap(), "null\n");
    }
}
