//! Fixed numeric formatting for records and CSV files.

use serde_json::Value;

/// `v` to six significant digits, `%g` style: plain notation for decimal
/// exponents in `[-4, 6)`, otherwise `d.ddddde±x` with trailing zeros
/// dropped. Zero (either sign) prints as `0`.
pub fn sig6(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return if v.is_nan() { "nan".into() } else if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{:.5e}", v.abs());
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let sign = if v < 0.0 { "-" } else { "" };
    let body = if (-4..6).contains(&exp) {
        let text = if exp >= 0 {
            let (int, frac) = digits.split_at(exp as usize + 1);
            format!("{int}.{frac}")
        } else {
            format!("0.{}{digits}", "0".repeat((-exp - 1) as usize))
        };
        trim(&text).to_string()
    } else {
        let (lead, rest) = digits.split_at(1);
        format!("{}e{exp}", trim(&format!("{lead}.{rest}")))
    };
    format!("{sign}{body}")
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Rounds every float in `v` to six significant digits; non-finite floats
/// become `null`.
pub fn round_record(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap_or(f64::NAN);
            if x.is_finite() {
                let rounded: f64 = sig6(x).parse().expect("formatted float");
                serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number)
            } else {
                Value::Null
            }
        }
        Value::Array(items) => Value::Array(items.into_iter().map(round_record).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_record(v))).collect()),
        other => other,
    }
}

/// Pretty JSON of a rounded record, newline-terminated.
pub fn record_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(48.1774036578), "48.1774");
        assert_eq!(sig6(11.8903172), "11.8903");
        assert_eq!(sig6(1620.7794652), "1620.78");
        assert_eq!(sig6(0.0012053986), "0.0012054");
        assert_eq!(sig6(505415.709), "505416");
        assert_eq!(sig6(1.47194159e6), "1.47194e6");
        assert_eq!(sig6(-2.5e-9), "-2.5e-9");
        assert_eq!(sig6(72.0), "72");
        assert_eq!(sig6(-0.0), "0");
        assert_eq!(sig6(9.999996), "10");
        assert_eq!(sig6(999999.6), "1e6");
        assert_eq!(sig6(0.000012345678), "1.23457e-5");
        assert_eq!(sig6(0.00012345678), "0.000123457");
    }

    #[test]
    fn records_round_in_place() {
        let v = serde_json::json!({ "a": 1.23456789, "n": 8, "l": [2.0000001, f64::MAX] });
        let r = round_record(v);
        assert_eq!(r["a"].as_f64(), Some(1.23457));
        assert_eq!(r["n"].as_u64(), Some(8));
        assert_eq!(r["l"][0].as_f64(), Some(2.0));
        assert_eq!(record_text(&r), record_text(&round_record(r.clone())));
    }
}
