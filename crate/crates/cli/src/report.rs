//! Rendering results as plain text, JSON lines or CSV.

use banddet::{ScaledValue, Value};
use serde::{Deserialize, Serialize};

use crate::spec_io::SpecJson;

/// One evaluated determinant. Emitted as a single JSON line in json mode.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub spec: Option<SpecJson>,
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<String>,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prime: Option<u64>,
    pub strategy: String,
    pub path: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub case: Option<String>,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub approx: Option<String>,
}

/// Exact values print as integers or `p/q`; scaled floats as `m*2^e`.
pub fn value_string(v: &Value) -> String {
    v.to_string()
}

/// Decimal approximation of a scaled float, for display only.
pub fn approx_decimal(v: &ScaledValue) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let log10 = v.exp2() as f64 * std::f64::consts::LOG10_2 + v.mantissa().log10();
    let mut exp10 = log10.floor();
    let mut digits = 10f64.powf(log10 - exp10);
    if digits >= 9.9999995 {
        digits /= 10.0;
        exp10 += 1.0;
    }
    let sign = if v.sign() < 0 { "-" } else { "" };
    format!("{sign}{digits:.6}e{exp10}")
}

pub fn approx_of(v: &Value) -> Option<String> {
    match v {
        Value::Scaled(s) => Some(approx_decimal(s)),
        _ => None,
    }
}

pub fn plain_line(record: &Record, multi: bool) -> String {
    let mut value = record.value.clone();
    if let Some(a) = &record.approx {
        value = format!("{value} ≈ {a}");
    }
    match (&record.lambda, multi) {
        (_, false) => value,
        (Some(l), true) => format!("n={} lambda={l} {value}", record.n),
        (None, true) => format!("n={} {value}", record.n),
    }
}

pub fn json_line(record: &Record) -> String {
    serde_json::to_string(record).expect("record serializes")
}

pub fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_approximation() {
        let v = ScaledValue::from_f64(1234.5).unwrap();
        assert_eq!(approx_decimal(&v), "1.234500e3");
        let v = ScaledValue::from_f64(-0.001).unwrap();
        assert_eq!(approx_decimal(&v), "-1.000000e-3");
        let huge = ScaledValue::from_parts(1.0, 10_000).unwrap();
        assert_eq!(approx_decimal(&huge), "1.995063e3010");
        assert_eq!(approx_decimal(&ScaledValue::ZERO), "0");
    }

    #[test]
    fn csv_fields() {
        assert_eq!(csv_escape("1/2"), "1/2");
        assert_eq!(csv_escape("a,b"), "\"a,b\"");
    }
}
