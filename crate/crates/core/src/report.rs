//! Byte-stable report emission.
//!
//! JSON keys follow struct field order; rationals print as `num/den`; floats
//! are rounded to 12 significant digits before printing. CSV output uses a
//! fixed header per report kind.

use std::fmt;

use clap::ValueEnum;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Rounds to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Shortest decimal for `x` rounded to 12 significant digits.
pub fn fmt_float(x: f64) -> String {
    format!("{}", round_sig(x))
}

pub fn sig12<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig(*x))
}

pub fn sig12_vec<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let rounded: Vec<f64> = xs.iter().map(|&x| round_sig(x)).collect();
    rounded.serialize(s)
}

/// A reported quantity.
#[derive(Debug, Clone, PartialEq)]
pub enum Num {
    Int(u128),
    Ratio(u128, u128),
    Float(f64),
}

impl Num {
    pub fn ratio(num: u128, den: u128) -> Num {
        let g = num_integer::gcd(num, den).max(1);
        Num::Ratio(num / g, den / g)
    }

    pub fn as_f64(&self) -> f64 {
        match *self {
            Num::Int(v) => v as f64,
            Num::Ratio(n, d) => n as f64 / d as f64,
            Num::Float(x) => x,
        }
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Num::Int(v) => write!(f, "{v}"),
            Num::Ratio(n, d) => write!(f, "{n}/{d}"),
            Num::Float(x) => f.write_str(&fmt_float(*x)),
        }
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Num::Int(v) => s.serialize_u128(*v),
            Num::Ratio(..) => s.serialize_str(&self.to_string()),
            Num::Float(x) => s.serialize_f64(round_sig(*x)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditCheck {
    pub check: String,
    pub lhs: Num,
    pub rhs: Num,
    /// `None` when the check does not apply.
    pub pass: Option<bool>,
}

impl AuditCheck {
    pub fn new(check: impl Into<String>, lhs: Num, rhs: Num, pass: bool) -> AuditCheck {
        AuditCheck {
            check: check.into(),
            lhs,
            rhs,
            pass: Some(pass),
        }
    }

    pub fn skipped(mut self) -> AuditCheck {
        self.pass = None;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryEntry {
    pub name: String,
    pub value: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub audit: String,
    pub checks: Vec<AuditCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub summary: Vec<SummaryEntry>,
}

impl AuditReport {
    pub fn new(audit: &str, checks: Vec<AuditCheck>) -> AuditReport {
        AuditReport {
            audit: audit.to_string(),
            checks,
            summary: Vec::new(),
        }
    }

    pub fn summarize(&mut self, name: &str, value: Num) {
        self.summary.push(SummaryEntry {
            name: name.to_string(),
            value,
        });
    }

    /// True when no applicable check failed.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass != Some(false))
    }

    pub fn find(&self, check: &str) -> Option<&AuditCheck> {
        self.checks.iter().find(|c| c.check == check)
    }
}

/// Anything the command line can print.
pub trait Report: Serialize {
    fn csv(&self) -> String;
}

impl Report for AuditReport {
    fn csv(&self) -> String {
        let mut out = String::from("check,lhs,rhs,pass\n");
        for c in &self.checks {
            let pass = match c.pass {
                Some(true) => "true",
                Some(false) => "false",
                None => "skipped",
            };
            out.push_str(&format!("{},{},{},{}\n", c.check, c.lhs, c.rhs, pass));
        }
        for e in &self.summary {
            out.push_str(&format!("# {}={}\n", e.name, e.value));
        }
        out
    }
}

pub fn emit_report<R: Report + ?Sized>(report: &R, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => report.csv().into_bytes(),
    }
}

/// `key,value` CSV of a flat JSON object; arrays print space-separated.
pub fn flat_csv<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report serializes");
    let mut out = String::from("key,value\n");
    if let serde_json::Value::Object(map) = v {
        for (k, v) in map {
            let text = match v {
                serde_json::Value::String(s) => s,
                serde_json::Value::Array(items) => items
                    .iter()
                    .map(|i| match i {
                        serde_json::Value::String(s) => s.clone(),
                        other => other.to_string(),
                    })
                    .collect::<Vec<_>>()
                    .join(" "),
                other => other.to_string(),
            };
            out.push_str(&format!("{k},{text}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_rounding() {
        assert_eq!(fmt_float(0.1 + 0.2), "0.3");
        assert_eq!(fmt_float(2.0 / 3.0), "0.666666666667");
        assert_eq!(fmt_float(4096.0), "4096");
        assert_eq!(fmt_float(0.0), "0");
    }

    #[test]
    fn num_serialization() {
        assert_eq!(serde_json::to_string(&Num::Int(7)).unwrap(), "7");
        assert_eq!(serde_json::to_string(&Num::ratio(32, 6)).unwrap(), "\"16/3\"");
        assert_eq!(serde_json::to_string(&Num::Float(1.0 / 3.0)).unwrap(), "0.333333333333");
    }

    #[test]
    fn audit_emission_is_stable() {
        let mut r = AuditReport::new("demo", vec![
            AuditCheck::new("a", Num::Int(1), Num::Int(2), true),
            AuditCheck::new("b", Num::Int(3), Num::Int(2), false).skipped(),
        ]);
        r.summarize("ratio", Num::Float(0.5));
        assert!(r.all_pass());
        let csv = String::from_utf8(emit_report(&r, Format::Csv)).unwrap();
        assert_eq!(csv, "check,lhs,rhs,pass\na,1,2,true\nb,3,2,skipped\n# ratio=0.5\n");
        assert_eq!(emit_report(&r, Format::Json), emit_report(&r, Format::Json));
        let v: serde_json::Value = serde_json::from_slice(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(v["checks"][1]["pass"], serde_json::Value::Null);
    }
}
