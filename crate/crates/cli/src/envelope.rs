//! The machine-readable output record.
//!
//! Field set and names are stable: `command`, `verdict`, `result`,
//! `certificate`, `provenance`, `bounds`, `timing_ms`. Absent certificates are
//! `null`; `bounds` is always an object (empty when nothing was bounded).

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputEnvelope {
    pub command: String,
    pub verdict: String,
    pub result: Value,
    /// `null` when the verdict carries no certificate.
    pub certificate: Value,
    pub provenance: String,
    pub bounds: Map<String, Value>,
    pub timing_ms: u64,
}

/// Process exit status classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Positive = 0,
    Negative = 1,
    Unknown = 2,
    Usage = 3,
}

/// What a verb hands back before rendering.
#[derive(Clone, Debug)]
pub struct Report {
    pub verdict: String,
    pub status: Status,
    pub result: Value,
    pub certificate: Option<Value>,
    pub provenance: &'static str,
    pub bounds: Map<String, Value>,
    pub text: Vec<String>,
}

impl Report {
    pub fn new(status: Status, verdict: impl Into<String>, provenance: &'static str) -> Self {
        Report {
            verdict: verdict.into(),
            status,
            result: Value::Null,
            certificate: None,
            provenance,
            bounds: Map::new(),
            text: Vec::new(),
        }
    }

    pub fn result(mut self, v: Value) -> Self {
        self.result = v;
        self
    }

    pub fn certificate(mut self, v: Value) -> Self {
        self.certificate = Some(v);
        self
    }

    pub fn bound(mut self, name: &str, v: impl Into<Value>) -> Self {
        self.bounds.insert(name.to_string(), v.into());
        self
    }

    pub fn line(mut self, s: impl Into<String>) -> Self {
        self.text.push(s.into());
        self
    }
}

/// Integers as JSON numbers when they fit in 64 bits, decimal strings otherwise.
pub fn int(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(x.to_string()),
    }
}

pub fn ints<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(xs.into_iter().map(int).collect())
}
