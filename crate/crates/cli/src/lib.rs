//! Command implementations behind the `ehrlace` binary.
//!
//! Every command returns a [`CommandResult`] whose JSON form carries the
//! `"schema": "ehrlace/1"` tag, a status, an optional reason code and a
//! payload. Rationals are always rendered as `"p/q"` strings.

pub mod commands;
pub mod subject;
pub mod suite;

use std::time::Instant;

use ehrlace::error::Error;
use ehrlace::exactcore::{format_rational, Interval, Polynomial, Rational};
use serde_json::{json, Value};

pub const SCHEMA: &str = "ehrlace/1";

/// Point ceiling for lattice-point enumeration, overridable through
/// `EHRLACE_BUDGET`.
pub fn budget() -> usize {
    std::env::var("EHRLACE_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(ehrlace::latticecount::DEFAULT_BUDGET)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A check ran and came out false.
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CommandResult {
    pub command: String,
    pub status: Status,
    pub reason: Option<String>,
    pub payload: Value,
    pub timing_ms: f64,
    /// Plain-text rendering printed instead of JSON when set.
    pub text: Option<String>,
}

impl CommandResult {
    pub fn ok(command: &str, payload: Value) -> Self {
        CommandResult {
            command: command.to_string(),
            status: Status::Ok,
            reason: None,
            payload,
            timing_ms: 0.0,
            text: None,
        }
    }

    pub fn fail(command: &str, reason: &str, payload: Value) -> Self {
        CommandResult {
            status: Status::Fail,
            reason: Some(reason.to_string()),
            ..Self::ok(command, payload)
        }
    }

    pub fn error(command: &str, err: &Error) -> Self {
        CommandResult {
            status: Status::Error,
            reason: Some(err.code().to_string()),
            ..Self::ok(command, json!({ "message": err.to_string() }))
        }
    }

    /// Ok when `passed`, otherwise a failure with `reason`.
    pub fn check(command: &str, passed: bool, reason: &str, payload: Value) -> Self {
        if passed {
            Self::ok(command, payload)
        } else {
            Self::fail(command, reason, payload)
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "command": self.command,
            "status": self.status.as_str(),
            "reason": self.reason,
            "payload": self.payload,
            "timing_ms": self.timing_ms,
        })
    }

    pub fn render(&self) -> String {
        match &self.text {
            Some(t) => t.clone(),
            None => serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize"),
        }
    }
}

/// Run `f`, turning library errors into error results and recording the
/// elapsed time.
pub fn timed(command: &str, f: impl FnOnce() -> ehrlace::error::Result<CommandResult>) -> CommandResult {
    let start = Instant::now();
    let mut res = f().unwrap_or_else(|e| CommandResult::error(command, &e));
    res.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    res
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

/// Coefficients, constant term first.
pub fn poly_json(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(rational_json).collect())
}

pub fn interval_json(iv: &Interval) -> Value {
    json!([format_rational(&iv.lo), format_rational(&iv.hi)])
}
