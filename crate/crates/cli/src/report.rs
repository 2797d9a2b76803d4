//! The JSON envelope shared by every command.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;

/// Command arguments echoed as text, so exact values keep their canonical
/// `p/q` form.
#[derive(Debug, Default, Serialize)]
#[serde(transparent)]
pub struct Inputs(BTreeMap<&'static str, String>);

impl Inputs {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &'static str, value: impl Display) -> Self {
        self.0.insert(key, value.to_string());
        self
    }
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub wall_time_ms: f64,
}

#[derive(Debug, Serialize)]
pub struct ReportDocument<R> {
    pub command: &'static str,
    pub version: &'static str,
    pub inputs: Inputs,
    pub results: Vec<R>,
    pub timing: Timing,
}

impl<R: Serialize> ReportDocument<R> {
    pub fn new(command: &'static str, inputs: Inputs, results: Vec<R>, started: Instant) -> Self {
        Self {
            command,
            version: env!("CARGO_PKG_VERSION"),
            inputs,
            results,
            timing: Timing { wall_time_ms: started.elapsed().as_secs_f64() * 1e3 },
        }
    }
}
