//! Machine-readable suite reports.
//!
//! JSON numbers are emitted with 17 significant digits
//! (`format!("{:.16e}")` through serde_json's arbitrary-precision number
//! type) so every double round-trips; the CSV rendering uses the exact same
//! strings, making the numeric content of the two formats identical.
//! Nothing time- or environment-dependent enters a report: identical
//! configurations produce byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Serialize, Serializer};

fn to_number(x: f64) -> serde_json::Number {
    serde_json::from_str(&format!("{x:.16e}")).expect("finite doubles parse as JSON numbers")
}

/// Formats a double with 17 significant digits, in exactly the canonical
/// form the JSON serializer emits (so CSV and JSON strings coincide).
pub fn format_f64(x: f64) -> String {
    to_number(x).to_string()
}

/// An `f64` that serializes as a JSON number with 17 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct F17(pub f64);

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        to_number(self.0).serialize(serializer)
    }
}

/// One verification case: an identifier, its outcome, and a flat map of
/// named values (inputs echoed alongside residuals and extracted
/// quantities).
#[derive(Debug, Clone, Serialize)]
pub struct CaseRecord {
    pub suite: &'static str,
    pub id: String,
    pub passed: bool,
    pub max_residual: F17,
    pub metrics: BTreeMap<String, F17>,
}

impl CaseRecord {
    pub fn new(suite: &'static str, id: String, passed: bool, max_residual: f64) -> Self {
        CaseRecord {
            suite,
            id,
            passed,
            max_residual: F17(max_residual),
            metrics: BTreeMap::new(),
        }
    }

    pub fn metric(mut self, name: &str, value: f64) -> Self {
        self.metrics.insert(name.to_string(), F17(value));
        self
    }
}

/// Configuration echo embedded in every report.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub suite: String,
    pub grid_theta: usize,
    pub grid_phi: usize,
    pub delta_phi_samples: usize,
    pub seed: u64,
    pub tolerance: F17,
    pub spinor_cases: usize,
    pub wavevector_cases: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub passed: usize,
    pub max_residual: F17,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub version: &'static str,
    pub config: ConfigEcho,
    pub summary: Summary,
    pub cases: Vec<CaseRecord>,
}

impl SuiteReport {
    pub fn new(config: ConfigEcho, cases: Vec<CaseRecord>) -> Self {
        let passed = cases.iter().filter(|c| c.passed).count();
        let max_residual = cases
            .iter()
            .map(|c| c.max_residual.0)
            .fold(0.0f64, f64::max);
        SuiteReport {
            suite: config.suite.clone(),
            version: env!("CARGO_PKG_VERSION"),
            config,
            summary: Summary {
                cases: cases.len(),
                passed,
                max_residual: F17(max_residual),
            },
            cases,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.cases
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    /// Long-format CSV: one `suite,case,metric,value` row per value, with
    /// `_config` and `_summary` pseudo-cases carrying the run metadata.
    /// Case identifiers never contain commas, so no quoting is needed.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,case,metric,value\n");
        let c = &self.config;
        for (metric, value) in [
            ("grid_theta", c.grid_theta.to_string()),
            ("grid_phi", c.grid_phi.to_string()),
            ("delta_phi_samples", c.delta_phi_samples.to_string()),
            ("seed", c.seed.to_string()),
            ("tolerance", format_f64(c.tolerance.0)),
            ("spinor_cases", c.spinor_cases.to_string()),
            ("wavevector_cases", c.wavevector_cases.to_string()),
        ] {
            let _ = writeln!(out, "{},_config,{},{}", self.suite, metric, value);
        }
        for case in &self.cases {
            let _ = writeln!(
                out,
                "{},{},max_residual,{}",
                case.suite,
                case.id,
                format_f64(case.max_residual.0)
            );
            let _ = writeln!(
                out,
                "{},{},passed,{}",
                case.suite,
                case.id,
                if case.passed { 1 } else { 0 }
            );
            for (name, value) in &case.metrics {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    case.suite,
                    case.id,
                    name,
                    format_f64(value.0)
                );
            }
        }
        for (metric, value) in [
            ("cases", self.summary.cases.to_string()),
            ("passed", self.summary.passed.to_string()),
            ("max_residual", format_f64(self.summary.max_residual.0)),
        ] {
            let _ = writeln!(out, "{},_summary,{},{}", self.suite, metric, value);
        }
        out
    }
}
