//! JSON report assembled from check records.

use std::time::Duration;

use serde::Serialize;

use spectral_torsion::residue::{ExactScalar, ResidueValue};
use spectral_torsion::verify::{CheckRecord, DoubledRow};

use crate::config::ConfigEcho;

/// Decimal rendering with 15 significant digits.
pub fn render(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        format!("{:.*}", (14 - exp).max(0) as usize, x)
    } else {
        format!("{x:.14e}")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub computed: String,
    /// `true` when the comparison is exact, `false` when a residual is reported.
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl From<&CheckRecord> for Check {
    fn from(r: &CheckRecord) -> Self {
        Self {
            name: r.name.clone(),
            passed: r.passed,
            expected: r.expected.clone(),
            computed: r.computed.clone(),
            exact: r.residual.is_none(),
            residual: r.residual.map(render),
            detail: r.detail.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Numeric {
    pub re: String,
    pub im: String,
}

/// A residue value in every rendering the report offers.
#[derive(Clone, Debug, Serialize)]
pub struct Value {
    pub display: String,
    pub exact: ExactScalar,
    #[serde(rename = "exactInPi")]
    pub exact_in_pi: ExactScalar,
    pub numeric: Numeric,
}

impl From<&ResidueValue> for Value {
    fn from(r: &ResidueValue) -> Self {
        let z = r.to_complex();
        Self {
            display: r.to_string(),
            exact: r.exact(),
            exact_in_pi: r.exact_in_pi(),
            numeric: Numeric {
                re: render(z.re),
                im: render(z.im),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Evaluation {
    pub dim: usize,
    pub volume: String,
    #[serde(rename = "torsionFunctional")]
    pub torsion_functional: Value,
    /// `-2^m i V(S^{n-1}) Σ u_a v_b w_c T_abc`, for comparison.
    #[serde(rename = "closedForm")]
    pub closed_form: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckTiming {
    pub name: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub checks: Vec<CheckTiming>,
    pub total_seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub config: ConfigEcho,
    pub pass: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evaluation: Option<Evaluation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<DoubledRow>>,
    /// Wall-clock data; the only part of the report that varies between runs.
    pub timings: Timings,
}

impl Report {
    pub fn new(command: &str, config: ConfigEcho, records: &[CheckRecord]) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            config,
            pass: records.iter().all(|r| r.passed),
            checks: records.iter().map(Check::from).collect(),
            evaluation: None,
            table: None,
            timings: Timings {
                checks: records
                    .iter()
                    .map(|r| CheckTiming {
                        name: r.name.clone(),
                        seconds: r.elapsed.as_secs_f64(),
                    })
                    .collect(),
                total_seconds: 0.0,
            },
        }
    }

    pub fn finish(mut self, total: Duration) -> Self {
        self.timings.total_seconds = total.as_secs_f64();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
