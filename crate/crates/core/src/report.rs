//! Machine-readable results: per-check reports, run summaries, scan rows.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Outcome marker of an exact comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exact {
    ExactZero,
    ExactNonzero,
}

/// Largest residual of a check. Exact results are never folded into a
/// float; `Missing` (JSON `null`) marks checks with no residual to report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Residual {
    Value(f64),
    Exact(Exact),
    Missing,
}

impl Residual {
    /// Non-finite values become `Missing`, since JSON cannot carry them.
    pub fn from_f64(x: f64) -> Self {
        if x.is_finite() {
            Residual::Value(x)
        } else {
            Residual::Missing
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub check_name: String,
    pub status: Status,
    pub max_abs_residual: Residual,
    pub details: Value,
}

impl CheckReport {
    /// Pass iff `residual ≤ tol` (a NaN residual fails).
    pub fn bounded(name: impl Into<String>, residual: f64, tol: f64, details: Value) -> Self {
        let status = if residual <= tol { Status::Pass } else { Status::Fail };
        CheckReport {
            check_name: name.into(),
            status,
            max_abs_residual: Residual::from_f64(residual),
            details,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let count = |s| reports.iter().filter(|r| r.status == s).count();
        Summary {
            total: reports.len(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            errored: count(Status::Error),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

/// One JSON object per run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RunReport {
    pub command: String,
    pub config: Value,
    pub reports: Vec<CheckReport>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(command: impl Into<String>, config: Value, reports: Vec<CheckReport>) -> Self {
        let summary = Summary::of(&reports);
        RunReport {
            command: command.into(),
            config,
            reports,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are serializable")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// Column order of scan output.
pub const SCAN_HEADER: [&str; 10] = [
    "u",
    "v",
    "theta",
    "maxRicci",
    "meanCurvSq",
    "deficit",
    "alpha",
    "hopfDefect",
    "traceA",
    "flags",
];

/// One scanned grid point. The parameter columns are named after the ruled
/// chart; other charts store their own parameters in the same slots.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanRow {
    pub u: f64,
    pub v: f64,
    pub theta: f64,
    pub max_ricci: f64,
    pub mean_curv_sq: f64,
    pub deficit: f64,
    pub alpha: f64,
    pub hopf_defect: f64,
    #[serde(rename = "traceA")]
    pub trace_a: f64,
    /// Empty, or `;`-separated markers such as `singular`.
    pub flags: String,
}

impl ScanRow {
    pub fn is_flagged(&self) -> bool {
        !self.flags.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> RunReport {
        RunReport::new(
            "symbolic",
            json!({"names": ["all"]}),
            vec![
                CheckReport {
                    check_name: "mu0".into(),
                    status: Status::Pass,
                    max_abs_residual: Residual::Exact(Exact::ExactZero),
                    details: json!({"samples": 7}),
                },
                CheckReport::bounded("ruled.deficit", 3.141592653589793e-9, 1e-6, Value::Null),
                CheckReport::bounded("broken", f64::NAN, 1e-6, Value::Null),
            ],
        )
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        assert_eq!(RunReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn exact_marker_is_not_a_number() {
        let s = sample().to_json();
        assert!(s.contains("\"maxAbsResidual\": \"exact-zero\""));
        assert!(s.contains("\"maxAbsResidual\": null"));
    }

    #[test]
    fn nan_residual_fails() {
        let r = sample();
        assert_eq!(r.reports[2].status, Status::Fail);
        assert_eq!(r.summary, Summary { total: 3, passed: 2, failed: 1, errored: 0 });
        assert!(!r.summary.all_passed());
    }

    #[test]
    fn scan_row_field_names_follow_header() {
        let row = ScanRow {
            u: 0.5,
            v: 1.0,
            theta: 2.0,
            max_ricci: 5.0,
            mean_curv_sq: 0.0,
            deficit: 0.0,
            alpha: 0.0,
            hopf_defect: 1.0,
            trace_a: 0.0,
            flags: String::new(),
        };
        let v = serde_json::to_value(&row).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        let mut expected = SCAN_HEADER.to_vec();
        expected.sort_unstable();
        let mut keys = keys;
        keys.sort_unstable();
        assert_eq!(keys, expected);
    }
}
