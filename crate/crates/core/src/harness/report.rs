use std::fmt::{self, Write as _};

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Reported but never fails a run (baseline fuzz rates).
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Observed {
    pub label: String,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Expected {
    pub label: String,
    pub value: f64,
    pub tolerance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderingCheck {
    pub label: String,
    pub expected: String,
    pub observed: String,
}

/// A boolean claim such as a strict inequality.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    pub label: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub status: Status,
    pub narrative: String,
    pub observed: Vec<Observed>,
    pub expected: Vec<Expected>,
    pub orderings: Vec<OrderingCheck>,
    pub claims: Vec<Claim>,
    pub seed: Option<u64>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// Line-oriented rendering; one header line then indented details.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}  {}\n", self.status, self.id, self.narrative);
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "  seed {seed}");
        }
        for (o, e) in self.observed.iter().zip(&self.expected) {
            let mark = if within(o.value, e) { "ok" } else { "MISMATCH" };
            let _ = writeln!(
                out,
                "  {} = {} (expected {} ± {:e}) {mark}",
                o.label, o.value, e.value, e.tolerance
            );
        }
        for o in self.observed.iter().skip(self.expected.len()) {
            let _ = writeln!(out, "  {} = {}", o.label, o.value);
        }
        for r in &self.orderings {
            let mark = if r.expected == r.observed { "ok" } else { "MISMATCH" };
            let _ = writeln!(out, "  {}: {} (expected {}) {mark}", r.label, r.observed, r.expected);
        }
        for c in &self.claims {
            let _ = writeln!(out, "  {}: {}", c.label, if c.holds { "holds" } else { "FAILS" });
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn within(value: f64, e: &Expected) -> bool {
    (value - e.value).abs() <= e.tolerance
}

/// Half a unit in the last printed place of a `k`-decimal value.
pub fn printed(k: i32) -> f64 {
    5.0 * 10f64.powi(-(k + 1))
}

/// Tolerance for values the source states exactly.
pub const EXACT: f64 = 1e-12;

pub(crate) struct Builder {
    report: CheckReport,
    notes: Vec<Observed>,
    informational: bool,
}

impl Builder {
    pub fn new(id: &str, narrative: &str) -> Self {
        Builder {
            report: CheckReport {
                id: id.to_string(),
                status: Status::Pass,
                narrative: narrative.to_string(),
                observed: Vec::new(),
                expected: Vec::new(),
                orderings: Vec::new(),
                claims: Vec::new(),
                seed: None,
            },
            notes: Vec::new(),
            informational: false,
        }
    }

    /// Observed/expected pairs are stored at matching indices.
    pub fn value(mut self, label: impl Into<String>, observed: f64, expected: f64, tolerance: f64) -> Self {
        debug_assert_eq!(self.report.observed.len(), self.report.expected.len());
        let label = label.into();
        self.report.observed.push(Observed {
            label: label.clone(),
            value: observed,
        });
        self.report.expected.push(Expected {
            label,
            value: expected,
            tolerance,
        });
        self
    }

    pub fn values(mut self, prefix: &str, observed: &[f64], expected: &[f64], tolerance: f64) -> Self {
        for (i, (&o, &e)) in observed.iter().zip(expected).enumerate() {
            self = self.value(format!("{prefix}{}", i + 1), o, e, tolerance);
        }
        self
    }

    pub fn ordering(mut self, label: impl Into<String>, expected: &str, observed: String) -> Self {
        self.report.orderings.push(OrderingCheck {
            label: label.into(),
            expected: expected.to_string(),
            observed,
        });
        self
    }

    pub fn claim(mut self, label: impl Into<String>, holds: bool) -> Self {
        self.report.claims.push(Claim {
            label: label.into(),
            holds,
        });
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.report.seed = Some(seed);
        self
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    /// An observation without an expectation.
    pub fn note(mut self, label: impl Into<String>, value: f64) -> Self {
        self.notes.push(Observed {
            label: label.into(),
            value,
        });
        self
    }

    pub fn finish(mut self) -> CheckReport {
        let ok = self.report.observed.iter().zip(&self.report.expected).all(|(o, e)| within(o.value, e))
            && self.report.orderings.iter().all(|r| r.expected == r.observed)
            && self.report.claims.iter().all(|c| c.holds);
        self.report.status = match (self.informational, ok) {
            (true, _) => Status::Info,
            (false, true) => Status::Pass,
            (false, false) => Status::Fail,
        };
        self.report.observed.append(&mut self.notes);
        self.report
    }
}
