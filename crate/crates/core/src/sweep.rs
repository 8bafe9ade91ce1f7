//! Parameter sweeps of the proposed method over `λ` or `γ₁`.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::measures::MetricSpec;
use crate::topsis::{topsis_proposed, DecisionProblem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepParameter {
    Lambda,
    Gamma1,
}

impl SweepParameter {
    pub fn name(&self) -> &'static str {
        match self {
            SweepParameter::Lambda => "lambda",
            SweepParameter::Gamma1 => "gamma1",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MetricFamily {
    Xy,
    Zx,
    Kk { gamma1: f64, gamma2: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub parameter: SweepParameter,
    pub grid: Vec<f64>,
    pub family: MetricFamily,
    /// Used when `parameter` is `Gamma1`.
    pub lambda: f64,
}

impl SweepSpec {
    /// The metric at one grid point.
    pub fn metric_at(&self, value: f64) -> Result<MetricSpec> {
        match (self.parameter, self.family) {
            (SweepParameter::Lambda, MetricFamily::Xy) => MetricSpec::xy(value),
            (SweepParameter::Lambda, MetricFamily::Zx) => MetricSpec::zx(value),
            (SweepParameter::Lambda, MetricFamily::Kk { gamma1, gamma2 }) => MetricSpec::kk(gamma1, gamma2, value),
            (SweepParameter::Gamma1, MetricFamily::Kk { gamma2, .. }) => MetricSpec::kk(value, gamma2, self.lambda),
            (SweepParameter::Gamma1, _) => Err(Error::domain("a gamma1 sweep needs the kk metric family")),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid.is_empty() {
            return Err(Error::domain("sweep grid is empty"));
        }
        for &x in &self.grid {
            self.metric_at(x)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub alternative: usize,
    pub closeness: f64,
}

/// One row per grid point and alternative, sorted by `(value, alternative)`.
pub fn run_sweep(problem: &DecisionProblem, spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let mut grid = spec.grid.clone();
    grid.sort_by(f64::total_cmp);
    let per_point = grid
        .par_iter()
        .map(|&value| {
            let r = topsis_proposed(problem, &spec.metric_at(value)?)?;
            Ok(r.closeness
                .into_iter()
                .enumerate()
                .map(|(alternative, closeness)| SweepRow {
                    value,
                    alternative,
                    closeness,
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_point.into_iter().flatten().collect())
}

/// `param,value,alternative,closeness` with LF line endings.
pub fn sweep_csv(problem: &DecisionProblem, spec: &SweepSpec, rows: &[SweepRow]) -> String {
    let mut out = String::from("param,value,alternative,closeness\n");
    for r in rows {
        let name = &problem.alternatives()[r.alternative];
        let _ = writeln!(out, "{},{},{},{}", spec.parameter.name(), r.value, csv_field(name), r.closeness);
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
