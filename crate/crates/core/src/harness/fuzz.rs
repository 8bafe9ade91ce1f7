use std::cmp::Ordering;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::{Builder, CheckReport};
use crate::error::{Error, Result};
use crate::ifv::Ifv;
use crate::measures::MetricSpec;
use crate::orders::OrderSpec;
use crate::topsis::{topsis_chen, topsis_li, topsis_proposed, DecisionProblem, RankingResult, Weights};

const SLACK: f64 = 1e-12;

/// Which ranking method a fuzz run exercises.
#[derive(Clone, Debug)]
pub enum FuzzMethod {
    Li,
    Chen,
    /// Violations of the proposed method fail the run.
    Proposed(MetricSpec),
}

impl FuzzMethod {
    fn run(&self, problem: &DecisionProblem) -> Result<RankingResult> {
        match self {
            FuzzMethod::Li => topsis_li(problem),
            FuzzMethod::Chen => topsis_chen(problem),
            FuzzMethod::Proposed(metric) => topsis_proposed(problem, metric),
        }
    }

    pub fn label(&self) -> String {
        match self {
            FuzzMethod::Li => "li".into(),
            FuzzMethod::Chen => "chen".into(),
            FuzzMethod::Proposed(m) => format!("proposed {}", m.label()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub trials: usize,
    pub seed: u64,
    pub method: FuzzMethod,
    /// The order under which the injected pair is dominated.
    pub order: OrderSpec,
    pub alternatives: RangeInclusive<usize>,
    pub attributes: RangeInclusive<usize>,
    /// Probability that a generated cell is drawn from the 1/20 grid, which
    /// makes ties on the primary key likely.
    pub grid_probability: f64,
}

impl FuzzConfig {
    pub fn new(method: FuzzMethod, order: OrderSpec, trials: usize, seed: u64) -> Self {
        FuzzConfig {
            trials,
            seed,
            method,
            order,
            alternatives: 2..=6,
            attributes: 1..=5,
            grid_probability: 0.3,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::domain("trials must be at least 1"));
        }
        if *self.alternatives.start() < 2 || *self.attributes.start() < 1 || self.alternatives.is_empty() || self.attributes.is_empty() {
            return Err(Error::domain("need at least 2 alternatives and 1 attribute"));
        }
        Ok(())
    }
}

/// Independent stream per trial, so results do not depend on scheduling.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn cell<R: Rng>(rng: &mut R, grid_probability: f64) -> Ifv {
    if rng.random_bool(grid_probability) {
        Ifv::random_grid(rng)
    } else {
        Ifv::random(rng)
    }
}

/// A counterexample: `dominating` beats `dominated` pointwise, yet ranks lower.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub trial: usize,
    pub problem: DecisionProblem,
    pub dominated: usize,
    pub dominating: usize,
    pub closeness: Vec<f64>,
}

#[derive(Clone, Debug)]
pub struct MonotonicityOutcome {
    pub report: CheckReport,
    pub violations: usize,
    pub skipped: usize,
    pub first: Option<Counterexample>,
}

enum Trial {
    Ok,
    Skipped,
    Violation(Counterexample),
}

fn random_problem(config: &FuzzConfig, trial: usize) -> (DecisionProblem, usize, usize) {
    let mut rng = trial_rng(config.seed, trial as u64);
    let n = rng.random_range(config.alternatives.clone());
    let m = rng.random_range(config.attributes.clone());
    let mut matrix: Vec<Vec<Ifv>> = (0..n)
        .map(|_| (0..m).map(|_| cell(&mut rng, config.grid_probability)).collect())
        .collect();
    let low = rng.random_range(0..n);
    let high = (low + rng.random_range(1..n)) % n;
    let pairs: Vec<(Ifv, Ifv)> = matrix[low]
        .iter()
        .zip(&matrix[high])
        .map(|(a, b)| config.order.sorted_pair(*a, *b))
        .collect();
    matrix[low] = pairs.iter().map(|p| p.0).collect();
    matrix[high] = pairs.iter().map(|p| p.1).collect();
    let raw: Vec<f64> = (0..m).map(|_| rng.random_range(0.05..1.0)).collect();
    let total: f64 = raw.iter().sum();
    let weights = raw.iter().map(|w| w / total).collect();
    let problem = DecisionProblem::from_matrix(matrix, Weights::Scalar(weights)).expect("generated problem is valid");
    (problem, low, high)
}

/// Ranks `problem` and tests whether `high` scores at least `low`.
/// `Ok(None)` means the method could not rank the problem.
pub fn check_dominance(problem: &DecisionProblem, low: usize, high: usize, method: &FuzzMethod) -> Result<Option<bool>> {
    match method.run(problem) {
        Ok(r) => Ok(Some(r.closeness[high] >= r.closeness[low] - SLACK)),
        Err(Error::DegenerateProblem { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn one_trial(config: &FuzzConfig, trial: usize) -> Result<Trial> {
    let (problem, low, high) = random_problem(config, trial);
    match config.method.run(&problem) {
        Ok(r) if r.closeness[high] < r.closeness[low] - SLACK => Ok(Trial::Violation(Counterexample {
            trial,
            problem,
            dominated: low,
            dominating: high,
            closeness: r.closeness,
        })),
        Ok(_) => Ok(Trial::Ok),
        Err(Error::DegenerateProblem { .. }) => Ok(Trial::Skipped),
        Err(e) => Err(e),
    }
}

/// Random problems with one injected dominated pair; counts pairs whose
/// closeness order contradicts the dominance.
pub fn fuzz_monotonicity(config: &FuzzConfig) -> Result<MonotonicityOutcome> {
    config.validate()?;
    if let FuzzMethod::Proposed(metric) = &config.method {
        if !metric.is_admissible() {
            return Err(Error::NonAdmissible);
        }
    }
    let trials = (0..config.trials)
        .into_par_iter()
        .map(|t| one_trial(config, t))
        .collect::<Result<Vec<_>>>()?;
    let mut violations = 0;
    let mut skipped = 0;
    let mut first = None;
    for t in trials {
        match t {
            Trial::Ok => {}
            Trial::Skipped => skipped += 1,
            Trial::Violation(c) => {
                violations += 1;
                first.get_or_insert(c);
            }
        }
    }
    let mut b = Builder::new(
        &format!("fuzz_monotonicity[{} / {}]", config.method.label(), config.order.label()),
        "dominating rows never score below dominated rows",
    )
    .seed(config.seed);
    b = match config.method {
        FuzzMethod::Proposed(_) => b.value("violations", violations as f64, 0.0, 0.0),
        _ => b.informational().note("violations", violations as f64),
    };
    let report = b
        .note("trials", config.trials as f64)
        .note("skipped", skipped as f64)
        .finish();
    Ok(MonotonicityOutcome {
        report,
        violations,
        skipped,
        first,
    })
}

/// Violation counts per metric property.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AxiomViolations {
    pub range: usize,
    pub symmetry: usize,
    pub identity: usize,
    pub triangle: usize,
    pub order_compatibility: usize,
}

impl AxiomViolations {
    pub fn total(&self) -> usize {
        self.range + self.symmetry + self.identity + self.triangle + self.order_compatibility
    }

    fn add(self, o: Self) -> Self {
        AxiomViolations {
            range: self.range + o.range,
            symmetry: self.symmetry + o.symmetry,
            identity: self.identity + o.identity,
            triangle: self.triangle + o.triangle,
            order_compatibility: self.order_compatibility + o.order_compatibility,
        }
    }
}

fn triple<R: Rng>(rng: &mut R) -> [Ifv; 3] {
    let mut pick = || match rng.random_range(0..20) {
        0 => Ifv::ZERO,
        1 => Ifv::ONE,
        2..=7 => Ifv::random_grid(rng),
        _ => Ifv::random(rng),
    };
    let a = pick();
    let b = pick();
    let c = pick();
    [a, b, c]
}

/// Violations found on one triple.
pub fn axiom_violations(metric: &MetricSpec, t: &[Ifv; 3]) -> AxiomViolations {
    let mut out = AxiomViolations::default();
    let d = |i: usize, j: usize| metric.distance(&t[i], &t[j]);
    for i in 0..3 {
        if d(i, i) != 0.0 {
            out.identity += 1;
        }
        for j in 0..3 {
            let x = d(i, j);
            if !(-SLACK..=1.0 + SLACK).contains(&x) {
                out.range += 1;
            }
            if x != d(j, i) {
                out.symmetry += 1;
            }
            if i != j && t[i] != t[j] && x <= 0.0 {
                out.identity += 1;
            }
            for k in 0..3 {
                if x > d(i, k) + d(k, j) + SLACK {
                    out.triangle += 1;
                }
            }
        }
    }
    let order = metric.order();
    let mut s = *t;
    s.sort_by(|a, b| order.compare(a, b).unwrap_or(Ordering::Equal));
    let far = metric.distance(&s[0], &s[2]);
    if metric.distance(&s[0], &s[1]) > far + SLACK || metric.distance(&s[1], &s[2]) > far + SLACK {
        out.order_compatibility += 1;
    }
    out
}

/// Range, symmetry, identity, triangle inequality and order compatibility
/// on random triples.
pub fn fuzz_metric_axioms(metric: &MetricSpec, trials: usize, seed: u64) -> Result<(CheckReport, AxiomViolations)> {
    if trials == 0 {
        return Err(Error::domain("trials must be at least 1"));
    }
    let v = (0..trials)
        .into_par_iter()
        .map(|t| axiom_violations(metric, &triple(&mut trial_rng(seed, t as u64))))
        .reduce(AxiomViolations::default, AxiomViolations::add);
    let report = Builder::new(
        &format!("fuzz_metric_axioms[{}]", metric.label()),
        "metric properties hold on random triples",
    )
    .seed(seed)
    .value("range violations", v.range as f64, 0.0, 0.0)
    .value("symmetry violations", v.symmetry as f64, 0.0, 0.0)
    .value("identity violations", v.identity as f64, 0.0, 0.0)
    .value("triangle violations", v.triangle as f64, 0.0, 0.0)
    .value("order-compatibility violations", v.order_compatibility as f64, 0.0, 0.0)
    .note("trials", trials as f64)
    .finish();
    Ok((report, v))
}
