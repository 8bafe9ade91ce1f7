use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ifv_topsis::harness::{self, FuzzConfig, FuzzMethod};
use ifv_topsis::io::{parse_problem_csv, parse_problem_json, write_problem_json};
use ifv_topsis::sweep::{run_sweep, sweep_csv, MetricFamily, SweepParameter, SweepSpec};
use ifv_topsis::{DecisionProblem, Error, Method, MetricSpec, OrderSpec};

/// Environment variable naming the directory searched for problem files
/// that are not found relative to the working directory.
const DATA_ENV: &str = "IFV_TOPSIS_DATA";

#[derive(Parser)]
#[command(name = "iftopsis", version, about = "Rank alternatives with intuitionistic fuzzy TOPSIS")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank the alternatives of a problem file.
    Rank {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Proposed)]
        method: MethodArg,
        #[command(flatten)]
        metric: MetricArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closeness degrees over a grid of λ or γ₁ values, as CSV.
    Sweep {
        input: PathBuf,
        #[arg(long, value_enum)]
        param: ParamArg,
        /// Comma-separated grid values.
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        grid: Vec<f64>,
        #[command(flatten)]
        metric: MetricArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run named reproduction checks, or `all`.
    Reproduce {
        check: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Print every observed value, not just the status line.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Randomized monotonicity (or metric-axiom) testing.
    Fuzz {
        #[arg(long, value_enum, default_value_t = MethodArg::Proposed)]
        method: MethodArg,
        #[command(flatten)]
        metric: MetricArgs,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Check metric axioms on random triples instead of ranking monotonicity.
        #[arg(long)]
        axioms: bool,
    },
    /// Parse and validate a problem file.
    Validate {
        input: PathBuf,
        /// Print the canonical JSON form.
        #[arg(long)]
        canonical: bool,
    },
}

#[derive(Args)]
struct MetricArgs {
    #[arg(long, value_enum, default_value_t = OrderArg::Xy)]
    order: OrderArg,
    #[arg(long, default_value_t = 100.0)]
    lambda: f64,
    #[arg(long)]
    gamma1: Option<f64>,
    #[arg(long)]
    gamma2: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Li,
    Chen,
    Proposed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Xy,
    Zx,
    /// `≤_{K_γ₁, K_γ₂}`; needs `--gamma1` and `--gamma2`.
    Agg,
    /// Atanassov's partial order (fuzzing only).
    Partial,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParamArg {
    Lambda,
    Gamma1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

enum Failure {
    /// A check failed or the theorem was breached.
    Check,
    Input(String),
    Config(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::WeightKindMismatch { .. } | Error::NonAdmissible => Failure::Config(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

impl MetricArgs {
    fn gammas(&self) -> Result<(f64, f64), Failure> {
        match (self.gamma1, self.gamma2) {
            (Some(g1), Some(g2)) => Ok((g1, g2)),
            _ => Err(Failure::Input("--order agg needs --gamma1 and --gamma2".into())),
        }
    }

    fn order(&self) -> Result<OrderSpec, Failure> {
        Ok(match self.order {
            OrderArg::Xy => OrderSpec::Xy,
            OrderArg::Zx => OrderSpec::Zx,
            OrderArg::Partial => OrderSpec::Partial,
            OrderArg::Agg => {
                let (g1, g2) = self.gammas()?;
                OrderSpec::k_gamma(g1, g2)?
            }
        })
    }

    fn metric(&self) -> Result<MetricSpec, Failure> {
        if self.order == OrderArg::Partial {
            return Err(Failure::Config("the partial order has no paired metric".into()));
        }
        Ok(MetricSpec::for_order(&self.order()?, self.lambda)?)
    }

    fn family(&self) -> Result<MetricFamily, Failure> {
        match self.order {
            OrderArg::Xy => Ok(MetricFamily::Xy),
            OrderArg::Zx => Ok(MetricFamily::Zx),
            OrderArg::Agg => {
                let gamma2 = self.gamma2.ok_or_else(|| Failure::Input("--order agg needs --gamma2".into()))?;
                Ok(MetricFamily::Kk {
                    gamma1: self.gamma1.unwrap_or(f64::NAN),
                    gamma2,
                })
            }
            OrderArg::Partial => Err(Failure::Config("the partial order has no paired metric".into())),
        }
    }
}

fn resolve(input: &Path) -> PathBuf {
    if input.exists() {
        return input.to_path_buf();
    }
    if let Some(dir) = std::env::var_os(DATA_ENV) {
        let dir = PathBuf::from(dir);
        for candidate in [dir.join(input), dir.join(input).with_extension("json")] {
            if candidate.exists() {
                return candidate;
            }
        }
    }
    input.to_path_buf()
}

fn load(input: &Path) -> Result<DecisionProblem, Failure> {
    let path = resolve(input);
    let text = std::fs::read_to_string(&path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let parsed = if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        parse_problem_csv(&text)
    } else {
        parse_problem_json(&text)
    };
    parsed.map_err(|e| Failure::Input(format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.message)))
}

fn method(arg: MethodArg, metric: &MetricArgs) -> Result<Method, Failure> {
    Ok(match arg {
        MethodArg::Li => Method::Li,
        MethodArg::Chen => Method::Chen,
        MethodArg::Proposed => Method::Proposed(metric.metric()?),
    })
}

fn rank(input: &Path, method_arg: MethodArg, metric: &MetricArgs, format: Format) -> CliResult {
    let problem = load(input)?;
    let method = method(method_arg, metric)?;
    let result = method.run(&problem)?;
    let names = problem.alternatives();
    let label = match &method {
        Method::Proposed(m) => format!("proposed {}", m.label()),
        other => other.name().to_string(),
    };
    let preference = result.preference_string(names);
    match format {
        Format::Text => {
            let width = names.iter().map(|n| n.chars().count()).max().unwrap_or(0);
            let mut out = format!("method: {label}\n");
            for (name, c) in names.iter().zip(&result.closeness) {
                let _ = writeln!(out, "{name:<width$}  {c:.6}");
            }
            let _ = writeln!(out, "ranking: {preference}");
            print!("{out}");
        }
        Format::Json => {
            let doc = serde_json::json!({
                "method": label,
                "alternatives": names,
                "closeness": result.closeness,
                "order": result.order.iter().map(|&i| &names[i]).collect::<Vec<_>>(),
                "ties": result.ties.iter().map(|g| g.iter().map(|&i| &names[i]).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "ranking": preference,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
    Ok(())
}

fn sweep(input: &Path, param: ParamArg, grid: Vec<f64>, metric: &MetricArgs, output: Option<&Path>) -> CliResult {
    let problem = load(input)?;
    let spec = SweepSpec {
        parameter: match param {
            ParamArg::Lambda => SweepParameter::Lambda,
            ParamArg::Gamma1 => SweepParameter::Gamma1,
        },
        grid,
        family: metric.family()?,
        lambda: metric.lambda,
    };
    if spec.parameter == SweepParameter::Gamma1 && metric.order != OrderArg::Agg {
        return Err(Failure::Input("a gamma1 sweep needs --order agg".into()));
    }
    let rows = run_sweep(&problem, &spec).map_err(|e| Failure::Input(e.to_string()))?;
    let csv = sweep_csv(&problem, &spec, &rows);
    match output {
        Some(path) => {
            std::fs::write(path, csv).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn reproduce(check: &str, format: Format, verbose: bool) -> CliResult {
    let reports = if check == "all" {
        harness::run_all()
    } else {
        vec![harness::run_check(check).map_err(|e| Failure::Input(e.to_string()))?]
    };
    let passed = reports.iter().filter(|r| r.passed()).count();
    match format {
        Format::Json => {
            let docs: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| serde_json::from_str(&r.to_json()).expect("report json"))
                .collect();
            println!("{}", serde_json::to_string_pretty(&docs).expect("json"));
        }
        Format::Text => {
            let mut out = String::new();
            for r in &reports {
                if verbose {
                    out.push_str(&r.to_text());
                } else {
                    let _ = writeln!(out, "{} {}  {}", r.status, r.id, r.narrative);
                }
            }
            let _ = writeln!(out, "{passed}/{} checks passed", reports.len());
            print!("{out}");
        }
    }
    if passed == reports.len() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn fuzz(method_arg: MethodArg, metric: &MetricArgs, trials: usize, seed: u64, axioms: bool) -> CliResult {
    if trials == 0 {
        return Err(Failure::Input("--trials must be at least 1".into()));
    }
    if axioms {
        let (report, v) = harness::fuzz_metric_axioms(&metric.metric()?, trials, seed)?;
        print!("{}", report.to_text());
        println!("{} violations", v.total());
        return if report.passed() { Ok(()) } else { Err(Failure::Check) };
    }
    let order = metric.order()?;
    let method = match method_arg {
        MethodArg::Li => FuzzMethod::Li,
        MethodArg::Chen => FuzzMethod::Chen,
        MethodArg::Proposed => FuzzMethod::Proposed(match metric.order {
            // ⊂ is refined by ≤_XY, so ρ_XY covers partial-order dominance
            OrderArg::Partial => MetricSpec::xy(metric.lambda)?,
            _ => metric.metric()?,
        }),
    };
    let outcome = harness::fuzz_monotonicity(&FuzzConfig::new(method, order, trials, seed))?;
    print!("{}", outcome.report.to_text());
    println!("{} violations", outcome.violations);
    if let Some(c) = &outcome.first {
        println!(
            "first counterexample (trial {}): {} dominates {} but has lower closeness",
            c.trial,
            c.problem.alternatives()[c.dominating],
            c.problem.alternatives()[c.dominated]
        );
        let closeness: Vec<String> = c.closeness.iter().map(|x| format!("{x:.6}")).collect();
        println!("closeness: {}", closeness.join(" "));
        print!("{}", write_problem_json(&c.problem));
    }
    if outcome.report.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn validate(input: &Path, canonical: bool) -> CliResult {
    let problem = load(input)?;
    if canonical {
        print!("{}", write_problem_json(&problem));
    } else {
        println!(
            "ok: {} alternatives, {} attributes",
            problem.n_alternatives(),
            problem.n_attributes()
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Rank {
            input,
            method,
            metric,
            format,
        } => rank(&input, method, &metric, format),
        Command::Sweep {
            input,
            param,
            grid,
            metric,
            output,
        } => sweep(&input, param, grid, &metric, output.as_deref()),
        Command::Reproduce { check, format, verbose } => reproduce(&check, format, verbose),
        Command::Fuzz {
            method,
            metric,
            trials,
            seed,
            axioms,
        } => fuzz(method, &metric, trials, seed, axioms),
        Command::Validate { input, canonical } => validate(&input, canonical),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
