//! One line per acceptance criterion. Runs without the libtest harness so
//! the lines are always printed.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ifv_topsis::harness::{dsh_level_point, dsh_residual, fuzz_metric_axioms, fuzz_monotonicity, FuzzConfig, FuzzMethod};
use ifv_topsis::measures::{d_sh, s_ck, sim_classical};
use ifv_topsis::topsis::{chen_detail, li_weighted_matrix};
use ifv_topsis::{
    datasets, topsis_chen, topsis_li, topsis_proposed, DecisionProblem, Ifv, MetricSpec, OrderSpec, SimilarityKind,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn close(label: &str, got: f64, want: f64, tol: f64) -> Result<(), String> {
    ensure((got - want).abs() <= tol, || format!("{label} = {got}, expected {want} ± {tol:e}"))
}

fn close_all(label: &str, got: &[f64], want: &[f64], tol: f64) -> Result<(), String> {
    ensure(got.len() == want.len(), || format!("{label}: length {} vs {}", got.len(), want.len()))?;
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        close(&format!("{label}{}", i + 1), *g, *w, tol)?;
    }
    Ok(())
}

fn ranking(problem: &DecisionProblem, metric: &MetricSpec) -> (Vec<f64>, String) {
    let r = topsis_proposed(problem, metric).unwrap();
    let s = r.preference_string(problem.alternatives());
    (r.closeness, s)
}

fn same(label: &str, got: &str, want: &str) -> Result<(), String> {
    ensure(got == want, || format!("{label}: {got}, expected {want}"))
}

/// Independent closeness computation for benefit-only problems with the
/// XY metric, written from the formulas rather than the library types.
fn oracle_xy(matrix: &[Vec<(f64, f64)>], w: &[f64], lambda: f64) -> Vec<f64> {
    let m = w.len();
    let col = |j: usize| matrix.iter().map(move |r| r[j]);
    let pos: Vec<(f64, f64)> = (0..m)
        .map(|j| (col(j).map(|c| c.0).fold(0.0, f64::max), col(j).map(|c| c.1).fold(1.0, f64::min)))
        .collect();
    let neg: Vec<(f64, f64)> = (0..m)
        .map(|j| (col(j).map(|c| c.0).fold(1.0, f64::min), col(j).map(|c| c.1).fold(0.0, f64::max)))
        .collect();
    let rho = |a: (f64, f64), b: (f64, f64)| {
        let (sa, sb) = (a.0 - a.1, b.0 - b.1);
        if sa != sb {
            (1.0 + lambda * (sa - sb).abs()) / (1.0 + 2.0 * lambda)
        } else {
            ((a.0 + a.1) - (b.0 + b.1)).abs() / (1.0 + 2.0 * lambda)
        }
    };
    matrix
        .iter()
        .map(|row| {
            let sp = 1.0 - (0..m).map(|j| w[j] * rho(row[j], pos[j])).sum::<f64>();
            let sn = 1.0 - (0..m).map(|j| w[j] * rho(row[j], neg[j])).sum::<f64>();
            sp / (sp + sn)
        })
        .collect()
}

fn raw(problem: &DecisionProblem) -> Vec<Vec<(f64, f64)>> {
    problem
        .matrix()
        .iter()
        .map(|r| r.iter().map(|v| (v.mu(), v.nu())).collect())
        .collect()
}

fn c1() -> Outcome {
    let p = datasets::supplier_selection();
    let start = Instant::now();
    let (c, order) = ranking(&p, &MetricSpec::xy(100.0).unwrap());
    let elapsed = start.elapsed();
    close_all("C", &c, &[0.4321, 0.5709, 0.4750, 0.4876, 0.5053], 5e-5)?;
    same("ranking", &order, "A2 ≻ A5 ≻ A4 ≻ A3 ≻ A1")?;
    close_all("oracle C", &c, &oracle_xy(&raw(&p), &[0.25, 0.4, 0.2, 0.15], 100.0), 1e-12)?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("{order} in {elapsed:?}"))
}

fn c2() -> Outcome {
    let (c, _) = ranking(&datasets::supplier_selection(), &MetricSpec::zx(100.0).unwrap());
    close_all("C", &c, &[0.4371, 0.5618, 0.4694, 0.4922, 0.4925], 5e-5)?;
    Ok("ρ_ZX(100) closeness matches".into())
}

fn c3() -> Outcome {
    let p = datasets::project_manager();
    let (c, _) = ranking(&p, &MetricSpec::xy(100.0).unwrap());
    close_all("XY C", &c, &[0.5565, 0.5295, 0.5058, 0.4555, 0.5171], 5e-5)?;
    close_all("oracle C", &c, &oracle_xy(&raw(&p), &[0.1, 0.2, 0.3, 0.4], 100.0), 1e-12)?;
    let (c, _) = ranking(&p, &MetricSpec::zx(100.0).unwrap());
    close_all("ZX C", &c, &[0.5531, 0.5329, 0.5042, 0.4583, 0.5198], 5e-5)?;
    Ok("ρ_XY(100) and ρ_ZX(100) closeness match".into())
}

fn c4() -> Outcome {
    let pm = datasets::project_manager();
    let kk = |g1| MetricSpec::kk(g1, 0.4, 100.0).unwrap();
    same("K0.2,K0.4", &ranking(&pm, &kk(0.2)).1, "A1 ≻ A3 ≻ A5 ≻ A2 ≻ A4")?;
    same("K0.5,K0.4", &ranking(&pm, &kk(0.5)).1, "A1 ≻ A2 ≻ A5 ≻ A3 ≻ A4")?;
    same("K0.6,K0.4", &ranking(&pm, &kk(0.6)).1, "A1 ≻ A2 ≻ A5 ≻ A3 ≻ A4")?;
    let ss = datasets::supplier_selection();
    for g1 in [0.2, 0.5, 0.6] {
        same(&format!("supplier K{g1},K0.4"), &ranking(&ss, &kk(g1)).1, "A2 ≻ A5 ≻ A4 ≻ A3 ≻ A1")?;
    }
    Ok("γ-sensitivity rankings match".into())
}

fn c5() -> Outcome {
    let p = datasets::li_ifv_weights();
    let r = topsis_li(&p).unwrap();
    close("C2", r.closeness[1], 0.9085917, 1e-6)?;
    close("C3", r.closeness[2], 0.9085194, 1e-6)?;
    same("ranking", &r.preference_string(p.alternatives()), "A4 ≻ A2 ≻ A3 ≻ A1")?;
    let w = li_weighted_matrix(&datasets::li_scalar_weights()).unwrap();
    for (a2, a3) in w[1].iter().zip(&w[2]) {
        close("μ(A2)", a2.mu(), 0.9, 1e-12)?;
        close("ν(A2)", a2.nu(), 0.01, 1e-12)?;
        close("μ(A3)", a3.mu(), 0.901, 1e-12)?;
        close("ν(A3)", a3.nu(), 0.007, 1e-12)?;
    }
    Ok(format!("C2 = {:.7}, C3 = {:.7}", r.closeness[1], r.closeness[2]))
}

fn c6() -> Outcome {
    let p = datasets::chen_xy();
    let r = topsis_chen(&p).unwrap();
    close_all("T", &r.closeness, &[0.0, 0.615, 0.64, 1.0], 1e-12)?;
    close_all("g+", &chen_detail(&p).unwrap().positive_score, &[0.0, 0.615, 0.64, 1.0], 1e-12)?;
    same("ranking", &r.preference_string(p.alternatives()), "A4 ≻ A3 ≻ A2 ≻ A1")?;
    Ok("A4 ≻ A3 ≻ A2 ≻ A1".into())
}

fn c7() -> Outcome {
    let m = MetricSpec::xy(1.0).unwrap();
    let (c, _) = ranking(&datasets::li_scalar_weights(), &m);
    close_all("C", &c, &[0.0, 0.99495, 0.995075, 1.0], 5e-6)?;
    let (c, _) = ranking(&datasets::chen_xy(), &m);
    close_all("C", &c, &[0.0, 0.65, 0.64, 1.0], 1e-12)?;
    Ok("both counterexamples ranked monotonically".into())
}

fn c8() -> Outcome {
    let v = |m, n| Ifv::new(m, n).unwrap();
    let i1 = [v(0.0, 1.0)];
    let e = |b: Ifv| sim_classical(SimilarityKind::OneMinus(2.0), &i1, &[b]).unwrap();
    let (s12, s13) = (e(v(0.1, 0.0)), e(v(0.4, 0.0)));
    close("sim_E(I1,I2)", s12, 1.0 - 0.91f64.sqrt(), 1e-12)?;
    close("sim_E(I1,I3)", s13, 1.0 - 0.76f64.sqrt(), 1e-12)?;
    ensure(s12 < s13, || "sim_E not increasing".into())?;

    let xc = |b: Ifv| sim_classical(SimilarityKind::XcEuclid, &i1, &[b]).unwrap();
    let (x12, x13) = (xc(v(0.9, 0.01)), xc(v(0.901, 0.007)));
    close("XC(I1,I2)", x12, 0.09141, 5e-6)?;
    close("XC(I1,I3)", x13, 0.09148, 5e-6)?;
    ensure(x12 < x13, || "XC not increasing".into())?;

    for p in [1.5, 2.0, 3.0] {
        let s = |m| sim_classical(SimilarityKind::OneMinus(p), &i1, &[v(m, 0.0)]).unwrap();
        ensure(s(0.2) < s(0.4), || format!("Minkowski p={p} not increasing"))?;
    }
    Ok(format!("{s12:.5} < {s13:.5}; {x12:.5} < {x13:.5}; p ∈ {{1.5, 2, 3}}"))
}

/// Root of x(1 + ⅔(1 − x)(2 − x)) = √0.5 on (0, 1).
fn level_root_on_axis() -> f64 {
    let f = |x: f64| x * (1.0 + 2.0 / 3.0 * (1.0 - x) * (2.0 - x)) - 0.5f64.sqrt();
    let (mut lo, mut hi) = (0.0, 1.0);
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid
        } else {
            hi = mid
        }
    }
    lo
}

fn c9() -> Outcome {
    let a = Ifv::new(0.0, 0.0).unwrap();
    let b = Ifv::new(99.0 / 200.0, 101.0 / 200.0).unwrap();
    close("S_CK(α)", s_ck(&a), -0.01, 1e-12)?;
    close("S_CK(β)", s_ck(&b), -0.01, 1e-12)?;
    ensure((s_ck(&a) - s_ck(&b)).abs() < 1e-15, || "S_CK values differ".into())?;

    let root = level_root_on_axis();
    let pts = [dsh_level_point((1.0, 0.0)), dsh_level_point((0.0, 1.0)), dsh_level_point((0.75, 0.25))];
    close("P1 μ (oracle)", pts[0].mu(), root, 1e-9)?;
    close("P2 ν (oracle)", pts[1].nu(), root, 1e-9)?;
    for p in &pts {
        ensure(dsh_residual(p).abs() <= 1e-9, || format!("residual at {p}"))?;
        close("d_Sh", d_sh(p, &a), 0.5, 1e-9)?;
    }
    ensure(pts[0] != pts[1] && pts[1] != pts[2] && pts[0] != pts[2], || "solutions coincide".into())?;
    Ok(format!("{} distinct level-set points", pts.len()))
}

fn c10() -> Outcome {
    let start = Instant::now();
    let mut metrics = Vec::new();
    for l in [1.0, 10.0, 100.0] {
        metrics.push(MetricSpec::xy(l).unwrap());
        metrics.push(MetricSpec::zx(l).unwrap());
        metrics.push(MetricSpec::kk(0.3, 1.0, l).unwrap());
    }
    for (k, m) in metrics.iter().enumerate() {
        let (_, v) = fuzz_metric_axioms(m, 100_000, 1000 + k as u64).unwrap();
        ensure(v.total() == 0, || format!("{}: {v:?}", m.label()))?;
    }
    let orders = [
        (OrderSpec::Xy, MetricSpec::xy(100.0).unwrap()),
        (OrderSpec::Zx, MetricSpec::zx(100.0).unwrap()),
        (OrderSpec::k_gamma(0.3, 1.0).unwrap(), MetricSpec::kk(0.3, 1.0, 100.0).unwrap()),
        (OrderSpec::Partial, MetricSpec::xy(100.0).unwrap()),
    ];
    for (order, metric) in orders {
        let label = order.label();
        let o = fuzz_monotonicity(&FuzzConfig::new(FuzzMethod::Proposed(metric), order, 10_000, 42)).unwrap();
        ensure(o.violations == 0, || format!("proposed under {label}: {} violations", o.violations))?;
    }
    let mut baseline = Vec::new();
    for method in [FuzzMethod::Li, FuzzMethod::Chen] {
        let o = fuzz_monotonicity(&FuzzConfig::new(method.clone(), OrderSpec::Xy, 10_000, 42)).unwrap();
        baseline.push((method.label(), o.violations));
    }
    ensure(baseline.iter().any(|(_, n)| *n > 0), || "no baseline violations found".into())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "0 proposed violations; {} = {}, {} = {}; {elapsed:.1?}",
        baseline[0].0, baseline[0].1, baseline[1].0, baseline[1].1
    ))
}

fn bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_iftopsis")).args(args).output().unwrap()
}

fn c11() -> Outcome {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let o = bin(&["reproduce", "all"]);
    ensure(o.status.code() == Some(0), || String::from_utf8_lossy(&o.stdout).into_owned())?;

    let pm = data.join("project_manager.json");
    let o = bin(&[
        "sweep",
        pm.to_str().unwrap(),
        "--param",
        "gamma1",
        "--grid",
        "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9",
        "--order",
        "agg",
        "--gamma2",
        "1",
        "--lambda",
        "100",
    ]);
    ensure(o.status.success(), || String::from_utf8_lossy(&o.stderr).into_owned())?;
    let csv = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    ensure(lines.len() == 1 + 10 * 5, || format!("{} lines", lines.len()))?;
    let mut by_value: Vec<(f64, Vec<(String, f64)>)> = Vec::new();
    for l in &lines[1..] {
        let f: Vec<&str> = l.split(',').collect();
        let value: f64 = f[1].parse().unwrap();
        if by_value.last().is_none_or(|(v, _)| *v != value) {
            by_value.push((value, Vec::new()));
        }
        by_value.last_mut().unwrap().1.push((f[2].to_string(), f[3].parse().unwrap()));
    }
    let order_of = |rows: &[(String, f64)]| {
        let mut r = rows.to_vec();
        r.sort_by(|a, b| b.1.total_cmp(&a.1));
        r.into_iter().map(|x| x.0).collect::<Vec<_>>().join(" ≻ ")
    };
    let below: Vec<String> = by_value.iter().filter(|(v, _)| *v < 0.5).map(|(_, r)| order_of(r)).collect();
    let above: Vec<String> = by_value.iter().filter(|(v, _)| *v > 0.5).map(|(_, r)| order_of(r)).collect();
    ensure(above.iter().all(|r| r == "A1 ≻ A2 ≻ A5 ≻ A3 ≻ A4"), || format!("γ₁ > 0.5: {above:?}"))?;
    same("γ₁ = 0", &below[0], "A1 ≻ A3 ≻ A5 ≻ A2 ≻ A4")?;

    let dir = std::env::temp_dir().join(format!("iftopsis-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for name in ["supplier_selection", "project_manager", "li_ifv_weights", "li_scalar_weights", "chen_xy"] {
        let src = data.join(format!("{name}.json"));
        let first = bin(&["validate", "--canonical", src.to_str().unwrap()]).stdout;
        let copy = dir.join(format!("{name}.json"));
        std::fs::write(&copy, &first).unwrap();
        let second = bin(&["validate", "--canonical", copy.to_str().unwrap()]).stdout;
        ensure(first == second && first == std::fs::read(&src).unwrap(), || format!("{name} not byte-stable"))?;
    }
    std::fs::remove_dir_all(&dir).ok();
    Ok("reproduce all = 0; γ₁ flip present; round-trip byte-stable".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("supplier selection, ρ_XY(100)", c1),
        ("supplier selection, ρ_ZX(100)", c2),
        ("project manager, ρ_XY(100) and ρ_ZX(100)", c3),
        ("K-metric ranking tables", c4),
        ("Li baseline non-monotone", c5),
        ("Chen baseline non-monotone", c6),
        ("proposed method fixes both counterexamples", c7),
        ("similarity axiom violations", c8),
        ("S_CK collision and d_Sh level set", c9),
        ("property fuzz suites", c10),
        ("CLI reproduce, sweep, round-trip", c11),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
