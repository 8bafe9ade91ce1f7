use rayon::prelude::*;

use super::report::{printed, Builder, CheckReport, EXACT};
use crate::datasets;
use crate::error::{Error, Result};
use crate::ifv::Ifv;
use crate::measures::{d_sh, s_ck, sim_classical, MetricSpec, SimilarityKind};
use crate::orders::OrderSpec;
use crate::topsis::{chen_detail, li_weighted_matrix, topsis_chen, topsis_li, topsis_proposed, DecisionProblem};

type CheckFn = fn() -> CheckReport;

const REGISTRY: &[(&str, CheckFn)] = &[
    ("sim_e_violates_s4", sim_e_violates_s4),
    ("minkowski_violates_s4", minkowski_violates_s4),
    ("xc2_violates_s4", xc2_violates_s4),
    ("sck_collision", sck_collision),
    ("dsh_level_set", dsh_level_set),
    ("li_nonmonotone_ifv_weights", li_nonmonotone_ifv_weights),
    ("li_nonmonotone_scalar_weights", li_nonmonotone_scalar_weights),
    ("chen_nonmonotone_xy", chen_nonmonotone_xy),
    ("proposed_fixes_exm2", proposed_fixes_exm2),
    ("proposed_fixes_exm3", proposed_fixes_exm3),
    ("example_7_1_xy", example_7_1_xy),
    ("example_7_1_zx", example_7_1_zx),
    ("example_7_2_xy", example_7_2_xy),
    ("example_7_2_zx", example_7_2_zx),
    ("table9_rankings", table9_rankings),
    ("table12_rankings", table12_rankings),
    ("lambda_sweep_stability", lambda_sweep_stability),
    ("gamma1_sweep_flip", gamma1_sweep_flip),
];

pub fn check_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|(id, _)| *id).collect()
}

pub fn run_check(id: &str) -> Result<CheckReport> {
    REGISTRY
        .iter()
        .find(|(name, _)| *name == id)
        .map(|(_, f)| f())
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Every registered check, in registry order.
pub fn run_all() -> Vec<CheckReport> {
    REGISTRY.par_iter().map(|(_, f)| f()).collect()
}

fn v(mu: f64, nu: f64) -> Ifv {
    Ifv::new(mu, nu).expect("literal IFV")
}

fn proposed(problem: &DecisionProblem, metric: MetricSpec) -> (Vec<f64>, String) {
    let r = topsis_proposed(problem, &metric).expect("bundled problem ranks");
    let pref = r.preference_string(problem.alternatives());
    (r.closeness, pref)
}

fn sim_e_violates_s4() -> CheckReport {
    let i1 = [v(0.0, 1.0)];
    let s12 = sim_classical(SimilarityKind::OneMinus(2.0), &i1, &[v(0.1, 0.0)]).unwrap();
    let s13 = sim_classical(SimilarityKind::OneMinus(2.0), &i1, &[v(0.4, 0.0)]).unwrap();
    Builder::new(
        "sim_e_violates_s4",
        "1 - d_Eu similarity grows along a chain I1 ⊂ I2 ⊂ I3",
    )
    .value("sim(I1,I2)", s12, 1.0 - 0.91f64.sqrt(), EXACT)
    .value("sim(I1,I3)", s13, 1.0 - 0.76f64.sqrt(), EXACT)
    .claim("I1 ⊂ I2 ⊂ I3", OrderSpec::Partial.leq(&i1[0], &v(0.1, 0.0)) && OrderSpec::Partial.leq(&v(0.1, 0.0), &v(0.4, 0.0)))
    .claim("sim(I1,I2) < sim(I1,I3)", s12 < s13)
    .finish()
}

fn minkowski_violates_s4() -> CheckReport {
    let (m2, m3) = (0.2, 0.4);
    let i1 = [v(0.0, 1.0)];
    let mut b = Builder::new(
        "minkowski_violates_s4",
        "1 - d_M^(p) similarity grows along ⟨0,1⟩ ⊂ ⟨0.2,0⟩ ⊂ ⟨0.4,0⟩ for every p > 1",
    );
    for p in [1.5, 2.0, 3.0] {
        let gamma = |x: f64| 1.0 - ((x.powf(p) + 1.0 + (1.0 - x).powf(p)) / 2.0).powf(1.0 / p);
        let s12 = sim_classical(SimilarityKind::OneMinus(p), &i1, &[v(m2, 0.0)]).unwrap();
        let s13 = sim_classical(SimilarityKind::OneMinus(p), &i1, &[v(m3, 0.0)]).unwrap();
        b = b
            .value(format!("p={p} sim(I1,I2)"), s12, gamma(m2), EXACT)
            .value(format!("p={p} sim(I1,I3)"), s13, gamma(m3), EXACT)
            .claim(format!("p={p} sim(I1,I2) < sim(I1,I3)"), s12 < s13);
    }
    b.finish()
}

fn xc2_violates_s4() -> CheckReport {
    let i1 = [v(0.0, 1.0)];
    let s12 = sim_classical(SimilarityKind::XcEuclid, &i1, &[v(0.9, 0.01)]).unwrap();
    let s13 = sim_classical(SimilarityKind::XcEuclid, &i1, &[v(0.901, 0.007)]).unwrap();
    Builder::new(
        "xc2_violates_s4",
        "Euclidean Xu–Chen similarity grows along ⟨0,1⟩ ⊂ ⟨0.9,0.01⟩ ⊂ ⟨0.901,0.007⟩",
    )
    .value("sim(I1,I2)", s12, 0.09141, printed(5))
    .value("sim(I1,I3)", s13, 0.09148, printed(5))
    .claim("sim(I1,I2) < sim(I1,I3)", s12 < s13)
    .finish()
}

fn sck_collision() -> CheckReport {
    let a = v(0.0, 0.0);
    let b = v(99.0 / 200.0, 101.0 / 200.0);
    let (sa, sb) = (s_ck(&a), s_ck(&b));
    Builder::new("sck_collision", "S_CK maps ⟨0,0⟩ and ⟨99/200,101/200⟩ to the same score")
        .value("S_CK(⟨0,0⟩)", sa, -0.01, EXACT)
        .value("S_CK(⟨0.495,0.505⟩)", sb, -0.01, EXACT)
        .claim("inputs differ", a != b)
        .claim("|S_CK(α) - S_CK(β)| < 1e-15", (sa - sb).abs() < 1e-15)
        .finish()
}

/// Points on the ray `t·(cos θ, sin θ)` at `d_Sh`-distance 0.5 from `⟨0,0⟩`.
pub fn dsh_level_point(direction: (f64, f64)) -> Ifv {
    let origin = v(0.0, 0.0);
    let (dx, dy) = direction;
    let at = |t: f64| Ifv::new(t * dx, t * dy).expect("ray stays in the triangle");
    let f = |t: f64| d_sh(&at(t), &origin) - 0.5;
    // the ray leaves the triangle at t = 1/(dx + dy), where d_Sh ≥ 1/√2 > 0.5
    let (mut lo, mut hi) = (0.0, 1.0 / (dx + dy));
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    at(0.5 * (lo + hi))
}

/// `[1 + ⅔(1−x−y)(2−x−y)]²(x² + y²) − 0.5`.
pub fn dsh_residual(alpha: &Ifv) -> f64 {
    let (x, y) = (alpha.mu(), alpha.nu());
    let s = 1.0 + 2.0 / 3.0 * (1.0 - x - y) * (2.0 - x - y);
    s * s * (x * x + y * y) - 0.5
}

fn dsh_level_set() -> CheckReport {
    let points: Vec<Ifv> = [(1.0, 0.0), (0.0, 1.0), (0.75, 0.25)]
        .into_iter()
        .map(dsh_level_point)
        .collect();
    let origin = v(0.0, 0.0);
    let mut b = Builder::new(
        "dsh_level_set",
        "distinct IFVs share d_Sh = 0.5 from ⟨0,0⟩",
    );
    for (k, p) in points.iter().enumerate() {
        b = b
            .value(format!("d_Sh(P{}, ⟨0,0⟩)", k + 1), d_sh(p, &origin), 0.5, 1e-9)
            .value(format!("residual(P{})", k + 1), dsh_residual(p), 0.0, 1e-9)
            .note(format!("P{} mu", k + 1), p.mu())
            .note(format!("P{} nu", k + 1), p.nu());
    }
    let distinct = points.iter().enumerate().all(|(i, p)| points[i + 1..].iter().all(|q| p != q));
    b.claim("solutions are pairwise distinct", distinct).finish()
}

fn li_nonmonotone_ifv_weights() -> CheckReport {
    let p = datasets::li_ifv_weights();
    let r = topsis_li(&p).unwrap();
    Builder::new(
        "li_nonmonotone_ifv_weights",
        "Li's method ranks A2 above A3 although A2 ⊂ A3 pointwise",
    )
    .values("C", &r.closeness, &[0.0, 0.9085917, 0.9085194, 1.0], printed(7))
    .ordering("ranking", "A4 ≻ A2 ≻ A3 ≻ A1", r.preference_string(p.alternatives()))
    .claim("A2 ⊂ A3 pointwise", OrderSpec::Partial.vector_leq(&p.matrix()[1], &p.matrix()[2]).unwrap())
    .claim("C2 > C3", r.closeness[1] > r.closeness[2])
    .finish()
}

fn li_nonmonotone_scalar_weights() -> CheckReport {
    let p = datasets::li_scalar_weights();
    let w = li_weighted_matrix(&p).unwrap();
    let r = topsis_li(&p).unwrap();
    Builder::new(
        "li_nonmonotone_scalar_weights",
        "scalar weights 0.5 reproduce the IFV-weight matrix and the same inversion",
    )
    .value("w·r21 mu", w[1][0].mu(), 0.9, EXACT)
    .value("w·r21 nu", w[1][0].nu(), 0.01, EXACT)
    .value("w·r31 mu", w[2][0].mu(), 0.901, EXACT)
    .value("w·r31 nu", w[2][0].nu(), 0.007, EXACT)
    .ordering("ranking", "A4 ≻ A2 ≻ A3 ≻ A1", r.preference_string(p.alternatives()))
    .claim("A2 ⊂ A3 pointwise", OrderSpec::Partial.vector_leq(&p.matrix()[1], &p.matrix()[2]).unwrap())
    .finish()
}

fn chen_nonmonotone_xy() -> CheckReport {
    let p = datasets::chen_xy();
    let d = chen_detail(&p).unwrap();
    let r = topsis_chen(&p).unwrap();
    let expected = [0.0, 0.615, 0.64, 1.0];
    Builder::new(
        "chen_nonmonotone_xy",
        "Chen et al.'s method ranks A3 above A2 although A3 ≤_XY A2 pointwise",
    )
    .values("g+_", &d.positive_score, &expected, EXACT)
    .values("T", &r.closeness, &expected, EXACT)
    .ordering("ranking", "A4 ≻ A3 ≻ A2 ≻ A1", r.preference_string(p.alternatives()))
    .claim("A3 ≤_XY A2 pointwise", OrderSpec::Xy.vector_leq(&p.matrix()[2], &p.matrix()[1]).unwrap())
    .finish()
}

fn proposed_fixes_exm2() -> CheckReport {
    let p = datasets::li_scalar_weights();
    let (c, pref) = proposed(&p, MetricSpec::xy(1.0).unwrap());
    Builder::new(
        "proposed_fixes_exm2",
        "ρ_XY(1) TOPSIS orders the Li scalar-weight problem monotonically",
    )
    .value("C1", c[0], 0.0, EXACT)
    .value("C2", c[1], 0.99495, printed(5))
    .value("C3", c[2], 0.995075, printed(6))
    .value("C4", c[3], 1.0, EXACT)
    .ordering("ranking", "A4 ≻ A3 ≻ A2 ≻ A1", pref)
    .finish()
}

fn proposed_fixes_exm3() -> CheckReport {
    let p = datasets::chen_xy();
    let (c, pref) = proposed(&p, MetricSpec::xy(1.0).unwrap());
    Builder::new(
        "proposed_fixes_exm3",
        "ρ_XY(1) TOPSIS orders the Chen counterexample monotonically",
    )
    .values("C", &c, &[0.0, 0.65, 0.64, 1.0], EXACT)
    .ordering("ranking", "A4 ≻ A2 ≻ A3 ≻ A1", pref)
    .finish()
}

fn example(id: &str, narrative: &str, problem: DecisionProblem, metric: MetricSpec, expected: &[f64], ranking: &str) -> CheckReport {
    let (c, pref) = proposed(&problem, metric);
    Builder::new(id, narrative)
        .values("C", &c, expected, printed(4))
        .ordering("ranking", ranking, pref)
        .finish()
}

fn example_7_1_xy() -> CheckReport {
    example(
        "example_7_1_xy",
        "supplier selection with ρ_XY(100)",
        datasets::supplier_selection(),
        MetricSpec::xy(100.0).unwrap(),
        &[0.4321, 0.5709, 0.4750, 0.4876, 0.5053],
        "A2 ≻ A5 ≻ A4 ≻ A3 ≻ A1",
    )
}

fn example_7_1_zx() -> CheckReport {
    example(
        "example_7_1_zx",
        "supplier selection with ρ_ZX(100)",
        datasets::supplier_selection(),
        MetricSpec::zx(100.0).unwrap(),
        &[0.4371, 0.5618, 0.4694, 0.4922, 0.4925],
        "A2 ≻ A5 ≻ A4 ≻ A3 ≻ A1",
    )
}

fn example_7_2_xy() -> CheckReport {
    example(
        "example_7_2_xy",
        "project-manager selection with ρ_XY(100)",
        datasets::project_manager(),
        MetricSpec::xy(100.0).unwrap(),
        &[0.5565, 0.5295, 0.5058, 0.4555, 0.5171],
        "A1 ≻ A2 ≻ A5 ≻ A3 ≻ A4",
    )
}

fn example_7_2_zx() -> CheckReport {
    example(
        "example_7_2_zx",
        "project-manager selection with ρ_ZX(100)",
        datasets::project_manager(),
        MetricSpec::zx(100.0).unwrap(),
        &[0.5531, 0.5329, 0.5042, 0.4583, 0.5198],
        "A1 ≻ A2 ≻ A5 ≻ A3 ≻ A4",
    )
}

fn rankings(id: &str, narrative: &str, problem: DecisionProblem, rows: &[(MetricSpec, &str)]) -> CheckReport {
    let mut b = Builder::new(id, narrative);
    for (metric, expected) in rows {
        let (_, pref) = proposed(&problem, metric.clone());
        b = b.ordering(metric.label(), expected, pref);
    }
    b.finish()
}

fn table9_rankings() -> CheckReport {
    const R: &str = "A2 ≻ A5 ≻ A4 ≻ A3 ≻ A1";
    rankings(
        "table9_rankings",
        "all five metrics agree on the supplier ranking",
        datasets::supplier_selection(),
        &[
            (MetricSpec::xy(100.0).unwrap(), R),
            (MetricSpec::zx(100.0).unwrap(), R),
            (MetricSpec::kk(0.2, 0.4, 100.0).unwrap(), R),
            (MetricSpec::kk(0.5, 0.4, 100.0).unwrap(), R),
            (MetricSpec::kk(0.6, 0.4, 100.0).unwrap(), R),
        ],
    )
}

fn table12_rankings() -> CheckReport {
    const R: &str = "A1 ≻ A2 ≻ A5 ≻ A3 ≻ A4";
    rankings(
        "table12_rankings",
        "γ₁ = 0.2 reorders the project-manager ranking; other metrics agree",
        datasets::project_manager(),
        &[
            (MetricSpec::xy(100.0).unwrap(), R),
            (MetricSpec::zx(100.0).unwrap(), R),
            (MetricSpec::kk(0.2, 0.4, 100.0).unwrap(), "A1 ≻ A3 ≻ A5 ≻ A2 ≻ A4"),
            (MetricSpec::kk(0.5, 0.4, 100.0).unwrap(), R),
            (MetricSpec::kk(0.6, 0.4, 100.0).unwrap(), R),
        ],
    )
}

fn lambda_sweep_stability() -> CheckReport {
    const R: &str = "A2 ≻ A5 ≻ A4 ≻ A3 ≻ A1";
    let rows: Vec<(MetricSpec, &str)> = [5.0, 10.0, 50.0, 100.0, 1000.0]
        .into_iter()
        .map(|l| (MetricSpec::xy(l).unwrap(), R))
        .collect();
    rankings(
        "lambda_sweep_stability",
        "the supplier ranking under ρ_XY is constant for λ ≥ 5",
        datasets::supplier_selection(),
        &rows,
    )
}

fn gamma1_sweep_flip() -> CheckReport {
    let mut rows = Vec::new();
    for g in [0.0, 0.1, 0.2, 0.3] {
        rows.push((MetricSpec::kk(g, 1.0, 100.0).unwrap(), "A1 ≻ A3 ≻ A5 ≻ A2 ≻ A4"));
    }
    for g in [0.6, 0.7, 0.8, 0.9] {
        rows.push((MetricSpec::kk(g, 1.0, 100.0).unwrap(), "A1 ≻ A2 ≻ A5 ≻ A3 ≻ A4"));
    }
    rankings(
        "gamma1_sweep_flip",
        "with γ₂ = 1 the project-manager ranking differs between small and large γ₁",
        datasets::project_manager(),
        &rows,
    )
}
