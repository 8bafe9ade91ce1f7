use ifv_topsis::harness::{check_ids, run_all, run_check, Status};
use ifv_topsis::Error;

const MANIFEST: &[&str] = &[
    "sim_e_violates_s4",
    "minkowski_violates_s4",
    "xc2_violates_s4",
    "sck_collision",
    "dsh_level_set",
    "li_nonmonotone_ifv_weights",
    "li_nonmonotone_scalar_weights",
    "chen_nonmonotone_xy",
    "proposed_fixes_exm2",
    "proposed_fixes_exm3",
    "example_7_1_xy",
    "example_7_1_zx",
    "example_7_2_xy",
    "example_7_2_zx",
    "table9_rankings",
    "table12_rankings",
    "lambda_sweep_stability",
    "gamma1_sweep_flip",
];

#[test]
fn registry_matches_manifest() {
    assert_eq!(check_ids(), MANIFEST);
}

#[test]
fn every_check_passes() {
    let reports = run_all();
    assert_eq!(reports.len(), MANIFEST.len());
    for r in &reports {
        assert_eq!(r.status, Status::Pass, "{}", r.to_text());
    }
}

#[test]
fn reports_are_deterministic() {
    for id in check_ids() {
        let a = run_check(id).unwrap();
        let b = run_check(id).unwrap();
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.to_json(), b.to_json());
    }
}

#[test]
fn unknown_check() {
    assert_eq!(
        run_check("no_such_check").unwrap_err(),
        Error::UnknownCheck("no_such_check".into())
    );
}

#[test]
fn json_report_shape() {
    let r = run_check("sck_collision").unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["id"], "sck_collision");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["expected"][0]["tolerance"], 1e-12);
    assert!(v["seed"].is_null());
}
