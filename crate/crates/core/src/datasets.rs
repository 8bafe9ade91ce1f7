//! Bundled decision problems used by the reproduction checks and shipped as
//! files under `data/`.

use crate::ifv::Ifv;
use crate::topsis::{Attribute, DecisionProblem, Weights};

fn v(mu: f64, nu: f64) -> Ifv {
    Ifv::new(mu, nu).expect("bundled value is a valid IFV")
}

fn doubled(rows: &[(f64, f64)], weights: Weights) -> DecisionProblem {
    let matrix = rows.iter().map(|&(m, n)| vec![v(m, n), v(m, n)]).collect();
    DecisionProblem::from_matrix(matrix, weights).expect("bundled problem is valid")
}

/// Four alternatives on two benefit attributes, IFV weights `⟨1, 0⟩`.
/// `A2 ⊂ A3` pointwise, yet Li's method ranks `A2` above `A3`.
pub fn li_ifv_weights() -> DecisionProblem {
    doubled(
        &[(0.0, 1.0), (0.9, 0.01), (0.901, 0.007), (1.0, 0.0)],
        Weights::Ifv(vec![Ifv::ONE, Ifv::ONE]),
    )
}

/// Scalar-weight variant whose `0.5`-scaled matrix equals [`li_ifv_weights`].
pub fn li_scalar_weights() -> DecisionProblem {
    doubled(
        &[(0.0, 1.0), (0.99, 0.0001), (0.990199, 0.49e-4), (1.0, 0.0)],
        Weights::Scalar(vec![0.5, 0.5]),
    )
}

/// `A3 ≤_XY A2` pointwise, yet Chen et al.'s method ranks `A3` above `A2`.
pub fn chen_xy() -> DecisionProblem {
    doubled(
        &[(0.0, 1.0), (0.3, 0.0), (0.64, 0.36), (1.0, 0.0)],
        Weights::Scalar(vec![0.5, 0.5]),
    )
}

fn five_by_four(names: [&str; 4], rows: [[(f64, f64); 4]; 5], weights: [f64; 4]) -> DecisionProblem {
    DecisionProblem::new(
        (1..=5).map(|i| format!("A{i}")).collect(),
        names.iter().map(|n| Attribute::benefit(*n)).collect(),
        rows.iter()
            .map(|r| r.iter().map(|&(m, n)| v(m, n)).collect())
            .collect(),
        Weights::Scalar(weights.to_vec()),
    )
    .expect("bundled problem is valid")
}

/// Supplier selection: five suppliers, four benefit attributes.
pub fn supplier_selection() -> DecisionProblem {
    five_by_four(
        ["Product Quality", "Service", "Delivery", "Sustainability"],
        [
            [(0.6, 0.3), (0.5, 0.2), (0.2, 0.5), (0.1, 0.6)],
            [(0.8, 0.2), (0.8, 0.1), (0.6, 0.1), (0.3, 0.4)],
            [(0.6, 0.3), (0.4, 0.3), (0.4, 0.2), (0.5, 0.2)],
            [(0.9, 0.1), (0.5, 0.2), (0.2, 0.3), (0.1, 0.5)],
            [(0.7, 0.1), (0.3, 0.2), (0.6, 0.2), (0.4, 0.2)],
        ],
        [0.25, 0.4, 0.2, 0.15],
    )
}

/// Project-manager selection: five candidates, four benefit attributes.
pub fn project_manager() -> DecisionProblem {
    five_by_four(
        [
            "Self-Confidence",
            "Personality",
            "Past Experience",
            "Proficiency in Project Management",
        ],
        [
            [(0.4, 0.5), (0.3, 0.6), (0.4, 0.4), (0.5, 0.3)],
            [(0.4, 0.4), (0.5, 0.4), (0.3, 0.5), (0.3, 0.4)],
            [(0.4, 0.6), (0.5, 0.5), (0.4, 0.6), (0.4, 0.6)],
            [(0.3, 0.4), (0.2, 0.6), (0.1, 0.9), (0.4, 0.4)],
            [(0.5, 0.4), (0.3, 0.6), (0.3, 0.5), (0.47, 0.5)],
        ],
        [0.1, 0.2, 0.3, 0.4],
    )
}

/// Every bundled problem with its file stem.
pub fn all() -> Vec<(&'static str, DecisionProblem)> {
    vec![
        ("li_ifv_weights", li_ifv_weights()),
        ("li_scalar_weights", li_scalar_weights()),
        ("chen_xy", chen_xy()),
        ("supplier_selection", supplier_selection()),
        ("project_manager", project_manager()),
    ]
}

pub fn by_name(name: &str) -> Option<DecisionProblem> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, p)| p)
}
