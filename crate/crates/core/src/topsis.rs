//! Decision problems and the three TOPSIS variants.
//!
//! * [`topsis_li`]: weighted matrix, componentwise ideals, closeness from
//!   normalized Euclidean distances.
//! * [`topsis_chen`]: similarity grids `g±` against the ideals, weighted
//!   scores, ratio closeness.
//! * [`topsis_proposed`]: weighted similarities built on an admissible
//!   metric. Pointwise dominance of a row under the metric's order implies
//!   dominance of its closeness degree.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ifv::Ifv;
use crate::measures::{d_euclid, validate_weights, weighted_similarity_unchecked, MetricSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AttributeKind {
    Benefit,
    Cost,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Attribute {
    pub name: String,
    pub kind: AttributeKind,
}

impl Attribute {
    pub fn benefit(name: impl Into<String>) -> Self {
        Attribute {
            name: name.into(),
            kind: AttributeKind::Benefit,
        }
    }

    pub fn cost(name: impl Into<String>) -> Self {
        Attribute {
            name: name.into(),
            kind: AttributeKind::Cost,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Weights {
    Scalar(Vec<f64>),
    Ifv(Vec<Ifv>),
}

impl Weights {
    pub fn len(&self) -> usize {
        match self {
            Weights::Scalar(w) => w.len(),
            Weights::Ifv(w) => w.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn as_scalar(&self) -> Option<&[f64]> {
        match self {
            Weights::Scalar(w) => Some(w),
            Weights::Ifv(_) => None,
        }
    }
}

/// Alternatives × attributes matrix of IFVs with attribute kinds and weights.
#[derive(Clone, Debug, PartialEq)]
pub struct DecisionProblem {
    alternatives: Vec<String>,
    attributes: Vec<Attribute>,
    matrix: Vec<Vec<Ifv>>,
    weights: Weights,
}

impl DecisionProblem {
    pub fn new(
        alternatives: Vec<String>,
        attributes: Vec<Attribute>,
        matrix: Vec<Vec<Ifv>>,
        weights: Weights,
    ) -> Result<Self> {
        if alternatives.len() < 2 {
            return Err(Error::Problem(format!(
                "need at least 2 alternatives, got {}",
                alternatives.len()
            )));
        }
        if attributes.is_empty() {
            return Err(Error::Problem("need at least 1 attribute".into()));
        }
        if matrix.len() != alternatives.len() {
            return Err(Error::Problem(format!(
                "matrix has {} rows but there are {} alternatives",
                matrix.len(),
                alternatives.len()
            )));
        }
        if let Some((i, row)) = matrix
            .iter()
            .enumerate()
            .find(|(_, r)| r.len() != attributes.len())
        {
            return Err(Error::Problem(format!(
                "matrix row {i} has {} entries but there are {} attributes",
                row.len(),
                attributes.len()
            )));
        }
        if weights.len() != attributes.len() {
            return Err(Error::Weight(format!(
                "{} weights for {} attributes",
                weights.len(),
                attributes.len()
            )));
        }
        if let Weights::Scalar(w) = &weights {
            validate_weights(w)?;
        }
        Ok(DecisionProblem {
            alternatives,
            attributes,
            matrix,
            weights,
        })
    }

    /// Shorthand with alternatives named `A1..An` and benefit attributes `O1..Om`.
    pub fn from_matrix(matrix: Vec<Vec<Ifv>>, weights: Weights) -> Result<Self> {
        let n = matrix.len();
        let m = matrix.first().map_or(0, Vec::len);
        DecisionProblem::new(
            (1..=n).map(|i| format!("A{i}")).collect(),
            (1..=m).map(|j| Attribute::benefit(format!("O{j}"))).collect(),
            matrix,
            weights,
        )
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn attributes(&self) -> &[Attribute] {
        &self.attributes
    }

    pub fn matrix(&self) -> &[Vec<Ifv>] {
        &self.matrix
    }

    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    pub fn n_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn n_attributes(&self) -> usize {
        self.attributes.len()
    }

    /// Replaces cost columns by their complements and marks every attribute
    /// as a benefit. Idempotent.
    pub fn normalize(&self) -> DecisionProblem {
        let matrix = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.attributes)
                    .map(|(r, a)| match a.kind {
                        AttributeKind::Benefit => *r,
                        AttributeKind::Cost => r.complement(),
                    })
                    .collect()
            })
            .collect();
        let attributes = self
            .attributes
            .iter()
            .map(|a| Attribute::benefit(a.name.clone()))
            .collect();
        DecisionProblem {
            alternatives: self.alternatives.clone(),
            attributes,
            matrix,
            weights: self.weights.clone(),
        }
    }

    fn scalar_weights(&self, method: &'static str) -> Result<&[f64]> {
        self.weights.as_scalar().ok_or(Error::WeightKindMismatch {
            method,
            expected: "scalar",
        })
    }

    /// Reorders the alternatives; `perm[k]` is the old index placed at `k`.
    pub fn permute_alternatives(&self, perm: &[usize]) -> DecisionProblem {
        DecisionProblem {
            alternatives: perm.iter().map(|&i| self.alternatives[i].clone()).collect(),
            attributes: self.attributes.clone(),
            matrix: perm.iter().map(|&i| self.matrix[i].clone()).collect(),
            weights: self.weights.clone(),
        }
    }

    /// Reorders attribute columns together with their weights.
    pub fn permute_attributes(&self, perm: &[usize]) -> DecisionProblem {
        let weights = match &self.weights {
            Weights::Scalar(w) => Weights::Scalar(perm.iter().map(|&j| w[j]).collect()),
            Weights::Ifv(w) => Weights::Ifv(perm.iter().map(|&j| w[j]).collect()),
        };
        DecisionProblem {
            alternatives: self.alternatives.clone(),
            attributes: perm.iter().map(|&j| self.attributes[j].clone()).collect(),
            matrix: self
                .matrix
                .iter()
                .map(|row| perm.iter().map(|&j| row[j]).collect())
                .collect(),
            weights,
        }
    }
}

/// Positive and negative ideal points `A⁺`, `A⁻`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealPoints {
    pub positive: Vec<Ifv>,
    pub negative: Vec<Ifv>,
}

/// Column-wise `⟨max μ, min ν⟩` and `⟨min μ, max ν⟩`.
///
/// # Panics
///
/// If `matrix` is empty or ragged.
pub fn ideal_points(matrix: &[Vec<Ifv>]) -> IdealPoints {
    let m = matrix[0].len();
    let mut positive = Vec::with_capacity(m);
    let mut negative = Vec::with_capacity(m);
    for j in 0..m {
        let (mut mu_hi, mut nu_lo) = (f64::NEG_INFINITY, f64::INFINITY);
        let (mut mu_lo, mut nu_hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for row in matrix {
            let r = row[j];
            mu_hi = mu_hi.max(r.mu());
            mu_lo = mu_lo.min(r.mu());
            nu_hi = nu_hi.max(r.nu());
            nu_lo = nu_lo.min(r.nu());
        }
        // extrema of valid IFVs are valid IFVs
        positive.push(Ifv::new(mu_hi, nu_lo).expect("positive ideal is an IFV"));
        negative.push(Ifv::new(mu_lo, nu_hi).expect("negative ideal is an IFV"));
    }
    IdealPoints { positive, negative }
}

/// Closeness degrees with the induced preference order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankingResult {
    pub closeness: Vec<f64>,
    /// Alternative indices by non-increasing closeness; ties keep index order.
    pub order: Vec<usize>,
    /// Groups (size ≥ 2) of alternatives with exactly equal closeness.
    pub ties: Vec<Vec<usize>>,
}

impl RankingResult {
    pub fn from_closeness(closeness: Vec<f64>) -> Self {
        let mut order: Vec<usize> = (0..closeness.len()).collect();
        order.sort_by(|&a, &b| closeness[b].total_cmp(&closeness[a]));
        let mut ties = Vec::new();
        let mut k = 0;
        while k < order.len() {
            let mut end = k + 1;
            while end < order.len() && closeness[order[end]] == closeness[order[k]] {
                end += 1;
            }
            if end - k > 1 {
                ties.push(order[k..end].to_vec());
            }
            k = end;
        }
        RankingResult {
            closeness,
            order,
            ties,
        }
    }

    /// `"A2 ≻ A5 ≈ A4 ≻ ..."`, with `≈` between tied alternatives.
    pub fn preference_string(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (k, &i) in self.order.iter().enumerate() {
            if k > 0 {
                let prev = self.order[k - 1];
                out.push_str(if self.closeness[prev] == self.closeness[i] {
                    " ≈ "
                } else {
                    " ≻ "
                });
            }
            out.push_str(&names[i]);
        }
        out
    }

    /// Default-named (`A1..An`) preference string.
    pub fn default_preference(&self) -> String {
        let names: Vec<String> = (1..=self.closeness.len()).map(|i| format!("A{i}")).collect();
        self.preference_string(&names)
    }
}

impl fmt::Display for RankingResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.default_preference())
    }
}

/// Li's IF TOPSIS. IFV weights are applied with `⊗`, scalar weights with
/// scalar multiplication `λα`. Cost columns are complemented first.
pub fn topsis_li(problem: &DecisionProblem) -> Result<RankingResult> {
    li_closeness(&li_weighted_matrix(problem)?)
}

/// Closeness `d⁻ / (d⁺ + d⁻)` on an already weighted matrix.
pub fn li_closeness(weighted: &[Vec<Ifv>]) -> Result<RankingResult> {
    let ideals = ideal_points(weighted);
    let closeness = weighted
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let dp = d_euclid(row, &ideals.positive)?;
            let dn = d_euclid(row, &ideals.negative)?;
            if dp + dn == 0.0 {
                return Err(Error::DegenerateProblem { alternative: i });
            }
            Ok(dn / (dp + dn))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RankingResult::from_closeness(closeness))
}

/// The weighted matrix of [`topsis_li`]: `ω_j ⊗ r_ij` or `ω_j · r_ij`.
pub fn li_weighted_matrix(problem: &DecisionProblem) -> Result<Vec<Vec<Ifv>>> {
    let normalized = problem.normalize();
    match normalized.weights() {
        Weights::Scalar(w) => normalized
            .matrix()
            .iter()
            .map(|row| row.iter().zip(w).map(|(r, &wj)| r.scale(wj)).collect())
            .collect(),
        Weights::Ifv(w) => Ok(normalized
            .matrix()
            .iter()
            .map(|row| row.iter().zip(w).map(|(r, wj)| wj.product(r)).collect())
            .collect()),
    }
}

/// `g = 1 − |2Δμ − Δν|/3 · (1 − π̄) − |2Δν − Δμ|/3 · π̄` with `π̄` the mean hesitancy.
pub fn chen_similarity(ideal: &Ifv, r: &Ifv) -> f64 {
    let dmu = ideal.mu() - r.mu();
    let dnu = ideal.nu() - r.nu();
    let pbar = (ideal.pi() + r.pi()) / 2.0;
    1.0 - (2.0 * dmu - dnu).abs() / 3.0 * (1.0 - pbar) - (2.0 * dnu - dmu).abs() / 3.0 * pbar
}

/// Similarity grids and scores from Chen et al.'s method.
#[derive(Clone, Debug, PartialEq)]
pub struct ChenDetail {
    pub positive_similarity: Vec<Vec<f64>>,
    pub negative_similarity: Vec<Vec<f64>>,
    pub positive_score: Vec<f64>,
    pub negative_score: Vec<f64>,
}

/// Chen et al.'s ideals: per attribute kind, on the raw (unnormalized) matrix.
pub fn chen_ideal_points(problem: &DecisionProblem) -> IdealPoints {
    let raw = ideal_points(problem.matrix());
    let (mut positive, mut negative) = (raw.positive, raw.negative);
    for (j, a) in problem.attributes().iter().enumerate() {
        if a.kind == AttributeKind::Cost {
            std::mem::swap(&mut positive[j], &mut negative[j]);
        }
    }
    IdealPoints { positive, negative }
}

pub fn chen_detail(problem: &DecisionProblem) -> Result<ChenDetail> {
    let w = problem.scalar_weights("chen")?;
    let ideals = chen_ideal_points(problem);
    let grid = |ideal: &[Ifv]| -> Vec<Vec<f64>> {
        problem
            .matrix()
            .iter()
            .map(|row| row.iter().zip(ideal).map(|(r, p)| chen_similarity(p, r)).collect())
            .collect()
    };
    let gp = grid(&ideals.positive);
    let gn = grid(&ideals.negative);
    let score = |g: &[Vec<f64>]| -> Vec<f64> {
        g.iter()
            .map(|row| row.iter().zip(w).map(|(x, wj)| wj * x).sum())
            .collect()
    };
    Ok(ChenDetail {
        positive_score: score(&gp),
        negative_score: score(&gn),
        positive_similarity: gp,
        negative_similarity: gn,
    })
}

/// Chen et al.'s similarity-based TOPSIS, `T = S⁺ / (S⁺ + S⁻)`.
pub fn topsis_chen(problem: &DecisionProblem) -> Result<RankingResult> {
    let detail = chen_detail(problem)?;
    let closeness = detail
        .positive_score
        .iter()
        .zip(&detail.negative_score)
        .enumerate()
        .map(|(i, (sp, sn))| {
            if sp + sn == 0.0 {
                Err(Error::DegenerateProblem { alternative: i })
            } else {
                Ok(sp / (sp + sn))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RankingResult::from_closeness(closeness))
}

/// Options for [`topsis_proposed_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ProposedOptions {
    /// Run with an aggregation pair that was not declared jointly injective.
    pub allow_non_admissible: bool,
}

/// Similarities of every row to both ideals.
#[derive(Clone, Debug, PartialEq)]
pub struct ProposedDetail {
    pub ideals: IdealPoints,
    pub positive_similarity: Vec<f64>,
    pub negative_similarity: Vec<f64>,
}

pub fn proposed_detail(problem: &DecisionProblem, metric: &MetricSpec) -> Result<ProposedDetail> {
    let w = problem.scalar_weights("proposed")?;
    let normalized = problem.normalize();
    let ideals = ideal_points(normalized.matrix());
    let (sp, sn) = normalized
        .matrix()
        .iter()
        .map(|row| {
            (
                weighted_similarity_unchecked(metric, row, &ideals.positive, w),
                weighted_similarity_unchecked(metric, row, &ideals.negative, w),
            )
        })
        .unzip();
    Ok(ProposedDetail {
        ideals,
        positive_similarity: sp,
        negative_similarity: sn,
    })
}

/// The monotone TOPSIS: `𝒞 = S(A, A⁺) / (S(A, A⁺) + S(A, A⁻))`.
pub fn topsis_proposed(problem: &DecisionProblem, metric: &MetricSpec) -> Result<RankingResult> {
    topsis_proposed_with(problem, metric, ProposedOptions::default())
}

pub fn topsis_proposed_with(
    problem: &DecisionProblem,
    metric: &MetricSpec,
    options: ProposedOptions,
) -> Result<RankingResult> {
    if !metric.is_admissible() && !options.allow_non_admissible {
        return Err(Error::NonAdmissible);
    }
    let detail = proposed_detail(problem, metric)?;
    let closeness = detail
        .positive_similarity
        .iter()
        .zip(&detail.negative_similarity)
        .map(|(sp, sn)| {
            // ρ(A⁺_j, A⁻_j) ≤ ρ(r, A⁺_j) + ρ(r, A⁻_j) ≤ 1 keeps sp + sn ≥ 1
            debug_assert!(sp + sn > 0.0);
            sp / (sp + sn)
        })
        .collect();
    Ok(RankingResult::from_closeness(closeness))
}

/// A ranking method selectable at run time.
#[derive(Clone, Debug)]
pub enum Method {
    Li,
    Chen,
    Proposed(MetricSpec),
}

impl Method {
    pub fn run(&self, problem: &DecisionProblem) -> Result<RankingResult> {
        match self {
            Method::Li => topsis_li(problem),
            Method::Chen => topsis_chen(problem),
            Method::Proposed(metric) => topsis_proposed(problem, metric),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Method::Li => "li",
            Method::Chen => "chen",
            Method::Proposed(_) => "proposed",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(mu: f64, nu: f64) -> Ifv {
        Ifv::new(mu, nu).unwrap()
    }

    fn two_col(rows: &[(f64, f64)], weights: Weights) -> DecisionProblem {
        DecisionProblem::from_matrix(rows.iter().map(|&(m, n)| vec![v(m, n), v(m, n)]).collect(), weights)
            .unwrap()
    }

    #[test]
    fn normalize_complements_cost_columns() {
        let p = DecisionProblem::new(
            vec!["x".into(), "y".into()],
            vec![Attribute::benefit("b"), Attribute::cost("c")],
            vec![vec![v(0.1, 0.2), v(0.2, 0.5)], vec![v(0.3, 0.3), v(0.6, 0.1)]],
            Weights::Scalar(vec![0.5, 0.5]),
        )
        .unwrap();
        let n = p.normalize();
        assert_eq!(n.matrix()[0][1], v(0.5, 0.2));
        assert_eq!(n.matrix()[0][0], v(0.1, 0.2));
        assert!(n.attributes().iter().all(|a| a.kind == AttributeKind::Benefit));
        assert_eq!(n.normalize(), n);
    }

    #[test]
    fn ideal_points_single_row() {
        let row = vec![v(0.2, 0.3), v(0.5, 0.1)];
        let ideals = ideal_points(std::slice::from_ref(&row));
        assert_eq!(ideals.positive, row);
        assert_eq!(ideals.negative, row);
    }

    #[test]
    fn validation_errors() {
        let m = vec![vec![v(0.1, 0.2)], vec![v(0.3, 0.3)]];
        assert!(matches!(
            DecisionProblem::from_matrix(m.clone(), Weights::Scalar(vec![0.9])),
            Err(Error::Weight(_))
        ));
        assert!(DecisionProblem::from_matrix(m[..1].to_vec(), Weights::Scalar(vec![1.0])).is_err());
        assert!(DecisionProblem::from_matrix(m, Weights::Scalar(vec![0.5, 0.5])).is_err());
    }

    #[test]
    fn chen_and_proposed_reject_ifv_weights() {
        let p = two_col(&[(0.0, 1.0), (1.0, 0.0)], Weights::Ifv(vec![Ifv::ONE, Ifv::ONE]));
        assert!(matches!(topsis_chen(&p), Err(Error::WeightKindMismatch { .. })));
        let m = MetricSpec::xy(1.0).unwrap();
        assert!(matches!(topsis_proposed(&p, &m), Err(Error::WeightKindMismatch { .. })));
        assert!(topsis_li(&p).is_ok());
    }

    #[test]
    fn identical_alternatives_tie() {
        let p = two_col(&[(0.2, 0.5), (0.6, 0.1), (0.6, 0.1)], Weights::Scalar(vec![0.5, 0.5]));
        let r = topsis_li(&p).unwrap();
        assert_eq!(r.ties, vec![vec![1, 2]]);
        assert_eq!(r.default_preference(), "A2 ≈ A3 ≻ A1");
    }

    #[test]
    fn baselines_reject_degenerate() {
        let p = two_col(&[(0.2, 0.5), (0.2, 0.5)], Weights::Scalar(vec![0.5, 0.5]));
        assert!(matches!(topsis_li(&p), Err(Error::DegenerateProblem { .. })));
        // g⁺ = g⁻ = 1 here, so Chen is not degenerate
        assert_eq!(topsis_chen(&p).unwrap().closeness, vec![0.5, 0.5]);
        let r = topsis_proposed(&p, &MetricSpec::xy(100.0).unwrap()).unwrap();
        assert_eq!(r.closeness, vec![0.5, 0.5]);
    }

    #[test]
    fn chen_extreme_rows() {
        let p = two_col(&[(0.0, 1.0), (0.3, 0.0), (1.0, 0.0)], Weights::Scalar(vec![0.5, 0.5]));
        let d = chen_detail(&p).unwrap();
        assert_eq!(d.positive_similarity[2], vec![1.0, 1.0]);
        assert_eq!(d.negative_similarity[0], vec![1.0, 1.0]);
        assert_eq!(d.positive_similarity[0], vec![0.0, 0.0]);
        assert_eq!(topsis_chen(&p).unwrap().closeness[0], 0.0);
    }

    #[test]
    fn non_admissible_pair_needs_override() {
        use crate::ifv::{AggregationFn, AggregationPair};
        let pair = AggregationPair::custom(
            AggregationFn::custom("max", f64::max),
            AggregationFn::custom("min", f64::min),
            false,
        );
        let metric = MetricSpec::agg(pair, 10.0).unwrap();
        let p = two_col(&[(0.2, 0.5), (0.6, 0.1)], Weights::Scalar(vec![0.5, 0.5]));
        assert_eq!(topsis_proposed(&p, &metric), Err(Error::NonAdmissible));
        let opts = ProposedOptions {
            allow_non_admissible: true,
        };
        assert!(topsis_proposed_with(&p, &metric, opts).is_ok());
    }
}
