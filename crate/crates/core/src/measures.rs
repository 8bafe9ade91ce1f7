//! Distance and similarity measures on IFVs and IFS vectors.
//!
//! Two groups live here. The classical three-term measures (normalized
//! Hamming/Euclidean/Minkowski distances and the similarities built from
//! them, the `S_CK` score, the Shen distance) are kept verbatim, including
//! their known defects, so the defects can be demonstrated. The admissible
//! parametric metrics in [`MetricSpec`] are the ones used by the monotone
//! TOPSIS: each is compatible with one linear order, meaning that for
//! `α ≤ β ≤ γ` both `ρ(α, β)` and `ρ(β, γ)` are at most `ρ(α, γ)`.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::ifv::{AggregationPair, Ifv};
use crate::orders::OrderSpec;

/// Tolerance on `Σ w = 1`.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// An IFS over a finite universe, stored as its sequence of IFVs.
#[derive(Clone, Debug, PartialEq)]
pub struct IfsVector(Vec<Ifv>);

impl IfsVector {
    pub fn new(values: Vec<Ifv>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("an IFS vector needs at least one point"));
        }
        Ok(IfsVector(values))
    }

    pub fn complement(&self) -> IfsVector {
        IfsVector(self.0.iter().map(Ifv::complement).collect())
    }

    pub fn into_inner(self) -> Vec<Ifv> {
        self.0
    }
}

impl Deref for IfsVector {
    type Target = [Ifv];

    fn deref(&self) -> &[Ifv] {
        &self.0
    }
}

impl From<Ifv> for IfsVector {
    fn from(v: Ifv) -> Self {
        IfsVector(vec![v])
    }
}

fn same_len(a: &[Ifv], b: &[Ifv]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.is_empty() {
        return Err(Error::domain("IFS vectors must be nonempty"));
    }
    Ok(())
}

/// Normalized Minkowski distance over the `(μ, ν, π)` triple:
/// `( (1/2n) Σ |Δμ|^p + |Δν|^p + |Δπ|^p )^(1/p)`.
pub fn d_minkowski(p: f64, a: &[Ifv], b: &[Ifv]) -> Result<f64> {
    if !p.is_finite() || p < 1.0 {
        return Err(Error::domain(format!("Minkowski exponent must be >= 1, got {p}")));
    }
    same_len(a, b)?;
    let total: f64 = a
        .iter()
        .zip(b)
        .map(|(x, y)| {
            (x.mu() - y.mu()).abs().powf(p)
                + (x.nu() - y.nu()).abs().powf(p)
                + (x.pi() - y.pi()).abs().powf(p)
        })
        .sum();
    let mean = total / (2.0 * a.len() as f64);
    Ok(if p == 1.0 {
        mean
    } else if p == 2.0 {
        mean.sqrt()
    } else {
        mean.powf(1.0 / p)
    })
}

pub fn d_hamming(a: &[Ifv], b: &[Ifv]) -> Result<f64> {
    d_minkowski(1.0, a, b)
}

pub fn d_euclid(a: &[Ifv], b: &[Ifv]) -> Result<f64> {
    d_minkowski(2.0, a, b)
}

/// The classical similarity measures built on three-term distances.
///
/// `SkRatio*` are not similarity measures in the axiomatic sense: their
/// values may exceed 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SimilarityKind {
    /// `d_Ha(I₁, I₂) / d_Ha(I₁, I₂ᶜ)`.
    SkRatioHamming,
    /// `d_Eu(I₁, I₂) / d_Eu(I₁, I₂ᶜ)`.
    SkRatioEuclid,
    /// `1 − d_M^(p)(I₁, I₂)`.
    OneMinus(f64),
    /// `d_Ha(I₁, I₂ᶜ) / (d_Ha(I₁, I₂) + d_Ha(I₁, I₂ᶜ))`.
    XcHamming,
    /// `d_Eu(I₁, I₂ᶜ) / (d_Eu(I₁, I₂) + d_Eu(I₁, I₂ᶜ))`.
    XcEuclid,
}

pub fn sim_classical(kind: SimilarityKind, a: &[Ifv], b: &[Ifv]) -> Result<f64> {
    same_len(a, b)?;
    let b_c: Vec<Ifv> = b.iter().map(Ifv::complement).collect();
    match kind {
        SimilarityKind::OneMinus(p) => Ok(1.0 - d_minkowski(p, a, b)?),
        SimilarityKind::SkRatioHamming | SimilarityKind::SkRatioEuclid => {
            let p = if kind == SimilarityKind::SkRatioHamming { 1.0 } else { 2.0 };
            let den = d_minkowski(p, a, &b_c)?;
            if den == 0.0 {
                return Err(Error::DivisionByZero("SK ratio similarity"));
            }
            Ok(d_minkowski(p, a, b)? / den)
        }
        SimilarityKind::XcHamming | SimilarityKind::XcEuclid => {
            let p = if kind == SimilarityKind::XcHamming { 1.0 } else { 2.0 };
            let to_c = d_minkowski(p, a, &b_c)?;
            let den = d_minkowski(p, a, b)? + to_c;
            if den == 0.0 {
                return Err(Error::DivisionByZero("Xu–Chen similarity"));
            }
            Ok(to_c / den)
        }
    }
}

/// Score value `S_CK(α) = (μ − ν) − π · log₂(2 − μ − ν) / 100`.
///
/// Monotone under `⊂` but not injective.
pub fn s_ck(alpha: &Ifv) -> f64 {
    let h = alpha.accuracy();
    alpha.score() - (1.0 - h) * (2.0 - h).log2() / 100.0
}

fn shen_stretch(alpha: &Ifv) -> (f64, f64) {
    let pi = alpha.pi();
    let factor = 1.0 + 2.0 / 3.0 * pi * (1.0 + pi);
    (alpha.mu() * factor, alpha.nu() * factor)
}

/// Shen et al.'s distance on stretched coordinates `μ̃ = μ(1 + ⅔π(1 + π))`.
pub fn d_sh(alpha: &Ifv, beta: &Ifv) -> f64 {
    let (ma, na) = shen_stretch(alpha);
    let (mb, nb) = shen_stretch(beta);
    (((ma - mb).powi(2) + (na - nb).powi(2)) / 2.0).sqrt()
}

#[derive(Clone, Debug)]
enum MetricKind {
    Xy,
    Zx,
    Agg(AggregationPair),
}

/// An admissible parametric metric on IFVs with parameter `λ ≥ 1`.
///
/// | variant | order | primary key | normalizer |
/// |---|---|---|---|
/// | `xy(λ)` | `≤_XY` | score `s` | `1/(1+2λ)` |
/// | `zx(λ)` | `≤_ZX` | L-value | `1/(1+λ)` |
/// | `agg(A, B, λ)`, `kk(γ₁, γ₂, λ)` | `≤_{A,B}` | `Ā` | `1/(1+λ)` |
///
/// When the primary keys differ the distance is `c·(1 + λ|Δkey|)`, otherwise
/// it is `c·|Δsecondary|`, with accuracy as the secondary key for `xy`/`zx`
/// and `B̄` for the aggregation variants.
#[derive(Clone, Debug)]
pub struct MetricSpec {
    kind: MetricKind,
    lambda: f64,
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda.is_finite() && lambda >= 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("lambda must be >= 1, got {lambda}")))
    }
}

impl MetricSpec {
    pub fn xy(lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(MetricSpec {
            kind: MetricKind::Xy,
            lambda,
        })
    }

    pub fn zx(lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(MetricSpec {
            kind: MetricKind::Zx,
            lambda,
        })
    }

    pub fn agg(pair: AggregationPair, lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(MetricSpec {
            kind: MetricKind::Agg(pair),
            lambda,
        })
    }

    /// `ρ_{K_γ₁, K_γ₂}^(λ)`.
    pub fn kk(gamma1: f64, gamma2: f64, lambda: f64) -> Result<Self> {
        Self::agg(AggregationPair::k_gamma(gamma1, gamma2)?, lambda)
    }

    /// The metric paired with `order`, if it has one.
    pub fn for_order(order: &OrderSpec, lambda: f64) -> Result<Self> {
        match order {
            OrderSpec::Xy => Self::xy(lambda),
            OrderSpec::Zx => Self::zx(lambda),
            OrderSpec::Agg(pair) => Self::agg(pair.clone(), lambda),
            OrderSpec::Partial => Err(Error::domain("the partial order has no paired metric")),
        }
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// The linear order this metric is compatible with.
    pub fn order(&self) -> OrderSpec {
        match &self.kind {
            MetricKind::Xy => OrderSpec::Xy,
            MetricKind::Zx => OrderSpec::Zx,
            MetricKind::Agg(pair) => OrderSpec::Agg(pair.clone()),
        }
    }

    pub fn is_admissible(&self) -> bool {
        match &self.kind {
            MetricKind::Agg(pair) => pair.is_admissible(),
            _ => true,
        }
    }

    /// `ρ(α, β) ∈ [0, 1]`.
    pub fn distance(&self, alpha: &Ifv, beta: &Ifv) -> f64 {
        let l = self.lambda;
        // dividing (rather than multiplying by 1/norm) keeps ρ(⟨0,1⟩, ⟨1,0⟩) exactly 1
        let (norm, primary, secondary) = match &self.kind {
            MetricKind::Xy => (
                1.0 + 2.0 * l,
                (alpha.score(), beta.score()),
                (alpha.accuracy(), beta.accuracy()),
            ),
            MetricKind::Zx => (
                1.0 + l,
                (alpha.l_value(), beta.l_value()),
                (alpha.accuracy(), beta.accuracy()),
            ),
            MetricKind::Agg(pair) => {
                let (a1, b1) = pair.images(alpha);
                let (a2, b2) = pair.images(beta);
                (1.0 + l, (a1, a2), (b1, b2))
            }
        };
        if primary.0 != primary.1 {
            (1.0 + l * (primary.0 - primary.1).abs()) / norm
        } else {
            (secondary.0 - secondary.1).abs() / norm
        }
    }

    pub fn label(&self) -> String {
        match &self.kind {
            MetricKind::Xy => format!("rho_xy(lambda={})", self.lambda),
            MetricKind::Zx => format!("rho_zx(lambda={})", self.lambda),
            MetricKind::Agg(pair) => match pair.gammas() {
                Some((g1, g2)) => format!("rho_kk(gamma1={g1}, gamma2={g2}, lambda={})", self.lambda),
                None => format!(
                    "rho_agg({}, {}, lambda={})",
                    pair.first().name(),
                    pair.second().name(),
                    self.lambda
                ),
            },
        }
    }
}

/// Positive weights in `(0, 1]` summing to 1 within [`WEIGHT_SUM_TOLERANCE`].
pub fn validate_weights(weights: &[f64]) -> Result<()> {
    if weights.is_empty() {
        return Err(Error::Weight("empty weight vector".into()));
    }
    if let Some((j, w)) = weights
        .iter()
        .enumerate()
        .find(|(_, w)| !(**w > 0.0 && **w <= 1.0))
    {
        return Err(Error::Weight(format!("weight {j} = {w} is outside (0, 1]")));
    }
    let sum: f64 = weights.iter().sum();
    if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
        return Err(Error::Weight(format!("weights sum ≠ 1 (sum = {sum})")));
    }
    Ok(())
}

/// `S = 1 − Σ_j w_j · ρ(row_j, ideal_j)`.
pub fn weighted_similarity(
    metric: &MetricSpec,
    row: &[Ifv],
    ideal: &[Ifv],
    weights: &[f64],
) -> Result<f64> {
    same_len(row, ideal)?;
    if weights.len() != row.len() {
        return Err(Error::LengthMismatch {
            left: row.len(),
            right: weights.len(),
        });
    }
    validate_weights(weights)?;
    Ok(weighted_similarity_unchecked(metric, row, ideal, weights))
}

pub(crate) fn weighted_similarity_unchecked(
    metric: &MetricSpec,
    row: &[Ifv],
    ideal: &[Ifv],
    weights: &[f64],
) -> f64 {
    let d: f64 = row
        .iter()
        .zip(ideal)
        .zip(weights)
        .map(|((r, p), w)| w * metric.distance(r, p))
        .sum();
    1.0 - d
}
