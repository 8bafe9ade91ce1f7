//! Atanassov's partial order and the admissible linear orders on IFVs.
//!
//! Ties on the primary key are detected with exact floating-point equality.
//! A tolerance band would make the comparators intransitive.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ifv::{AggregationFn, AggregationPair, Ifv};

/// Atanassov's order `⊂`: `α ⊂ β` iff `μ_α ≤ μ_β` and `ν_α ≥ ν_β`.
///
/// Returns `None` when the pair is incomparable.
pub fn partial_cmp(alpha: &Ifv, beta: &Ifv) -> Option<Ordering> {
    let mu = alpha.mu().partial_cmp(&beta.mu())?;
    // larger ν is smaller
    let nu = beta.nu().partial_cmp(&alpha.nu())?;
    match (mu, nu) {
        (Ordering::Equal, o) | (o, Ordering::Equal) => Some(o),
        (a, b) if a == b => Some(a),
        _ => None,
    }
}

#[inline]
fn total(a: f64, b: f64) -> Ordering {
    a.partial_cmp(&b).expect("IFV functionals are finite")
}

/// Xu–Yager order: score first, then accuracy.
pub fn cmp_xy(alpha: &Ifv, beta: &Ifv) -> Ordering {
    total(alpha.score(), beta.score()).then_with(|| total(alpha.accuracy(), beta.accuracy()))
}

/// Zhang–Xu order: L-value first, then accuracy.
pub fn cmp_zx(alpha: &Ifv, beta: &Ifv) -> Ordering {
    total(alpha.l_value(), beta.l_value()).then_with(|| total(alpha.accuracy(), beta.accuracy()))
}

/// `≤_{A,B}`: compare `Ā = A(μ, 1 − ν)` first, then `B̄`.
///
/// This is a linear order only if `(A, B)` is jointly injective; otherwise
/// distinct values can compare equal.
pub fn cmp_agg(a: &AggregationFn, b: &AggregationFn, alpha: &Ifv, beta: &Ifv) -> Ordering {
    total(a.apply(alpha), a.apply(beta)).then_with(|| total(b.apply(alpha), b.apply(beta)))
}

/// A comparison strategy on IFVs.
#[derive(Clone, Debug)]
pub enum OrderSpec {
    Partial,
    Xy,
    Zx,
    Agg(AggregationPair),
}

impl OrderSpec {
    /// `≤_{γ₁,γ₂}` built from `K_γ₁, K_γ₂`; requires `γ₁ ≠ γ₂`.
    pub fn k_gamma(gamma1: f64, gamma2: f64) -> Result<Self> {
        Ok(OrderSpec::Agg(AggregationPair::k_gamma(gamma1, gamma2)?))
    }

    pub fn is_linear(&self) -> bool {
        !matches!(self, OrderSpec::Partial)
    }

    /// False for the partial order and for aggregation pairs without an
    /// injectivity promise.
    pub fn is_admissible(&self) -> bool {
        match self {
            OrderSpec::Partial => false,
            OrderSpec::Xy | OrderSpec::Zx => true,
            OrderSpec::Agg(pair) => pair.is_admissible(),
        }
    }

    /// `None` only for incomparable pairs under [`OrderSpec::Partial`].
    pub fn compare(&self, alpha: &Ifv, beta: &Ifv) -> Option<Ordering> {
        match self {
            OrderSpec::Partial => partial_cmp(alpha, beta),
            OrderSpec::Xy => Some(cmp_xy(alpha, beta)),
            OrderSpec::Zx => Some(cmp_zx(alpha, beta)),
            OrderSpec::Agg(pair) => Some(cmp_agg(pair.first(), pair.second(), alpha, beta)),
        }
    }

    pub fn leq(&self, alpha: &Ifv, beta: &Ifv) -> bool {
        matches!(self.compare(alpha, beta), Some(Ordering::Less | Ordering::Equal))
    }

    /// Pointwise extension to IFS vectors.
    pub fn vector_leq(&self, xs: &[Ifv], ys: &[Ifv]) -> Result<bool> {
        if xs.len() != ys.len() {
            return Err(Error::LengthMismatch {
                left: xs.len(),
                right: ys.len(),
            });
        }
        Ok(xs.iter().zip(ys).all(|(x, y)| self.leq(x, y)))
    }

    /// Returns `(low, high)` with `low ≤ high`. For the partial order the
    /// meet and join are returned, which always satisfy `low ⊂ high`.
    pub fn sorted_pair(&self, a: Ifv, b: Ifv) -> (Ifv, Ifv) {
        match self.compare(&a, &b) {
            Some(Ordering::Greater) => (b, a),
            Some(_) => (a, b),
            None => (a.meet(&b), a.join(&b)),
        }
    }

    pub fn label(&self) -> String {
        match self {
            OrderSpec::Partial => "partial".into(),
            OrderSpec::Xy => "xy".into(),
            OrderSpec::Zx => "zx".into(),
            OrderSpec::Agg(pair) => format!("agg({}, {})", pair.first().name(), pair.second().name()),
        }
    }
}
