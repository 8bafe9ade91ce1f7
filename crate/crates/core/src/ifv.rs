//! Intuitionistic fuzzy values and their operational laws.
//!
//! An [`Ifv`] is a pair `⟨μ, ν⟩` with `μ, ν ∈ [0, 1]` and `μ + ν ≤ 1`. All
//! derived quantities (hesitancy, score, accuracy, L-value) are computed on
//! demand from the two stored coordinates.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Slack accepted on `μ + ν ≤ 1` at construction.
pub const CONSTRUCTION_TOLERANCE: f64 = 1e-12;

/// An intuitionistic fuzzy value `⟨μ, ν⟩`.
///
/// Equality is exact coordinate equality.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 2]", into = "[f64; 2]")]
pub struct Ifv {
    mu: f64,
    nu: f64,
}

impl Ifv {
    /// The largest element `⟨1, 0⟩`.
    pub const ONE: Ifv = Ifv { mu: 1.0, nu: 0.0 };
    /// The smallest element `⟨0, 1⟩`.
    pub const ZERO: Ifv = Ifv { mu: 0.0, nu: 1.0 };

    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        if !mu.is_finite() || !nu.is_finite() {
            return Err(Error::domain(format!("non-finite IFV ⟨{mu}, {nu}⟩")));
        }
        if !(0.0..=1.0).contains(&mu) || !(0.0..=1.0).contains(&nu) {
            return Err(Error::domain(format!(
                "IFV coordinates must lie in [0, 1], got ⟨{mu}, {nu}⟩"
            )));
        }
        if mu + nu > 1.0 + CONSTRUCTION_TOLERANCE {
            return Err(Error::domain(format!(
                "IFV requires mu + nu <= 1, got ⟨{mu}, {nu}⟩"
            )));
        }
        Ok(Ifv { mu, nu })
    }

    /// Builds a value produced by a closed operation. Inputs are clamped to the
    /// unit square to absorb last-bit rounding.
    fn from_op(mu: f64, nu: f64) -> Self {
        let v = Ifv {
            mu: mu.clamp(0.0, 1.0),
            nu: nu.clamp(0.0, 1.0),
        };
        debug_assert!(v.mu + v.nu <= 1.0 + 1e-9, "operation left the IFV domain: {v}");
        v
    }

    #[inline]
    pub fn mu(&self) -> f64 {
        self.mu
    }

    #[inline]
    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Hesitancy `π = 1 − μ − ν`, clamped at 0.
    #[inline]
    pub fn pi(&self) -> f64 {
        (1.0 - self.mu - self.nu).max(0.0)
    }

    /// Score degree `s = μ − ν`.
    #[inline]
    pub fn score(&self) -> f64 {
        self.mu - self.nu
    }

    /// Accuracy degree `h = μ + ν`.
    #[inline]
    pub fn accuracy(&self) -> f64 {
        self.mu + self.nu
    }

    /// `L = (1 − ν) / (1 + π)`; the denominator is at least 1.
    #[inline]
    pub fn l_value(&self) -> f64 {
        (1.0 - self.nu) / (1.0 + self.pi())
    }

    pub fn complement(&self) -> Ifv {
        Ifv {
            mu: self.nu,
            nu: self.mu,
        }
    }

    /// `α ∩ β`.
    pub fn meet(&self, other: &Ifv) -> Ifv {
        Ifv {
            mu: self.mu.min(other.mu),
            nu: self.nu.max(other.nu),
        }
    }

    /// `α ∪ β`.
    pub fn join(&self, other: &Ifv) -> Ifv {
        Ifv {
            mu: self.mu.max(other.mu),
            nu: self.nu.min(other.nu),
        }
    }

    /// `α ⊕ β`.
    pub fn sum(&self, other: &Ifv) -> Ifv {
        Ifv::from_op(
            self.mu + other.mu - self.mu * other.mu,
            self.nu * other.nu,
        )
    }

    /// `α ⊗ β`.
    pub fn product(&self, other: &Ifv) -> Ifv {
        Ifv::from_op(
            self.mu * other.mu,
            self.nu + other.nu - self.nu * other.nu,
        )
    }

    /// `λα = ⟨1 − (1 − μ)^λ, ν^λ⟩` for `λ > 0`.
    pub fn scale(&self, lambda: f64) -> Result<Ifv> {
        check_exponent(lambda)?;
        if lambda == 1.0 {
            return Ok(*self);
        }
        Ok(Ifv::from_op(
            1.0 - (1.0 - self.mu).powf(lambda),
            self.nu.powf(lambda),
        ))
    }

    /// `α^λ = ⟨μ^λ, 1 − (1 − ν)^λ⟩` for `λ > 0`.
    pub fn power(&self, lambda: f64) -> Result<Ifv> {
        check_exponent(lambda)?;
        if lambda == 1.0 {
            return Ok(*self);
        }
        Ok(Ifv::from_op(
            self.mu.powf(lambda),
            1.0 - (1.0 - self.nu).powf(lambda),
        ))
    }

    /// Draws `μ` uniformly from `[0, 1]`, then `ν` uniformly from `[0, 1 − μ]`.
    ///
    /// Not uniform over the triangle; it over-weights large `μ`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Ifv {
        let mu: f64 = rng.random();
        let nu = rng.random::<f64>() * (1.0 - mu);
        Ifv { mu, nu }
    }

    /// Draws from the grid `{k/20}` so that exact score/L/accuracy ties occur.
    pub fn random_grid<R: Rng + ?Sized>(rng: &mut R) -> Ifv {
        let a = rng.random_range(0..=20u32);
        let b = rng.random_range(0..=(20 - a));
        Ifv {
            mu: f64::from(a) / 20.0,
            nu: f64::from(b) / 20.0,
        }
    }
}

fn check_exponent(lambda: f64) -> Result<()> {
    if lambda.is_finite() && lambda > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("lambda must be > 0, got {lambda}")))
    }
}

impl TryFrom<[f64; 2]> for Ifv {
    type Error = Error;

    fn try_from([mu, nu]: [f64; 2]) -> Result<Self> {
        Ifv::new(mu, nu)
    }
}

impl From<Ifv> for [f64; 2] {
    fn from(v: Ifv) -> Self {
        [v.mu, v.nu]
    }
}

impl fmt::Display for Ifv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}⟩", self.mu, self.nu)
    }
}

/// One of the operational laws on IFVs, as a value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum IfvOp {
    Complement(Ifv),
    Meet(Ifv, Ifv),
    Join(Ifv, Ifv),
    Sum(Ifv, Ifv),
    Product(Ifv, Ifv),
    Scale(f64, Ifv),
    Power(f64, Ifv),
}

impl IfvOp {
    pub fn apply(&self) -> Result<Ifv> {
        match *self {
            IfvOp::Complement(a) => Ok(a.complement()),
            IfvOp::Meet(a, b) => Ok(a.meet(&b)),
            IfvOp::Join(a, b) => Ok(a.join(&b)),
            IfvOp::Sum(a, b) => Ok(a.sum(&b)),
            IfvOp::Product(a, b) => Ok(a.product(&b)),
            IfvOp::Scale(l, a) => a.scale(l),
            IfvOp::Power(l, a) => a.power(l),
        }
    }
}

type BinaryFn = dyn Fn(f64, f64) -> f64 + Send + Sync;

/// A binary aggregation function `[0,1]² → [0,1]`.
///
/// Either the linear family `K_γ(x, y) = x + γ(y − x)` or a user-supplied
/// closure. User closures are trusted to be monotone; [`check_monotone`]
/// can only sample.
///
/// [`check_monotone`]: AggregationFn::check_monotone
#[derive(Clone)]
pub enum AggregationFn {
    KGamma(f64),
    Custom { name: String, f: Arc<BinaryFn> },
}

impl AggregationFn {
    pub fn k_gamma(gamma: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::domain(format!("gamma must lie in [0, 1], got {gamma}")));
        }
        Ok(AggregationFn::KGamma(gamma))
    }

    pub fn custom<F>(name: impl Into<String>, f: F) -> Self
    where
        F: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        AggregationFn::Custom {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    #[inline]
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        match self {
            AggregationFn::KGamma(g) => x + g * (y - x),
            AggregationFn::Custom { f, .. } => f(x, y),
        }
    }

    /// `f(μ, 1 − ν)`.
    #[inline]
    pub fn apply(&self, alpha: &Ifv) -> f64 {
        self.eval(alpha.mu(), 1.0 - alpha.nu())
    }

    pub fn name(&self) -> String {
        match self {
            AggregationFn::KGamma(g) => format!("K_{g}"),
            AggregationFn::Custom { name, .. } => name.clone(),
        }
    }

    /// Samples the aggregation axioms: boundary values, range, and
    /// monotonicity in each argument over `samples` random pairs.
    pub fn check_monotone(&self, samples: usize, seed: u64) -> Result<()> {
        if self.eval(0.0, 0.0) != 0.0 || self.eval(1.0, 1.0) != 1.0 {
            return Err(Error::domain(format!(
                "{} does not fix the corners (0,0) and (1,1)",
                self.name()
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let (mut x0, mut x1): (f64, f64) = (rng.random(), rng.random());
            let (mut y0, mut y1): (f64, f64) = (rng.random(), rng.random());
            if x0 > x1 {
                std::mem::swap(&mut x0, &mut x1);
            }
            if y0 > y1 {
                std::mem::swap(&mut y0, &mut y1);
            }
            let lo = self.eval(x0, y0);
            let hi = self.eval(x1, y1);
            if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) {
                return Err(Error::domain(format!("{} leaves [0, 1]", self.name())));
            }
            if lo > hi || self.eval(x0, y1) > hi || self.eval(x1, y0) > hi {
                return Err(Error::domain(format!(
                    "{} is not nondecreasing near ({x0}, {y0})",
                    self.name()
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AggregationFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AggregationFn::KGamma(g) => f.debug_tuple("KGamma").field(g).finish(),
            AggregationFn::Custom { name, .. } => f.debug_struct("Custom").field("name", name).finish(),
        }
    }
}

/// An ordered pair `(A, B)` of aggregation functions inducing `≤_{A,B}`.
///
/// The pair is admissible only when `(A, B)` is jointly injective on the
/// unit square. For `K_γ₁, K_γ₂` this holds iff `γ₁ ≠ γ₂`; for user
/// functions the caller declares it.
#[derive(Clone, Debug)]
pub struct AggregationPair {
    first: AggregationFn,
    second: AggregationFn,
    injective: bool,
}

impl AggregationPair {
    pub fn k_gamma(gamma1: f64, gamma2: f64) -> Result<Self> {
        if gamma1 == gamma2 {
            return Err(Error::domain(format!(
                "K-gamma pair requires gamma1 != gamma2, got {gamma1}"
            )));
        }
        Ok(AggregationPair {
            first: AggregationFn::k_gamma(gamma1)?,
            second: AggregationFn::k_gamma(gamma2)?,
            injective: true,
        })
    }

    /// A user pair. `promise_injective` is the caller's claim that `A(x₁,y₁) =
    /// A(x₂,y₂)` and `B(x₁,y₁) = B(x₂,y₂)` together force `(x₁,y₁) = (x₂,y₂)`.
    pub fn custom(first: AggregationFn, second: AggregationFn, promise_injective: bool) -> Self {
        AggregationPair {
            first,
            second,
            injective: promise_injective,
        }
    }

    pub fn first(&self) -> &AggregationFn {
        &self.first
    }

    pub fn second(&self) -> &AggregationFn {
        &self.second
    }

    pub fn is_admissible(&self) -> bool {
        self.injective
    }

    /// `(Ā(α), B̄(α))`.
    #[inline]
    pub fn images(&self, alpha: &Ifv) -> (f64, f64) {
        (self.first.apply(alpha), self.second.apply(alpha))
    }

    /// The `γ` parameters when both members are `K_γ`.
    pub fn gammas(&self) -> Option<(f64, f64)> {
        match (&self.first, &self.second) {
            (AggregationFn::KGamma(a), AggregationFn::KGamma(b)) => Some((*a, *b)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(mu: f64, nu: f64) -> Ifv {
        Ifv::new(mu, nu).unwrap()
    }

    #[test]
    fn construction_and_functionals() {
        let a = v(0.5, 0.2);
        assert!((a.pi() - 0.3).abs() < 1e-15);
        assert!((a.score() - 0.3).abs() < 1e-15);
        assert!((a.accuracy() - 0.7).abs() < 1e-15);

        let z = v(0.0, 1.0);
        assert_eq!(z.score(), -1.0);
        assert_eq!(z.l_value(), 0.0);
        assert_eq!(Ifv::ONE.l_value(), 1.0);
        assert_eq!(Ifv::ONE.score(), 1.0);
        assert_eq!(v(0.0, 0.0).accuracy(), 0.0);
    }

    #[test]
    fn rejects_out_of_domain() {
        assert!(matches!(Ifv::new(0.7, 0.6), Err(Error::Domain(_))));
        assert!(Ifv::new(-0.1, 0.2).is_err());
        assert!(Ifv::new(0.2, 1.1).is_err());
        assert!(Ifv::new(f64::NAN, 0.0).is_err());
        // within tolerance
        let a = Ifv::new(0.6, 0.4 + 1e-13).unwrap();
        assert_eq!(a.pi(), 0.0);
    }

    #[test]
    fn operational_laws() {
        let a = v(0.99, 0.0001);
        let w = a.scale(0.5).unwrap();
        assert!((w.mu() - 0.9).abs() < 1e-12 && (w.nu() - 0.01).abs() < 1e-12);
        let b = v(0.990199, 0.49e-4).scale(0.5).unwrap();
        assert!((b.mu() - 0.901).abs() < 1e-12 && (b.nu() - 0.007).abs() < 1e-12);

        assert_eq!(v(0.2, 0.5).complement(), v(0.5, 0.2));
        let x = v(0.37, 0.41);
        assert_eq!(Ifv::ONE.product(&x), x);
        assert_eq!(Ifv::new(0.0, 1.0).unwrap().sum(&x), x);
        assert!(x.scale(0.0).is_err());
        assert!(x.power(-1.0).is_err());
        assert_eq!(IfvOp::Meet(x, Ifv::ONE).apply().unwrap(), x);
    }

    #[test]
    fn k_gamma_images() {
        let k = AggregationFn::k_gamma(0.5).unwrap();
        assert!((k.apply(&v(0.4, 0.4)) - 0.5).abs() < 1e-15);
        let x = v(0.23, 0.61);
        assert_eq!(AggregationFn::k_gamma(0.0).unwrap().apply(&x), 0.23);
        assert_eq!(AggregationFn::k_gamma(1.0).unwrap().apply(&x), 1.0 - 0.61);
        assert!(AggregationFn::k_gamma(1.5).is_err());
        assert!(AggregationPair::k_gamma(0.3, 0.3).is_err());
    }

    #[test]
    fn monotonicity_sampling() {
        assert!(AggregationFn::k_gamma(0.3).unwrap().check_monotone(1000, 1).is_ok());
        let geo = AggregationFn::custom("geo", |x, y| (x * y).sqrt());
        assert!(geo.check_monotone(1000, 1).is_ok());
        let bad = AggregationFn::custom("anti", |x, y| (x + 1.0 - y) / 2.0);
        assert!(bad.check_monotone(1000, 1).is_err());
    }
}
