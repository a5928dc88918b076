//! Discrete positive measures realizing the resolution of the identity.
//!
//! Averaging `|z, φ⟩⟨z, φ|` over the angle of `z` kills every off-diagonal
//! term and the phases `e^{−iF(n)φ}` cancel, so
//! `∫ dμ |z, φ⟩⟨z, φ| = Σ|n⟩⟨n|` reduces to the radial Stieltjes moment
//! problem `∫ tⁿ dμ̃(t) = mₙ = 1/|aₙ|²` in `t = |z|²`.  The angular measure is
//! `dθ/2π`.
//!
//! Moments stay exact rationals through the Hankel checks and the Chebyshev
//! moment-to-recurrence algorithm; only the Jacobi eigenproblem runs in
//! doubles.

use nalgebra::{DMatrix, SymmetricEigen};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{to_f64, AlgebraParams, RepDimension};
use crate::coherent::{check_existence, squared_weight, CoherentError, StateKind};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasureError {
    #[error("at least one moment is required")]
    Empty,
    #[error("moment count {requested} exceeds the representation dimension {dim}")]
    TooManyMoments { requested: usize, dim: usize },
    #[error("infinite representations need an explicit moment count")]
    MissingCount,
    #[error("moment sequence is not positive definite: Hankel minor of order {order} is {determinant}")]
    NotPositiveDefinite { order: usize, determinant: String },
    #[error("moments admit no measure on (0, inf): Jacobi minor of order {order} is {determinant}")]
    NotStieltjes { order: usize, determinant: String },
    #[error("quadrature reproduces the moments only to {residual:e} (node spread {condition:e})")]
    Unstable { residual: f64, condition: f64 },
    #[error("measure was solved for {available} moments, {requested} requested")]
    RangeMismatch { requested: usize, available: usize },
    #[error("measure belongs to a different algebra or state family")]
    Mismatch,
    #[error("nodes and weights must be positive and of equal length")]
    InvalidMeasure,
    #[error(transparent)]
    Coherent(#[from] CoherentError),
}

/// Radial moments `m₀ … m_{M−1}`.
#[derive(Debug, Clone)]
pub struct MomentSequence {
    values: Vec<BigRational>,
    kind: StateKind,
    params: AlgebraParams,
}

impl MomentSequence {
    /// The angular average is taken against `dθ/(2π)`.
    pub const ANGULAR_SCALE: f64 = 1.0 / (2.0 * std::f64::consts::PI);

    pub fn from_values(values: Vec<BigRational>, kind: StateKind, params: AlgebraParams) -> Self {
        Self { values, kind, params }
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.values.iter().map(to_f64).collect()
    }

    pub fn kind(&self) -> StateKind {
        self.kind
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `mₙ = (n!)²/F(n)!` (Perelomov) or `mₙ = F(n)!` (Barut-Girardello).
///
/// Finite representations default to `M = d`; infinite ones need `count`.
pub fn moments_for(
    params: &AlgebraParams,
    kind: StateKind,
    count: Option<usize>,
) -> Result<MomentSequence, MeasureError> {
    // any z inside every existence domain will do
    check_existence(kind, params, num_complex::Complex64::new(0.0, 0.0), None)?;
    let m = match (params.dimension(), count) {
        (RepDimension::Finite(d), None) => d,
        (RepDimension::Finite(d), Some(c)) if c > d => {
            return Err(MeasureError::TooManyMoments { requested: c, dim: d })
        }
        (_, Some(c)) => c,
        (RepDimension::Infinite, None) => return Err(MeasureError::MissingCount),
    };
    if m == 0 {
        return Err(MeasureError::Empty);
    }
    let values =
        (0..m as u64).map(|n| squared_weight(kind, params, n).map(|w| w.recip())).collect::<Result<Vec<_>, _>>()?;
    Ok(MomentSequence { values, kind, params: params.clone() })
}

/// Leading principal minors `det(m_{i+j})_{i,j<k}` for every order `k` the
/// moments determine, by exact elimination.
pub fn hankel_minors(moments: &[BigRational]) -> Vec<BigRational> {
    let order = moments.len().div_ceil(2);
    let mut a: Vec<Vec<BigRational>> =
        (0..order).map(|i| (0..order).map(|j| moments[i + j].clone()).collect()).collect();
    let mut minors = Vec::with_capacity(order);
    let mut det = BigRational::one();
    for k in 0..order {
        let pivot = a[k][k].clone();
        det *= &pivot;
        minors.push(det.clone());
        if pivot.is_zero() {
            // the remaining minors are not needed once positivity fails
            break;
        }
        for i in k + 1..order {
            let factor = &a[i][k] / &pivot;
            let (upper, lower) = a.split_at_mut(i);
            for (x, p) in lower[0][k..order].iter_mut().zip(&upper[k][k..order]) {
                *x -= &factor * p;
            }
        }
    }
    minors
}

/// Exact three-term recurrence coefficients from moments (Chebyshev's
/// algorithm).  Returns `(α, β)` with `β₀ = m₀`; `α` has one entry fewer than
/// `β` when the number of moments is odd.
pub fn recurrence_from_moments(moments: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let len = moments.len();
    let m = len.div_ceil(2);
    let zero = BigRational::zero();
    let mut alpha = Vec::with_capacity(m);
    let mut beta = Vec::with_capacity(m);
    let mut prev2 = vec![zero.clone(); len];
    let mut prev: Vec<BigRational> = moments.to_vec();
    beta.push(moments[0].clone());
    if len >= 2 {
        alpha.push(&moments[1] / &moments[0]);
    }
    for k in 1..m {
        let mut cur = vec![zero.clone(); len];
        for l in k..len - k {
            cur[l] = &prev[l + 1] - &alpha[k - 1] * &prev[l] - &beta[k - 1] * &prev2[l];
        }
        beta.push(&cur[k] / &prev[k - 1]);
        if 2 * k + 2 <= len {
            alpha.push(&cur[k + 1] / &cur[k] - &prev[k] / &prev[k - 1]);
        }
        prev2 = prev;
        prev = cur;
    }
    (alpha, beta)
}

/// Positive Gauss-type rule `Σⱼ wⱼ δ(t − tⱼ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasure {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    moment_count: usize,
    kind: StateKind,
    params: AlgebraParams,
    moment_residual: f64,
    condition: f64,
}

impl DiscreteMeasure {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Number of leading moments the rule was built to match.
    pub fn moment_count(&self) -> usize {
        self.moment_count
    }

    pub fn kind(&self) -> StateKind {
        self.kind
    }

    /// Largest relative mismatch `|Σ wⱼ tⱼⁿ − mₙ| / mₙ` over the matched range.
    pub fn moment_residual(&self) -> f64 {
        self.moment_residual
    }

    /// Ratio of the largest to the smallest node.
    pub fn condition(&self) -> f64 {
        self.condition
    }

    /// Same nodes with replaced weights.
    pub fn with_weights(&self, weights: Vec<f64>) -> Result<Self, MeasureError> {
        if weights.len() != self.nodes.len() || weights.iter().any(|&w| w.is_nan() || w <= 0.0) {
            return Err(MeasureError::InvalidMeasure);
        }
        Ok(Self { weights, ..self.clone() })
    }

    /// `Σⱼ wⱼ tⱼⁿ`.
    pub fn moment(&self, n: usize) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(t, w)| w * t.powi(n as i32)).sum()
    }
}

/// Gaussian rule with `⌈M/2⌉` nodes matching the moments.
///
/// For odd `M` the last recurrence coefficient is not determined by the
/// moments; it is set to twice the smallest value keeping every node
/// positive (that bound itself would put a node at `t = 0`).
pub fn solve_measure(moments: &MomentSequence) -> Result<DiscreteMeasure, MeasureError> {
    let mu = moments.values();
    if mu.is_empty() {
        return Err(MeasureError::Empty);
    }
    for (k, minor) in hankel_minors(mu).iter().enumerate() {
        if !minor.is_positive() {
            return Err(MeasureError::NotPositiveDefinite { order: k + 1, determinant: minor.to_string() });
        }
    }
    let m = mu.len().div_ceil(2);
    let (mut alpha, beta) = recurrence_from_moments(mu);

    // D_k = det of the leading k×k Jacobi block; all positive iff nodes > 0
    let mut dets = vec![BigRational::one()];
    let extend = |dets: &mut Vec<BigRational>, a: &BigRational, k: usize| {
        let next = if k == 0 { a.clone() } else { a * &dets[k] - &beta[k] * &dets[k - 1] };
        dets.push(next);
    };
    for (k, a) in alpha.iter().enumerate() {
        extend(&mut dets, a, k);
    }
    if alpha.len() < m {
        let k = m - 1;
        let free = if k == 0 {
            BigRational::one()
        } else {
            check_jacobi(&dets)?;
            let threshold = &beta[k] * &dets[k - 1] / &dets[k];
            threshold * BigRational::from_integer(2.into())
        };
        extend(&mut dets, &free, k);
        alpha.push(free);
    }
    check_jacobi(&dets)?;

    let a: Vec<f64> = alpha.iter().map(to_f64).collect();
    let b: Vec<f64> = beta.iter().map(to_f64).collect();
    let nodes = gauss_nodes(&a, &b);
    let weights: Vec<f64> = nodes.iter().map(|&t| christoffel_weight(&a, &b, t)).collect();
    let condition = nodes.last().unwrap() / nodes[0];

    let targets = moments.to_f64();
    let mut measure = DiscreteMeasure {
        nodes,
        weights,
        moment_count: mu.len(),
        kind: moments.kind(),
        params: moments.params().clone(),
        moment_residual: 0.0,
        condition,
    };
    measure.moment_residual = targets
        .iter()
        .enumerate()
        .map(|(n, &target)| ((measure.moment(n) - target) / target).abs())
        .fold(0.0, f64::max);
    if measure.moment_residual.is_nan()
        || measure.moment_residual > 1e-6
        || measure.nodes.iter().any(|&t| t.is_nan() || t <= 0.0)
    {
        return Err(MeasureError::Unstable { residual: measure.moment_residual, condition });
    }
    Ok(measure)
}

fn check_jacobi(dets: &[BigRational]) -> Result<(), MeasureError> {
    for (k, d) in dets.iter().enumerate().skip(1) {
        if !d.is_positive() {
            return Err(MeasureError::NotStieltjes { order: k, determinant: d.to_string() });
        }
    }
    Ok(())
}

/// Monic orthogonal polynomial `p_m` and its derivative at `t`.
fn monic_eval(a: &[f64], b: &[f64], t: f64) -> (f64, f64) {
    let (mut p_prev, mut p) = (0.0, 1.0);
    let (mut d_prev, mut d) = (0.0, 0.0);
    for k in 0..a.len() {
        let bk = if k == 0 { 0.0 } else { b[k] };
        let p_next = (t - a[k]) * p - bk * p_prev;
        let d_next = p + (t - a[k]) * d - bk * d_prev;
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
    }
    (p, d)
}

/// Eigenvalues of the Jacobi matrix, polished by Newton steps on `p_m`.
fn gauss_nodes(a: &[f64], b: &[f64]) -> Vec<f64> {
    let m = a.len();
    let jacobi = DMatrix::from_fn(m, m, |i, j| {
        if i == j {
            a[i]
        } else if i + 1 == j {
            b[j].sqrt()
        } else if j + 1 == i {
            b[i].sqrt()
        } else {
            0.0
        }
    });
    let mut nodes: Vec<f64> = SymmetricEigen::new(jacobi).eigenvalues.iter().copied().collect();
    nodes.sort_by(f64::total_cmp);
    for t in nodes.iter_mut() {
        for _ in 0..4 {
            let (p, dp) = monic_eval(a, b, *t);
            if dp == 0.0 || !p.is_finite() {
                break;
            }
            let next = *t - p / dp;
            if !next.is_finite() || (next - *t).abs() > 1e-6 * t.abs().max(1.0) {
                break;
            }
            *t = next;
        }
    }
    nodes
}

/// `w = 1 / Σ_k p̂_k(t)²` with orthonormal `p̂_k`.
fn christoffel_weight(a: &[f64], b: &[f64], t: f64) -> f64 {
    let mut p_prev = 0.0;
    let mut p = 1.0 / b[0].sqrt();
    let mut sum = p * p;
    for k in 0..a.len() - 1 {
        let bk = if k == 0 { 0.0 } else { b[k].sqrt() };
        let next = ((t - a[k]) * p - bk * p_prev) / b[k + 1].sqrt();
        p_prev = p;
        p = next;
        sum += p * p;
    }
    1.0 / sum
}

/// Largest deviation from 1 of the diagonal of
/// `Σⱼ wⱼ ⟨|z, φ⟩⟨z, φ|⟩_angle` at `|zⱼ|² = tⱼ` over the matched levels.
///
/// The angular average is exact: off-diagonal entries vanish and level `n`
/// collects `|aₙ|² tⱼⁿ` independently of `φ`.
pub fn verify_identity(
    params: &AlgebraParams,
    kind: StateKind,
    measure: &DiscreteMeasure,
    phi: f64,
) -> Result<f64, MeasureError> {
    verify_identity_levels(params, kind, measure, phi, measure.moment_count())
}

/// As [`verify_identity`] over the first `levels` levels.
pub fn verify_identity_levels(
    params: &AlgebraParams,
    kind: StateKind,
    measure: &DiscreteMeasure,
    phi: f64,
    levels: usize,
) -> Result<f64, MeasureError> {
    if !measure.params.same_algebra(params) || measure.kind != kind {
        return Err(MeasureError::Mismatch);
    }
    if !phi.is_finite() {
        return Err(MeasureError::Coherent(CoherentError::NonFinite));
    }
    if levels > measure.moment_count() {
        return Err(MeasureError::RangeMismatch { requested: levels, available: measure.moment_count() });
    }
    let mut worst: f64 = 0.0;
    for n in 0..levels {
        let weight = to_f64(&squared_weight(kind, params, n as u64)?);
        let diag = weight * measure.moment(n);
        worst = worst.max((diag - 1.0).abs());
    }
    Ok(worst)
}
