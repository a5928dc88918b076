//! Bargmann functions attached to Barut-Girardello states and the growth of
//! entire series.
//!
//! A vector `Σ fₙ|n⟩` is represented by
//! `f_φ(z) = Σ fₙ zⁿ e^{−iF(n)φ} / √(F(n)!)`, bounded by `|𝒩(z)|` through
//! Cauchy-Schwarz.  For κᵢ = 1/ℓᵢ the kernel coefficients `1/√(F(n)!)`
//! define an entire function of order `ρ = 2/(1+r)` and type
//! `σ = ((1+r)/2)(ℓ₁⋯ℓ_r)^{1/(1+r)}`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraParams, RepDimension};
use crate::coherent::{bg_normalization, CoherentError};
use crate::exec::Execution;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BargmannError {
    #[error("need at least {needed} nonzero coefficients, got {got}")]
    TooFewCoefficients { needed: usize, got: usize },
    #[error("series has vanishing coefficients in the fit window (polynomial input)")]
    Polynomial,
    #[error("coefficients do not decay like an entire function of finite order (fitted n log n slope {slope:e})")]
    NotFiniteOrder { slope: f64 },
    #[error("vector has squared norm {0}, expected 1 within 1e-12")]
    NotNormalized(f64),
    #[error("coefficient vector longer than the representation dimension {dim}")]
    TooLong { dim: usize },
    #[error("growth formulas need every kappa_i to be 0 or 1/l_i with l_i a positive integer")]
    NotReciprocalIntegers,
    #[error(transparent)]
    Coherent(#[from] CoherentError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `Σ cₙ zⁿ` described by `ln|cₙ|` (`-inf` for vanishing coefficients).
#[derive(Debug, Clone, PartialEq)]
pub struct EntireSeries {
    log_moduli: Vec<f64>,
    origin: String,
}

impl EntireSeries {
    pub fn from_log_moduli(log_moduli: Vec<f64>, origin: impl Into<String>) -> Self {
        Self { log_moduli, origin: origin.into() }
    }

    pub fn from_moduli(moduli: &[f64], origin: impl Into<String>) -> Self {
        Self::from_log_moduli(moduli.iter().map(|c| c.abs().ln()).collect(), origin)
    }

    /// Kernel `cₙ = 1/√(F(n)!)`, `n = 0..=n_max`.
    pub fn bg_kernel(params: &AlgebraParams, n_max: usize) -> Result<Self, BargmannError> {
        let logs = params.log_factorials(n_max + 1)?;
        Ok(Self::from_log_moduli(
            logs.iter().map(|l| -0.5 * l).collect(),
            format!("Barut-Girardello Bargmann kernel 1/sqrt(F(n)!) for {params}"),
        ))
    }

    pub fn log_moduli(&self) -> &[f64] {
        &self.log_moduli
    }

    pub fn origin(&self) -> &str {
        &self.origin
    }

    pub fn len(&self) -> usize {
        self.log_moduli.len()
    }

    pub fn is_empty(&self) -> bool {
        self.log_moduli.is_empty()
    }

    /// Trailing vanishing coefficients.
    pub fn is_polynomial(&self) -> bool {
        self.log_moduli.last().is_some_and(|l| *l == f64::NEG_INFINITY)
    }

    /// Same series scaled by a constant factor.
    pub fn scaled(&self, factor: f64) -> Self {
        let shift = factor.abs().ln();
        Self { log_moduli: self.log_moduli.iter().map(|l| l + shift).collect(), origin: self.origin.clone() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthEstimate {
    pub rho_hat: f64,
    pub sigma_hat: f64,
    /// Inclusive index range of the regression.
    pub fit_window: (usize, usize),
    /// RMS residual of the regression in `ln(1/|cₙ|)`.
    pub residual: f64,
    /// `−n ln n / ln|cₙ|` at the last index.
    pub raw_rho: f64,
    /// `n |cₙ|^{ρ/n} / (eρ)` at the last index, using `raw_rho`.
    pub raw_sigma: f64,
}

pub const MIN_GROWTH_COEFFS: usize = 200;

/// Order and type from a least-squares fit of
/// `ln(1/|cₙ|) ≈ (1/ρ) n ln n + β n + γ ln n + δ` over the upper half of the
/// indices; the model `|cₙ| ~ (eρσ/n)^{n/ρ}` gives `σ = e^{−βρ−1}/ρ`.
///
/// `γ` and `δ` absorb power-law and constant prefactors, so a constant
/// rescaling of the series leaves `ρ̂` and `σ̂` unchanged.
pub fn estimate_growth(series: &EntireSeries) -> Result<GrowthEstimate, BargmannError> {
    let logs = series.log_moduli();
    let nonzero = logs.iter().filter(|l| l.is_finite()).count();
    if nonzero < MIN_GROWTH_COEFFS {
        return Err(BargmannError::TooFewCoefficients { needed: MIN_GROWTH_COEFFS, got: nonzero });
    }
    let last = logs.len() - 1;
    let start = (last / 2).max(2);
    let window = &logs[start..=last];
    if window.iter().any(|l| !l.is_finite()) {
        return Err(BargmannError::Polynomial);
    }

    // regressors scaled to unit max for conditioning
    let rows = window.len();
    let nmax = last as f64;
    let scales = [nmax * nmax.ln(), nmax, nmax.ln(), 1.0];
    let design = DMatrix::from_fn(rows, 4, |i, j| {
        let n = (start + i) as f64;
        let v = match j {
            0 => n * n.ln(),
            1 => n,
            2 => n.ln(),
            _ => 1.0,
        };
        v / scales[j]
    });
    let y = DVector::from_iterator(rows, window.iter().map(|l| -l));
    let svd = design.clone().svd(true, true);
    let coef = svd.solve(&y, 1e-14).expect("SVD computed with both factors");
    let fitted = &design * &coef;
    let residual = ((&y - fitted).norm_squared() / rows as f64).sqrt();

    let slope = coef[0] / scales[0];
    let beta = coef[1] / scales[1];
    if slope.is_nan() || slope <= 1e-6 {
        return Err(BargmannError::NotFiniteOrder { slope });
    }
    let rho_hat = 1.0 / slope;
    let sigma_hat = (-beta * rho_hat - 1.0).exp() / rho_hat;

    let n = last as f64;
    let raw_rho = -n * n.ln() / logs[last];
    let raw_sigma = (n.ln() + raw_rho / n * logs[last] - 1.0).exp() / raw_rho;
    Ok(GrowthEstimate { rho_hat, sigma_hat, fit_window: (start, last), residual, raw_rho, raw_sigma })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormGrowth {
    pub rho: f64,
    pub sigma: f64,
}

/// `ρ = 2/(1+r)`, `σ = ((1+r)/2)(ℓ₁⋯ℓ_r)^{1/(1+r)}` for κᵢ = 1/ℓᵢ.
///
/// Vanishing κ's are the ℓ → ∞ limit and do not count towards `r`; with every
/// κ zero this gives the oscillator values `(2, 1/2)`.
pub fn closed_form_growth(params: &AlgebraParams) -> Result<ClosedFormGrowth, BargmannError> {
    if params.dimension().is_finite() {
        return Err(BargmannError::NotReciprocalIntegers);
    }
    let ells = params.reciprocal_ells().ok_or(BargmannError::NotReciprocalIntegers)?;
    let r = ells.len() as f64;
    let product: f64 = ells.iter().map(|&l| l as f64).product();
    Ok(ClosedFormGrowth { rho: 2.0 / (1.0 + r), sigma: (1.0 + r) / 2.0 * product.powf(1.0 / (1.0 + r)) })
}

/// `f_φ(z) = Σ fₙ zⁿ e^{−iF(n)φ} / √(F(n)!)`.
pub fn bargmann_eval(
    params: &AlgebraParams,
    f: &[Complex64],
    z: Complex64,
    phi: f64,
) -> Result<Complex64, BargmannError> {
    if let RepDimension::Finite(d) = params.dimension() {
        if f.len() > d {
            return Err(BargmannError::TooLong { dim: d });
        }
    }
    let mut kernel = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::zero();
    for (n, fnv) in f.iter().enumerate() {
        let level = params.level(n as u64);
        if n > 0 {
            kernel = kernel * z / level.sqrt();
        }
        sum += fnv * kernel * Complex64::from_polar(1.0, -level * phi);
    }
    Ok(sum)
}

/// `f_φ` on a grid of points.
pub fn bargmann_grid(
    params: &AlgebraParams,
    f: &[Complex64],
    grid: &[Complex64],
    phi: f64,
    exec: Execution,
) -> Result<Vec<Complex64>, BargmannError> {
    exec.try_map(grid, |&z| bargmann_eval(params, f, z, phi))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchwarzPoint {
    pub z: Complex64,
    /// `|f_φ(z)|`
    pub modulus: f64,
    /// `|𝒩(z)|`
    pub bound: f64,
}

impl SchwarzPoint {
    pub fn excess(&self) -> f64 {
        self.modulus - self.bound
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzReport {
    pub points: Vec<SchwarzPoint>,
    /// `max (|f_φ(z)| − |𝒩(z)|)` over the grid
    pub max_excess: f64,
}

/// Checks `|f_φ(z)| ≤ |𝒩(z)|` for a unit vector `f` on every grid point.
pub fn schwarz_check(
    params: &AlgebraParams,
    f: &[Complex64],
    grid: &[Complex64],
    phi: f64,
    exec: Execution,
) -> Result<SchwarzReport, BargmannError> {
    let norm: f64 = f.iter().map(|c| c.norm_sqr()).sum();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(BargmannError::NotNormalized(norm));
    }
    if params.reciprocal_ells().is_none() {
        return Err(BargmannError::NotReciprocalIntegers);
    }
    let points = exec.try_map(grid, |&z| -> Result<SchwarzPoint, BargmannError> {
        Ok(SchwarzPoint { z, modulus: bargmann_eval(params, f, z, phi)?.norm(), bound: bg_normalization(params, z)? })
    })?;
    let max_excess = points.iter().map(SchwarzPoint::excess).fold(f64::NEG_INFINITY, f64::max);
    Ok(SchwarzReport { points, max_excess })
}

/// Polar grid: the origin plus `radial × angular` points with radii up to
/// `radius`.
pub fn polar_grid(radius: f64, radial: usize, angular: usize) -> Vec<Complex64> {
    let mut grid = vec![Complex64::zero()];
    for i in 1..=radial {
        let rho = radius * i as f64 / radial as f64;
        for j in 0..angular {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / angular as f64;
            grid.push(Complex64::from_polar(rho, theta));
        }
    }
    grid
}
