//! One-variable generalized Grassmann algebra `ℂ[θ]/(θ^dim)` and the
//! finite-dimensional Barut-Girardello states
//! `|θ, φ⟩ = Σ_{n<dim} θⁿ e^{−iF(n)φ} / √(F(n)!) |n⟩`.

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraParams, LadderRep, RepDimension};
use crate::coherent::{effective_dimension, CoherentError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GrassmannError {
    #[error("nilpotency orders differ: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("nilpotency order must be at least 1")]
    ZeroDim,
    #[error("Grassmann states need a finite representation or a truncated algebra")]
    InfiniteDimension,
    #[error("ladder representation does not match the state (window {window}, state dim {dim})")]
    RepMismatch { window: usize, dim: usize },
    #[error(transparent)]
    Coherent(#[from] CoherentError),
}

/// `g₀ + g₁θ + ⋯ + g_{dim−1}θ^{dim−1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct GrassmannElement {
    comps: Vec<Complex64>,
}

impl GrassmannElement {
    pub fn new(comps: Vec<Complex64>) -> Result<Self, GrassmannError> {
        if comps.is_empty() {
            return Err(GrassmannError::ZeroDim);
        }
        Ok(Self { comps })
    }

    pub fn zero(dim: usize) -> Self {
        Self { comps: vec![Complex64::zero(); dim.max(1)] }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(dim, 0, Complex64::one())
    }

    /// The nilpotent generator θ.
    pub fn theta(dim: usize) -> Self {
        Self::monomial(dim, 1, Complex64::one())
    }

    /// `c θᵏ`; zero once `k ≥ dim`.
    pub fn monomial(dim: usize, k: usize, c: Complex64) -> Self {
        let mut g = Self::zero(dim);
        if k < g.dim() {
            g.comps[k] = c;
        }
        g
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[Complex64] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    fn same_dim(&self, other: &Self) -> Result<(), GrassmannError> {
        if self.dim() != other.dim() {
            return Err(GrassmannError::DimMismatch(self.dim(), other.dim()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, GrassmannError> {
        self.same_dim(other)?;
        Ok(Self { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GrassmannError> {
        self.same_dim(other)?;
        Ok(Self { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect() })
    }

    /// Truncated convolution: every product landing on θ^{≥dim} vanishes.
    pub fn mul(&self, other: &Self) -> Result<Self, GrassmannError> {
        self.same_dim(other)?;
        let dim = self.dim();
        let mut comps = vec![Complex64::zero(); dim];
        for (i, a) in self.comps.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.comps.iter().take(dim - i).enumerate() {
                comps[i + j] += a * b;
            }
        }
        Ok(Self { comps })
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { comps: self.comps.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.dim());
        for _ in 0..k {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }

    /// Left multiplication by θ: shifts every component up one degree.
    pub fn shift(&self) -> Self {
        let mut comps = vec![Complex64::zero(); self.dim()];
        comps[1..].copy_from_slice(&self.comps[..self.dim() - 1]);
        Self { comps }
    }

    /// Value of the polynomial at a complex number in place of θ.
    pub fn substitute(&self, z: Complex64) -> Complex64 {
        self.comps.iter().rev().fold(Complex64::zero(), |acc, c| acc * z + c)
    }

    pub fn max_abs(&self) -> f64 {
        self.comps.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.comps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match k {
                0 => format!("({c})"),
                1 => format!("({c})θ"),
                _ => format!("({c})θ^{k}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `|θ, φ⟩` with algebra-valued coefficients.
#[derive(Debug, Clone)]
pub struct GrassmannState {
    params: AlgebraParams,
    coeffs: Vec<GrassmannElement>,
}

impl GrassmannState {
    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn phi(&self) -> f64 {
        self.params.phi()
    }

    pub fn coeffs(&self) -> &[GrassmannElement] {
        &self.coeffs
    }

    /// Replaces θ by a complex number, giving an ordinary vector.
    pub fn substitute(&self, z: Complex64) -> Vec<Complex64> {
        self.coeffs.iter().map(|g| g.substitute(z)).collect()
    }
}

/// Barut-Girardello state in dimension `d` (finite representation) or `s`
/// (truncated algebra of an infinite one).
pub fn bg_grassmann_state(
    params: &AlgebraParams,
    phi: f64,
    truncation: Option<usize>,
) -> Result<GrassmannState, GrassmannError> {
    let dim = match effective_dimension(params, truncation)? {
        RepDimension::Finite(d) => d,
        RepDimension::Infinite => return Err(GrassmannError::InfiniteDimension),
    };
    let levels = params.levels(dim);
    let mut weight = 1.0;
    let coeffs = levels
        .iter()
        .enumerate()
        .map(|(n, &f)| {
            if n > 0 {
                weight /= f.sqrt();
            }
            GrassmannElement::monomial(dim, n, Complex64::from_polar(weight, -f * phi))
        })
        .collect();
    Ok(GrassmannState { params: params.with_phi(phi), coeffs })
}

/// Rows of `a⁻` restricted to the state's dimension.  A truncated
/// representation of order `s = dim` carries no transitions above `dim`, so
/// its leading block is the operator on the truncated space.
fn check_rep(rep: &LadderRep, dim: usize, params: &AlgebraParams) -> Result<(), GrassmannError> {
    let fits = rep.window() == dim || rep.truncation_order() == Some(dim);
    if !fits || !rep.params().same_algebra(params) || rep.params().phi() != params.phi() {
        return Err(GrassmannError::RepMismatch { window: rep.window(), dim });
    }
    Ok(())
}

/// Largest component modulus of `a⁻|θ, φ⟩ − θ|θ, φ⟩`.
pub fn check_bg_grassmann_eigen(state: &GrassmannState, rep: &LadderRep) -> Result<f64, GrassmannError> {
    let dim = state.dim();
    check_rep(rep, dim, state.params())?;
    let mut worst: f64 = 0.0;
    for n in 0..dim {
        let lowered =
            if n + 1 < dim { state.coeffs[n + 1].scale(rep.lower()[(n, n + 1)]) } else { GrassmannElement::zero(dim) };
        let shifted = state.coeffs[n].shift();
        worst = worst.max(lowered.sub(&shifted)?.max_abs());
    }
    Ok(worst)
}

/// `‖a⁻ψ − zψ‖/‖ψ‖` for the Grassmann state with θ replaced by a complex
/// `z`; nonzero for every `z ≠ 0` because nothing lowers into `|dim − 1⟩`.
pub fn complex_substitution_residual(
    state: &GrassmannState,
    rep: &LadderRep,
    z: Complex64,
) -> Result<f64, GrassmannError> {
    let dim = state.dim();
    check_rep(rep, dim, state.params())?;
    let psi = state.substitute(z);
    let mut diff = 0.0;
    for n in 0..dim {
        let lowered = if n + 1 < dim { rep.lower()[(n, n + 1)] * psi[n + 1] } else { Complex64::zero() };
        diff += (lowered - z * psi[n]).norm_sqr();
    }
    let norm: f64 = psi.iter().map(|c| c.norm_sqr()).sum();
    Ok((diff / norm).sqrt())
}
