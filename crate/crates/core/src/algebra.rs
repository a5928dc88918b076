//! Polynomial Weyl-Heisenberg algebras `A_{κ}`.
//!
//! The algebra is generated by `a⁻`, `a⁺` and `N` with
//! `[a⁻, a⁺] = G(N) = F(N+1) − F(N)` and the structure function
//! `F(N) = N ∏ᵢ [1 + κᵢ(N − 1)]`.  Scalar quantities (`F`, `G`, `F(n)!`) are
//! computed in exact rational arithmetic; ladder matrices use `Complex64`.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// A single deformation parameter κᵢ, stored as an exact integer ratio.
pub type Kappa = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("at least one deformation parameter is required (r >= 1)")]
    NoParameters,
    #[error("kappa {index} has a zero denominator")]
    ZeroDenominator { index: usize },
    #[error("phase parameter must be finite, got {0}")]
    NonFinitePhase(f64),
    #[error("kappa_1 = {kappa} is negative but -1/kappa_1 is not a positive integer")]
    NonIntegralDimension { kappa: Kappa },
    #[error("kappa_{index} = {kappa} is negative; only kappa_1 may be negative")]
    UnsupportedSignPattern { index: usize, kappa: Kappa },
    #[error("level {n} is outside the representation of dimension {dim}")]
    LevelOutOfRange { n: u64, dim: usize },
    #[error("finite representation needs window = {dim}, got {window}")]
    WindowMismatch { window: usize, dim: usize },
    #[error("window must be at least 1")]
    EmptyWindow,
    #[error("truncation requires an infinite-dimensional representation")]
    TruncationOfFinite,
    #[error("truncation order s = {s} must satisfy 1 <= s < window = {window}")]
    TruncationOrder { s: usize, window: usize },
}

/// Dimension of the Fock-Hilbert space carrying the representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepDimension {
    Infinite,
    Finite(usize),
}

impl RepDimension {
    pub fn is_finite(self) -> bool {
        matches!(self, RepDimension::Finite(_))
    }
}

impl fmt::Display for RepDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepDimension::Infinite => write!(f, "infinite"),
            RepDimension::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// The r parameters κᵢ together with the phase φ.
///
/// Construction validates the sign pattern: either every κᵢ ≥ 0 (infinite
/// representation) or κ₁ < 0 with −1/κ₁ a positive integer and the others
/// nonnegative (finite representation of dimension `d = 1 − 1/κ₁`).
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraParams {
    kappas: Vec<Kappa>,
    phi: f64,
    dimension: RepDimension,
}

impl AlgebraParams {
    pub fn new(kappas: Vec<Kappa>, phi: f64) -> Result<Self, AlgebraError> {
        if kappas.is_empty() {
            return Err(AlgebraError::NoParameters);
        }
        if !phi.is_finite() {
            return Err(AlgebraError::NonFinitePhase(phi));
        }
        for (index, k) in kappas.iter().enumerate().skip(1) {
            if k.is_negative() {
                return Err(AlgebraError::UnsupportedSignPattern { index: index + 1, kappa: *k });
            }
        }
        let k1 = kappas[0];
        let dimension = if k1.is_negative() {
            // -1/κ₁ = -q/p must be a positive integer
            let inv = -k1.recip();
            if !inv.is_integer() {
                return Err(AlgebraError::NonIntegralDimension { kappa: k1 });
            }
            RepDimension::Finite(1 + inv.to_integer() as usize)
        } else {
            RepDimension::Infinite
        };
        Ok(Self { kappas, phi, dimension })
    }

    /// Builds parameters from `(numerator, denominator)` pairs.
    pub fn from_pairs(pairs: &[(i64, i64)], phi: f64) -> Result<Self, AlgebraError> {
        let mut kappas = Vec::with_capacity(pairs.len());
        for (index, &(p, q)) in pairs.iter().enumerate() {
            if q == 0 {
                return Err(AlgebraError::ZeroDenominator { index: index + 1 });
            }
            kappas.push(Ratio::new(p, q));
        }
        Self::new(kappas, phi)
    }

    /// The oscillator algebra `h₄` (κ₁ = 0).
    pub fn oscillator(phi: f64) -> Self {
        Self::new(vec![Kappa::zero()], phi).expect("oscillator parameters are valid")
    }

    /// Parameters κᵢ = 1/ℓᵢ.
    pub fn from_ells(ells: &[u64], phi: f64) -> Result<Self, AlgebraError> {
        let pairs: Vec<_> = ells.iter().map(|&l| (1, l as i64)).collect();
        Self::from_pairs(&pairs, phi)
    }

    /// Finite-dimensional parameters with κ₁ = −1/(d − 1) followed by `extra`.
    pub fn finite(d: usize, extra: &[Kappa], phi: f64) -> Result<Self, AlgebraError> {
        let mut kappas = vec![Ratio::new(-1, d as i64 - 1)];
        kappas.extend_from_slice(extra);
        Self::new(kappas, phi)
    }

    pub fn kappas(&self) -> &[Kappa] {
        &self.kappas
    }

    pub fn r(&self) -> usize {
        self.kappas.len()
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn with_phi(&self, phi: f64) -> Self {
        Self { phi, ..self.clone() }
    }

    /// Same algebra (equal κ's), regardless of phase.
    pub fn same_algebra(&self, other: &Self) -> bool {
        self.kappas == other.kappas
    }

    pub fn dimension(&self) -> RepDimension {
        self.dimension
    }

    /// `F(n) = n ∏ᵢ [1 + κᵢ(n − 1)]`, exact.
    pub fn structure_function(&self, n: u64) -> BigRational {
        let n_big = BigInt::from(n);
        let mut num = n_big.clone();
        let mut den = BigInt::one();
        for k in &self.kappas {
            let (p, q) = (BigInt::from(*k.numer()), BigInt::from(*k.denom()));
            // 1 + (p/q)(n-1) = (q + p(n-1)) / q
            num *= &q + &p * (&n_big - 1);
            den *= q;
        }
        BigRational::new(num, den)
    }

    /// `G(n) = F(n+1) − F(n)`, exact.
    pub fn commutator_gap(&self, n: u64) -> BigRational {
        self.structure_function(n + 1) - self.structure_function(n)
    }

    /// `F(n)! = F(1) F(2) ⋯ F(n)` with `F(0)! = 1`.
    ///
    /// In a finite representation of dimension `d` only `n ≤ d − 1` is
    /// admissible.
    pub fn generalized_factorial(&self, n: u64) -> Result<BigRational, AlgebraError> {
        self.check_level(n)?;
        Ok((1..=n).fold(BigRational::one(), |acc, k| acc * self.structure_function(k)))
    }

    fn check_level(&self, n: u64) -> Result<(), AlgebraError> {
        match self.dimension {
            RepDimension::Finite(d) if n >= d as u64 => Err(AlgebraError::LevelOutOfRange { n, dim: d }),
            _ => Ok(()),
        }
    }

    /// `F(n)` as a double.
    pub fn level(&self, n: u64) -> f64 {
        to_f64(&self.structure_function(n))
    }

    /// `F(0), …, F(count − 1)` as doubles.
    pub fn levels(&self, count: usize) -> Vec<f64> {
        (0..count as u64).map(|n| self.level(n)).collect()
    }

    /// `ln F(n)!` for `n = 0..count`, accumulated from `ln F(k)` so that it
    /// stays finite far beyond where `F(n)!` overflows a double.
    pub fn log_factorials(&self, count: usize) -> Result<Vec<f64>, AlgebraError> {
        if count > 0 {
            self.check_level(count as u64 - 1)?;
        }
        let mut out = Vec::with_capacity(count);
        let mut acc = 0.0;
        for n in 0..count as u64 {
            if n > 0 {
                acc += self.log_level(n);
            }
            out.push(acc);
        }
        Ok(out)
    }

    fn log_level(&self, n: u64) -> f64 {
        let nf = n as f64;
        let mut acc = nf.ln();
        for k in &self.kappas {
            let (p, q) = (*k.numer() as f64, *k.denom() as f64);
            acc += (q + p * (nf - 1.0)).ln() - q.ln();
        }
        acc
    }

    /// The integers ℓᵢ when every nonzero κᵢ equals 1/ℓᵢ.  Zero κ's are the
    /// ℓ → ∞ limit and are dropped.
    pub fn reciprocal_ells(&self) -> Option<Vec<u64>> {
        let mut ells = Vec::new();
        for k in &self.kappas {
            if k.is_zero() {
                continue;
            }
            if *k.numer() != 1 || *k.denom() <= 0 {
                return None;
            }
            ells.push(*k.denom() as u64);
        }
        Some(ells)
    }
}

impl fmt::Display for AlgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.kappas.iter().map(|k| k.to_string()).collect();
        write!(f, "kappa=[{}], phi={}", ks.join(", "), self.phi)
    }
}

/// A κ as an arbitrary-precision rational.
pub fn kappa_to_big(k: &Kappa) -> BigRational {
    BigRational::new(BigInt::from(*k.numer()), BigInt::from(*k.denom()))
}

/// Nearest double to an exact rational (NaN if it does not fit).
pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Matrices of `a⁻`, `a⁺` and `N` on the basis window `|0⟩ … |m−1⟩`.
#[derive(Debug, Clone)]
pub struct LadderRep {
    params: AlgebraParams,
    lower: DMatrix<Complex64>,
    raise: DMatrix<Complex64>,
    number: DVector<f64>,
    truncation: Option<usize>,
}

impl LadderRep {
    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn window(&self) -> usize {
        self.number.len()
    }

    pub fn lower(&self) -> &DMatrix<Complex64> {
        &self.lower
    }

    pub fn raise(&self) -> &DMatrix<Complex64> {
        &self.raise
    }

    /// Diagonal of `N`.
    pub fn number(&self) -> &DVector<f64> {
        &self.number
    }

    pub fn number_matrix(&self) -> DMatrix<Complex64> {
        DMatrix::from_diagonal(&self.number.map(|x| Complex64::new(x, 0.0)))
    }

    pub fn truncation_order(&self) -> Option<usize> {
        self.truncation
    }

    /// `[a⁻, a⁺]` on the window.
    pub fn commutator(&self) -> DMatrix<Complex64> {
        &self.lower * &self.raise - &self.raise * &self.lower
    }

    /// `a⁺ a⁻`.
    pub fn raise_lower(&self) -> DMatrix<Complex64> {
        &self.raise * &self.lower
    }

    /// `a⁻ v` for a vector given in the window basis.
    pub fn apply_lower(&self, v: &[Complex64]) -> Vec<Complex64> {
        let m = self.window();
        (0..m)
            .map(|row| {
                if row + 1 < m && row + 1 < v.len() {
                    self.lower[(row, row + 1)] * v[row + 1]
                } else {
                    Complex64::zero()
                }
            })
            .collect()
    }
}

/// Builds the ladder matrices
/// `a⁻|n⟩ = √F(n) e^{+i[F(n) − F(n−1)]φ} |n−1⟩` and `a⁺ = (a⁻)†`.
///
/// For a finite representation `window` must equal `d`; for an infinite one it
/// is a cutoff and the last row/column of products carries truncation
/// artifacts.
pub fn build_rep(params: &AlgebraParams, window: usize) -> Result<LadderRep, AlgebraError> {
    if window == 0 {
        return Err(AlgebraError::EmptyWindow);
    }
    if let RepDimension::Finite(d) = params.dimension() {
        if window != d {
            return Err(AlgebraError::WindowMismatch { window, dim: d });
        }
    }
    Ok(assemble(params, window, window))
}

/// Pegg-Barnett truncated operators `a^±(s)`: the ladder matrices with every
/// transition between `|n−1⟩` and `|n⟩` removed for `n ≥ s`, kept on the full
/// window so the rank-one correction in the commutator is visible.
pub fn build_truncated_rep(params: &AlgebraParams, window: usize, s: usize) -> Result<LadderRep, AlgebraError> {
    if params.dimension().is_finite() {
        return Err(AlgebraError::TruncationOfFinite);
    }
    if s == 0 || s >= window {
        return Err(AlgebraError::TruncationOrder { s, window });
    }
    let mut rep = assemble(params, window, s);
    rep.truncation = Some(s);
    Ok(rep)
}

fn assemble(params: &AlgebraParams, window: usize, transitions_below: usize) -> LadderRep {
    let phi = params.phi();
    let mut lower = DMatrix::<Complex64>::zeros(window, window);
    for n in 1..transitions_below.min(window) {
        let f = params.structure_function(n as u64);
        let gap = to_f64(&(&f - params.structure_function(n as u64 - 1)));
        lower[(n - 1, n)] = Complex64::from_polar(to_f64(&f).sqrt(), gap * phi);
    }
    let raise = lower.adjoint();
    let number = DVector::from_iterator(window, (0..window).map(|n| n as f64));
    LadderRep { params: params.clone(), lower, raise, number, truncation: None }
}
