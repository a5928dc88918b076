//! Perelomov and Barut-Girardello coherent states.
//!
//! Both families have the form `|z, φ⟩ = Σₙ aₙ zⁿ e^{−iF(n)φ} |n⟩` with
//!
//! * Perelomov: `aₙ = √(F(n)!) / n!`, i.e. `exp(z a⁺)|0⟩`;
//! * Barut-Girardello: `aₙ = 1 / √(F(n)!)`, eigenvectors of `a⁻`.
//!
//! In infinite dimension the series is cut once a ratio-test bound on the
//! neglected tail drops below the requested fraction of the accumulated norm.
//! Each state keeps its phase-free coefficients so that time evolution and
//! rebuilding at a shifted phase perform the same floating-point operations.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::algebra::{kappa_to_big, to_f64, AlgebraError, AlgebraParams, LadderRep, RepDimension};
use crate::special::hypergeometric_0f;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoherentError {
    #[error("Perelomov series in infinite dimension requires r = 1 (got r = {r}); it cannot be normalized otherwise")]
    PerelomovRank { r: usize },
    #[error("Perelomov series in infinite dimension requires |z| < 1/sqrt(kappa_1) = {radius}; got |z| = {modulus}")]
    PerelomovDisk { modulus: f64, radius: f64 },
    #[error(
        "no Barut-Girardello states with complex z exist in finite dimension {dim}; use the Grassmann construction"
    )]
    FiniteBarutGirardello { dim: usize },
    #[error("truncation order s = {s} is invalid here: {reason}")]
    Truncation { s: usize, reason: &'static str },
    #[error("series did not reach the tail tolerance within {max_terms} terms")]
    NotConverged { max_terms: usize },
    #[error("coefficients overflowed; |z| = {modulus} is too large for double precision")]
    Overflow { modulus: f64 },
    #[error("z and phi must be finite")]
    NonFinite,
    #[error("states belong to different algebras, kinds or phases")]
    Mismatch,
    #[error("ladder window {window} too small for a state of length {len}")]
    WindowTooSmall { window: usize, len: usize },
    #[error("normalization via 0F_r needs every kappa_i to be 0 or 1/l_i with l_i a positive integer")]
    NotReciprocalIntegers,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateKind {
    Perelomov,
    BarutGirardello,
}

impl StateKind {
    pub fn name(self) -> &'static str {
        match self {
            StateKind::Perelomov => "perelomov",
            StateKind::BarutGirardello => "barut-girardello",
        }
    }
}

/// Whether a coefficient vector is the whole state or a cut series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cutoff {
    /// Finite representation (or truncated algebra) of this dimension.
    Exact { dim: usize },
    /// Infinite series cut after `terms` coefficients; `tail_bound` bounds the
    /// neglected `Σ|cₙ|²` relative to the retained one.
    Truncated { terms: usize, tail_bound: f64 },
}

#[derive(Debug, Clone, Copy)]
pub struct SeriesOptions {
    /// Relative tail bound at which infinite series are cut.
    pub tail_tol: f64,
    pub max_terms: usize,
    pub normalize: bool,
    /// Work in the truncated algebra `A_{κ,s}` of an infinite representation.
    pub truncation: Option<usize>,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        Self { tail_tol: 1e-14, max_terms: 200_000, normalize: false, truncation: None }
    }
}

impl SeriesOptions {
    pub fn normalized() -> Self {
        Self { normalize: true, ..Self::default() }
    }
}

#[derive(Debug, Clone)]
pub struct CoherentState {
    kind: StateKind,
    params: AlgebraParams,
    z: Complex64,
    /// K · aₙ zⁿ, without the phase factor
    base: Vec<Complex64>,
    levels: Vec<f64>,
    coeffs: Vec<Complex64>,
    normalized: bool,
    cutoff: Cutoff,
}

impl CoherentState {
    pub fn kind(&self) -> StateKind {
        self.kind
    }

    /// Parameters, with `phi` equal to the state's phase.
    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn phi(&self) -> f64 {
        self.params.phi()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn cutoff(&self) -> Cutoff {
        self.cutoff
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Coefficients continued to `len` entries by the series recursion.  A
    /// state that is cut at its tail tolerance still contributes its tail to
    /// cross terms, which are bounded only by the square root of that
    /// tolerance.
    pub fn coeffs_extended(&self, len: usize) -> Vec<Complex64> {
        let mut out = self.coeffs.clone();
        if !matches!(self.cutoff, Cutoff::Truncated { .. }) {
            return out;
        }
        let mut last = *self.base.last().expect("series has a constant term");
        for n in self.base.len()..len {
            let level = self.params.level(n as u64);
            last = last * self.z * step(self.kind, n, level);
            out.push(last * Complex64::from_polar(1.0, -level * self.phi()));
        }
        out
    }

    fn phased(base: &[Complex64], levels: &[f64], phi: f64) -> Vec<Complex64> {
        base.iter().zip(levels).map(|(b, f)| b * Complex64::from_polar(1.0, -f * phi)).collect()
    }
}

/// `|z, φ⟩ = Σ √(F(n)!)/n! zⁿ e^{−iF(n)φ} |n⟩`.
///
/// In infinite dimension the series exists only for `r = 1` inside the open
/// disk `|z| < 1/√κ₁`; in finite dimension (`d`, or `s` via
/// [`SeriesOptions::truncation`]) for every `r` and every `z`.
pub fn perelomov_state(
    params: &AlgebraParams,
    z: Complex64,
    phi: f64,
    options: &SeriesOptions,
) -> Result<CoherentState, CoherentError> {
    build_state(StateKind::Perelomov, params, z, phi, options)
}

/// `|z, φ⟩ = Σ zⁿ/√(F(n)!) e^{−iF(n)φ} |n⟩`, defined on the whole plane for
/// every `r` in infinite dimension and for no nonzero complex `z` in finite
/// dimension.
pub fn bg_state(
    params: &AlgebraParams,
    z: Complex64,
    phi: f64,
    options: &SeriesOptions,
) -> Result<CoherentState, CoherentError> {
    build_state(StateKind::BarutGirardello, params, z, phi, options)
}

/// Dimension a state lives in once truncation has been taken into account.
pub(crate) fn effective_dimension(
    params: &AlgebraParams,
    truncation: Option<usize>,
) -> Result<RepDimension, CoherentError> {
    match (params.dimension(), truncation) {
        (dim, None) => Ok(dim),
        (RepDimension::Finite(_), Some(s)) => {
            Err(CoherentError::Truncation { s, reason: "the representation is already finite" })
        }
        (RepDimension::Infinite, Some(s)) if s < 1 => {
            Err(CoherentError::Truncation { s, reason: "s must be at least 1" })
        }
        (RepDimension::Infinite, Some(s)) => Ok(RepDimension::Finite(s)),
    }
}

/// Rejects exactly the parameter/z combinations for which the requested
/// family does not exist.
pub fn check_existence(
    kind: StateKind,
    params: &AlgebraParams,
    z: Complex64,
    truncation: Option<usize>,
) -> Result<RepDimension, CoherentError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(CoherentError::NonFinite);
    }
    let dim = effective_dimension(params, truncation)?;
    match (kind, dim) {
        (StateKind::Perelomov, RepDimension::Infinite) => {
            if params.r() != 1 {
                return Err(CoherentError::PerelomovRank { r: params.r() });
            }
            let kappa = params.kappas()[0];
            // exact test of κ|z|² < 1 on the binary values of z
            let re = BigRational::from_float(z.re).expect("finite");
            let im = BigRational::from_float(z.im).expect("finite");
            let k = kappa_to_big(&kappa);
            if (&re * &re + &im * &im) * &k >= BigRational::one() {
                let kf = to_f64(&k);
                return Err(CoherentError::PerelomovDisk { modulus: z.norm(), radius: 1.0 / kf.sqrt() });
            }
        }
        (StateKind::BarutGirardello, RepDimension::Finite(d)) => {
            return Err(CoherentError::FiniteBarutGirardello { dim: d });
        }
        _ => {}
    }
    Ok(dim)
}

fn build_state(
    kind: StateKind,
    params: &AlgebraParams,
    z: Complex64,
    phi: f64,
    options: &SeriesOptions,
) -> Result<CoherentState, CoherentError> {
    if !phi.is_finite() {
        return Err(CoherentError::NonFinite);
    }
    let dim = check_existence(kind, params, z, options.truncation)?;
    let (mut base, levels, cutoff) = match dim {
        RepDimension::Finite(d) => {
            let levels = params.levels(d);
            let base = finite_series(kind, &levels, z);
            (base, levels, Cutoff::Exact { dim: d })
        }
        RepDimension::Infinite => infinite_series(kind, params, z, options)?,
    };
    if base.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(CoherentError::Overflow { modulus: z.norm() });
    }
    if options.normalize {
        let norm = base.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if !norm.is_finite() {
            return Err(CoherentError::Overflow { modulus: z.norm() });
        }
        for c in &mut base {
            *c /= norm;
        }
    }
    let coeffs = CoherentState::phased(&base, &levels, phi);
    Ok(CoherentState {
        kind,
        params: params.with_phi(phi),
        z,
        base,
        levels,
        coeffs,
        normalized: options.normalize,
        cutoff,
    })
}

/// Ratio `aₙ / aₙ₋₁` of the phase-free coefficients (without the z factor).
fn step(kind: StateKind, n: usize, level: f64) -> f64 {
    match kind {
        StateKind::Perelomov => level.sqrt() / n as f64,
        StateKind::BarutGirardello => 1.0 / level.sqrt(),
    }
}

fn finite_series(kind: StateKind, levels: &[f64], z: Complex64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(levels.len());
    let mut c = Complex64::one();
    out.push(c);
    for (n, &f) in levels.iter().enumerate().skip(1) {
        c = c * z * step(kind, n, f);
        out.push(c);
    }
    out
}

fn infinite_series(
    kind: StateKind,
    params: &AlgebraParams,
    z: Complex64,
    options: &SeriesOptions,
) -> Result<(Vec<Complex64>, Vec<f64>, Cutoff), CoherentError> {
    let z2 = z.norm_sqr();
    // limit of the squared term ratio (Perelomov, r = 1 only)
    let limit = match kind {
        StateKind::Perelomov => to_f64(&kappa_to_big(&params.kappas()[0])) * z2,
        StateKind::BarutGirardello => 0.0,
    };
    let mut base = vec![Complex64::one()];
    let mut levels = vec![0.0];
    let mut partial = 1.0;
    let mut next_level = params.level(1);
    loop {
        let n = base.len() - 1;
        let last = base[n];
        // squared ratio |c_{n+1}|²/|c_n|²; monotone in n, so the sup over the
        // tail is max(current, limit)
        let ratio = match kind {
            StateKind::Perelomov => z2 * next_level / ((n + 1) as f64).powi(2),
            StateKind::BarutGirardello => z2 / next_level,
        };
        let sup = ratio.max(limit);
        if sup < 1.0 {
            let tail = last.norm_sqr() * sup / (1.0 - sup);
            if tail <= options.tail_tol * partial {
                let terms = base.len();
                return Ok((base, levels, Cutoff::Truncated { terms, tail_bound: tail / partial }));
            }
        }
        if base.len() >= options.max_terms {
            return Err(CoherentError::NotConverged { max_terms: options.max_terms });
        }
        let c = last * z * step(kind, n + 1, next_level);
        if !c.re.is_finite() || !c.im.is_finite() {
            return Err(CoherentError::Overflow { modulus: z.norm() });
        }
        partial += c.norm_sqr();
        base.push(c);
        levels.push(next_level);
        next_level = params.level(n as u64 + 2);
    }
}

/// `exp(z a⁺)|0⟩` computed from the matrix of `a⁺` in a finite
/// representation, where the exponential series stops after `d` terms.
pub fn perelomov_via_exponential(rep: &LadderRep, z: Complex64, phi: f64) -> Result<CoherentState, CoherentError> {
    let params = rep.params();
    let d = match (params.dimension(), rep.truncation_order()) {
        (RepDimension::Finite(d), _) => d,
        (RepDimension::Infinite, Some(s)) => s,
        (RepDimension::Infinite, None) => {
            return Err(CoherentError::Truncation {
                s: 0,
                reason: "the exponential route needs a finite representation",
            })
        }
    };
    if (rep.params().phi() - phi).abs() > 0.0 {
        return Err(CoherentError::Mismatch);
    }
    let m = rep.window();
    let x = rep.raise() * z;
    // Σ_k (z a⁺)^k / k! applied to |0⟩, accumulated column by column
    let mut term = DMatrix::<Complex64>::zeros(m, 1);
    term[(0, 0)] = Complex64::one();
    let mut acc = term.clone();
    for k in 1..d {
        term = (&x * term).unscale(k as f64);
        acc += &term;
    }
    let coeffs: Vec<Complex64> = acc.iter().take(d).copied().collect();
    let levels = params.levels(d);
    let base = CoherentState::phased(&coeffs, &levels, -phi);
    Ok(CoherentState {
        kind: StateKind::Perelomov,
        params: params.clone(),
        z,
        base,
        levels,
        coeffs,
        normalized: false,
        cutoff: Cutoff::Exact { dim: d },
    })
}

/// Outcome of testing `a⁻|ψ⟩ = z|ψ⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenCheck {
    /// `‖a⁻c − zc‖ / ‖c‖` over the rows unaffected by truncation.
    pub residual: f64,
    pub rows: usize,
}

impl EigenCheck {
    pub const TOLERANCE: f64 = 1e-10;

    pub fn is_eigenvector(&self) -> bool {
        self.residual <= Self::TOLERANCE
    }
}

/// Residual of the lowering-operator eigenvalue equation for `state`.
///
/// For a cut infinite series the last retained row is excluded, since it
/// would need the first dropped coefficient; the ladder window must therefore
/// exceed the state length.
pub fn check_bg_eigen(state: &CoherentState, rep: &LadderRep) -> Result<EigenCheck, CoherentError> {
    if !state.params().same_algebra(rep.params()) || state.phi() != rep.params().phi() {
        return Err(CoherentError::Mismatch);
    }
    let len = state.len();
    let rows = match state.cutoff() {
        Cutoff::Exact { .. } => {
            if rep.window() < len {
                return Err(CoherentError::WindowTooSmall { window: rep.window(), len });
            }
            len
        }
        Cutoff::Truncated { .. } => {
            if rep.window() < len + 1 {
                return Err(CoherentError::WindowTooSmall { window: rep.window(), len });
            }
            len - 1
        }
    };
    let lowered = rep.apply_lower(state.coeffs());
    let z = state.z();
    let diff: f64 = (0..rows).map(|n| (lowered[n] - z * state.coeffs()[n]).norm_sqr()).sum();
    let norm = state.norm_sqr().sqrt();
    Ok(EigenCheck { residual: diff.sqrt() / norm, rows })
}

/// Evolution under `H = F(N)`: `e^{−iHt}|z, φ⟩ = |z, φ + t⟩`.
pub fn time_evolve(state: &CoherentState, t: f64) -> CoherentState {
    let phi = state.phi() + t;
    CoherentState {
        coeffs: CoherentState::phased(&state.base, &state.levels, phi),
        params: state.params.with_phi(phi),
        ..state.clone()
    }
}

/// Applies `e^{−iF(N)t}` to an arbitrary coefficient vector.
pub fn apply_evolution(params: &AlgebraParams, coeffs: &[Complex64], t: f64) -> Vec<Complex64> {
    coeffs.iter().enumerate().map(|(n, c)| c * Complex64::from_polar(1.0, -params.level(n as u64) * t)).collect()
}

/// `⟨s1|s2⟩` for states of the same algebra, family and phase.
pub fn overlap(s1: &CoherentState, s2: &CoherentState) -> Result<Complex64, CoherentError> {
    if s1.phi() != s2.phi() {
        return Err(CoherentError::Mismatch);
    }
    overlap_unchecked(s1, s2)
}

/// `⟨s1|s2⟩` without requiring equal phases.
pub fn overlap_unchecked(s1: &CoherentState, s2: &CoherentState) -> Result<Complex64, CoherentError> {
    if !s1.params().same_algebra(s2.params()) || s1.kind() != s2.kind() {
        return Err(CoherentError::Mismatch);
    }
    let len = s1.len().max(s2.len());
    let (c1, c2) = (s1.coeffs_extended(len), s2.coeffs_extended(len));
    Ok(c1.iter().zip(&c2).map(|(a, b)| a.conj() * b).sum())
}

/// `|𝒩| = √₀F_r(ℓ₁, …, ℓ_r; ℓ₁⋯ℓ_r |z|²)` for κᵢ = 1/ℓᵢ.  Zero κ's enter as
/// the ℓ → ∞ limit and drop out of the hypergeometric function.
pub fn bg_normalization(params: &AlgebraParams, z: Complex64) -> Result<f64, CoherentError> {
    if params.dimension().is_finite() {
        return Err(CoherentError::NotReciprocalIntegers);
    }
    let ells = params.reciprocal_ells().ok_or(CoherentError::NotReciprocalIntegers)?;
    let b: Vec<f64> = ells.iter().map(|&l| l as f64).collect();
    let scale: f64 = b.iter().product();
    Ok(hypergeometric_0f(&b, scale * z.norm_sqr()).sqrt())
}

/// Empirical Lipschitz constant `‖ψ(z + δ) − ψ(z)‖ / |δ|` of the unnormalized
/// coefficient map, probing along `direction`.
pub fn continuity_probe(
    kind: StateKind,
    params: &AlgebraParams,
    z: Complex64,
    phi: f64,
    delta: Complex64,
    options: &SeriesOptions,
) -> Result<f64, CoherentError> {
    let a = build_state(kind, params, z, phi, options)?;
    let b = build_state(kind, params, z + delta, phi, options)?;
    let n = a.len().max(b.len());
    let get = |s: &CoherentState, i: usize| s.coeffs().get(i).copied().unwrap_or_default();
    let dist: f64 = (0..n).map(|i| (get(&a, i) - get(&b, i)).norm_sqr()).sum::<f64>().sqrt();
    Ok(dist / delta.norm())
}

/// Partial sums `Σ_{n≤N}|aₙ zⁿ|²` of the infinite Perelomov series for
/// `N = 0..terms`, computed in log space.  For `r ≥ 2` they grow without
/// bound for every `z ≠ 0`, which is why no state is built there.
pub fn perelomov_partial_norms(params: &AlgebraParams, z: Complex64, terms: usize) -> Result<Vec<f64>, CoherentError> {
    let logf = params.log_factorials(terms)?;
    let lz = z.norm_sqr().ln();
    let mut log_fact = 0.0;
    let mut acc = 0.0f64;
    Ok((0..terms)
        .map(|n| {
            if n > 0 {
                log_fact += (n as f64).ln();
            }
            let log_term = logf[n] - 2.0 * log_fact + if n == 0 { 0.0 } else { n as f64 * lz };
            acc += log_term.exp();
            acc
        })
        .collect())
}

/// `|aₙ|²` for the given family: `F(n)!/(n!)²` or `1/F(n)!`, exact.
pub fn squared_weight(kind: StateKind, params: &AlgebraParams, n: u64) -> Result<BigRational, CoherentError> {
    let ff = params.generalized_factorial(n)?;
    Ok(match kind {
        StateKind::Perelomov => {
            let nf: BigInt = (1..=n).map(BigInt::from).product();
            ff / BigRational::from_integer(&nf * &nf)
        }
        // F(n)! > 0 on every admissible level
        StateKind::BarutGirardello => ff.recip(),
    })
}
