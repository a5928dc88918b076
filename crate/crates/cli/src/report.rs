//! Artifacts written by the commands.  Every report re-parses from its own
//! JSON; the CSV form is the report's main table.

use polyweyl::{AlgebraParams, Complex64, RepDimension};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamsReport {
    /// Exact κᵢ as `p/q` strings.
    pub kappas: Vec<String>,
    pub phi: f64,
    /// `None` for an infinite-dimensional representation.
    pub dimension: Option<usize>,
}

impl From<&AlgebraParams> for ParamsReport {
    fn from(p: &AlgebraParams) -> Self {
        Self {
            kappas: p.kappas().iter().map(|k| k.to_string()).collect(),
            phi: p.phi(),
            dimension: match p.dimension() {
                RepDimension::Finite(d) => Some(d),
                RepDimension::Infinite => None,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub n: u64,
    pub f: String,
    pub f_value: f64,
    pub g: String,
    pub g_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub params: ParamsReport,
    pub rows: Vec<SpectrumRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepRow {
    pub n: usize,
    pub f: f64,
    pub raise_lower: f64,
    /// `None` on the last row of an infinite window, where the cutoff distorts it.
    pub expected_commutator: Option<f64>,
    pub commutator: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepCheckReport {
    pub params: ParamsReport,
    pub window: usize,
    /// Largest relative deviation of `a⁺a⁻` from `F(N)`, off-diagonal included.
    pub raise_lower_deviation: f64,
    pub commutator_deviation: f64,
    /// `(a⁻)^d = (a⁺)^d = 0` exactly; finite representations only.
    pub nilpotent: Option<bool>,
    pub rows: Vec<RepRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TruncateRow {
    pub n: usize,
    pub expected: f64,
    pub commutator: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TruncateReport {
    pub params: ParamsReport,
    pub window: usize,
    pub s: usize,
    pub commutator_deviation: f64,
    pub rows: Vec<TruncateRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffRow {
    pub n: usize,
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
}

impl CoeffRow {
    pub fn new(n: usize, c: Complex64) -> Self {
        Self { n, re: c.re, im: c.im, modulus: c.norm() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateReport {
    pub kind: String,
    pub params: ParamsReport,
    pub z: ComplexValue,
    pub phi: f64,
    pub normalized: bool,
    pub terms: usize,
    /// Bound on the neglected squared norm relative to the retained one.
    pub tail_bound: Option<f64>,
    /// `√Σ|cₙ|²` of the reported coefficients.
    pub norm: f64,
    /// `|𝒩|` from the ₀F_r closed form, when κᵢ = 1/ℓᵢ.
    pub normalization: Option<f64>,
    /// `‖a⁻ψ − zψ‖/‖ψ‖`, Barut-Girardello states only.
    pub eigen_residual: Option<f64>,
    /// Largest deviation from `exp(z a⁺)|0⟩` in finite dimension, Perelomov only.
    pub exponential_deviation: Option<f64>,
    pub coeffs: Vec<CoeffRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrassmannRow {
    /// Fock level.
    pub n: usize,
    /// Power of θ carried by the coefficient.
    pub degree: usize,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubstitutionReport {
    pub z: ComplexValue,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrassmannReport {
    pub params: ParamsReport,
    pub phi: f64,
    pub dim: usize,
    pub eigen_residual: f64,
    pub substitution: Option<SubstitutionReport>,
    pub coeffs: Vec<GrassmannRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentRow {
    pub n: usize,
    pub exact: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeRow {
    pub j: usize,
    /// `t = |z|²`
    pub node: f64,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureReport {
    pub kind: String,
    pub params: ParamsReport,
    /// Angular factor `1/(2π)` multiplying `dθ` in `dμ`.
    pub angular_scale: f64,
    pub moments: Vec<MomentRow>,
    pub nodes: Vec<NodeRow>,
    pub moment_residual: f64,
    /// Largest deviation of `Σ wⱼ |z, φ⟩⟨z, φ|` from the identity.
    pub identity_deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub params: ParamsReport,
    pub nmax: usize,
    pub rho_hat: f64,
    pub sigma_hat: f64,
    /// Closed forms, available only when every κᵢ is 0 or 1/ℓᵢ.
    pub rho: Option<f64>,
    pub sigma: Option<f64>,
    pub rho_rel_error: Option<f64>,
    pub sigma_rel_error: Option<f64>,
    pub fit_window: (usize, usize),
    pub fit_residual: f64,
    /// `ln|cₙ|` of the kernel, the CSV payload.
    pub log_moduli: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchwarzRow {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
    pub bound: f64,
    pub excess: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchwarzReport {
    pub params: ParamsReport,
    pub phi: f64,
    /// Normalized coefficients of f.
    pub f: Vec<ComplexValue>,
    pub max_excess: f64,
    pub points: Vec<SchwarzRow>,
}

/// A report together with its table form.
pub trait Artifact: Serialize {
    fn write_table(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()>;
}

fn rows<T: Serialize>(w: &mut csv::Writer<Vec<u8>>, rows: &[T]) -> csv::Result<()> {
    rows.iter().try_for_each(|r| w.serialize(r))
}

impl Artifact for SpectrumReport {
    fn write_table(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        rows(w, &self.rows)
    }
}

impl Artifact for RepCheckReport {
    fn write_table(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        rows(w, &self.rows)
    }
}

impl Artifact for TruncateReport {
    fn write_table(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        rows(w, &self.rows)
    }
}

impl Artifact for StateReport {
    fn write_table(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        rows(w, &self.coeffs)
    }
}

impl Artifact for GrassmannReport {
    fn write_table(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        rows(w, &self.coeffs)
    }
}

impl Artifact for MeasureReport {
    fn write_table(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        rows(w, &self.nodes)
    }
}

impl Artifact for GrowthReport {
    fn write_table(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        w.write_record(["n", "log_modulus"])?;
        for (n, l) in self.log_moduli.iter().enumerate() {
            w.write_record([n.to_string(), l.to_string()])?;
        }
        Ok(())
    }
}

impl Artifact for SchwarzReport {
    fn write_table(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        rows(w, &self.points)
    }
}
