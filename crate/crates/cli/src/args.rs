use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polyweyl::{Complex64, Kappa};

use crate::parse::{parse_complex, parse_complex_list, parse_ells, parse_kappas};

#[derive(Debug, Parser)]
#[command(name = "polyweyl", version, about = "Polynomial Weyl-Heisenberg algebras and their coherent states")]
pub struct Cli {
    /// Flat `key = value` file supplying flag defaults; command-line flags win.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Write the artifact here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Perelomov,
    Bg,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KappaList(pub Vec<Kappa>);

#[derive(Debug, Clone, PartialEq)]
pub struct EllList(pub Vec<u64>);

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexList(pub Vec<Complex64>);

#[derive(Debug, Args)]
pub struct ParamArgs {
    /// Deformation parameters κ₁,…,κ_r, e.g. `-1/3,1/2`.
    #[arg(long, allow_hyphen_values = true, value_parser = |s: &str| parse_kappas(s).map(KappaList),
          required_unless_present = "ell", conflicts_with = "ell")]
    pub kappa: Option<KappaList>,
    /// Reciprocal parameters ℓ₁,…,ℓ_r with κᵢ = 1/ℓᵢ.
    #[arg(long, value_parser = |s: &str| parse_ells(s).map(EllList))]
    pub ell: Option<EllList>,
    /// Phase φ.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub phi: f64,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Relative tail bound at which infinite series are cut.
    #[arg(long, env = "POLYWEYL_TAIL_TOL", default_value_t = 1e-14)]
    pub tail_tol: f64,
    /// Hard limit on the number of series terms.
    #[arg(long, env = "POLYWEYL_MAX_TERMS", default_value_t = 200_000)]
    pub max_terms: usize,
}

#[derive(Debug, Args)]
pub struct StateArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Complex label of the state, e.g. `1+0.5i`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    pub z: Complex64,
    /// Scale the coefficients to unit norm.
    #[arg(long)]
    pub normalize: bool,
    /// Work in the truncated algebra of order s (infinite-dimensional parameters only).
    #[arg(long)]
    pub truncation: Option<usize>,
    #[command(flatten)]
    pub series: SeriesArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of F(n) and G(n) = F(n+1) − F(n), exact and in floating point.
    Spectrum {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 10)]
        nmax: u64,
    },
    /// Check a⁺a⁻ = F(N), the commutator and nilpotency on a basis window.
    RepCheck {
        #[command(flatten)]
        params: ParamArgs,
        /// Basis window (defaults to the dimension of a finite representation).
        #[arg(long)]
        window: Option<usize>,
    },
    /// Commutator of the truncated algebra of order s.
    Truncate {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        s: usize,
        /// Basis window, at least s + 1 (default s + 1).
        #[arg(long)]
        window: Option<usize>,
    },
    /// Perelomov state exp(z a⁺)|0⟩.
    CsPerelomov(StateArgs),
    /// Barut-Girardello eigenstate of a⁻.
    CsBg(StateArgs),
    /// Barut-Girardello state over a nilpotent Grassmann variable.
    CsGrassmann {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        truncation: Option<usize>,
        /// Also report the eigen-residual with this complex number put in place of θ.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        z: Option<Complex64>,
    },
    /// Discrete positive measure resolving the identity.
    Measure {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Number of matched moments (infinite dimension).
        #[arg(long)]
        levels: Option<usize>,
    },
    /// Estimated versus closed-form order and type of the Bargmann kernel.
    BargmannGrowth {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 5000)]
        nmax: usize,
    },
    /// Check |f_φ(z)| ≤ |𝒩(z)| on a polar grid.
    Schwarz {
        #[command(flatten)]
        params: ParamArgs,
        /// Fock coefficients of f, normalized before use (default: vacuum).
        #[arg(long, allow_hyphen_values = true, value_parser = |s: &str| parse_complex_list(s).map(ComplexList))]
        f: Option<ComplexList>,
        #[arg(long, default_value_t = 2.0)]
        radius: f64,
        #[arg(long, default_value_t = 8)]
        radial: usize,
        #[arg(long, default_value_t = 16)]
        angular: usize,
    },
}
