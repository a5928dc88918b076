//! Polynomial Weyl-Heisenberg algebras and their coherent states.
//!
//! * [`algebra`]: structure function, classification and ladder matrices,
//!   including the truncated algebra `A_{κ,s}`.
//! * [`coherent`]: Perelomov and Barut-Girardello states.
//! * [`grassmann`]: nilpotent variables and finite-dimensional
//!   Barut-Girardello states.
//! * [`measure`]: positive measures resolving the identity.
//! * [`bargmann`]: Bargmann functions and order/type of entire series.
//!
//! Batch work runs through [`exec::Execution`], parallel by default and
//! sequential when the `parallel` feature is disabled.

pub mod algebra;
pub mod bargmann;
pub mod coherent;
pub mod exec;
pub mod grassmann;
pub mod measure;
pub mod special;
pub mod sweep;

pub use algebra::{build_rep, build_truncated_rep, AlgebraError, AlgebraParams, Kappa, LadderRep, RepDimension};
pub use bargmann::{
    bargmann_eval, closed_form_growth, estimate_growth, schwarz_check, BargmannError, ClosedFormGrowth, EntireSeries,
    GrowthEstimate,
};
pub use coherent::{
    bg_normalization, bg_state, check_bg_eigen, overlap, perelomov_state, perelomov_via_exponential, time_evolve,
    CoherentError, CoherentState, Cutoff, SeriesOptions, StateKind,
};
pub use exec::Execution;
pub use grassmann::{bg_grassmann_state, check_bg_grassmann_eigen, GrassmannElement, GrassmannError, GrassmannState};
pub use measure::{moments_for, solve_measure, verify_identity, DiscreteMeasure, MeasureError, MomentSequence};

pub use num_complex::Complex64;
