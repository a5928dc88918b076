//! Batch evaluations over parameter sets and z-grids.

use num_complex::Complex64;

use crate::algebra::{build_rep, AlgebraParams};
use crate::bargmann::{
    closed_form_growth, estimate_growth, BargmannError, ClosedFormGrowth, EntireSeries, GrowthEstimate,
};
use crate::coherent::{bg_state, check_bg_eigen, CoherentError, CoherentState, SeriesOptions};
use crate::exec::Execution;

/// Barut-Girardello states at every point of `zs`.
pub fn bg_states(
    params: &AlgebraParams,
    zs: &[Complex64],
    phi: f64,
    options: &SeriesOptions,
    exec: Execution,
) -> Vec<Result<CoherentState, CoherentError>> {
    exec.map(zs, |&z| bg_state(params, z, phi, options))
}

/// Lowering-operator residuals of the Barut-Girardello states at `zs`, each
/// checked against a ladder window one larger than its series.
pub fn bg_eigen_residuals(
    params: &AlgebraParams,
    zs: &[Complex64],
    phi: f64,
    options: &SeriesOptions,
    exec: Execution,
) -> Result<Vec<f64>, CoherentError> {
    let params = params.with_phi(phi);
    exec.try_map(zs, |&z| {
        let state = bg_state(&params, z, phi, options)?;
        let rep = build_rep(&params, state.len() + 1)?;
        Ok(check_bg_eigen(&state, &rep)?.residual)
    })
}

#[derive(Debug, Clone)]
pub struct GrowthRow {
    pub params: AlgebraParams,
    pub estimate: GrowthEstimate,
    pub closed_form: ClosedFormGrowth,
}

impl GrowthRow {
    pub fn rho_rel_error(&self) -> f64 {
        (self.estimate.rho_hat - self.closed_form.rho).abs() / self.closed_form.rho
    }

    pub fn sigma_rel_error(&self) -> f64 {
        (self.estimate.sigma_hat - self.closed_form.sigma).abs() / self.closed_form.sigma
    }
}

/// Estimated versus closed-form order and type of the Bargmann kernel for
/// each parameter set.
pub fn growth_table(sets: &[AlgebraParams], n_max: usize, exec: Execution) -> Result<Vec<GrowthRow>, BargmannError> {
    exec.try_map(sets, |params| {
        let closed_form = closed_form_growth(params)?;
        let estimate = estimate_growth(&EntireSeries::bg_kernel(params, n_max)?)?;
        Ok(GrowthRow { params: params.clone(), estimate, closed_form })
    })
}
