use nalgebra::DMatrix;
use polyweyl::algebra::{build_rep, build_truncated_rep, to_f64};
use polyweyl::bargmann::{closed_form_growth, estimate_growth, polar_grid, schwarz_check, BargmannError, EntireSeries};
use polyweyl::coherent::{bg_normalization, check_bg_eigen, perelomov_via_exponential, Cutoff};
use polyweyl::grassmann::{bg_grassmann_state, check_bg_grassmann_eigen, complex_substitution_residual};
use polyweyl::measure::{moments_for, solve_measure, verify_identity, MomentSequence};
use polyweyl::{
    bg_state, perelomov_state, AlgebraParams, Complex64, Execution, RepDimension, SeriesOptions, StateKind,
};

use crate::args::{Cli, Command, Format, KindArg, ParamArgs, StateArgs};
use crate::error::CliError;
use crate::report::*;

impl ParamArgs {
    pub fn build(&self) -> Result<AlgebraParams, CliError> {
        match (&self.kappa, &self.ell) {
            (Some(k), None) => Ok(AlgebraParams::new(k.0.clone(), self.phi)?),
            (None, Some(l)) => Ok(AlgebraParams::from_ells(&l.0, self.phi)?),
            _ => Err(CliError::Domain("give exactly one of --kappa or --ell".into())),
        }
    }
}

fn kind_of(arg: KindArg) -> StateKind {
    match arg {
        KindArg::Perelomov => StateKind::Perelomov,
        KindArg::Bg => StateKind::BarutGirardello,
    }
}

fn off_diagonal_max(m: &DMatrix<Complex64>) -> f64 {
    let mut worst: f64 = 0.0;
    for ((i, j), x) in m.iter().enumerate().map(|(k, x)| ((k % m.nrows(), k / m.nrows()), x)) {
        if i != j {
            worst = worst.max(x.norm());
        }
    }
    worst
}

fn spectrum(params: &AlgebraParams, nmax: u64) -> SpectrumReport {
    let rows = (0..=nmax)
        .map(|n| {
            let f = params.structure_function(n);
            let g = params.commutator_gap(n);
            SpectrumRow { n, f_value: to_f64(&f), f: f.to_string(), g_value: to_f64(&g), g: g.to_string() }
        })
        .collect();
    SpectrumReport { params: params.into(), rows }
}

fn rep_check(params: &AlgebraParams, window: Option<usize>) -> Result<RepCheckReport, CliError> {
    let finite = match params.dimension() {
        RepDimension::Finite(d) => Some(d),
        RepDimension::Infinite => None,
    };
    let window = window
        .or(finite)
        .ok_or_else(|| CliError::Domain("infinite-dimensional representations need --window".into()))?;
    let rep = build_rep(params, window)?;
    let rl = rep.raise_lower();
    let comm = rep.commutator();
    let scale = params.level(window as u64 - 1).max(1.0);
    let mut rl_dev = off_diagonal_max(&rl) / scale;
    let mut comm_dev = off_diagonal_max(&comm) / scale;
    let rows = (0..window)
        .map(|n| {
            let f = params.level(n as u64);
            let expected = if n + 1 < window { Some(params.level(n as u64 + 1) - f) } else { finite.map(|_| -f) };
            rl_dev = rl_dev.max((rl[(n, n)] - f).norm() / f.max(1.0));
            if let Some(e) = expected {
                comm_dev = comm_dev.max((comm[(n, n)] - e).norm() / e.abs().max(1.0));
            }
            RepRow { n, f, raise_lower: rl[(n, n)].re, expected_commutator: expected, commutator: comm[(n, n)].re }
        })
        .collect();
    let nilpotent = finite.map(|d| {
        let zero = DMatrix::<Complex64>::zeros(d, d);
        let (mut lp, mut rp) = (DMatrix::<Complex64>::identity(d, d), DMatrix::<Complex64>::identity(d, d));
        for _ in 0..d {
            lp = &lp * rep.lower();
            rp = &rp * rep.raise();
        }
        lp == zero && rp == zero
    });
    Ok(RepCheckReport {
        params: params.into(),
        window,
        raise_lower_deviation: rl_dev,
        commutator_deviation: comm_dev,
        nilpotent,
        rows,
    })
}

fn truncate(params: &AlgebraParams, s: usize, window: Option<usize>) -> Result<TruncateReport, CliError> {
    let window = window.unwrap_or(s + 1);
    let rep = build_truncated_rep(params, window, s)?;
    let comm = rep.commutator();
    let mut dev = off_diagonal_max(&comm) / params.level(s as u64).max(1.0);
    let rows = (0..window)
        .map(|n| {
            // G_s(N) − F(s)|s−1⟩⟨s−1|
            let mut expected = if n < s { params.level(n as u64 + 1) - params.level(n as u64) } else { 0.0 };
            if n + 1 == s {
                expected -= params.level(s as u64);
            }
            dev = dev.max((comm[(n, n)] - expected).norm() / expected.abs().max(1.0));
            TruncateRow { n, expected, commutator: comm[(n, n)].re }
        })
        .collect();
    Ok(TruncateReport { params: params.into(), window, s, commutator_deviation: dev, rows })
}

fn coherent(kind: StateKind, args: &StateArgs) -> Result<StateReport, CliError> {
    let params = args.params.build()?;
    let opts = SeriesOptions {
        tail_tol: args.series.tail_tol,
        max_terms: args.series.max_terms,
        normalize: args.normalize,
        truncation: args.truncation,
    };
    if !(opts.tail_tol > 0.0 && opts.tail_tol < 1.0) {
        return Err(CliError::Domain(format!("tail tolerance must lie in (0, 1), got {}", opts.tail_tol)));
    }
    let phi = params.phi();
    let state = match kind {
        StateKind::Perelomov => perelomov_state(&params, args.z, phi, &opts)?,
        StateKind::BarutGirardello => bg_state(&params, args.z, phi, &opts)?,
    };
    let tail_bound = match state.cutoff() {
        Cutoff::Truncated { tail_bound, .. } => Some(tail_bound),
        Cutoff::Exact { .. } => None,
    };
    let normalization = match (kind, params.reciprocal_ells(), args.truncation) {
        (StateKind::BarutGirardello, Some(_), None) => Some(bg_normalization(&params, args.z)?),
        _ => None,
    };
    let eigen_residual = match kind {
        StateKind::BarutGirardello => {
            let rep = match args.truncation {
                Some(s) => build_truncated_rep(&params, s + 1, s)?,
                None => build_rep(&params, state.len() + 1)?,
            };
            Some(check_bg_eigen(&state, &rep)?.residual)
        }
        StateKind::Perelomov => None,
    };
    let exponential_deviation = match (kind, params.dimension(), args.truncation) {
        (StateKind::Perelomov, RepDimension::Finite(d), _) => Some(build_rep(&params, d)?),
        (StateKind::Perelomov, RepDimension::Infinite, Some(s)) => Some(build_truncated_rep(&params, s + 1, s)?),
        _ => None,
    }
    .map(|rep| -> Result<f64, CliError> {
        let expo = perelomov_via_exponential(&rep, args.z, phi)?;
        let scale = if args.normalize { expo.norm_sqr().sqrt() } else { 1.0 };
        Ok(state.coeffs().iter().zip(expo.coeffs()).map(|(a, b)| (a - b / scale).norm()).fold(0.0, f64::max))
    })
    .transpose()?;
    Ok(StateReport {
        kind: kind.name().to_string(),
        params: (&params).into(),
        z: args.z.into(),
        phi,
        normalized: state.is_normalized(),
        terms: state.len(),
        tail_bound,
        norm: state.norm_sqr().sqrt(),
        normalization,
        eigen_residual,
        exponential_deviation,
        coeffs: state.coeffs().iter().enumerate().map(|(n, &c)| CoeffRow::new(n, c)).collect(),
    })
}

fn grassmann(
    params: &AlgebraParams,
    truncation: Option<usize>,
    z: Option<Complex64>,
) -> Result<GrassmannReport, CliError> {
    let state = bg_grassmann_state(params, params.phi(), truncation)?;
    let dim = state.dim();
    let rep = match truncation {
        Some(s) if !params.dimension().is_finite() => build_truncated_rep(params, s + 1, s)?,
        _ => build_rep(params, dim)?,
    };
    let eigen_residual = check_bg_grassmann_eigen(&state, &rep)?;
    let substitution = z
        .map(|z| -> Result<SubstitutionReport, CliError> {
            Ok(SubstitutionReport { z: z.into(), residual: complex_substitution_residual(&state, &rep, z)? })
        })
        .transpose()?;
    let coeffs = state
        .coeffs()
        .iter()
        .enumerate()
        .flat_map(|(n, g)| {
            g.comps().iter().enumerate().filter(|(_, c)| c.norm() != 0.0).map(move |(degree, c)| GrassmannRow {
                n,
                degree,
                re: c.re,
                im: c.im,
            })
        })
        .collect();
    Ok(GrassmannReport { params: params.into(), phi: params.phi(), dim, eigen_residual, substitution, coeffs })
}

fn measure(params: &AlgebraParams, kind: StateKind, levels: Option<usize>) -> Result<MeasureReport, CliError> {
    let moments = moments_for(params, kind, levels)?;
    let m = solve_measure(&moments)?;
    let deviation = verify_identity(params, kind, &m, params.phi())?;
    Ok(MeasureReport {
        kind: kind.name().to_string(),
        params: params.into(),
        angular_scale: MomentSequence::ANGULAR_SCALE,
        moments: moments
            .values()
            .iter()
            .enumerate()
            .map(|(n, v)| MomentRow { n, exact: v.to_string(), value: to_f64(v) })
            .collect(),
        nodes: m
            .nodes()
            .iter()
            .zip(m.weights())
            .enumerate()
            .map(|(j, (&node, &weight))| NodeRow { j, node, weight })
            .collect(),
        moment_residual: m.moment_residual(),
        identity_deviation: deviation,
    })
}

fn growth(params: &AlgebraParams, nmax: usize) -> Result<GrowthReport, CliError> {
    let series = EntireSeries::bg_kernel(params, nmax)?;
    let est = estimate_growth(&series)?;
    let closed = match closed_form_growth(params) {
        Ok(c) => Some(c),
        // the estimate still stands; no closed form to compare with
        Err(BargmannError::NotReciprocalIntegers) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(GrowthReport {
        params: params.into(),
        nmax,
        rho_hat: est.rho_hat,
        sigma_hat: est.sigma_hat,
        rho: closed.map(|c| c.rho),
        sigma: closed.map(|c| c.sigma),
        rho_rel_error: closed.map(|c| (est.rho_hat - c.rho).abs() / c.rho),
        sigma_rel_error: closed.map(|c| (est.sigma_hat - c.sigma).abs() / c.sigma),
        fit_window: est.fit_window,
        fit_residual: est.residual,
        log_moduli: series.log_moduli().to_vec(),
    })
}

fn schwarz(
    params: &AlgebraParams,
    f: Option<&[Complex64]>,
    radius: f64,
    radial: usize,
    angular: usize,
) -> Result<SchwarzReport, CliError> {
    let vacuum = [Complex64::new(1.0, 0.0)];
    let f = f.unwrap_or(&vacuum);
    let norm = f.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 || !norm.is_finite() {
        return Err(CliError::Domain("--f must be a nonzero finite vector".into()));
    }
    if !(radius.is_finite() && radius > 0.0) || radial == 0 || angular == 0 {
        return Err(CliError::Domain("grid needs a positive radius and at least one radial and angular point".into()));
    }
    let f: Vec<Complex64> = f.iter().map(|c| c / norm).collect();
    let grid = polar_grid(radius, radial, angular);
    let report = schwarz_check(params, &f, &grid, params.phi(), Execution::default())?;
    Ok(SchwarzReport {
        params: params.into(),
        phi: params.phi(),
        f: f.iter().map(|&c| c.into()).collect(),
        max_excess: report.max_excess,
        points: report
            .points
            .iter()
            .map(|p| SchwarzRow { re: p.z.re, im: p.z.im, modulus: p.modulus, bound: p.bound, excess: p.excess() })
            .collect(),
    })
}

fn render<A: Artifact>(report: &A, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(report).map_err(|e| CliError::Domain(e.to_string()))?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            report.write_table(&mut w).map_err(|e| CliError::Domain(e.to_string()))?;
            w.into_inner().map_err(|e| CliError::Domain(e.to_string()))
        }
    }
}

/// Runs the selected command and returns the rendered artifact.
pub fn run(cli: &Cli) -> Result<Vec<u8>, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Spectrum { params, nmax } => render(&spectrum(&params.build()?, *nmax), format),
        Command::RepCheck { params, window } => render(&rep_check(&params.build()?, *window)?, format),
        Command::Truncate { params, s, window } => render(&truncate(&params.build()?, *s, *window)?, format),
        Command::CsPerelomov(args) => render(&coherent(StateKind::Perelomov, args)?, format),
        Command::CsBg(args) => render(&coherent(StateKind::BarutGirardello, args)?, format),
        Command::CsGrassmann { params, truncation, z } => {
            render(&grassmann(&params.build()?, *truncation, *z)?, format)
        }
        Command::Measure { params, kind, levels } => {
            render(&measure(&params.build()?, kind_of(*kind), *levels)?, format)
        }
        Command::BargmannGrowth { params, nmax } => render(&growth(&params.build()?, *nmax)?, format),
        Command::Schwarz { params, f, radius, radial, angular } => {
            render(&schwarz(&params.build()?, f.as_ref().map(|f| f.0.as_slice()), *radius, *radial, *angular)?, format)
        }
    }
}
