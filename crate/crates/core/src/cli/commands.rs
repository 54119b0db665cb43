//! The four subcommands.

use serde::Serialize;

use crate::error::Error;
use crate::oracle_fd::{compare, fd_solve, ComparisonReport, FDMesh};
use crate::sampled::SampledFunction;
use crate::solver::{
    assemble, assemble_with, auto_modes, default_time_grid, mode_solution, mode_solution_alt,
    residual_strong_with, residual_weak_with, solution_norms, AssembleOptions, ProblemSpec, Regime,
    ResidualOptions, ResidualReport, SolutionField, Source, TestFunction,
};
use crate::special::{rgamma, MittagLeffler};
use crate::spectral::{
    bc_requirements, bessel_eigen, bessel_residual, flux_limit_check_fn, orthogonality_report,
    solve_eigen, EigenMethod, EigenSystem, MeshOptions, OrthogonalityReport, FLUX_TOLERANCE,
};

use super::config::{Format, Modes, Oracle, RunConfig};
use super::output::{brief, Sink};
use super::CliError;

fn eigen_system(cfg: &RunConfig, k: usize) -> Result<EigenSystem<f64>, Error> {
    match cfg.oracle {
        Oracle::Galerkin => solve_eigen(cfg.beta, k, MeshOptions::with_cells(cfg.eigen_cells)),
        Oracle::Bessel => bessel_eigen(cfg.beta, k),
    }
}

/// Rejects out-of-domain parameters before any expensive work.
fn check_parameters(cfg: &RunConfig) -> Result<(), CliError> {
    bc_requirements(cfg.beta)?;
    ProblemSpec::new(
        cfg.alpha,
        cfg.theta,
        cfg.beta,
        cfg.a,
        cfg.t_final,
        SampledFunction::zero(),
        Source::zero(),
    )?;
    Ok(())
}

/// Eigen system large enough for the data, the problem, and the mode count.
fn prepare(cfg: &RunConfig) -> Result<(EigenSystem<f64>, ProblemSpec<f64>, usize), CliError> {
    check_parameters(cfg)?;
    let referenced = cfg.referenced_modes()?;
    let cap = match cfg.modes {
        Modes::Count(k) => k,
        Modes::Auto => cfg.max_modes,
    };
    let sys = eigen_system(cfg, cap.max(referenced))?;
    let spec = cfg.problem(Some(&sys))?;
    let k = match cfg.modes {
        Modes::Count(k) => k,
        Modes::Auto => auto_modes(&spec, &sys, cfg.tol.unwrap_or(1e-4))?,
    };
    Ok((sys, spec, k))
}

fn residual(field: &SolutionField<f64>, spec: &ProblemSpec<f64>, cfg: &RunConfig) -> Result<ResidualReport, Error> {
    let opts = ResidualOptions {
        sample_times: cfg.residual_samples,
        ..ResidualOptions::default()
    };
    match field.regime {
        Regime::Classical => residual_strong_with(field, spec, opts),
        Regime::Weak => {
            let tests: Vec<_> = (0..field.modes).map(TestFunction::Mode).collect();
            residual_weak_with(field, spec, &tests, opts)
        }
    }
}

#[derive(Serialize)]
struct CrossOracle {
    /// Largest interior `L²` residual of the closed-form modes in the ODE.
    bessel_residual: f64,
    galerkin_lambdas: Vec<f64>,
    bessel_lambdas: Vec<f64>,
    relative_delta: Vec<f64>,
    max_relative_delta: f64,
}

#[derive(Serialize)]
struct EigenReport<'a> {
    beta: f64,
    modes: usize,
    method: EigenMethod,
    lambdas: &'a [f64],
    orthogonality: OrthogonalityReport,
    /// `|lim_{x→0} x^β v_k'(x)|` over the first modes; only for `β > 1`.
    flux_limit: Option<f64>,
    cross_oracle: Option<CrossOracle>,
}

fn max_flux_limit(sys: &EigenSystem<f64>, modes: usize) -> Option<f64> {
    (sys.beta() > 1.0).then(|| {
        (0..modes.min(sys.count()))
            .map(|k| flux_limit_check_fn(|x| sys.flux(k, x), 1e-12).limit.abs())
            .fold(0.0, f64::max)
    })
}

pub fn eigen(cfg: &RunConfig) -> Result<(), CliError> {
    bc_requirements(cfg.beta)?;
    let Modes::Count(k) = cfg.modes else {
        return Err(CliError::Config("eigen needs an explicit mode count".into()));
    };
    let sys = eigen_system(cfg, k)?;
    let cross = if cfg.oracle == Oracle::Bessel {
        let galerkin = solve_eigen(cfg.beta, k, MeshOptions::with_cells(cfg.eigen_cells))?;
        let delta: Vec<f64> = galerkin
            .lambdas()
            .iter()
            .zip(sys.lambdas())
            .map(|(g, b)| (g - b).abs() / b)
            .collect();
        Some(CrossOracle {
            bessel_residual: bessel_residual(&sys, 0.05, 0.95).into_iter().fold(0.0, f64::max),
            galerkin_lambdas: galerkin.lambdas().to_vec(),
            bessel_lambdas: sys.lambdas().to_vec(),
            max_relative_delta: delta.iter().copied().fold(0.0, f64::max),
            relative_delta: delta,
        })
    } else {
        None
    };
    let x = cfg.x_grid();
    let table: Vec<Vec<f64>> = (0..k).map(|i| x.iter().map(|&xi| sys.value(i, xi)).collect()).collect();
    let mut sink = Sink::new(&cfg.out)?;
    match cfg.format {
        Format::Csv => {
            let rows: Vec<_> = sys.lambdas().iter().enumerate().map(|(i, &l)| (i + 1, vec![l])).collect();
            sink.table_csv("eigenvalues.csv", &["k", "lambda"], &rows)?;
            sink.eigen_csv("eigenfunctions.csv", &x, sys.lambdas(), &table)?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Tables<'a> {
                x: &'a [f64],
                lambdas: &'a [f64],
                eigenfunctions: &'a [Vec<f64>],
            }
            sink.json(
                "eigen.json",
                &Tables {
                    x: &x,
                    lambdas: sys.lambdas(),
                    eigenfunctions: &table,
                },
            )?;
        }
    }
    let report = EigenReport {
        beta: cfg.beta,
        modes: k,
        method: sys.method(),
        lambdas: sys.lambdas(),
        orthogonality: orthogonality_report(&sys, 8),
        flux_limit: max_flux_limit(&sys, k),
        cross_oracle: cross,
    };
    sink.json("orthogonality.json", &report)?;
    println!("beta = {}, {} modes ({:?})", cfg.beta, k, sys.method());
    println!("lambda: {}", brief(sys.lambdas(), 6));
    println!(
        "max off-diagonal Gram entry: {:.3e}",
        report.orthogonality.max_offdiag_l2
    );
    if let Some(c) = &report.cross_oracle {
        println!("max relative delta vs Galerkin: {:.3e}", c.max_relative_delta);
    }
    print_written(&sink);
    Ok(())
}

#[derive(Serialize)]
struct SolveReport<'a> {
    config: &'a RunConfig,
    regime: Regime,
    modes: usize,
    method: EigenMethod,
    lambdas: &'a [f64],
    diagnostics: &'a crate::solver::FieldDiagnostics,
}

fn write_field(sink: &mut Sink, name: &str, format: Format, field: &SolutionField<f64>) -> Result<(), CliError> {
    match format {
        Format::Csv => sink.field_csv(&format!("{name}.csv"), &field.x_grid, &field.t_grid, &field.values),
        Format::Json => {
            #[derive(Serialize)]
            struct Field<'a> {
                x: &'a [f64],
                t: &'a [f64],
                values: &'a [Vec<f64>],
            }
            sink.json(
                &format!("{name}.json"),
                &Field {
                    x: &field.x_grid,
                    t: &field.t_grid,
                    values: &field.values,
                },
            )
        }
    }
}

fn solve_field(
    cfg: &RunConfig,
    spec: &ProblemSpec<f64>,
    sys: &EigenSystem<f64>,
    k: usize,
    tolerance: Option<f64>,
) -> Result<SolutionField<f64>, CliError> {
    let t_grid = default_time_grid(&spec.warp(), spec.t_final(), spec.alpha(), cfg.time_steps);
    let opts = AssembleOptions {
        tolerance,
        ..AssembleOptions::default()
    };
    Ok(assemble_with(spec, sys, k, &cfg.x_grid(), &t_grid, opts)?)
}

pub fn solve(cfg: &RunConfig) -> Result<(), CliError> {
    let (sys, spec, k) = prepare(cfg)?;
    let mut field = solve_field(cfg, &spec, &sys, k, cfg.tol)?;
    let res = residual(&field, &spec, cfg)?;
    let norms = solution_norms(&field, &spec);
    field.diagnostics.residual = Some(res);
    field.diagnostics.norms = Some(norms);
    field.diagnostics.warnings.extend(spec.compatibility_warnings());
    let mut sink = Sink::new(&cfg.out)?;
    write_field(&mut sink, "solution", cfg.format, &field)?;
    let report = SolveReport {
        config: cfg,
        regime: field.regime,
        modes: k,
        method: sys.method(),
        lambdas: &sys.lambdas()[..k],
        diagnostics: &field.diagnostics,
    };
    sink.json("diagnostics.json", &report)?;
    let res = field.diagnostics.residual.as_ref().expect("set above");
    println!("regime: {:?}, {} modes", field.regime, k);
    println!("{:?} residual (relative): {:.3e}", res.kind, res.relative);
    for w in &field.diagnostics.warnings {
        println!("warning: {w}");
    }
    print_written(&sink);
    Ok(())
}

#[derive(Debug, Serialize)]
struct Check {
    name: &'static str,
    applicable: bool,
    value: f64,
    tolerance: f64,
    passed: bool,
    detail: String,
}

impl Check {
    fn new(name: &'static str, value: f64, default_tol: f64, cfg: &RunConfig, detail: String) -> Self {
        let tolerance = cfg.tol.unwrap_or(default_tol);
        Self {
            name,
            applicable: true,
            value,
            tolerance,
            passed: value <= tolerance,
            detail,
        }
    }

    fn skipped(name: &'static str, detail: &str) -> Self {
        Self {
            name,
            applicable: false,
            value: 0.0,
            tolerance: 0.0,
            passed: true,
            detail: detail.into(),
        }
    }
}

/// Largest relative defect of `E_{α,β}(z) = 1/Γ(β) + z E_{α,α+β}(z)`.
fn ml_recurrence_defect() -> Result<f64, Error> {
    let mut worst = 0.0f64;
    for alpha in [0.3, 0.5, 0.7, 1.2] {
        for beta in [0.5, 1.0, 2.0] {
            let lhs = MittagLeffler::new(alpha, beta)?;
            let rhs = MittagLeffler::new(alpha, alpha + beta)?;
            for i in 0..=16 {
                let z = -30.0 + 35.0 * i as f64 / 16.0;
                let e = lhs.eval(z)?;
                let defect = (e - rgamma(beta) - z * rhs.eval(z)?).abs() / (1.0 + e.abs());
                worst = worst.max(defect);
            }
        }
    }
    Ok(worst)
}

fn kernel_defect(field: &SolutionField<f64>, modes: usize) -> Result<f64, Error> {
    let odes = field.mode_odes().expect("spectral field");
    let mut worst = 0.0f64;
    for ode in odes.iter().take(modes) {
        let a = mode_solution(ode, &field.t_grid)?;
        let b = mode_solution_alt(ode, &field.t_grid)?;
        for (u, v) in a.values.iter().zip(&b.values) {
            worst = worst.max((u - v).abs());
        }
    }
    Ok(worst)
}

fn zero_data_max(cfg: &RunConfig, sys: &EigenSystem<f64>, k: usize) -> Result<f64, Error> {
    let spec = ProblemSpec::new(
        cfg.alpha,
        cfg.theta,
        cfg.beta,
        cfg.a,
        cfg.t_final,
        SampledFunction::zero(),
        Source::zero(),
    )?;
    let t_grid = default_time_grid(&spec.warp(), spec.t_final(), spec.alpha(), 16);
    let spectral = assemble(&spec, sys, k, &cfg.x_grid(), &t_grid)?;
    let fd = fd_solve(&spec, &FDMesh::new(&spec, 64, 64)?)?;
    Ok(spectral
        .values
        .iter()
        .chain(&fd.values)
        .flatten()
        .fold(0.0, |m, v| m.max(v.abs())))
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    config: &'a RunConfig,
    regime: Regime,
    modes: usize,
    passed: bool,
    checks: Vec<Check>,
    comparison: ComparisonReport,
}

pub fn verify(cfg: &RunConfig) -> Result<(), CliError> {
    let (sys, spec, k) = prepare(cfg)?;
    // the tolerance governs the checks here, not the truncation
    let field = solve_field(cfg, &spec, &sys, k, None)?;
    let mut checks = Vec::new();

    checks.push(Check::new(
        "ml_recurrence",
        ml_recurrence_defect()?,
        1e-11,
        cfg,
        "max |E_{a,b}(z) - 1/G(b) - z E_{a,a+b}(z)| / (1 + |E|)".into(),
    ));
    let ortho = orthogonality_report(&sys.truncated(k)?, 8);
    checks.push(Check::new(
        "orthogonality",
        ortho.max_offdiag_l2,
        1e-6,
        cfg,
        "max off-diagonal L2 Gram entry".into(),
    ));
    let kernel_modes = k.min(8);
    checks.push(Check::new(
        "kernel_equivalence",
        kernel_defect(&field, kernel_modes)?,
        1e-8,
        cfg,
        format!("max |u_k - u_k(two-term)| over the first {kernel_modes} modes"),
    ));
    checks.push(match max_flux_limit(&sys, k.min(4)) {
        Some(v) => Check::new(
            "flux_limit",
            v,
            FLUX_TOLERANCE,
            cfg,
            "max |lim x^b v_k'(x)| at x -> 0 over the first 4 modes".into(),
        ),
        None => Check::skipped("flux_limit", "only the weak regime imposes zero flux at x = 0"),
    });
    checks.push(Check::new(
        "uniqueness",
        zero_data_max(cfg, &sys, k)?,
        1e-12,
        cfg,
        "max |u| for zero data, spectral and finite-difference".into(),
    ));
    let res = residual(&field, &spec, cfg)?;
    checks.push(Check::new(
        "residual",
        res.relative,
        1e-4,
        cfg,
        format!("{:?} residual relative to the balanced terms", res.kind),
    ));

    let fine = assemble(&spec, &sys, k, sys.quadrature_mesh(), &[spec.a(), spec.t_final()])?;
    let fd = fd_solve(&spec, &FDMesh::new(&spec, cfg.fd_cells, cfg.fd_steps)?)?;
    let comparison = compare(&fine, &fd, &[spec.t_final()])?;
    checks.push(Check::new(
        "spectral_vs_fd",
        comparison.max_l2_rel,
        1e-2,
        cfg,
        format!(
            "relative L2 difference at t = T, FD mesh {}x{}",
            cfg.fd_cells, cfg.fd_steps
        ),
    ));

    let passed = checks.iter().all(|c| c.passed);
    let mut sink = Sink::new(&cfg.out)?;
    write_field(&mut sink, "fd_solution", cfg.format, &fd)?;
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
    for c in &checks {
        let status = match (c.applicable, c.passed) {
            (false, _) => "SKIP",
            (true, true) => "PASS",
            (true, false) => "FAIL",
        };
        println!("{status} {:<20} {:.3e} (tol {:.1e})", c.name, c.value, c.tolerance);
    }
    sink.json(
        "verify.json",
        &VerifyReport {
            config: cfg,
            regime: spec.regime(),
            modes: k,
            passed,
            checks,
            comparison,
        },
    )?;
    print_written(&sink);
    if passed {
        Ok(())
    } else {
        Err(CliError::Verification(failed.join(", ")))
    }
}

/// `log(e_i / e_{i+1}) / log(n_{i+1} / n_i)`, NaN for the first level.
fn observed_orders(levels: &[usize], errors: &[f64]) -> Vec<f64> {
    std::iter::once(f64::NAN)
        .chain(levels.windows(2).zip(errors.windows(2)).map(|(n, e)| {
            (e[0] / e[1]).ln() / (n[1] as f64 / n[0] as f64).ln()
        }))
        .collect()
}

#[derive(Serialize)]
struct Ladder {
    levels: Vec<usize>,
    l2_error: Vec<f64>,
    relative_l2_error: Vec<f64>,
    order: Vec<f64>,
}

impl Ladder {
    fn rows(&self) -> Vec<(usize, Vec<f64>)> {
        (0..self.levels.len())
            .map(|i| (self.levels[i], vec![self.l2_error[i], self.relative_l2_error[i], self.order[i]]))
            .collect()
    }
}

#[derive(Serialize)]
struct ConvergenceReport<'a> {
    config: &'a RunConfig,
    reference_modes: usize,
    modes: Ladder,
    fd: Ladder,
}

fn check_ladder(name: &str, ladder: &[usize]) -> Result<(), CliError> {
    if ladder.len() < 2 {
        return Err(CliError::Config(format!("{name} needs at least 2 levels")));
    }
    if ladder.windows(2).any(|w| w[1] <= w[0]) || ladder[0] == 0 {
        return Err(CliError::Config(format!("{name} must be positive and strictly increasing")));
    }
    Ok(())
}

pub fn convergence(cfg: &RunConfig) -> Result<(), CliError> {
    check_ladder("ladder_modes", &cfg.ladder_modes)?;
    check_ladder("ladder_fd", &cfg.ladder_fd)?;
    check_parameters(cfg)?;
    let top = *cfg.ladder_modes.last().expect("checked");
    let k_ref = cfg.reference_modes.max(top).max(cfg.referenced_modes()?);
    let sys = eigen_system(cfg, k_ref)?;
    let spec = cfg.problem(Some(&sys))?;
    let x = sys.quadrature_mesh().to_vec();
    let times = [spec.a(), spec.t_final()];
    let end = [spec.t_final()];
    let reference = assemble(&spec, &sys, k_ref, &x, &times)?;

    let run = |levels: &[usize], solve: &dyn Fn(usize) -> Result<SolutionField<f64>, Error>| {
        let mut abs = Vec::new();
        let mut rel = Vec::new();
        for &n in levels {
            let r = compare(&reference, &solve(n)?, &end)?;
            abs.push(r.l2_abs[0]);
            rel.push(r.l2_rel[0]);
        }
        Ok::<_, Error>(Ladder {
            levels: levels.to_vec(),
            order: observed_orders(levels, &abs),
            l2_error: abs,
            relative_l2_error: rel,
        })
    };
    let modes = run(&cfg.ladder_modes, &|k| assemble(&spec, &sys, k, &x, &times))?;
    let fd = run(&cfg.ladder_fd, &|n| fd_solve(&spec, &FDMesh::new(&spec, n, n)?))?;

    let mut sink = Sink::new(&cfg.out)?;
    let header = ["error", "relative_error", "order"];
    match cfg.format {
        Format::Csv => {
            let h = |first: &'static str| {
                let mut v = vec![first];
                v.extend(header);
                v
            };
            sink.table_csv("convergence_modes.csv", &h("K"), &modes.rows())?;
            sink.table_csv("convergence_fd.csv", &h("N"), &fd.rows())?;
        }
        Format::Json => {}
    }
    for (name, l) in [("K", &modes), ("N", &fd)] {
        for (i, n) in l.levels.iter().enumerate() {
            println!(
                "{name} = {n:>5}  error {:.3e}  order {:.2}",
                l.l2_error[i], l.order[i]
            );
        }
    }
    sink.json(
        "convergence.json",
        &ConvergenceReport {
            config: cfg,
            reference_modes: k_ref,
            modes,
            fd,
        },
    )?;
    print_written(&sink);
    Ok(())
}

fn print_written(sink: &Sink) {
    for p in sink.written() {
        println!("wrote {}", p.display());
    }
}
