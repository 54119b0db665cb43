//! Run configuration: a flat TOML file merged with command-line overrides.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::frac_ops::TimeWarp;
use crate::sampled::SampledFunction;
use crate::solver::{ProblemSpec, SeparableTerm, Source};
use crate::spectral::EigenSystem;

use super::expr::{self, Ast, Env, Var};
use super::CliError;

/// Number of modes, or `"auto"` for the smallest count meeting `tol`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Modes {
    Count(usize),
    #[serde(with = "auto")]
    Auto,
}

mod auto {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str("auto")
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<(), D::Error> {
        match String::deserialize(d)?.as_str() {
            "auto" => Ok(()),
            other => Err(D::Error::custom(format!("expected a mode count or \"auto\", got \"{other}\""))),
        }
    }
}

impl std::str::FromStr for Modes {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            return Ok(Modes::Auto);
        }
        s.parse()
            .map(Modes::Count)
            .map_err(|_| format!("expected a mode count or \"auto\", got \"{s}\""))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Oracle {
    Galerkin,
    Bessel,
}

/// Keys of the configuration file; every key is optional.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub alpha: Option<f64>,
    pub theta: Option<f64>,
    pub beta: Option<f64>,
    pub a: Option<f64>,
    #[serde(rename = "T")]
    pub t_final: Option<f64>,
    pub phi: Option<String>,
    pub phi_table: Option<PathBuf>,
    pub f: Option<String>,
    pub f_table: Option<PathBuf>,
    pub modes: Option<Modes>,
    pub max_modes: Option<usize>,
    pub x_points: Option<usize>,
    pub time_steps: Option<usize>,
    pub eigen_cells: Option<usize>,
    pub fd_cells: Option<usize>,
    pub fd_steps: Option<usize>,
    pub residual_samples: Option<usize>,
    pub source_samples: Option<usize>,
    pub ladder_modes: Option<Vec<usize>>,
    pub ladder_fd: Option<Vec<usize>>,
    pub reference_modes: Option<usize>,
    pub tol: Option<f64>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub oracle: Option<Oracle>,
}

/// Fully resolved configuration.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub alpha: f64,
    pub theta: f64,
    pub beta: f64,
    pub a: f64,
    #[serde(rename = "T")]
    pub t_final: f64,
    pub phi: String,
    pub phi_table: Option<PathBuf>,
    pub f: String,
    pub f_table: Option<PathBuf>,
    pub modes: Modes,
    /// Upper limit for `modes = "auto"`.
    pub max_modes: usize,
    /// Uniform output grid on `[0, 1]`.
    pub x_points: usize,
    /// Cells of the graded output time grid.
    pub time_steps: usize,
    pub eigen_cells: usize,
    pub fd_cells: usize,
    pub fd_steps: usize,
    pub residual_samples: usize,
    /// Time nodes at which a non-separable source is projected.
    pub source_samples: usize,
    pub ladder_modes: Vec<usize>,
    pub ladder_fd: Vec<usize>,
    pub reference_modes: usize,
    pub tol: Option<f64>,
    pub out: PathBuf,
    pub format: Format,
    pub oracle: Oracle,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            alpha: 0.5,
            theta: 0.0,
            beta: 0.5,
            a: 0.0,
            t_final: 1.0,
            phi: "x*(1-x)".into(),
            phi_table: None,
            f: "0".into(),
            f_table: None,
            modes: Modes::Count(16),
            max_modes: 128,
            x_points: 101,
            time_steps: 64,
            eigen_cells: 2048,
            fd_cells: 512,
            fd_steps: 512,
            residual_samples: 8,
            source_samples: 64,
            ladder_modes: vec![1, 2, 4, 8, 16],
            ladder_fd: vec![64, 128, 256],
            reference_modes: 64,
            tol: None,
            out: PathBuf::from("."),
            format: Format::Csv,
            oracle: Oracle::Galerkin,
        }
    }
}

macro_rules! merge {
    ($dst:ident, $src:ident; $($field:ident),*) => {
        $(if let Some(v) = $src.$field { $dst.$field = v; })*
    };
}

impl RunConfig {
    /// Defaults, then the file at `path`, then `overrides`.
    pub fn load(path: Option<&Path>, overrides: FileConfig) -> Result<Self, CliError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = path {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
            let file: FileConfig = toml::from_str(&text)
                .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
            let base = path.parent().unwrap_or(Path::new(""));
            cfg.apply(file, Some(base));
        }
        cfg.apply(overrides, None);
        cfg.check()?;
        Ok(cfg)
    }

    fn apply(&mut self, src: FileConfig, base: Option<&Path>) {
        let rel = |p: PathBuf| match base {
            Some(b) if p.is_relative() => b.join(p),
            _ => p,
        };
        if src.phi.is_some() {
            self.phi_table = None;
        }
        if src.f.is_some() {
            self.f_table = None;
        }
        if let Some(p) = src.phi_table {
            self.phi_table = Some(rel(p));
        }
        if let Some(p) = src.f_table {
            self.f_table = Some(rel(p));
        }
        if let Some(p) = src.out {
            self.out = rel(p);
        }
        merge!(self, src; alpha, theta, beta, a, t_final, phi, f, modes, max_modes, x_points,
            time_steps, eigen_cells, fd_cells, fd_steps, residual_samples, source_samples,
            ladder_modes, ladder_fd, reference_modes, format, oracle);
        if src.tol.is_some() {
            self.tol = src.tol;
        }
    }

    fn check(&self) -> Result<(), CliError> {
        let positive = [
            ("x_points", self.x_points.saturating_sub(1)),
            ("time_steps", self.time_steps),
            ("eigen_cells", self.eigen_cells),
            ("max_modes", self.max_modes),
            ("residual_samples", self.residual_samples),
            ("reference_modes", self.reference_modes),
        ];
        for (name, v) in positive {
            if v == 0 {
                return Err(CliError::Config(format!("{name} is too small")));
            }
        }
        if self.modes == Modes::Count(0) {
            return Err(CliError::Config("modes must be at least 1".into()));
        }
        if let Some(tol) = self.tol {
            if !(tol >= 0.0 && tol.is_finite()) {
                return Err(CliError::Config(format!("tol must be a finite non-negative number (got {tol})")));
            }
        }
        Ok(())
    }

    /// Uniform output grid.
    pub fn x_grid(&self) -> Vec<f64> {
        let n = self.x_points - 1;
        (0..=n).map(|i| i as f64 / n as f64).collect()
    }

    /// Largest eigenfunction index the data refer to.
    pub fn referenced_modes(&self) -> Result<usize, CliError> {
        let mut k = 0;
        if self.phi_table.is_none() {
            k = k.max(parse(&self.phi, "phi")?.max_mode());
        }
        if self.f_table.is_none() {
            k = k.max(parse(&self.f, "f")?.max_mode());
        }
        Ok(k)
    }

    /// Builds the problem; `modes` resolves eigenfunction references.
    pub fn problem(&self, modes: Option<&EigenSystem<f64>>) -> Result<ProblemSpec<f64>, CliError> {
        let warp = TimeWarp::new(self.theta, self.a)?;
        let phi = match &self.phi_table {
            Some(path) => read_table(path)?,
            None => {
                let ast = parse(&self.phi, "phi")?;
                if ast.deps().t {
                    return Err(CliError::Config("phi may depend on x only".into()));
                }
                space_function(ast, modes)?
            }
        };
        let f = match &self.f_table {
            Some(path) => Source::stationary(read_table(path)?),
            None => source(parse(&self.f, "f")?, modes, warp, self.source_samples)?,
        };
        Ok(ProblemSpec::new(
            self.alpha,
            self.theta,
            self.beta,
            self.a,
            self.t_final,
            phi,
            f,
        )?)
    }
}

fn parse(src: &str, name: &str) -> Result<Ast, CliError> {
    expr::parse(src).map_err(|e| CliError::Config(format!("{name}: {e}")))
}

fn check_modes(ast: &Ast, modes: Option<&EigenSystem<f64>>) -> Result<(), CliError> {
    let k = ast.max_mode();
    if k > modes.map_or(0, |m| m.count()) {
        return Err(CliError::Config(format!("eigenfunction v{k} is not available")));
    }
    Ok(())
}

fn is_const(ast: &Ast) -> bool {
    let d = ast.deps();
    !d.x && !d.t
}

fn constant(ast: &Ast) -> f64 {
    ast.eval(&Env {
        x: 0.0,
        t: 0.0,
        s: 0.0,
        modes: None,
    })
}

fn space_function(ast: Ast, modes: Option<&EigenSystem<f64>>) -> Result<SampledFunction<f64>, CliError> {
    check_modes(&ast, modes)?;
    if is_const(&ast) {
        return Ok(SampledFunction::constant(constant(&ast)));
    }
    let modes = modes.cloned();
    Ok(SampledFunction::custom(move |x| {
        ast.eval(&Env {
            x,
            t: 0.0,
            s: 0.0,
            modes: modes.as_ref(),
        })
    }))
}

fn time_function(ast: Ast, warp: TimeWarp<f64>) -> SampledFunction<f64> {
    let (dt, ds) = (ast.diff(Var::T), ast.diff(Var::S));
    let env = move |t: f64| Env {
        x: 0.0,
        t,
        s: warp.forward(t).unwrap_or(f64::NAN),
        modes: None,
    };
    let value = ast;
    SampledFunction::custom_with_derivative(
        move |t| value.eval(&env(t)),
        move |t| {
            let p = warp.p();
            dt.eval(&env(t)) + ds.eval(&env(t)) * p * t.powf(p - 1.0)
        },
    )
}

/// Splits `ast` into separable terms when every factor of every additive
/// term depends on `x` or on time but not both; otherwise keeps it as a
/// general field.
fn source(
    ast: Ast,
    modes: Option<&EigenSystem<f64>>,
    warp: TimeWarp<f64>,
    samples: usize,
) -> Result<Source<f64>, CliError> {
    check_modes(&ast, modes)?;
    let deps = ast.deps();
    if !deps.t {
        return Ok(Source::stationary(space_function(ast, modes)?));
    }
    let mut terms = Vec::new();
    for factors in ast.terms() {
        if factors.iter().any(|(f, _)| f.deps().x && f.deps().t) {
            terms.clear();
            break;
        }
        let (time, space): (Vec<_>, Vec<_>) = factors.into_iter().partition(|(f, _)| f.deps().t);
        let space = space_function(Ast::from_factors(&space), modes)?;
        let time = if time.is_empty() {
            SampledFunction::constant(1.0)
        } else {
            time_function(Ast::from_factors(&time), warp)
        };
        terms.push(SeparableTerm { time, space });
    }
    if !terms.is_empty() {
        return Ok(Source::Separable(terms));
    }
    let modes = modes.cloned();
    let ast = Arc::new(ast);
    Ok(Source::field(
        move |x, t| {
            ast.eval(&Env {
                x,
                t,
                s: warp.forward(t).unwrap_or(f64::NAN),
                modes: modes.as_ref(),
            })
        },
        samples,
    ))
}

/// Two numeric columns `x, value`; a non-numeric first line is a header.
fn read_table(path: &Path) -> Result<SampledFunction<f64>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    let (mut xs, mut vs) = (Vec::new(), Vec::new());
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split(',').map(str::trim).collect();
        let parsed = (cols.len() == 2)
            .then(|| Some((cols[0].parse::<f64>().ok()?, cols[1].parse::<f64>().ok()?)))
            .flatten();
        match parsed {
            Some((x, v)) => {
                xs.push(x);
                vs.push(v);
            }
            None if n == 0 => continue,
            None => {
                return Err(CliError::Config(format!(
                    "{}:{}: expected two numeric columns",
                    path.display(),
                    n + 1
                )))
            }
        }
    }
    SampledFunction::table(xs, vs)
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}
