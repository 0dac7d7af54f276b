use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;
use equilines::groebner::DEFAULT_PAIR_BUDGET;
use equilines::numeric::DEFAULT_PRECISION;
use equilines::solver::Tolerances;

/// Polynomial systems for equiangular lines: generate, solve, verify.
#[derive(Debug, Parser)]
#[command(name = "equilines", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Summary format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a polynomial system.
    Gen(GenArgs),
    /// Compute a reduced lex Gröbner basis of a system file.
    Groebner(GroebnerArgs),
    /// Solve a zero-dimensional basis numerically and classify the points.
    Solve(SolveArgs),
    /// Verify a fiducial vector, a real line set or a solutions file.
    Verify(VerifyArgs),
    /// Normalized overlaps of a fiducial vector.
    Overlaps(OverlapsArgs),
    /// Determinant and admissible angles of a real sign pattern.
    Gram(GramArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    ComplexFull,
    Wh,
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Pipeline {
    Lex,
    #[value(name = "grevlex-then-lex", alias = "grevlex_then_lex")]
    GrevlexThenLex,
}

impl Pipeline {
    pub fn name(self) -> &'static str {
        match self {
            Pipeline::Lex => "lex",
            Pipeline::GrevlexThenLex => "grevlex_then_lex",
        }
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long)]
    pub d: usize,
    /// Number of lines (real systems).
    #[arg(long)]
    pub n: Option<usize>,
    /// Angle: `p/q`, `sqrt(p/q)` or `alpha` for a symbolic angle.
    #[arg(long)]
    pub alpha: Option<String>,
    /// Upper-triangle signs, row by row, e.g. `+,+,-`.
    #[arg(long)]
    pub signs: Option<String>,
    /// Omit the phase-fixing equation (Weyl–Heisenberg systems).
    #[arg(long)]
    pub no_phase_fix: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GroebnerArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Pipeline::GrevlexThenLex)]
    pub order: Pipeline,
    #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET)]
    pub pair_budget: u64,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    pub time_limit: Option<u64>,
    #[arg(long, env = "EQUILINES_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Recompute even when the cache holds a basis.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct ToleranceArgs {
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    pub precision: usize,
    #[arg(long, default_value_t = Tolerances::default().residual)]
    pub tol_residual: f64,
    #[arg(long, default_value_t = Tolerances::default().cluster)]
    pub tol_cluster: f64,
    #[arg(long, default_value_t = Tolerances::default().realness)]
    pub tol_realness: f64,
    #[arg(long, default_value_t = Tolerances::default().matching)]
    pub tol_match: f64,
}

impl ToleranceArgs {
    pub fn tolerances(&self) -> Tolerances {
        Tolerances {
            residual: self.tol_residual,
            cluster: self.tol_cluster,
            realness: self.tol_realness,
            matching: self.tol_match,
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Basis file from `groebner`.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// System file the basis was computed from.
    #[arg(long)]
    pub system: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub tol: ToleranceArgs,
    #[arg(long)]
    pub branch_cap: Option<usize>,
    /// Accept a basis whose recorded upstream hash differs.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub tol: ToleranceArgs,
}

#[derive(Debug, Args)]
pub struct OverlapsArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    pub precision: usize,
}

#[derive(Debug, Args)]
pub struct GramArgs {
    /// Sign pattern file `{"N": .., "signs": [[..]]}`.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-10)]
    pub tol_residual: f64,
}

/// Validated settings shared by the numeric commands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub precision: usize,
    pub tolerances: Tolerances,
}

impl RunConfig {
    pub fn new(tol: &ToleranceArgs) -> Result<Self, CliError> {
        let cfg = RunConfig { precision: tol.precision, tolerances: tol.tolerances() };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.precision < 53 {
            return Err(CliError::Config(format!("precision must be at least 53 bits, got {}", self.precision)));
        }
        self.tolerances.validate().map_err(CliError::Config)
    }
}

pub fn check_dimension(d: usize) -> Result<(), CliError> {
    if d == 0 {
        return Err(CliError::Config("d must be at least 1".into()));
    }
    Ok(())
}
