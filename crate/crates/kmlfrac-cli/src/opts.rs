//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "kmlfrac",
    version,
    about = "Generalized k-Mittag-Leffler functions, fractional derivatives and their transform images",
    after_help = "Exit codes: 0 success, 1 usage error, 2 evaluation non-convergence, 3 verification failure."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one function or operator value and print it with metadata
    Eval(EvalArgs),
    /// Write a 21-row derivative value table as CSV, with a discrepancy
    /// report against the bundled reference values
    Table(TableArgs),
    /// Write figure curve data (200 x-samples per curve) as long-format CSV
    Figure(FigureArgs),
    /// Run the verification suites and report residuals
    Verify(VerifyArgs),
}

/// Parameters of the generalized k-Mittag-Leffler function.
#[derive(Args, Debug, Clone, Copy)]
pub struct MlFlags {
    /// Deformation parameter k > 0
    #[arg(long, default_value_t = 0.5)]
    pub k: f64,
    /// Series denominator scale xi > 0
    #[arg(long, default_value_t = 0.5)]
    pub xi: f64,
    /// Series denominator offset zeta > 0
    #[arg(long, default_value_t = 0.2)]
    pub zeta: f64,
    /// Pochhammer base vartheta > 0
    #[arg(long, default_value_t = 0.5)]
    pub vartheta: f64,
    /// Pochhammer index multiplier q > 0
    #[arg(long, default_value_t = 0.4)]
    pub q: f64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projection {
    Magnitude,
    Real,
    Imag,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalTarget {
    Kgamma,
    Ml,
    Foxwright,
    Deriv,
    BetaImage,
    LaplaceImage,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// What to evaluate
    #[arg(value_enum)]
    pub target: EvalTarget,
    #[command(flatten)]
    pub ml: MlFlags,
    /// Derivative order sigma >= 0
    #[arg(long, default_value_t = 0.1)]
    pub sigma: f64,
    /// Operator deformation eta > 0
    #[arg(long, default_value_t = 0.3)]
    pub eta: f64,
    /// Power weight mu
    #[arg(long, default_value_t = 0.5)]
    pub mu: f64,
    /// Argument power nu > 0
    #[arg(long, default_value_t = 0.8)]
    pub nu: f64,
    /// Operator side
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    pub side: SideArg,
    /// Evaluation point of the operator/transform
    #[arg(long, default_value_t = 1.0)]
    pub x: f64,
    /// Series argument (ml, foxwright)
    #[arg(long, default_value_t = 1.0)]
    pub z: f64,
    /// Beta/Laplace transform order l > 0
    #[arg(long, default_value_t = 1.0)]
    pub l: f64,
    /// Beta transform order m > 0
    #[arg(long, default_value_t = 1.0)]
    pub m: f64,
    /// Laplace transform variable s > 0
    #[arg(long, default_value_t = 2.0)]
    pub s: f64,
    /// Relative series tolerance
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Upper Fox-Wright pair a:A (repeatable), e.g. --upper 0.5:0.4
    #[arg(long, value_name = "a:A")]
    pub upper: Vec<String>,
    /// Lower Fox-Wright pair b:B (repeatable)
    #[arg(long, value_name = "b:B")]
    pub lower: Vec<String>,
    /// Use the alternative (vartheta/k, q/k) multiplier convention in the
    /// Laplace image instead of the derived (vartheta/k, q)
    #[arg(long = "compat-th5-qk", default_value_t = false)]
    pub compat_th5_qk: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// 1 = left-sided operator, 2 = right-sided operator
    #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
    pub which: u8,
    #[command(flatten)]
    pub ml: MlFlags,
    /// Derivative orders (column per value)
    #[arg(long, value_delimiter = ',', default_values_t = [0.1, 0.2, 0.3, 0.4])]
    pub sigma: Vec<f64>,
    /// Operator deformation eta > 0
    #[arg(long, default_value_t = 0.3)]
    pub eta: f64,
    /// Power weight mu
    #[arg(long, default_value_t = 0.5)]
    pub mu: f64,
    /// Argument power nu > 0
    #[arg(long, default_value_t = 0.8)]
    pub nu: f64,
    /// Output CSV path
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Decimal places for table cells
    #[arg(long, default_value_t = 2)]
    pub decimals: usize,
    /// Relative series tolerance
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct FigureArgs {
    /// Figure number
    #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
    pub id: u8,
    #[command(flatten)]
    pub ml: MlFlags,
    /// Override the sigma values of the sweep (comma-separated)
    #[arg(long, value_delimiter = ',')]
    pub sigma: Option<Vec<f64>>,
    /// Override the eta values of the sweep (comma-separated)
    #[arg(long, value_delimiter = ',')]
    pub eta: Option<Vec<f64>>,
    /// Power weight mu
    #[arg(long, default_value_t = 0.5)]
    pub mu: f64,
    /// Argument power nu > 0
    #[arg(long, default_value_t = 0.8)]
    pub nu: f64,
    /// Output path prefix; writes <prefix>_a.csv (right-sided) and
    /// <prefix>_b.csv (left-sided)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Decimal places for curve values
    #[arg(long, default_value_t = 6)]
    pub decimals: usize,
    /// Projection used for the curve values
    #[arg(long, value_enum, default_value_t = Projection::Magnitude)]
    pub projection: Projection,
    /// Relative series tolerance
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteArg {
    Identities,
    Reductions,
    Oracle,
    Transforms,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Which suite to run
    #[arg(value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
}
