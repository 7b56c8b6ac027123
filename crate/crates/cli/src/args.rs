use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bisyl",
    version,
    about = "Exact checks of determinant identities for minor-product compound matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check one identity or theorem; every k when --k is omitted.
    Verify(VerifyArgs),
    /// Divide the symbolic det W by the divisor a theorem promises.
    Quotient(QuotientArgs),
    /// Seeded integer-point testing.
    Fuzz(FuzzArgs),
    /// Run the full acceptance suite.
    Selftest(SelftestArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Sylvester,
    Chio,
    CauchyBinet,
    Griolv,
    LemmaAdb0,
    B0,
    Ab0,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    B0,
    Ab0,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    B0,
    Ab0,
    Adb0,
    Sylv,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Emit one JSON object per report on standard output.
    #[arg(long)]
    pub json: bool,
    /// Log progress to standard error.
    #[arg(long)]
    pub verbose: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub check: CheckArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
    /// Random instances, for checks that sample.
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Entry magnitude bound for pointwise fallbacks.
    #[arg(long)]
    pub bound: Option<i64>,
    /// Inner dimension for cauchy-binet (default n).
    #[arg(long)]
    pub p: Option<usize>,
    /// Column count of B for cauchy-binet (default n).
    #[arg(long)]
    pub m: Option<usize>,
    /// Run symbolic checks past their default size bound.
    #[arg(long)]
    pub allow_large: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct QuotientArgs {
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Also count the monomials of det W with no corner constraints.
    #[arg(long)]
    pub unconstrained_count: bool,
    /// Run past the default size bound.
    #[arg(long)]
    pub allow_large: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    #[arg(long, value_enum)]
    pub theorem: TheoremArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub trials: u64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub bound: i64,
    /// Drop the theorem's zero pattern; failures are then expected.
    #[arg(long)]
    pub negative_control: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[command(flatten)]
    pub output: Output,
}
