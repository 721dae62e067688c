//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use trigbasis::{BasisSpec, GridKind, HarmonicBudget, SplineShape, UniformGrid};

use crate::error::{CliError, Result};
use crate::functions::TestFunction;

#[derive(Debug, Parser)]
#[command(
    name = "trigbasis",
    version,
    about = "Cardinal trigonometric interpolation and least-squares fitting on uniform periodic grids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the nodes of a uniform grid
    Grid(GridCmd),
    /// Sample fundamental basis functions along the period
    Basis(BasisCmd),
    /// Interpolate or least-squares fit a named test function
    Fit(FitCmd),
    /// Assemble a Gram matrix and report its deviation from identity
    Gram(GramCmd),
}

impl Command {
    pub fn output(&self) -> &OutputOpts {
        match self {
            Command::Grid(c) => &c.output,
            Command::Basis(c) => &c.output,
            Command::Fit(c) => &c.output,
            Command::Gram(c) => &c.output,
        }
    }
}

#[derive(Debug, Args)]
pub struct GridOpts {
    /// Grid family: 0 (first node at 0) or 1 (offset by half a spacing)
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub grid: u8,

    /// Number of nodes (odd, at least 3)
    #[arg(long)]
    pub n: usize,
}

impl GridOpts {
    pub fn build(&self) -> Result<UniformGrid> {
        let kind = GridKind::from_tag(self.grid).expect("clap range keeps the tag in 0..=1");
        Ok(UniformGrid::new(kind, self.n)?)
    }
}

#[derive(Debug, Args)]
pub struct BasisOpts {
    /// Basis family
    #[arg(long, value_enum)]
    pub basis: BasisKind,

    /// Harmonic budget for the least-squares families (0..=n)
    #[arg(long)]
    pub q: Option<usize>,

    /// Spline smoothness parameter
    #[arg(long, default_value_t = 1)]
    pub r: u32,

    /// Spline series truncation order
    #[arg(long, default_value_t = 1000)]
    pub trunc: usize,
}

impl BasisOpts {
    pub fn to_spec(&self) -> Result<BasisSpec> {
        let shape = || SplineShape::new(self.r, self.trunc);
        let budget = |name: &str| {
            self.q
                .map(HarmonicBudget)
                .ok_or_else(|| CliError::Config(format!("--q is required for {name}")))
        };
        Ok(match self.basis {
            BasisKind::InterpPoly => BasisSpec::InterpPoly,
            BasisKind::InterpSpline => BasisSpec::InterpSpline(shape()?),
            BasisKind::LsPoly => BasisSpec::LsPoly(budget("ls-poly")?),
            BasisKind::LsSpline => BasisSpec::LsSpline(budget("ls-spline")?, shape()?),
        })
    }
}

#[derive(Debug, Args)]
pub struct OutputOpts {
    /// Output format for the data stream
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,

    /// Write data to this file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisKind {
    InterpPoly,
    InterpSpline,
    LsPoly,
    LsSpline,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GramKind {
    Discrete,
    Continuous,
}

#[derive(Debug, Args)]
pub struct GridCmd {
    #[command(flatten)]
    pub grid: GridOpts,
    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Debug, Args)]
pub struct BasisCmd {
    #[command(flatten)]
    pub grid: GridOpts,
    #[command(flatten)]
    pub basis: BasisOpts,

    /// Comma-separated 1-based node indices to emit (default: every node)
    #[arg(long, value_delimiter = ',')]
    pub indices: Option<Vec<usize>>,

    /// Number of equally spaced output abscissae on [0, 2pi]
    #[arg(long, default_value_t = 721)]
    pub points: usize,

    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Debug, Args)]
pub struct FitCmd {
    #[command(flatten)]
    pub grid: GridOpts,
    #[command(flatten)]
    pub basis: BasisOpts,

    /// Test function to sample at the grid nodes
    #[arg(long, value_enum)]
    pub func: TestFunction,

    /// Number of equally spaced output abscissae on [0, 2pi]
    #[arg(long, default_value_t = 721)]
    pub points: usize,

    #[command(flatten)]
    pub output: OutputOpts,
}

#[derive(Debug, Args)]
pub struct GramCmd {
    #[command(flatten)]
    pub grid: GridOpts,
    #[command(flatten)]
    pub basis: BasisOpts,

    /// Which scalar product to assemble the matrix under
    #[arg(long, value_enum, default_value_t = GramKind::Discrete)]
    pub kind: GramKind,

    /// Quadrature points for the continuous scalar product
    #[arg(long, default_value_t = 4096)]
    pub points: usize,

    #[command(flatten)]
    pub output: OutputOpts,
}
