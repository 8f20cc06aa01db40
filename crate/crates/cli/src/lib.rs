//! Command-line front end: argument model, space selection, rendering and
//! the verification suite behind the `dirac` binary.

mod render;
mod select;
pub mod verify;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dirac_core::dirac::{eigenvalue, Method, Options};
use dirac_core::weyl::DEFAULT_ORBIT_CAP;
use dirac_core::Error;

pub use select::{select_pair, SpaceArgs};

#[derive(Debug, Parser)]
#[command(name = "dirac", version, about = "Exact square of the first Dirac eigenvalue on compact spin symmetric spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute lambda^2 for one space
    Compute(ComputeArgs),
    /// Reproduce the table of the quaternion-Kaehler symmetric spaces
    Table1(TableArgs),
    /// Cross-check closed form, orbit routes and identities
    Verify(VerifyArgs),
    /// Dump the catalog of spaces
    List(OutputArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Weyl,
    Restricted,
    SpinWeights,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Closed => Method::ClosedForm,
            MethodArg::Weyl => Method::WeylMin,
            MethodArg::Restricted => Method::RestrictedW,
            MethodArg::SpinWeights => Method::SpinWeights,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Fractional digits of the decimal approximation of lambda
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=64))]
    pub digits: u32,
}

#[derive(Debug, Clone, Args)]
pub struct CapArgs {
    /// Largest Weyl orbit the oracle routes may enumerate
    #[arg(long, default_value_t = DEFAULT_ORBIT_CAP, value_parser = parse_cap)]
    pub cap: usize,
}

fn parse_cap(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("cap must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
    pub method: MethodArg,
    #[command(flatten)]
    pub cap: CapArgs,
    /// Compute a formal value for a space without spin structure
    #[arg(long)]
    pub force: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    /// Values of m for the parameterized rows (default: smallest valid m and m+2)
    #[arg(long, value_delimiter = ',')]
    pub m: Vec<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Extra spaces with large orbits to include (E7)
    #[arg(long, value_delimiter = ',')]
    pub include: Vec<String>,
    #[command(flatten)]
    pub cap: CapArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("unknown space {0:?}; see `dirac list`")]
    UnknownSpace(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{failed} verification check(s) failed")]
    VerifyFailed { failed: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::UnknownSpace(_) | CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                Error::NoSpinStructure { .. } => 3,
                Error::OrbitCapExceeded { .. } => 4,
                Error::UnsupportedFamily { .. }
                | Error::IndexOutOfRange { .. }
                | Error::NodeNotOrderTwo { .. }
                | Error::InvalidParameter(_)
                | Error::InvalidPair(_) => 2,
                _ => 1,
            },
            _ => 1,
        }
    }

    pub fn is_broken_pipe(&self) -> bool {
        let kind = match self {
            CliError::Io(e) => Some(e.kind()),
            CliError::Json(e) => e.io_error_kind(),
            CliError::Csv(e) => match e.kind() {
                csv::ErrorKind::Io(e) => Some(e.kind()),
                _ => None,
            },
            _ => None,
        };
        kind == Some(std::io::ErrorKind::BrokenPipe)
    }

    pub fn hint(&self) -> Option<&'static str> {
        match self {
            CliError::Core(Error::NoSpinStructure { .. }) => {
                Some("pass --force for a formal value")
            }
            CliError::Core(Error::OrbitCapExceeded { .. }) => {
                Some("raise --cap or use --method closed")
            }
            _ => None,
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Compute(args) => run_compute(args, out),
        Command::Table1(args) => render::table1(args, out),
        Command::Verify(args) => verify::run_verify(args, out),
        Command::List(args) => render::list(args, out),
    }
}

pub fn run_compute(args: &ComputeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let pair = select_pair(&args.space, args.force)?;
    let opts = Options {
        cap: args.cap.cap,
        force: args.force,
        ..Options::default()
    };
    let result = eigenvalue(&pair, args.method.into(), &opts)?;
    render::result(&result, pair.parameter(), &args.output, out)
}
