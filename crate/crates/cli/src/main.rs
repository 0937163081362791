mod commands;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

/// Cohomology classes of positroid and amplituhedron varieties.
#[derive(Parser, Debug)]
#[command(name = "positroid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Affine Stanley symmetric function of a cell
    Stanley(Opts),
    /// Positroid class in H*(Gr(k,n)), or the amplituhedron class when --m is given
    Class(Opts),
    /// Truncation of the positroid class into H*(Gr(k,k+m))
    Truncate(Opts),
    /// Kinematical support scan over Bound(k,n), or a single cell with --f
    Support(Opts),
    /// Projection degree of a cell (exact on top cells, gcd bound otherwise)
    Degree(Opts),
    /// List Bound(k,n) sorted by (length, window)
    Enumerate(Opts),
    /// Exact totally nonnegative point of a cell
    SamplePoint(Opts),
    /// Compare numeric image dimensions with predicted support on every cell
    Verify(Opts),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Schur,
    Monomial,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Window notation, e.g. "[4,3,6,5,8,7,10,9]"
    #[arg(long)]
    pub f: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Relative singular-value cutoff for numeric ranks
    #[arg(long, default_value_t = positroid::geom::DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = BasisArg::Schur)]
    pub basis: BasisArg,
    /// Write output to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Lift the default size limits (n <= 8, n <= 7 for verify)
    #[arg(long)]
    pub unsafe_large: bool,
}

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Disagreement(String),
    Io(io::Error),
}

impl From<positroid::Error> for CliError {
    fn from(e: positroid::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (opts, cmd): (Opts, fn(&Opts) -> commands::Outcome) = match cli.command {
        Command::Stanley(o) => (o, commands::stanley),
        Command::Class(o) => (o, commands::class),
        Command::Truncate(o) => (o, commands::truncate),
        Command::Support(o) => (o, commands::support),
        Command::Degree(o) => (o, commands::degree),
        Command::Enumerate(o) => (o, commands::enumerate),
        Command::SamplePoint(o) => (o, commands::sample_point),
        Command::Verify(o) => (o, commands::verify),
    };
    let (mut report, failure) = cmd(&opts)?;
    report.seed = opts.seed;
    let mut sink: Box<dyn Write> = match &opts.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    report.write(opts.format, &mut sink)?;
    sink.flush()?;
    match failure {
        Some(msg) => Err(CliError::Disagreement(msg)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Disagreement(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::Io(e)) => {
            eprintln!("io error: {e}");
            ExitCode::from(1)
        }
    }
}
