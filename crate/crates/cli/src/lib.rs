//! Command-line front end: argument parsing, configuration, dispatch and
//! exit codes.

pub mod commands;
pub mod config;
pub mod output;
pub mod render;

use clap::{Args, Parser, Subcommand};
use config::RunConfig;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(_) => EXIT_COMPUTE,
        }
    }
}

/// Whether a command's verdict passed.
pub type Verdict = Result<bool, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "knotapoly",
    version,
    about = "A-polynomials, SU(2) pillowcase images and perturbation planning for knots"
)]
pub struct Cli {
    /// JSON run configuration; its values are defaults for the flags
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Args, Clone, Default)]
pub struct GridArgs {
    /// Number of θ-slices
    #[arg(long = "n")]
    pub n: Option<usize>,
    /// Relator tolerance
    #[arg(long)]
    pub tol: Option<f64>,
    /// Seeds per slice
    #[arg(long)]
    pub seeds: Option<usize>,
    /// Pillowcase solver (quaternion, riley)
    #[arg(long)]
    pub solver: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the A-polynomial; prints its factored form
    Apoly {
        /// p/q, torus:p,q, braid:<letters> or a presentation JSON file
        knot: String,
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Sample the SU(2) pillowcase image as CSV `theta,eta,residual`
    Pillowcase {
        knot: String,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
        /// Also write witnesses (one unit quaternion per generator) as JSON
        #[arg(long, value_name = "FILE")]
        witnesses: Option<PathBuf>,
    },
    /// Plan shears: slice path when --eta0 is given, finite avoidance otherwise.
    /// Inputs are pillowcase images R_K (from --knot or a CSV via --set)
    Plan {
        #[arg(long)]
        knot: Option<String>,
        #[arg(long, value_name = "CSV")]
        set: Option<PathBuf>,
        #[arg(long, allow_negative_numbers = true)]
        eta0: Option<f64>,
        #[command(flatten)]
        grid: GridArgs,
        /// Sampling resolution of --set (default 2π/n)
        #[arg(long)]
        delta: Option<f64>,
        /// Slice-path shear g
        #[arg(long, value_name = "FILE")]
        g_out: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        g1_out: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        g2_out: Option<PathBuf>,
        /// Slice mode: write S_K = R_K + (0, −π) as CSV
        #[arg(long, value_name = "FILE")]
        sk_out: Option<PathBuf>,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Separation certificate for a set and two shears
    Certify {
        #[arg(long, value_name = "CSV")]
        set: PathBuf,
        #[arg(long, value_name = "FILE")]
        g1: PathBuf,
        #[arg(long, value_name = "FILE")]
        g2: PathBuf,
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Enumerate critical-point angle chains between two sets
    Critical {
        #[arg(long, value_name = "CSV")]
        p1: PathBuf,
        #[arg(long, value_name = "CSV")]
        p2: PathBuf,
        #[arg(long, value_name = "FILE")]
        g1: PathBuf,
        #[arg(long, value_name = "FILE")]
        g2: PathBuf,
        /// Match tolerance (default δ)
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Unit-torus slice check of an A-polynomial JSON
    Slices {
        apoly: PathBuf,
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Check pillowcase samples against an A-polynomial
    Validate {
        apoly: PathBuf,
        pillowcase: PathBuf,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Draw a pillowcase CSV as SVG
    Render {
        set: PathBuf,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
        /// Second point set, drawn as rings
        #[arg(long, value_name = "CSV")]
        overlay: Option<PathBuf>,
        /// Shear JSON whose graph is drawn (repeatable)
        #[arg(long, value_name = "FILE")]
        shear: Vec<PathBuf>,
        /// Plan JSON from a slice-path run: corridor and graph
        #[arg(long, value_name = "FILE")]
        plan: Option<PathBuf>,
        #[arg(long)]
        width: Option<u32>,
        #[arg(long)]
        height: Option<u32>,
        #[arg(long)]
        radius: Option<f64>,
    },
}

fn parse(argv: &[String]) -> Result<(Cli, RunConfig), i32> {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return Err(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let cfg = match &cli.config {
        Some(p) => match RunConfig::load(p) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: config {e}");
                return Err(EXIT_USAGE);
            }
        },
        None => RunConfig::default(),
    };
    if cli.command.is_some() {
        return Ok((cli, cfg));
    }
    let Some(argv) = cfg.argv() else {
        eprintln!(
            "error: no subcommand given (on the command line or as `subcommand` in --config)"
        );
        return Err(EXIT_USAGE);
    };
    match Cli::try_parse_from(&argv) {
        Ok(mut c) => {
            c.config = cli.config;
            Ok((c, cfg))
        }
        Err(e) => {
            let _ = e.print();
            Err(EXIT_USAGE)
        }
    }
}

/// Runs the command line `argv` (including the program name) and returns
/// the process exit code.
pub fn run(argv: &[String]) -> i32 {
    let (cli, cfg) = match parse(argv) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let command = cli.command.expect("resolved above");
    match commands::dispatch(command, &cfg) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAIL,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
