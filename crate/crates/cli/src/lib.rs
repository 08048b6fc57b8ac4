//! Command-line front end for `aspw-core`: text syntaxes, JSON reports and
//! the subcommands of the `aspw` binary.

pub mod ext;
pub mod parse;
pub mod report;
pub mod verify;
pub mod witt;

use std::fmt;

use clap::{Args, Parser, Subcommand};

pub use report::{Report, SCHEMA};

/// Exit status of a run.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Parse(parse::ParseError),
    Core(aspw_core::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "error: {e}"),
            CliError::Usage(s) => write!(f, "error: {s}"),
        }
    }
}

impl From<parse::ParseError> for CliError {
    fn from(e: parse::ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<aspw_core::Error> for CliError {
    fn from(e: aspw_core::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "aspw", version, about = "Elementary abelian p-extensions and Artin-Schreier-Witt extensions of F_q(T)")]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for exhaustive checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub cmd: Command,
}

/// `f(y) = u` over `k0(T)`.
#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    /// Constant field, e.g. `p=3,s=3,mod=x^3-x-2[,gen=w]`.
    #[arg(long)]
    pub field: String,
    /// Additive polynomial, `X^27-X` or `[a0,...,1]`.
    #[arg(long)]
    pub f: String,
    /// Right-hand side in `T`, e.g. `1/(T+1)^54 + T^9 + w`.
    #[arg(long)]
    pub u: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduce the right-hand side by shifts `y -> y - delta`.
    Reduce {
        #[command(flatten)]
        spec: SpecArgs,
        /// Normalize only at this place (`inf` or a monic irreducible in T).
        #[arg(long)]
        place: Option<String>,
    },
    /// Ramified places with pole orders and ramification indices.
    Ramify {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Degree-p subextensions with their equations and generators.
    Subext {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Splitting of a place: verdict and (e, f, g).
    Split {
        #[command(flatten)]
        spec: SpecArgs,
        /// `inf` or a monic irreducible polynomial in T.
        #[arg(long)]
        place: String,
        /// Also count roots in the residue field and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Relations between generators.
    Relate {
        #[command(flatten)]
        spec: SpecArgs,
        /// Normal form of the generator y^(p^J).
        #[arg(long, conflicts_with_all = ["subext", "linear"])]
        power: Option<u32>,
        /// Express every subextension generator through y.
        #[arg(long, conflicts_with = "linear")]
        subext: bool,
        /// Coefficients `A_0; A_1; ...` of l(X) = sum A_j X^(p^j); prints f(l(y) + D).
        #[arg(long)]
        linear: Option<String>,
        /// The shift D for `--linear`.
        #[arg(long, default_value = "0", requires = "linear")]
        shift: String,
    },
    /// Build y = sum mu_i z_i from z_i^p - z_i = gamma_i.
    Combine {
        #[arg(long)]
        field: String,
        #[arg(long)]
        f: String,
        /// `gamma_1; gamma_2; ...`
        #[arg(long)]
        gammas: String,
        /// `mu_1; mu_2; ...`, a basis of the roots of f.
        #[arg(long)]
        mu: String,
    },
    /// Witt vectors and Artin-Schreier-Witt equations.
    Witt {
        #[command(subcommand)]
        cmd: witt::WittCommand,
    },
    /// Exhaustive and sampled checks.
    Verify {
        #[command(subcommand)]
        cmd: verify::VerifyCommand,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn dispatch(cli: &Cli) -> CliResult<Report> {
    match &cli.cmd {
        Command::Reduce { spec, place } => ext::reduce(spec, place.as_deref()),
        Command::Ramify { spec } => ext::ramify(spec),
        Command::Subext { spec } => ext::subext(spec),
        Command::Split { spec, place, oracle } => ext::split(spec, place, *oracle),
        Command::Relate { spec, power, subext, linear, shift } => {
            ext::relate(spec, *power, *subext, linear.as_deref(), shift)
        }
        Command::Combine { field, f, gammas, mu } => ext::combine(field, f, gammas, mu),
        Command::Witt { cmd } => witt::run(cmd),
        Command::Verify { cmd } => verify::run(cmd, cli.jobs.max(1)),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let msg = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: msg, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: msg }
            };
        }
    };
    match dispatch(&cli) {
        Ok(rep) => Outcome {
            code: if rep.disagreement { EXIT_DISAGREE } else { EXIT_OK },
            stdout: if cli.json { rep.to_json_string() } else { rep.text.clone() },
            stderr: String::new(),
        },
        Err(e) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("{e}\n") },
    }
}
