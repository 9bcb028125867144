mod json;
mod run;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "rescope",
    version,
    about = "Residues, reductions and telescopers for rational functions in t and x"
)]
pub struct Cli {
    /// The rational q for q-shift cases, as p or p/q
    #[arg(long, global = true)]
    pub q: Option<String>,
    /// Highest telescoper order to try (defaults to the internal bound)
    #[arg(long, global = true)]
    pub max_order: Option<usize>,
    /// Series truncation order
    #[arg(long, global = true, default_value_t = 12)]
    pub trunc: usize,
    /// Print one JSON object instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Read one input expression per line and print JSON Lines
    #[arg(long, global = true)]
    pub batch: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Dt {
    Dt,
    St,
    Qt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Dx {
    Dx,
    Sx,
    Qx,
}

#[derive(Args, Debug, Clone)]
pub struct XArgs {
    #[arg(long, value_enum)]
    pub dx: Dx,
    /// Rational function in t and x
    #[arg(allow_hyphen_values = true)]
    pub expr: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct CaseArgs {
    #[arg(long, value_enum)]
    pub dt: Dt,
    #[arg(long, value_enum)]
    pub dx: Dx,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Split f into D(g) plus its residual form
    Reduce(XArgs),
    /// Residues of the residual form of f
    Residues(XArgs),
    /// Decide whether f = D(g) for a rational g
    Summable(XArgs),
    /// Decide existence of a telescoper and construct the minimal one
    Telescope {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Check L(f) = D_x(g) exactly
    Verify {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        op: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Decide whether an operator telescopes some non-exact f, and build such an f
    Characterize {
        #[command(flatten)]
        case: CaseArgs,
        /// Operator in Dt, St or Qt
        #[arg(allow_hyphen_values = true)]
        op: Option<String>,
        /// For dt/dx: minimal polynomial P(t, x) of an algebraic solution
        #[arg(long)]
        poly: Option<String>,
    },
    /// Differential equation and series of the diagonal of f
    Diag {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// The binary-word example: compute the operator and compare with the printed one
    EzDemo,
    /// Rational solutions of an operator
    SolveRational {
        #[arg(long, value_enum)]
        dt: Dt,
        #[arg(allow_hyphen_values = true)]
        op: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    ExitCode::from(run::main(&cli))
}
