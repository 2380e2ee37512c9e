//! The `leibcx` command line: algebra files, reports and exit codes.
//!
//! Exit codes: 0 when every asserted check passes, 1 when one fails, 2 for
//! input errors (unreadable files, bad schema, unmet preconditions).

pub mod commands;
pub mod error;
pub mod input;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

pub use error::{CliError, CliResult};
use input::{algebra_to_json, load_algebra, load_cocycle};
use report::{to_canonical_string, Report};
pub use suites::Suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "leibcx",
    version,
    about = "Exact (co)homology of Leibniz algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Truncation degree N of the free Lie algebra.
    #[arg(long, global = true, default_value_t = 4)]
    pub max_degree: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here. For `double` and `catalog NAME` the algebra file is written instead.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Leibniz identity on all basis triples.
    Validate { algebra: String },
    /// Symmetric ideal and the quotient Lie algebra.
    Liezation { algebra: String },
    /// HA_k from the free Lie chain complex, optionally with Loday homology.
    Homology {
        algebra: String,
        #[arg(long)]
        loday: bool,
    },
    /// HA^n from anti-cyclic cochains, optionally classifying a twist.
    Cohomology {
        algebra: String,
        #[arg(long)]
        cocycle: Option<String>,
    },
    /// Dimension of Omega0 for a Lie algebra.
    Omega0 { algebra: String },
    /// The double g + g* with canonical form, optionally twisted.
    Double {
        algebra: String,
        #[arg(long)]
        cocycle: Option<String>,
    },
    /// The truncated dg Lie algebra DR g[1] and its identities.
    Dr { algebra: String },
    /// Run verification suites.
    Check {
        algebra: String,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// List the built-in algebras, or print one.
    Catalog { name: Option<String> },
}

fn write_file(path: &PathBuf, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// The report plus an algebra to emit with `-o`, when the command makes one.
fn execute(cli: &Cli) -> CliResult<(Report, Option<leibcx::Algebra>)> {
    let n = cli.max_degree;
    let full = cli.format == Format::Json;
    let with_cocycle =
        |spec: &Option<String>, dim| spec.as_deref().map(|p| load_cocycle(p, dim)).transpose();
    Ok(match &cli.command {
        Command::Validate { algebra } => {
            let (a, src) = load_algebra(algebra)?;
            (commands::validate(&a, src)?, None)
        }
        Command::Liezation { algebra } => {
            let (a, src) = load_algebra(algebra)?;
            (commands::liezation_report(&a, src)?, None)
        }
        Command::Homology { algebra, loday } => {
            let (a, src) = load_algebra(algebra)?;
            (commands::homology_report(&a, src, n, *loday, full)?, None)
        }
        Command::Cohomology { algebra, cocycle } => {
            let (a, src) = load_algebra(algebra)?;
            let h = with_cocycle(cocycle, a.dim())?;
            (commands::cohomology_report(&a, src, n, h)?, None)
        }
        Command::Omega0 { algebra } => {
            let (a, src) = load_algebra(algebra)?;
            (commands::omega0_report(&a, src)?, None)
        }
        Command::Double { algebra, cocycle } => {
            let (a, src) = load_algebra(algebra)?;
            let h = with_cocycle(cocycle, a.dim())?;
            let (r, d) = commands::double_report(&a, src, h)?;
            (r, Some(d))
        }
        Command::Dr { algebra } => {
            let (a, src) = load_algebra(algebra)?;
            (commands::dr_report(&a, src, n)?, None)
        }
        Command::Check { algebra, suite } => {
            let (a, src) = load_algebra(algebra)?;
            (commands::check_report(&a, src, n, *suite)?, None)
        }
        Command::Catalog { name } => commands::catalog_report(name.as_deref())?,
    })
}

/// Runs the command line and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    let start = Instant::now();
    let (report, emitted) = match execute(&cli) {
        Ok(x) => x,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    let text = match cli.format {
        Format::Json => to_canonical_string(&report.to_json(start.elapsed())),
        Format::Text => report.to_text(),
    };
    let written = match (&cli.output, emitted) {
        (Some(path), Some(a)) => write_file(path, &to_canonical_string(&algebra_to_json(&a)))
            .map(|()| out.write_all(text.as_bytes()).is_ok()),
        (Some(path), None) => write_file(path, &text).map(|()| true),
        (None, _) => Ok(out.write_all(text.as_bytes()).is_ok()),
    };
    match written {
        Ok(true) => {}
        Ok(false) => return 2,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    }
    if report.passed() {
        0
    } else {
        1
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
