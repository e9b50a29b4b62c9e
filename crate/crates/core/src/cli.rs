//! `hlk` command-line front end.
//!
//! ```text
//! hlk <subcommand> [<path>|-] [--trials N] [--seed S] [--verbose]
//! ```
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 parse error, 3 invalid
//! diagram, 4 self-test failure.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use thiserror::Error;

use crate::diagram::{linking_matrix, parse_diagram, LinkingError, ParseDiagramError};
use crate::exactla::{parse_matrix, smith_normal_form, IntMatrix, MatrixError};
use crate::invariant::Invariants;
use crate::selftest::{run_suite, Property, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID_DIAGRAM: i32 = 3;
pub const EXIT_SELFTEST: i32 = 4;

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum Subcommand {
    /// Print `Lk = {...}`
    Invariant,
    /// Print the linking matrix of a diagram
    Matrix,
    /// Print the quotient groups A1, A2 and the rank l
    Groups,
    /// Print D, U, V of the Smith normal form
    Snf,
    /// Run the randomized property suite
    Selftest,
}

#[derive(Parser, Clone, Debug, PartialEq, Eq)]
#[command(name = "hlk", version, about = "Linking invariants of two-component handlebody-links")]
pub struct CliConfig {
    #[arg(value_enum)]
    pub subcommand: Subcommand,
    /// Diagram or matrix file; `-` or omitted reads standard input
    pub input_path: Option<PathBuf>,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub verbose: bool,
}

#[derive(Error, Debug)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("diagram parse error: {0}")]
    Diagram(#[from] ParseDiagramError),
    #[error("matrix parse error: {0}")]
    Matrix(#[from] MatrixError),
    #[error("invalid diagram: {0}")]
    Linking(#[from] LinkingError),
    #[error("self-test failed")]
    SelfTest,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Diagram(_) | CliError::Matrix(_) => EXIT_PARSE,
            CliError::Linking(_) => EXIT_INVALID_DIAGRAM,
            CliError::SelfTest => EXIT_SELFTEST,
        }
    }
}

/// Input kind, decided by the first keyword of the first non-comment line.
#[derive(Clone, Debug)]
pub enum Input {
    Diagram(IntMatrix),
    Matrix(IntMatrix),
}

impl Input {
    pub fn matrix(&self) -> &IntMatrix {
        match self {
            Input::Diagram(m) | Input::Matrix(m) => m,
        }
    }
}

pub fn load_input(text: &str) -> Result<Input, CliError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .and_then(|l| l.split_whitespace().next());
    match first {
        Some("component") => {
            let d = parse_diagram(text)?;
            Ok(Input::Diagram(linking_matrix(&d)?))
        }
        Some("matrix") => Ok(Input::Matrix(parse_matrix(text)?)),
        Some(other) => Err(CliError::Diagram(ParseDiagramError::Syntax {
            line: 1 + text
                .lines()
                .position(|l| l.trim().starts_with(other))
                .unwrap_or(0),
            msg: format!("expected `component` or `matrix`, found `{other}`"),
        })),
        None => Err(CliError::Usage("empty input".into())),
    }
}

fn read_input(config: &CliConfig, stdin: &mut dyn Read) -> Result<String, CliError> {
    let mut text = String::new();
    match &config.input_path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)?;
        }
        _ => {
            stdin.read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

fn execute(config: &CliConfig, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), CliError> {
    if config.subcommand == Subcommand::Selftest {
        let report = run_suite(config.trials as usize, config.seed, &SuiteConfig::default());
        if config.verbose {
            for p in Property::ALL {
                writeln!(out, "{p}: {} failed", report.failed_trials(p))?;
            }
        }
        writeln!(out, "{}", report.summary())?;
        if report.all_passed() {
            return Ok(());
        }
        return Err(CliError::SelfTest);
    }

    let input = load_input(&read_input(config, stdin)?)?;
    let m = input.matrix();
    match config.subcommand {
        Subcommand::Invariant => {
            let inv = Invariants::of(m);
            writeln!(out, "{}", inv.lk)?;
        }
        Subcommand::Matrix => {
            if let Input::Matrix(_) = input {
                return Err(CliError::Usage("`matrix` expects a diagram file".into()));
            }
            write!(out, "{m}")?;
        }
        Subcommand::Groups => {
            let inv = Invariants::of(m);
            writeln!(out, "A1 = {}", inv.a1)?;
            writeln!(out, "A2 = {}", inv.a2)?;
            writeln!(out, "l = {}", inv.rank())?;
        }
        Subcommand::Snf => {
            let snf = smith_normal_form(m);
            writeln!(out, "# D")?;
            write!(out, "{}", snf.d)?;
            writeln!(out, "# U")?;
            write!(out, "{}", snf.u)?;
            writeln!(out, "# V")?;
            write!(out, "{}", snf.v)?;
        }
        Subcommand::Selftest => unreachable!(),
    }
    Ok(())
}

/// Runs one command. Results go to `out`, diagnostics to `err`; returns the
/// process exit code.
pub fn run(config: &CliConfig, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config, stdin, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "hlk: {e}");
            e.exit_code()
        }
    }
}

/// Parses argv and runs. Usage errors (including `--help`) are reported with
/// exit code 1, or 0 for help and version requests.
pub fn main_with_args<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CliConfig::try_parse_from(args) {
        Ok(config) => run(&config, stdin, out, err),
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hlk").chain(args.iter().copied());
        let code = main_with_args(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    const PAPER: &str = "matrix 3 4\n-1 -1 0 2\n1 -3 -2 0\n0 0 2 -2\n";
    const HOPF: &str = "component h1\nloop a\ncomponent h2\nloop b\ncrossing a b +\ncrossing b a +\n";

    #[test]
    fn invariant_from_stdin() {
        assert_eq!(call(&["invariant", "-"], PAPER), (0, "Lk = {1, 2, 4}\n".into(), String::new()));
        assert_eq!(call(&["invariant"], HOPF).1, "Lk = {1}\n");
    }

    #[test]
    fn groups_output() {
        let (code, out, _) = call(&["groups"], PAPER);
        assert_eq!(code, 0);
        assert_eq!(out, "A1 = Z/2 (+) Z/4\nA2 = Z^1 (+) Z/2 (+) Z/4\nl = 3\n");
    }

    #[test]
    fn matrix_requires_diagram() {
        assert_eq!(call(&["matrix"], HOPF).1, "matrix 1 1\n1\n");
        assert_eq!(call(&["matrix"], PAPER).0, EXIT_USAGE);
    }

    #[test]
    fn snf_output_reparses() {
        let (code, out, _) = call(&["snf"], PAPER);
        assert_eq!(code, 0);
        let blocks: Vec<&str> = out.split("# ").filter(|b| !b.is_empty()).collect();
        assert_eq!(blocks.len(), 3);
        let d = parse_matrix(blocks[0].trim_start_matches("D\n")).unwrap();
        assert_eq!(d, IntMatrix::from_rows(&[[1i64, 0, 0, 0], [0, 2, 0, 0], [0, 0, 4, 0]]).unwrap());
    }

    #[test]
    fn error_exit_codes() {
        assert_eq!(call(&["bogus"], "").0, EXIT_USAGE);
        assert_eq!(call(&["selftest", "--trials", "0"], "").0, EXIT_USAGE);
        assert_eq!(call(&["invariant"], "component a\nloop x\n").0, EXIT_PARSE);
        assert_eq!(call(&["invariant"], "matrix 1 1\nz\n").0, EXIT_PARSE);
        assert_eq!(call(&["invariant"], "hello\n").0, EXIT_PARSE);
        assert_eq!(call(&["invariant"], "").0, EXIT_USAGE);
        let odd = "component h1\nloop a\ncomponent h2\nloop b\ncrossing a b +\n";
        let (code, out, err) = call(&["invariant"], odd);
        assert_eq!(code, EXIT_INVALID_DIAGRAM);
        assert!(out.is_empty());
        assert!(err.contains("odd signed sum"));
        assert_eq!(call(&["invariant", "/nonexistent/file.hlk"], "").0, EXIT_USAGE);
    }

    #[test]
    fn selftest_summary() {
        let (code, out, _) = call(&["selftest", "--trials", "25", "--seed", "7"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "25/25 passed\n");
        let (_, verbose, _) = call(&["selftest", "--trials", "5", "--verbose"], "");
        assert!(verbose.contains("oracle-equivalence: 0 failed"));
        assert!(verbose.ends_with("5/5 passed\n"));
    }
}
