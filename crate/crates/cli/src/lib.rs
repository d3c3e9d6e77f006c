// Copyright 2026 the Archimedes Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line reports for chord-section calculus on convex curves.
//!
//! The `archimedes` binary wraps [`archimedes_core`] with curve-spec files,
//! JSON/CSV reports and scriptable exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | satisfied / parabola / all checks pass |
//! | 1 | violated / not a parabola / a check failed |
//! | 2 | the curve is flagged as not `C^3`; verdict withheld |
//! | 64 | usage error: bad flags, unreadable spec, invalid parameters |
//! | 70 | numerical failure inside a computation |
//! | 74 | the report could not be written |

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

pub mod cli;
pub mod commands;
pub mod output;
pub mod spec;

pub use cli::{Cli, Format, RunConfig};
pub use commands::Outcome;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_SOFTWARE: i32 = 70;
pub const EXIT_IO: i32 = 74;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(archimedes_core::Error),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use archimedes_core::Error as E;
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(
                E::InvalidParameter { .. } | E::OutsideDomain { .. } | E::NotAGraph,
            ) => EXIT_USAGE,
            CliError::Compute(_) => EXIT_SOFTWARE,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Compute(e) => write!(f, "{e}"),
            CliError::Io(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<archimedes_core::Error> for CliError {
    fn from(e: archimedes_core::Error) -> Self {
        CliError::Compute(e)
    }
}

/// Parse `args` (program name first), run the command and write the report
/// to `--out` or `stdout`. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    use clap::error::ErrorKind;
    use clap::Parser;

    let parsed = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK {
                write!(stdout, "{}", e.render())
            } else {
                write!(stderr, "{}", e.render())
            };
            return code;
        }
    };
    let outcome = parsed
        .into_config()
        .and_then(|cfg| commands::execute(&cfg).map(|o| (cfg, o)));
    match outcome {
        Ok((cfg, outcome)) => {
            let written = match &cfg.out {
                Some(path) => std::fs::write(path, &outcome.body)
                    .map_err(|e| CliError::Io(format!("cannot write `{path}`: {e}"))),
                None => stdout
                    .write_all(outcome.body.as_bytes())
                    .map_err(|e| CliError::Io(format!("cannot write report: {e}"))),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return e.exit_code();
            }
            for line in &outcome.messages {
                let _ = writeln!(stderr, "{line}");
            }
            outcome.exit
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
