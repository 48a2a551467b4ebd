//! The `nkt` command line, as a library so tests can drive it in-process.
//!
//! Every command renders the same report two ways: line-oriented text under
//! a `schema: nkt-report/1` header, or a single JSON object. Elapsed time is
//! the only nondeterministic field and `--stable` drops it.

mod commands;
mod range;
mod report;

use std::io::BufRead;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nkt_core::NktError;

pub use range::Range;
pub use report::{Report, SCHEMA, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "nkt",
    version,
    about = "Minimum (n,k,t)-graphs: closed forms, constructions and exhaustive checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Omit timing so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub stable: bool,

    /// Worker threads for searches; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Structured,
}

#[derive(Debug, Args)]
pub struct Nkt {
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(short = 'k')]
    pub k: usize,
    #[arg(short = 't')]
    pub t: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum edge count and every minimizing clique union.
    MinEdges {
        #[command(flatten)]
        p: Nkt,
        /// Fix the independence number.
        #[arg(short = 'r')]
        r: Option<usize>,
    },
    /// Build a minimum (n,k,t,r)-graph by the recursive construction.
    Construct {
        #[command(flatten)]
        p: Nkt,
        #[arg(short = 'r')]
        r: usize,
    },
    /// Test graph6 graphs for membership; reads stdin when no graph is given.
    Verify {
        graph6: Option<String>,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 't')]
        t: usize,
        /// Also require independence number `r`.
        #[arg(short = 'r')]
        r: Option<usize>,
    },
    /// Exhaustive searches over all graphs on a few vertices.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// Minimum edge counts over ranges such as `4..10`.
    Table {
        #[arg(short = 'n')]
        n: Range,
        #[arg(short = 'k')]
        k: Range,
        #[arg(short = 't')]
        t: Range,
    },
}

#[derive(Debug, Args)]
pub struct Cap {
    /// Permit searches on 8 vertices.
    #[arg(long = "allow-n8")]
    pub allow_n8: bool,
}

#[derive(Debug, Subcommand)]
pub enum SearchKind {
    /// Fewest edges over (n,k,t)-graphs against the closed form.
    Conjecture {
        #[command(flatten)]
        p: Nkt,
        #[command(flatten)]
        cap: Cap,
    },
    /// Fewest edges over (n,k,t,r)-graphs against the closed form.
    Mainthm {
        #[command(flatten)]
        p: Nkt,
        #[arg(short = 'r')]
        r: usize,
        #[command(flatten)]
        cap: Cap,
    },
    /// Fewest cliques on `s` vertices over (n,k,t)-graphs.
    CliqueMin {
        #[command(flatten)]
        p: Nkt,
        #[arg(short = 's')]
        s: usize,
        #[command(flatten)]
        cap: Cap,
    },
    /// (n,k,t)-graphs that lose the property when any edge is removed.
    Saturation {
        #[command(flatten)]
        p: Nkt,
        #[command(flatten)]
        cap: Cap,
    },
    /// K4 counts of the C5 clique-blowup against two disjoint halves.
    Nikiforov {
        #[arg(short = 'n')]
        n: usize,
    },
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(err: &NktError) -> i32 {
    match err {
        NktError::Infeasible(_) => EXIT_INFEASIBLE,
        NktError::UnsupportedSize { .. } => EXIT_CAP,
        NktError::InvalidInput(_) | NktError::Parse(_) => EXIT_ERROR,
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, S>(args: I, stdin: &mut dyn BufRead) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome {
                        stdout: text,
                        stderr: String::new(),
                        code: EXIT_OK,
                    }
                }
                _ => Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_ERROR,
                },
            };
        }
    };
    let started = Instant::now();
    let mut stderr = String::new();
    let result = commands::execute(&cli, stdin, &mut stderr);
    let elapsed = (!cli.stable).then(|| started.elapsed());
    match result {
        Ok(report) => Outcome {
            stdout: report.render(cli.format, elapsed),
            stderr,
            code: EXIT_OK,
        },
        Err(failure) => {
            stderr.push_str(&format!("error: {}\n", failure.error));
            if let Some(hint) = &failure.hint {
                stderr.push_str(&format!("hint: {hint}\n"));
            }
            Outcome {
                stdout: failure
                    .report
                    .map(|r| r.render(cli.format, None))
                    .unwrap_or_default(),
                stderr,
                code: exit_code(&failure.error),
            }
        }
    }
}

/// An error, with a partial report when the parameters were understood.
#[derive(Debug)]
pub(crate) struct Failure {
    pub error: NktError,
    pub report: Option<Box<Report>>,
    pub hint: Option<String>,
}

impl From<NktError> for Failure {
    fn from(error: NktError) -> Self {
        Failure {
            error,
            report: None,
            hint: None,
        }
    }
}

impl From<nkt_core::Infeasible> for Failure {
    fn from(e: nkt_core::Infeasible) -> Self {
        NktError::from(e).into()
    }
}
