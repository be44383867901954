//! Argument parsing and command dispatch for the `sl2swc` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;
use sl2swc_core::cohomology::{dickson, CohomologyError, Ring, MAX_GENERATORS};
use sl2swc_core::swc::{SwcError, SwcReport};
use thiserror::Error;

use crate::cache::{resolve_cache_dir, CacheError, GroupChoice, TableCache};
use crate::expr::{ExprError, RepExpr};
use crate::output::{CohomologyJson, DicksonJson, ErrorJson, SwcJson, TableJson, SCHEMA};
use crate::suites::{self, Suite, SuiteReport, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "sl2swc", version, about = "Stiefel-Whitney classes of orthogonal representations of SL(2,q)")]
pub struct Cli {
    /// Directory for cached character tables.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Neither read nor write cached tables.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Character table of SL(2,q) or GL(2,q).
    Table {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = GroupChoice::Sl2)]
        group: GroupChoice,
    },
    /// Total Stiefel-Whitney class of a representation of SL(2,q).
    Swc {
        #[arg(long)]
        q: u64,
        /// Expression such as "2*S(X4) - X1 + reg".
        #[arg(long)]
        rep: String,
        /// Truncation degree.
        #[arg(long, value_name = "D")]
        truncate: Option<u32>,
    },
    /// Check the closed forms against the oracles.
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Number of random representations (theorem and wu suites).
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Dickson invariants in F2[v1..vr].
    Dickson {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_name = "D")]
        truncate: Option<u32>,
    },
    /// A cohomology ring: Q8, Q2n:N, sl2odd or c2:R.
    Cohomology {
        #[arg(long)]
        group: String,
        #[arg(long)]
        max_degree: u32,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error(transparent)]
    Swc(#[from] SwcError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error("output: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Expr(_) => "expression",
            CliError::Cache(_) => "table",
            CliError::Swc(SwcError::Inconsistent(_)) => "inconsistent",
            CliError::Swc(_) => "swc",
            CliError::Cohomology(_) => "cohomology",
            CliError::Json(_) => "output",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Swc(SwcError::Inconsistent(_)) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    schema: &'static str,
    #[serde(flatten)]
    report: &'a SuiteReport,
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    suites: &'a [SuiteReport],
}

fn parse_ring(group: &str, max_degree: u32) -> Result<std::sync::Arc<Ring>, CliError> {
    let bad = || CliError::Usage(format!("unknown group '{group}' (expected Q8, Q2n:N, sl2odd or c2:R)"));
    let ring = match group.split_once(':') {
        None if group == "Q8" => Ring::quaternion8(max_degree)?,
        None if group == "sl2odd" => Ring::sl2_odd(max_degree)?,
        Some(("Q2n", n)) => match n.parse::<u32>().map_err(|_| bad())? {
            3 => Ring::quaternion8(max_degree)?,
            n if (4..=62).contains(&n) => Ring::gen_quaternion(n, max_degree)?,
            _ => return Err(CliError::Usage("Q2n:N needs 3 <= N <= 62".into())),
        },
        Some(("c2", r)) => match r.parse::<usize>().map_err(|_| bad())? {
            r if (1..=MAX_GENERATORS).contains(&r) => Ring::elementary_abelian(r, max_degree)?,
            _ => return Err(CliError::Usage(format!("c2:R needs 1 <= R <= {MAX_GENERATORS}"))),
        },
        _ => return Err(bad()),
    };
    Ok(ring)
}

/// Runs a command and returns its JSON output and exit code.
pub fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    let cache =
        if cli.no_cache { TableCache::disabled() } else { TableCache::new(resolve_cache_dir(cli.cache_dir.clone())) };
    match &cli.command {
        Command::Table { q, group } => {
            let (t, _) = cache.table(*group, *q)?;
            Ok((serde_json::to_string_pretty(&TableJson::new(&t))?, EXIT_OK))
        }
        Command::Swc { q, rep, truncate } => {
            let expr = RepExpr::parse(rep)?;
            let (t, _) = cache.table(GroupChoice::Sl2, *q)?;
            let pi = expr.eval(&t)?;
            let report = SwcReport::compute(&pi, *truncate)?;
            Ok((serde_json::to_string_pretty(&SwcJson::new(expr.to_string(), &report))?, EXIT_OK))
        }
        Command::Verify { q, suite, trials, seed } => {
            let (t, _) = cache.table(GroupChoice::Sl2, *q)?;
            let (report, parts) = suites::run(&t, *suite, *trials, *seed);
            let json = serde_json::to_string_pretty(&VerifyJson { schema: SCHEMA, report: &report, suites: &parts })?;
            Ok((json, if report.passed() { EXIT_OK } else { EXIT_FAILURE }))
        }
        Command::Dickson { rank, truncate } => {
            if !(1..=MAX_GENERATORS).contains(rank) {
                return Err(CliError::Usage(format!("rank must be between 1 and {MAX_GENERATORS}")));
            }
            let d = truncate.unwrap_or((1 << rank) - 1);
            let invariants = dickson(*rank, d)?;
            Ok((serde_json::to_string_pretty(&DicksonJson::new(*rank, d, &invariants))?, EXIT_OK))
        }
        Command::Cohomology { group, max_degree } => {
            let ring = parse_ring(group, *max_degree)?;
            Ok((serde_json::to_string_pretty(&CohomologyJson::new(group, &ring))?, EXIT_OK))
        }
    }
}

fn write_error(err: &mut impl Write, kind: &str, detail: String) {
    let doc = ErrorJson { error: kind, detail: detail.trim_end().to_string() };
    let _ = writeln!(err, "{}", serde_json::to_string(&doc).unwrap_or_default());
}

/// Parses `args` (program name first), writes JSON to `out` and errors to
/// `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
        Err(e) => {
            write_error(err, "usage", e.to_string());
            return EXIT_USAGE;
        }
    };
    match execute(&cli) {
        Ok((json, code)) => {
            let _ = writeln!(out, "{json}");
            code
        }
        Err(e) => {
            write_error(err, e.kind(), e.to_string());
            e.exit_code()
        }
    }
}
