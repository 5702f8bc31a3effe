//! Command-line front end: `count`, `spectrum`, `bound`, `verify`, `join`,
//! `product`, `join-bound`, `product-bound` and `sweep`.
//!
//! Exit status is 0 on success, 1 for input or precondition errors and 2
//! when a `verify` check fails.

pub mod format;
pub mod sweep;
pub mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use treebound::{
    cartesian_bound, check_degree_bound, join_bound, laplacian_spectrum, tau_exact, Multigraph,
};

use crate::sweep::{Family, SweepConfig};
use crate::verify::Status;

#[derive(Debug, Parser)]
#[command(
    name = "treebound",
    version,
    about = "Spanning-tree counts and degree bounds for multigraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the number of spanning trees
    Count { file: PathBuf },
    /// Print the Laplacian eigenvalues, one per line
    Spectrum { file: PathBuf },
    /// Check the degree bound on one graph
    Bound { file: PathBuf },
    /// Run every identity and inequality check on one graph
    Verify { file: PathBuf },
    /// Print the join of the given graphs as an edge list
    Join {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
    },
    /// Print the Cartesian product of two simple graphs as an edge list
    Product { first: PathBuf, second: PathBuf },
    /// Check the join bound
    JoinBound {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
    },
    /// Check the Cartesian product bound
    ProductBound { first: PathBuf, second: PathBuf },
    /// Emit the degree bound over a graph family as CSV
    Sweep {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        delta: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Samples per size for the random families
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

pub fn read_graph(path: &Path) -> Result<Multigraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Multigraph::from_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_all(paths: &[PathBuf]) -> Result<Vec<Multigraph>> {
    paths.iter().map(|p| read_graph(p)).collect()
}

/// Executes one command, writing results to `out`. Returns the exit status.
pub fn execute<W: Write>(command: Command, out: &mut W) -> Result<i32> {
    match command {
        Command::Count { file } => {
            writeln!(out, "{}", tau_exact(&read_graph(&file)?))?;
        }
        Command::Spectrum { file } => {
            let g = read_graph(&file)?;
            let tol = treebound::spectral::default_tolerance_for(&g);
            for v in laplacian_spectrum(&g, tol)?.values() {
                writeln!(out, "{}", format::significant(*v, 12))?;
            }
        }
        Command::Bound { file } => {
            let report = check_degree_bound(&read_graph(&file)?)?;
            write!(out, "{}", format::bound_report(&report))?;
        }
        Command::Verify { file } => {
            let checks = verify::run_checks(&read_graph(&file)?);
            for c in &checks {
                writeln!(out, "{c}")?;
            }
            if checks.iter().any(|c| c.status == Status::Fail) {
                return Ok(2);
            }
        }
        Command::Join { files } => {
            write!(
                out,
                "{}",
                Multigraph::join(&read_all(&files)?)?.to_edge_list()
            )?;
        }
        Command::Product { first, second } => {
            let p = Multigraph::cartesian_product(&read_graph(&first)?, &read_graph(&second)?)?;
            write!(out, "{}", p.to_edge_list())?;
        }
        Command::JoinBound { files } => {
            let report = join_bound(&read_all(&files)?)?;
            write!(out, "{}", format::bound_report(&report))?;
        }
        Command::ProductBound { first, second } => {
            let report = cartesian_bound(&read_graph(&first)?, &read_graph(&second)?)?;
            write!(out, "{}", format::bound_report(&report))?;
        }
        Command::Sweep {
            family,
            n_max,
            delta,
            seed,
            count,
        } => {
            let config = SweepConfig {
                family,
                n_max,
                delta,
                seed,
                count,
            };
            sweep::write_csv(&sweep::rows(&config)?, &mut *out)?;
        }
    }
    Ok(0)
}

/// Parses `args` (including the program name) and runs the command.
/// Diagnostics go to `err` as a single line.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let text = e.to_string();
            let _ = writeln!(err, "{}", text.lines().next().unwrap_or_default());
            return 1;
        }
        Err(e) => {
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}
