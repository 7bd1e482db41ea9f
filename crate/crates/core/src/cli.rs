//! Command-line surface shared by the `pure-betti` binary and the tests.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use crate::dioph::ProductEquation;
use crate::error::{Error, Result};
use crate::exact::DegreeSequence;
use crate::gorenstein::{DEFAULT_GOR_BOUND, FIXTURE_DIR_ENV};
use crate::report::{
    cmd_betti, cmd_classify_c3, cmd_dioph_search, cmd_dual, cmd_gorenstein, cmd_min_multiplier,
    cmd_pell_family, cmd_reproduce, cmd_selfdual, curve_csv, curve_samples, C3Kind, OutputFormat,
    Section, Status, DEFAULT_L_MAX,
};

#[derive(Debug, Parser)]
#[command(name = "pure-betti", version, about = "Exact Herzog-Kühl numerics of pure resolutions")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Table, global = true)]
    pub format: OutputFormat,

    /// Worker threads for the searches (default: available parallelism).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Directory holding codim5.txt and codim6_x16_20.txt.
    #[arg(long, env = FIXTURE_DIR_ENV, global = true)]
    pub fixtures: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// pi(D), B(D), the Betti diagram and the conjecture report.
    Betti {
        /// Degree sequence such as "{0,2,3,8}".
        d: DegreeSequence,
    },
    /// The dual sequence and the reversal of B.
    Dual { d: DegreeSequence },
    /// Members of the codimension 3 family with B_1 = 2.
    PellFamily {
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Exhaustive codimension 3 classification up to a bound on d_3.
    ClassifyC3 {
        #[arg(long, value_enum, default_value_t = C3Kind::B1)]
        kind: C3Kind,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Primitive integer points of L * prod x_j = alpha * prod (signed gaps).
    DiophSearch {
        #[arg(long, default_value_t = 3)]
        c: usize,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long = "L", default_value = "1")]
        l: BigInt,
        #[arg(long, default_value = "2")]
        alpha: BigInt,
        #[arg(long, default_value_t = 100)]
        bound: u64,
        /// Write (x, y) samples of 2(y - x)(1 - x) = y as CSV instead.
        #[arg(long)]
        emit_curve: bool,
        #[arg(long, default_value_t = 401)]
        samples: usize,
    },
    /// Bounded certificate for the Gorenstein candidates of codimension 5 or 6.
    Gorenstein {
        #[arg(long)]
        c: usize,
        #[arg(long, default_value_t = DEFAULT_GOR_BOUND)]
        bound: u64,
        /// Search a single pair "a,b" instead of the candidate list.
        #[arg(long, value_parser = parse_pair)]
        pair: Option<(u64, u64)>,
    },
    /// Self-dual degree sequences whose B violates a conjectured bound.
    Selfdual {
        #[arg(long)]
        c: usize,
        #[arg(long)]
        dmax: u64,
    },
    /// Smallest L for which no structural rule excludes L * B(D).
    MinMultiplier {
        d: DegreeSequence,
        #[arg(long)]
        gorenstein: bool,
        #[arg(long, default_value_t = DEFAULT_L_MAX)]
        lmax: u64,
    },
    /// Recompute a published table or claim and compare.
    Reproduce {
        #[arg(value_enum)]
        section: Section,
    },
}

fn parse_pair(s: &str) -> std::result::Result<(u64, u64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected a,b, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// Runs the command and returns the rendered output and its status.
pub fn execute(cli: &Cli) -> Result<(String, Status)> {
    let work = || -> Result<(String, Status)> {
        let fixtures = cli.fixtures.as_deref();
        let outcome = match &cli.command {
            Command::Betti { d } => cmd_betti(d)?,
            Command::Dual { d } => cmd_dual(d)?,
            Command::PellFamily { n } => cmd_pell_family(*n)?,
            Command::ClassifyC3 { kind, bound } => cmd_classify_c3(*kind, *bound)?,
            Command::DiophSearch {
                c,
                i,
                l,
                alpha,
                bound,
                emit_curve,
                samples,
            } => {
                if *emit_curve {
                    return Ok((curve_csv(&curve_samples(-2.0, 3.0, *samples)), Status::Ok));
                }
                let eq = ProductEquation::new(*c, *i, l.clone(), alpha.clone())?;
                cmd_dioph_search(&eq, *bound)?
            }
            Command::Gorenstein { c, bound, pair } => cmd_gorenstein(*c, *bound, *pair, fixtures)?,
            Command::Selfdual { c, dmax } => cmd_selfdual(*c, *dmax)?,
            Command::MinMultiplier { d, gorenstein, lmax } => cmd_min_multiplier(d, *gorenstein, *lmax)?,
            Command::Reproduce { section } => cmd_reproduce(*section, fixtures)?,
        };
        Ok((outcome.render(cli.format), outcome.status))
    };
    match cli.workers {
        Some(n) => {
            if n == 0 {
                return Err(Error::InvalidParameters("--workers must be positive".into()));
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::InvalidParameters(e.to_string()))?;
            pool.install(work)
        }
        None => work(),
    }
}
