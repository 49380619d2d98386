//! `hexwalk`: counts self-avoiding walks on the hexagonal lattice and
//! verifies the parafermionic identities exactly.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hexwalk::bounds::{build_table, check_inequalities, mu_estimates};
use hexwalk::domains::Domain;
use hexwalk::enumerate::{class_counts, closed_saw_census, Budget, WalkClass};
use hexwalk::identity::{
    g_table, verify_corollary2, verify_corollary5, verify_prop1, VerificationReport,
};
use hexwalk::lattice::Vertex;

mod render;

#[derive(Parser, Debug)]
#[command(name = "hexwalk", version)]
#[command(about = "Self-avoiding walks on the hexagonal lattice and exact identity checks")]
struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true, env = "HEXWALK_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,

    /// Abort after this many walk extensions
    #[arg(long, global = true, value_name = "STEPS")]
    budget: Option<u64>,

    /// Output format (default depends on the subcommand)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write results here instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Leave out timings so identical runs give identical bytes
    #[arg(long, global = true)]
    no_meta: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Class {
    /// all SAWs from the origin
    S,
    /// SAWs starting with the edge (0,0)-(1,0)
    B,
    /// half-plane SAWs
    C,
    /// trapezoidal SAWs
    D,
}

impl Class {
    fn walk_class(self) -> WalkClass {
        match self {
            Class::S => WalkClass::Free,
            Class::B => WalkClass::StartEdge,
            Class::C => WalkClass::HalfPlane,
            Class::D => WalkClass::Trapezoidal,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count walks of one class and length
    Count {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value = "s")]
        class: Class,
    },
    /// Tally closed walks by winding number
    Census {
        #[command(subcommand)]
        kind: CensusKind,
    },
    /// Check an identity exactly
    Verify {
        #[command(subcommand)]
        statement: Statement,
    },
    /// Counting table and inequality checks
    Bounds {
        #[arg(long, value_parser = clap::value_parser!(u32).range(4..))]
        n_max: u32,
    },
    /// Export the slit-plane generating functions G_{l,k} as JSON
    ExportG {
        #[arg(long = "N", value_parser = clap::value_parser!(u32).range(1..))]
        order: u32,
    },
}

#[derive(Subcommand, Debug)]
enum CensusKind {
    /// Closed SAWs through a root vertex
    Closed {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_len: u32,
        /// Root vertex as P,Q
        #[arg(long, default_value = "0,0", value_parser = parse_vertex)]
        root: Vertex,
    },
}

#[derive(Subcommand, Debug)]
enum Statement {
    /// Both sides of the parafermionic identity in the formal ring
    Prop1 {
        /// `trapezoid:R,S` or `slitplane`
        #[arg(long)]
        domain: Domain,
        /// Truncation order; omit for full depth on a trapezoid
        #[arg(long = "N", value_parser = clap::value_parser!(u32).range(1..))]
        order: Option<u32>,
    },
    /// Slit-plane generating functions at all eight y_j
    Cor2 {
        #[arg(long = "N", default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
        order: u32,
    },
    /// Exact trapezoid identity at x_c
    Cor5 {
        #[arg(long, default_value = "trapezoid:2,2")]
        domain: Domain,
    },
}

fn parse_vertex(s: &str) -> Result<Vertex, String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected P,Q, got `{s}`"))?;
    let p = p.trim().parse().map_err(|e| format!("{e}"))?;
    let q = q.trim().parse().map_err(|e| format!("{e}"))?;
    Ok(Vertex::new(p, q))
}

/// Whether everything checked came out as expected.
enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(k) = cli.threads {
        pool = pool.num_threads(k as usize);
    }
    let pool = pool.build().context("cannot start worker threads")?;
    let budget = Budget::limited(cli.budget);
    let (text, outcome) = pool.install(|| run(cli, &budget))?;
    emit(cli.out.as_ref(), &text)?;
    Ok(outcome)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            let mut f =
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
            f.write_all(text.as_bytes())?;
        }
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: &Cli, budget: &Budget) -> Result<(String, Outcome)> {
    let meta = |r: VerificationReport| if cli.no_meta { r.without_meta() } else { r };
    let verdict = |ok: bool| if ok { Outcome::Ok } else { Outcome::Failed };

    match &cli.command {
        Command::Count { n, class } => {
            let n = *n as usize;
            let counts = class_counts(class.walk_class(), n, budget)?;
            let text = render::count(cli.format.unwrap_or(Format::Text), *class, n, counts[n])?;
            Ok((text, Outcome::Ok))
        }
        Command::Census {
            kind: CensusKind::Closed { max_len, root },
        } => {
            let census = closed_saw_census(*root, *max_len as usize, budget)?;
            let (text, ok) =
                render::census(cli.format.unwrap_or(Format::Json), *root, *max_len, &census)?;
            Ok((text, verdict(ok)))
        }
        Command::Verify { statement } => {
            let reports = match statement {
                Statement::Prop1 { domain, order } => {
                    vec![verify_prop1(domain, order.map(|n| n as usize), budget)?]
                }
                Statement::Cor2 { order } => verify_corollary2(*order as usize, budget)?,
                Statement::Cor5 { domain } => {
                    let Domain::Trapezoid { r, s } = *domain else {
                        bail!("cor5 needs a trapezoid domain, got `{domain}`");
                    };
                    vec![verify_corollary5(r, s, budget)?]
                }
            };
            let reports: Vec<_> = reports.into_iter().map(meta).collect();
            let ok = reports.iter().all(|r| r.verified);
            let single = !matches!(statement, Statement::Cor2 { .. });
            let text = render::reports(cli.format.unwrap_or(Format::Json), &reports, single)?;
            Ok((text, verdict(ok)))
        }
        Command::Bounds { n_max } => {
            let table = build_table(*n_max as usize, budget)?;
            let checks = check_inequalities(&table)?;
            let mu = mu_estimates(&table);
            let ok = checks.iter().all(|c| c.holds) && mu.flagged.is_empty();
            let text = render::bounds(cli.format.unwrap_or(Format::Csv), &table, &checks, &mu)?;
            Ok((text, verdict(ok)))
        }
        Command::ExportG { order } => {
            if matches!(cli.format, Some(f) if f != Format::Json) {
                bail!("export-g only writes JSON");
            }
            let table = g_table(*order as usize, budget)?;
            let mut text = serde_json::to_string(&table)?;
            text.push('\n');
            Ok((text, Outcome::Ok))
        }
    }
}
