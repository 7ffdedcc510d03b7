//! `blockgraph`: principal blocks, block graphs and Lie-type number theory
//! from the command line.
//!
//! Every subcommand writes exactly one document to standard output and
//! diagnostics to standard error. Exit status is 0 on success, 2 when the
//! input is well formed but rejected (a table that fails validation, an
//! invalid group descriptor or prime), and 3 for usage errors and inputs that
//! cannot be read or parsed.

mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use blockgraph::lietype::Family;
use clap::{Args, Parser, Subcommand};

use commands::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "blockgraph",
    version,
    about = "Principal blocks and block graphs of finite groups"
)]
struct Cli {
    /// Worker threads for per-prime computations (default: one per core).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

/// Output format of the table-based subcommands.
#[derive(Debug, Args)]
struct Format {
    /// Emit JSON instead of a text summary.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct LieArgs {
    /// Family: A B C D E6 E7 E8 F4 G2 2A 2D 2E6 3D4 2B2 2F4 2G2.
    #[arg(long)]
    family: Family,
    /// Rank; defaults to the fixed rank of an exceptional family.
    #[arg(long)]
    rank: Option<u32>,
    /// Field size q = p^f.
    #[arg(long)]
    q: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a character table against the orthogonality relations and the
    /// other table invariants.
    Validate {
        /// Table file, or the name of a bundled table such as `A5`.
        table: String,
        #[command(flatten)]
        format: Format,
    },
    /// Partition the irreducible characters into p-blocks.
    Blocks {
        table: String,
        #[arg(short, long = "prime")]
        p: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Build the block graph on the primes dividing the group order.
    Graph {
        table: String,
        /// Emit JSON.
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        /// Emit Graphviz DOT.
        #[arg(long)]
        dot: bool,
    },
    /// List the triangles of the block graph through p. If there are none,
    /// the group is p-solvable.
    Psolv {
        table: String,
        #[arg(short, long = "prime")]
        p: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Given the table of G/S(G), with S(G) the solvable radical, test for a
    /// triangle through 2; if there is none, G is solvable.
    Solvable {
        table: String,
        #[command(flatten)]
        format: Format,
    },
    /// Decide whether the Steinberg character lies in the principal ℓ-block.
    Steinberg {
        #[command(flatten)]
        group: LieArgs,
        #[arg(long)]
        ell: u64,
    },
    /// Decide whether e is a regular number for a family and rank.
    Regnum {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long)]
        e: u32,
    },
    /// Smallest Zsigmondy prime of t^n − 1.
    Zsigmondy {
        #[arg(short)]
        t: u64,
        #[arg(short)]
        n: u64,
    },
    /// Order of a finite simple group of Lie type, with its factorization.
    Order {
        #[command(flatten)]
        group: LieArgs,
    },
    /// Compute a character table from permutation generators.
    Dixon {
        /// JSON file `{"degree": n, "generators": [[...], ...]}`.
        group: String,
        /// Name recorded in the emitted table.
        #[arg(long, default_value = "G")]
        name: String,
        /// Refuse groups with more elements than this.
        #[arg(long, default_value_t = blockgraph::tablegen::DEFAULT_BOUND)]
        bound: usize,
        /// Also check the result against this table, up to reordering.
        #[arg(long, value_name = "TABLE")]
        compare: Option<String>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::usage(format!("cannot start {n} workers: {e}")))?;
    }
    match cli.command {
        Command::Validate { table, format } => commands::validate(&table, format.json),
        Command::Blocks { table, p, format } => commands::blocks(&table, p, format.json),
        Command::Graph { table, json, dot } => commands::graph(&table, json, dot),
        Command::Psolv { table, p, format } => commands::psolv(&table, p, format.json),
        Command::Solvable { table, format } => commands::solvable(&table, format.json),
        Command::Steinberg { group, ell } => {
            commands::steinberg(group.family, group.rank, group.q, ell)
        }
        Command::Regnum { family, rank, e } => commands::regnum(family, rank, e),
        Command::Zsigmondy { t, n } => commands::zsigmondy(t, n),
        Command::Order { group } => commands::order(group.family, group.rank, group.q),
        Command::Dixon {
            group,
            name,
            bound,
            compare,
        } => commands::dixon(&group, &name, bound, compare.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(commands::USAGE),
            };
        }
    };
    match run(cli) {
        Ok(document) => {
            let mut out = std::io::stdout().lock();
            if out
                .write_all(document.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(commands::USAGE);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let Some(document) = &e.document {
                print!("{document}");
            }
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
