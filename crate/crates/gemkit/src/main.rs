use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gemkit::commands::{self, ErrorRecord, Family, MapKind};
use gemkit::document;

/// Build and analyze gems (edge-colored graphs encoding PL manifolds).
///
/// Inputs are gem documents; `-` reads standard input. Results go to stdout,
/// errors to stderr as a JSON record with `code`, `message` and `location`.
#[derive(Parser)]
#[command(name = "gemkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a gem from one of the standard families.
    Construct {
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Build a colored vertex map of degree d (or -d with --reverse).
    Map {
        kind: MapKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Follow with the orientation reversal of the target.
        #[arg(long)]
        reverse: bool,
    },
    /// Validate a gem and report closedness, contractedness, bipartiteness and boundary.
    Verify { gem: String },
    /// Regular genus over all cyclic color permutations.
    Genus {
        gem: String,
        /// Include chi and rho for every permutation.
        #[arg(long)]
        all_permutations: bool,
    },
    /// Euler characteristic of the associated complex.
    Euler { gem: String },
    /// Simplex counts of the associated complex.
    Fvector { gem: String },
    /// Degree of a map document under the canonical orientations.
    Degree { map: String },
    /// Reduce a cylinder gem with glue moves and 1-dipole cancellations.
    Reduce { gem: String },
    /// Find a color-preserving vertex bijection.
    Iso { a: String, b: String },
    /// Graphviz rendering.
    ExportDot { gem: String },
}

fn read(path: &str) -> Result<String, ErrorRecord> {
    let result = if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map(|_| text)
    } else {
        std::fs::read_to_string(path)
    };
    result.map_err(|e| ErrorRecord::io(path, &e))
}

fn gem(path: &str) -> Result<gemkit_core::Gem, ErrorRecord> {
    Ok(document::parse_gem(&read(path)?)?)
}

fn run(command: Command) -> commands::CommandResult {
    match command {
        Command::Construct { family, n, d } => commands::construct(family, n, d),
        Command::Map { kind, n, d, reverse } => commands::map(kind, n, d, reverse),
        Command::Verify { gem: path } => commands::verify(&gem(&path)?),
        Command::Genus { gem: path, all_permutations } => commands::genus(&gem(&path)?, all_permutations),
        Command::Euler { gem: path } => commands::euler(&gem(&path)?),
        Command::Fvector { gem: path } => commands::fvector(&gem(&path)?),
        Command::Degree { map } => commands::degree(&document::parse_map(&read(&map)?)?),
        Command::Reduce { gem: path } => commands::reduce(&gem(&path)?),
        Command::Iso { a, b } => commands::iso(&gem(&a)?, &gem(&b)?),
        Command::ExportDot { gem: path } => commands::export_dot(&gem(&path)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(record) => {
            eprintln!("{}", record.to_json());
            ExitCode::FAILURE
        }
    }
}
