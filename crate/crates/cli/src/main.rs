use std::io::Write;
use std::process::ExitCode;

use berge_cli::{
    cmd_alexander_collisions, cmd_genus_collisions, cmd_identify, cmd_saito, cmd_table, cmd_verify,
    Format, Query,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "berge", version, about = "Invariants and tables for Berge knots of types VII and VIII")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Range {
    /// Largest surgery coefficient to include
    #[arg(long = "max-p", value_parser = clap::value_parser!(u64).range(2..))]
    max_p: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Every (sign, m, n) with p <= max-p, with its genus
    Table {
        #[command(flatten)]
        range: Range,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
    },
    /// Find the Berge knot with a given surgery coefficient and genus or lens space
    Identify {
        #[arg(long)]
        p: u64,
        #[arg(long, conflicts_with = "q", required_unless_present = "q")]
        g: Option<u64>,
        #[arg(long, allow_negative_numbers = true)]
        q: Option<i64>,
    },
    /// Hyperbolicity certificates for every nontrivial parameter
    Verify {
        #[command(flatten)]
        range: Range,
    },
    /// Genera shared by more than one knot
    GenusCollisions {
        #[command(flatten)]
        range: Range,
    },
    /// Search for coinciding Alexander polynomials
    AlexanderCollisions {
        #[command(flatten)]
        range: Range,
    },
    /// Saito parameters of the dual knots, found by search
    Saito {
        #[command(flatten)]
        range: Range,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match cli.command {
        Command::Table { range, format } => {
            let format = match format {
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
                FormatArg::Md => Format::Md,
            };
            cmd_table(range.max_p, format)
        }
        Command::Identify { p, g, q } => {
            let query = match (g, q) {
                (Some(g), None) => Query::Genus(g),
                (None, Some(q)) => Query::Residue(q),
                _ => unreachable!("clap enforces exactly one of --g and --q"),
            };
            cmd_identify(p, query)
        }
        Command::Verify { range } => cmd_verify(range.max_p),
        Command::GenusCollisions { range } => cmd_genus_collisions(range.max_p),
        Command::AlexanderCollisions { range } => cmd_alexander_collisions(range.max_p),
        Command::Saito { range } => cmd_saito(range.max_p),
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(report.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(report.code as u8)
}
