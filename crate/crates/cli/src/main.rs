use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "equicm", version, about = "Equivariant cohomology of cohomogeneity one diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Top truncation degree (at least 2).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(2..))]
    max_degree: Option<u32>,

    /// Output format; table on a terminal, json otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for the random candidates of the depth search.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti numbers of the Borel model of a diagram.
    Betti {
        input: PathBuf,
        /// Read a homogeneous pair `{name, G, H, iota}` instead of a diagram.
        #[arg(long)]
        homogeneous: bool,
        /// Also report the rational types of the fibers.
        #[arg(long)]
        classify: bool,
    },
    /// Cohen–Macaulay verdict with its certificate.
    Cm { input: PathBuf },
    /// Truncated cohomology ring: representatives and products.
    Model {
        input: PathBuf,
        #[arg(long)]
        homogeneous: bool,
    },
    /// Join diagram of two catalog fibers or pair files.
    Join {
        left: String,
        right: String,
        /// Decide the Cohen–Macaulay property of the join.
        #[arg(long)]
        classify: bool,
        /// Write the diagram file here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Suspension diagram `(K, H, K, K)` of a catalog fiber or pair file.
    Suspension {
        fiber: String,
        #[arg(long)]
        classify: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Groups and fibers in the built-in catalog.
    Catalog {
        /// Recompute every fiber's rational type.
        #[arg(long)]
        classify: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format.unwrap_or(if std::io::stdout().is_terminal() { Format::Table } else { Format::Json });
    let settings = commands::Settings { max_degree: cli.max_degree, format, seed: cli.seed };
    let result = match cli.command {
        Command::Betti { input, homogeneous, classify } => commands::betti(&settings, &input, homogeneous, classify),
        Command::Cm { input } => commands::cm(&settings, &input),
        Command::Model { input, homogeneous } => commands::model(&settings, &input, homogeneous),
        Command::Join { left, right, classify, output } => {
            commands::join(&settings, &left, &right, classify, output.as_deref())
        }
        Command::Suspension { fiber, classify, output } => {
            commands::suspension(&settings, &fiber, classify, output.as_deref())
        }
        Command::Catalog { classify } => commands::catalog(&settings, classify),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
