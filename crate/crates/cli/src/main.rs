use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gradalg::commands::{self, CliError, CliResult, Options};
use gradalg::{parse_presentation, Report};
use gradalg_core::presentation::Presentation;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Table,
}

/// Invariants and isomorphism tests for finitely presented graded algebras.
#[derive(Debug, Parser)]
#[command(name = "gradalg", version)]
struct Cli {
    /// Truncation degree D: everything is computed in degrees 0..=D.
    #[arg(long, global = true, default_value_t = 4)]
    degree: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Largest search space an exhaustive scan may visit.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: u128,
    /// Seed for randomized demonstrations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimensions of the graded pieces up to degree D.
    Hilbert { input: PathBuf },
    /// Rewrite rules of the truncated Gröbner basis.
    Gb { input: PathBuf },
    /// Points at which every relation vanishes (prime fields only).
    Characters { input: PathBuf },
    /// Cotangent dimension and power profile of each character.
    Tangent {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Intersection of the character ideals with a given tangent profile.
    Js {
        input: PathBuf,
        /// Select characters with cotangent dimension s.
        #[arg(long, conflicts_with = "profile")]
        s: Option<usize>,
        /// Select characters whose power profile starts with these values.
        #[arg(long, value_delimiter = ',')]
        profile: Option<Vec<usize>>,
    },
    /// Normality of an element, or all normal lines in degree 1.
    Normal {
        input: PathBuf,
        #[arg(long)]
        element: Option<String>,
    },
    /// Central elements of a given degree.
    Center {
        input: PathBuf,
        #[arg(long = "deg", default_value_t = 1)]
        deg: u32,
    },
    /// Decomposition into powers of a distinguished generator times brackets.
    Brackets {
        input: PathBuf,
        /// Name of the distinguished generator.
        #[arg(long)]
        distinguished: String,
        #[arg(long, conflicts_with = "random_degree")]
        poly: Option<String>,
        /// Decompose a random element of this degree drawn from --seed.
        #[arg(long)]
        random_degree: Option<u32>,
    },
    /// Invariants that any graded isomorphism must preserve.
    Fingerprint { input: PathBuf },
    /// Graded isomorphism test between two presentations.
    Iso {
        first: PathBuf,
        second: PathBuf,
        /// Search all invertible linear maps of degree-1 spaces.
        #[arg(long)]
        brute_force: bool,
    },
    /// Adjoin central variables and divide out the degree-1 center again.
    Cancel {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

fn load(path: &PathBuf) -> CliResult<Presentation> {
    let (name, text) = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        ("<stdin>".to_string(), s)
    } else {
        let s = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        (path.display().to_string(), s)
    };
    parse_presentation(&text).map_err(|error| CliError::Parse { source: name, error })
}

fn run(cli: &Cli) -> CliResult<Report> {
    let opts = Options { degree: cli.degree, budget: cli.budget, seed: cli.seed };
    match &cli.command {
        Command::Hilbert { input } => commands::hilbert(&load(input)?, &opts),
        Command::Gb { input } => commands::gb(&load(input)?, &opts),
        Command::Characters { input } => commands::characters(&load(input)?),
        Command::Tangent { input, depth } => commands::tangent(&load(input)?, *depth, &opts),
        Command::Js { input, s, profile } => commands::js(&load(input)?, *s, profile.clone(), &opts),
        Command::Normal { input, element } => commands::normal(&load(input)?, element.as_deref(), &opts),
        Command::Center { input, deg } => commands::center(&load(input)?, *deg, &opts),
        Command::Brackets { input, distinguished, poly, random_degree } => {
            commands::brackets(&load(input)?, poly.as_deref(), *random_degree, distinguished, &opts)
        }
        Command::Fingerprint { input } => commands::fingerprint(&load(input)?, &opts),
        Command::Iso { first, second, brute_force } => commands::iso(&load(first)?, &load(second)?, *brute_force, &opts),
        Command::Cancel { input, count } => commands::cancel_central(&load(input)?, *count, &opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Table => print!("{}", report.to_table()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
