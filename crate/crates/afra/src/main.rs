//! Command-line front end for the solver.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use afra::io::{self, render};
use afra::{oracle, semantics, Semantics, SolveConfig};

#[derive(Parser)]
#[command(
    name = "afra",
    version,
    about = "Solver for argumentation frameworks with recursive attacks"
)]
struct Cli {
    /// Largest element count for subset-enumeration queries.
    #[arg(long, global = true, value_name = "N")]
    max_enum: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a framework document.
    Check {
        /// Framework document to read.
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Compute the extensions of a framework under a semantics.
    Solve {
        /// Framework document to read.
        #[arg(short, long)]
        input: PathBuf,
        /// One of: complete, grounded, preferred, stable, semi_stable,
        /// ideal, admissible, conflict_free.
        #[arg(short, long, value_parser = parse_semantics)]
        semantics: Semantics,
        /// Output format.
        #[arg(short, long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Emit the defeat graph as a classical framework document.
    Flatten {
        /// Framework document to read.
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Emit the admissible sets ordered by inclusion, in dot form.
    Hasse {
        /// Framework document to read.
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Translate an extended or higher-order document into a framework
    /// document.
    Import {
        /// Dialect of the input document.
        #[arg(short = 't', long = "type", value_enum)]
        kind: ImportKind,
        /// Document to read.
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Compare the solver against the brute-force reference.
    Oracle {
        /// Framework document to read.
        #[arg(short, long)]
        input: PathBuf,
        /// Semantics to cross-check.
        #[arg(short, long, value_parser = parse_semantics)]
        semantics: Semantics,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ImportKind {
    Eaf,
    Hoaf,
}

fn parse_semantics(raw: &str) -> Result<Semantics, String> {
    raw.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let config = SolveConfig {
        max_enum: cli.max_enum.unwrap_or_else(|| SolveConfig::default().max_enum),
        ..SolveConfig::default()
    };
    match cli.command {
        Command::Check { input } => {
            let text = read_input(&input)?;
            let fw = io::parse_afra(&text).map_err(|e| e.to_string())?;
            println!(
                "ok: {} arguments, {} attacks",
                fw.argument_count(),
                fw.attack_count()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve {
            input,
            semantics: which,
            format,
        } => {
            let text = read_input(&input)?;
            let fw = io::parse_afra(&text).map_err(|e| e.to_string())?;
            let result =
                semantics::extensions(&fw, which, &config).map_err(|e| e.to_string())?;
            match format {
                OutputFormat::Text => println!("{}", render::render_extensions_text(&result)),
                OutputFormat::Json => println!("{}", render::render_extensions_json(&result)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Flatten { input } => {
            let text = read_input(&input)?;
            let fw = io::parse_afra(&text).map_err(|e| e.to_string())?;
            print!("{}", render::render_flatten_apx(&fw));
            Ok(ExitCode::SUCCESS)
        }
        Command::Hasse { input } => {
            let text = read_input(&input)?;
            let fw = io::parse_afra(&text).map_err(|e| e.to_string())?;
            let dot = render::render_hasse_dot(&fw, &config).map_err(|e| e.to_string())?;
            print!("{dot}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Import { kind, input } => {
            let text = read_input(&input)?;
            let fw = match kind {
                ImportKind::Eaf => {
                    let eaf = io::parse_eaf(&text).map_err(|e| e.to_string())?;
                    afra::interop::eaf_to_afra(&eaf).map_err(|e| e.to_string())?
                }
                ImportKind::Hoaf => {
                    let hoaf = io::parse_hoaf(&text).map_err(|e| e.to_string())?;
                    afra::interop::hoaf_to_afra(&hoaf).map_err(|e| e.to_string())?
                }
            };
            print!("{}", render::render_framework_text(&fw));
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            input,
            semantics: which,
        } => {
            let text = read_input(&input)?;
            let fw = io::parse_afra(&text).map_err(|e| e.to_string())?;
            let report = oracle::cross_check(&fw, which).map_err(|e| e.to_string())?;
            println!("{}", render::render_report_text(&report));
            if report.agree {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}
