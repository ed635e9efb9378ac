use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use latpyr::generators::{CorpusSpec, Shape};
use latpyr::LatticePolytope;
use latpyr_cli::{
    analyze_report, bounds_report, circuits_report, generate_corpus, hstar_report, parse_dim_range,
    parse_polytope, pyramid_report, render, CliError,
};

/// Exact analysis of lattice polytopes. All output is JSON on stdout.
#[derive(Parser)]
#[command(name = "latpyr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: h*, codegree, pyramid structure, box points, circuits, bounds.
    Analyze {
        file: PathBuf,
        /// Include the greedy support trace (simplices only).
        #[arg(long)]
        trace: bool,
        /// Skip circuit enumeration.
        #[arg(long)]
        no_circuits: bool,
    },
    /// h*-polynomial, degree, codegree and normalized volume.
    Hstar { file: PathBuf },
    /// Lattice-pyramid decomposition.
    Pyramid { file: PathBuf },
    /// Affine circuits and the circuit-size bound.
    Circuits { file: PathBuf },
    /// All bound and inequality checks.
    CheckBounds { file: PathBuf },
    /// Reproducible random corpus.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Dimension `N` or inclusive range `A..B`.
    #[arg(long, default_value = "1..4")]
    dim: String,
    /// Coordinates are drawn from [-bound, bound].
    #[arg(long, default_value_t = 3)]
    bound: i64,
    #[arg(long, default_value_t = 10)]
    count: usize,
    /// `simplex` or `general`.
    #[arg(long, default_value = "simplex")]
    shape: String,
    /// Reject simplices of larger normalized volume.
    #[arg(long)]
    max_volume: Option<u64>,
    /// Write one `polytope_NNNN.json` per polytope here instead of a JSON
    /// array on stdout.
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

fn load(path: &Path) -> Result<LatticePolytope, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_polytope(&text)
}

/// Prints the report, then turns invariant failures into an error.
fn emit((report, failures): (Value, Vec<String>)) -> Result<(), CliError> {
    print!("{}", render(&report));
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Invariant(failures))
    }
}

fn generate(args: GenerateArgs) -> Result<(), CliError> {
    let (min_dim, max_dim) = parse_dim_range(&args.dim).map_err(CliError::Input)?;
    let shape: Shape = args.shape.parse().map_err(|e: latpyr::Error| CliError::Input(e.to_string()))?;
    let spec = CorpusSpec {
        seed: args.seed,
        min_dim,
        max_dim,
        bound: args.bound,
        count: args.count,
        shape,
        max_volume: args.max_volume,
    };
    let corpus = generate_corpus(&spec)?;
    match args.out_dir {
        None => print!("{}", render(&Value::Array(corpus))),
        Some(dir) => {
            let io = |e: std::io::Error| CliError::Input(format!("{}: {e}", dir.display()));
            fs::create_dir_all(&dir).map_err(io)?;
            for (i, p) in corpus.iter().enumerate() {
                fs::write(dir.join(format!("polytope_{i:04}.json")), render(p)).map_err(io)?;
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { file, trace, no_circuits } => emit(analyze_report(&load(&file)?, trace, !no_circuits)?),
        Command::Hstar { file } => emit((hstar_report(&load(&file)?)?, vec![])),
        Command::Pyramid { file } => emit((pyramid_report(&load(&file)?), vec![])),
        Command::Circuits { file } => emit(circuits_report(&load(&file)?)?),
        Command::CheckBounds { file } => emit(bounds_report(&load(&file)?)?),
        Command::Generate(args) => generate(args),
    }
}

fn main() -> ExitCode {
    // Exit code 2 is reserved for invariant failures; usage errors are input errors.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(1);
        }
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("latpyr: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
