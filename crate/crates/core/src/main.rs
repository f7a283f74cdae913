use clap::{Parser, Subcommand};
use rayon::prelude::*;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use tmis::cli::{
    cmd_check_free, cmd_classify, cmd_decompose, cmd_generate_misp_hard, cmd_generate_pattern,
    cmd_solve, cmd_verify_reduction, exit_code, parse_generate_spec, parse_pattern_spec,
    GenerateSpec, PatternSpec,
};
use tmis::error::{Error, Result};
use tmis::format::parse_tournament;
use tmis::solvers::Method;

#[derive(Parser)]
#[command(name = "tmis", version, about = "Exact feedback-vertex-set / maximum transitive-subset solvers for tournaments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the weighted maximum transitive-set problem on a tournament file
    Solve {
        /// Tournament file (omit when using --dir)
        file: Option<PathBuf>,
        /// Run on every file in a directory instead
        #[arg(long, conflicts_with = "file")]
        dir: Option<PathBuf>,
        /// Weights file overriding any weights line in the input
        #[arg(long)]
        weights: Option<PathBuf>,
        /// auto | oracle | w5free | u5free | b4free | c4free | d4free
        #[arg(long, default_value = "auto")]
        method: String,
        /// Also print the optimal set and the method trace
        #[arg(long)]
        certificate: bool,
        /// Skip the forbidden-pattern class check; solvers may silently
        /// return garbage outside their class
        #[arg(long)]
        unchecked: bool,
    },
    /// Report structural properties of a tournament file
    Classify {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        dir: Option<PathBuf>,
    },
    /// Write a named tournament (or a hardness instance) to standard output
    ///
    /// Kinds: tn N | un N | wn N | in N | snake K | q7 | q7mv |
    ///        misp-hard GRAPHFILE plain|3path|snake7
    Generate {
        #[arg(required = true)]
        spec: Vec<String>,
    },
    /// Print the homogeneous-set quotient chain of a tournament file
    Decompose {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        dir: Option<PathBuf>,
    },
    /// Search a tournament file for a forbidden pattern
    CheckFree {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        dir: Option<PathBuf>,
        /// k4 | b4 | c4 | d4 | t5 | u5 | w5 | snake:K | file:PATH
        #[arg(long)]
        pattern: String,
    },
    /// Build a hardness instance from a graph file and re-verify it
    VerifyReduction {
        graphfile: PathBuf,
        /// plain | 3path | snake7
        #[arg(long)]
        gadget: String,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

/// Runs `f` on a single file, or on every file of a directory in name order
/// (in parallel), printing one block per file. Returns the worst exit code.
fn run_target(
    file: Option<PathBuf>,
    dir: Option<PathBuf>,
    f: impl Fn(&str) -> Result<String> + Sync,
) -> ExitCode {
    match (file, dir) {
        (Some(path), None) => match read(&path).and_then(|text| f(&text)) {
            Ok(out) => {
                print!("{out}");
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e),
        },
        (None, Some(dir)) => {
            let mut paths: Vec<PathBuf> = match std::fs::read_dir(&dir) {
                Ok(entries) => entries
                    .filter_map(|e| e.ok())
                    .map(|e| e.path())
                    .filter(|p| p.is_file())
                    .collect(),
                Err(e) => {
                    eprintln!("error: cannot read directory {}: {e}", dir.display());
                    return ExitCode::from(2);
                }
            };
            paths.sort();
            let results: Vec<(PathBuf, Result<String>)> = paths
                .par_iter()
                .map(|p| (p.clone(), read(p).and_then(|text| f(&text))))
                .collect();
            let mut worst = 0u8;
            for (path, result) in results {
                println!("=== {}", path.display());
                match result {
                    Ok(out) => print!("{out}"),
                    Err(e) => {
                        eprintln!("error: {}: {e}", path.display());
                        worst = worst.max(exit_code(&e) as u8);
                    }
                }
            }
            ExitCode::from(worst)
        }
        _ => {
            eprintln!("error: provide exactly one of FILE or --dir");
            ExitCode::from(2)
        }
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code(e) as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve {
            file,
            dir,
            weights,
            method,
            certificate,
            unchecked,
        } => {
            let method: Method = match method.parse() {
                Ok(m) => m,
                Err(e) => return fail(&e),
            };
            let weights_text = match weights.as_deref().map(read).transpose() {
                Ok(w) => w,
                Err(e) => return fail(&e),
            };
            run_target(file, dir, |text| {
                cmd_solve(text, weights_text.as_deref(), method, certificate, !unchecked)
            })
        }
        Command::Classify { file, dir } => run_target(file, dir, cmd_classify),
        Command::Generate { spec } => {
            let result = parse_generate_spec(&spec).and_then(|spec| match spec {
                GenerateSpec::Pattern(kind) => cmd_generate_pattern(kind),
                GenerateSpec::MispHard { graph_path, gadget } => {
                    let text = read(Path::new(&graph_path))?;
                    cmd_generate_misp_hard(&text, gadget)
                }
            });
            match result {
                Ok(out) => {
                    print!("{out}");
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e),
            }
        }
        Command::Decompose { file, dir } => run_target(file, dir, cmd_decompose),
        Command::CheckFree { file, dir, pattern } => {
            let pattern = match parse_pattern_spec(&pattern) {
                Ok(PatternSpec::Kind(kind)) => match tmis::catalog::make(kind) {
                    Ok(t) => t,
                    Err(e) => return fail(&e),
                },
                Ok(PatternSpec::File(path)) => {
                    match read(Path::new(&path)).map(|text| parse_tournament(&text)) {
                        Ok(Ok((t, _))) => t,
                        Ok(Err(e)) | Err(e) => return fail(&e),
                    }
                }
                Err(e) => return fail(&e),
            };
            run_target(file, dir, |text| cmd_check_free(text, &pattern))
        }
        Command::VerifyReduction { graphfile, gadget } => {
            let result = gadget
                .parse()
                .and_then(|gadget| read(&graphfile).and_then(|text| cmd_verify_reduction(&text, gadget)));
            match result {
                Ok(out) => {
                    print!("{out}");
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e),
            }
        }
    }
}
