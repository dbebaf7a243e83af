use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use toric_codes::cli::{self, exit, Outcome, Overrides, RunError};
use toric_codes::problem::ProblemError;

/// Toric complete intersection codes over finite fields.
#[derive(Parser, Debug)]
#[command(name = "toric-codes", version)]
struct Args {
    /// Maximum number of torus points examined while solving.
    #[arg(long, global = true, value_name = "N")]
    budget_points: Option<u64>,
    /// Maximum number of point subsets examined by subset searches.
    #[arg(long, global = true, value_name = "N")]
    budget_subsets: Option<u64>,
    /// Also write the report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json_out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve the system on the torus, certify the solution count and check Euler-Jacobi.
    Solve { file: PathBuf },
    /// Build the evaluation code of A and compute [N, k, d] with all bounds.
    Code { file: PathBuf },
    /// Evaluate the lower bounds without computing d.
    Bounds { file: PathBuf },
    /// Reproduce the built-in reference examples.
    PaperExamples,
    /// Sample random systems on the file's polytopes.
    RandomSearch {
        file: PathBuf,
        #[arg(long, default_value_t = 50)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read(command: &str, path: &PathBuf) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| {
        let err = RunError::Problem(ProblemError::Invalid(format!("cannot read {}: {e}", path.display())));
        Outcome::from_error(command, &err)
    })
}

fn run(args: &Args) -> Outcome {
    let o = Overrides { point_budget: args.budget_points, subset_budget: args.budget_subsets };
    let with_file = |name: &str, path: &PathBuf, f: &dyn Fn(&toric_codes::problem::Problem) -> Outcome| {
        match read(name, path).and_then(|s| cli::load(name, &s)) {
            Ok(pr) => f(&pr),
            Err(out) => out,
        }
    };
    match &args.command {
        Command::Solve { file } => with_file("solve", file, &|pr| cli::cmd_solve(pr, o)),
        Command::Code { file } => with_file("code", file, &|pr| cli::cmd_code(pr, o)),
        Command::Bounds { file } => with_file("bounds", file, &|pr| cli::cmd_bounds(pr, o)),
        Command::PaperExamples => cli::cmd_paper_examples(o),
        Command::RandomSearch { file, trials, seed } => {
            with_file("random-search", file, &|pr| cli::cmd_random_search(pr, *trials, *seed, o))
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { exit::PARSE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let out = run(&args);
    let text = out.to_pretty();
    // a closed pipe is not an error for a report printer
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    if let Some(path) = &args.json_out {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(exit::PARSE as u8);
        }
    }
    ExitCode::from(out.exit_code as u8)
}
