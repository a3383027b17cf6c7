use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use kklab::power::power;
use kklab::simplicial::{iterated_subdivision, load_simplicial, FiniteSimplicialSet};
use kklab::suites::{run, Suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "kklab", version, about = "Exact verification suites for power rings, cone rings and Toeplitz maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write a JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        degree: u32,
        #[arg(long, default_value_t = 64)]
        window: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        subdivisions: usize,
        /// Extra simplicial set to include in the simplicial and power checks.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Add per-suite wall times (makes the report non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Graded basis of Z^K up to a degree.
    Power {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        basis: Option<PathBuf>,
    },
    /// Iterated barycentric subdivision.
    Subdivide {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        times: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Checks,
    Input(String),
}

fn load(path: &Path) -> Result<Arc<FiniteSimplicialSet>, Failure> {
    load_simplicial(path).map(Arc::new).map_err(|e| Failure::Input(e.to_string()))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {}", path.display(), e)))
}

fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify { suite, degree, window, seed, subdivisions, input, json, timings } => {
            let input = input.as_deref().map(load).transpose()?;
            let cfg = SuiteConfig { degree, window, seed, subdivisions, input, timings };
            cfg.validate().map_err(Failure::Input)?;
            let report = run(suite, &cfg);
            for r in report.records.iter().filter(|r| !r.passed()) {
                eprintln!("FAIL {}: {}", r.id, r.witness.as_deref().unwrap_or(""));
            }
            let failed = report.records.iter().filter(|r| !r.passed()).count();
            println!("{}: {} checks, {} failed", suite, report.records.len(), failed);
            if let Some(path) = json {
                write(&path, &report.to_json())?;
            }
            if failed == 0 {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Power { input, degree, basis } => {
            let k = load(&input)?;
            let (ring, graded) = power(&k, degree);
            println!("ranks by degree: {:?}", graded.ranks());
            if let Some(path) = basis {
                let text = serde_json::to_string_pretty(&ring.basis_json()).expect("serializable");
                write(&path, &text)?;
            }
            Ok(())
        }
        Command::Subdivide { input, times, out } => {
            let k = load(&input)?;
            let (sd, _) = iterated_subdivision(&k, times).map_err(|e| Failure::Input(e.to_string()))?;
            let counts = sd.counts();
            println!("simplices by dimension: {:?}", counts);
            match out {
                Some(path) => write(&path, &sd.to_json()),
                None => {
                    println!("{}", sd.to_json());
                    Ok(())
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("input error: {}", msg);
            ExitCode::from(2)
        }
    }
}
