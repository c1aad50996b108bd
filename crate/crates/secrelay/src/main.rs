use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use secrelay::cli;

/// Batch simulator for secure two-way relay selection experiments.
///
/// Reads a line-oriented configuration, sweeps the configured selection
/// schemes over the power grid, and writes a CSV of curves plus a summary.
#[derive(Parser)]
#[command(name = "secrelay", version)]
struct Args {
    /// Configuration file; built-in defaults apply when omitted
    #[arg(long)]
    config: Option<PathBuf>,

    /// Directory that relative output paths are placed under
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,

    /// Override the configured master seed
    #[arg(long)]
    seed: Option<u64>,

    /// Override the configured trial count
    #[arg(long)]
    trials: Option<u64>,
}

const EXIT_CONFIG: u8 = 1;
const EXIT_RUNTIME: u8 = 2;

fn main() -> ExitCode {
    let args = Args::parse();

    let text = match &args.config {
        Some(path) => match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("secrelay: cannot read config {}: {e}", path.display());
                return ExitCode::from(EXIT_CONFIG);
            }
        },
        None => String::new(),
    };
    let mut config = match cli::parse_config(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("secrelay: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    if let Some(seed) = args.seed {
        config.master_seed = seed;
    }
    if let Some(trials) = args.trials {
        if trials == 0 {
            eprintln!("secrelay: --trials must be at least 1");
            return ExitCode::from(EXIT_CONFIG);
        }
        config.trials = trials;
    }
    config.apply_out_dir(&args.out_dir);
    if let Err(e) = fs::create_dir_all(&args.out_dir) {
        eprintln!("secrelay: cannot create {}: {e}", args.out_dir.display());
        return ExitCode::from(EXIT_RUNTIME);
    }

    match cli::run(&config) {
        Ok(report) => {
            for (scheme, message) in &report.scheme_errors {
                eprintln!("secrelay: scheme {scheme} skipped: {message}");
            }
            println!(
                "wrote {} and {}",
                report.curves_path.display(),
                report.summary_path.display()
            );
            if report.scheme_errors.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_RUNTIME)
            }
        }
        Err(e) => {
            eprintln!("secrelay: {e}");
            ExitCode::from(EXIT_RUNTIME)
        }
    }
}
