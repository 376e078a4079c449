use clap::{Parser, Subcommand, ValueEnum};
use equistrata::config::{apply_env_overrides, parse_config, OutputFormat};
use equistrata::error::Error;
use equistrata::pipeline::{run_pipeline, Command};
use equistrata::report::emit_report;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "equistrata", version, about = "Relative equilibria strata from highest-weight data")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(clap::Args)]
struct Common {
    /// TOML run configuration.
    #[arg(long)]
    config: PathBuf,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    max_kernel_size: Option<usize>,
    /// Skip the floating-point SVD cross-check.
    #[arg(long)]
    no_float_check: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Sub {
    /// Weight systems and dimensions per component.
    Weights(Common),
    /// Admissible kernel candidates.
    Kernels(Common),
    /// Loci, isotropy algebras and stratum dimensions per candidate.
    Strata(Common),
}

fn run(cli: Cli) -> Result<Vec<Error>, Error> {
    let (command, args) = match cli.command {
        Sub::Weights(a) => (Command::Weights, a),
        Sub::Kernels(a) => (Command::Kernels, a),
        Sub::Strata(a) => (Command::Strata, a),
    };
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| Error::Config(format!("{}: {e}", args.config.display())))?;
    let mut cfg = parse_config(&text)?;
    apply_env_overrides(&mut cfg)?;
    if let Some(n) = args.max_kernel_size {
        if n == 0 {
            return Err(Error::Config("--max-kernel-size must be at least 1".into()));
        }
        cfg.options.max_kernel_size = n;
    }
    if args.no_float_check {
        cfg.options.float_check = false;
    }
    let format = match args.format {
        Some(Format::Table) => OutputFormat::Table,
        Some(Format::Json) => OutputFormat::Json,
        None => cfg.options.output_format,
    };
    let outcome = run_pipeline(&cfg, command)?;
    let text = emit_report(&outcome.report, format);
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(outcome.errors)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(errors) => {
            for e in &errors {
                eprintln!("equistrata: {e}");
            }
            let code = errors.iter().map(Error::exit_code).max().unwrap_or(0);
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("equistrata: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
