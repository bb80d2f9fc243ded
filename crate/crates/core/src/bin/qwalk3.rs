use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;

use clap::{Parser, Subcommand};

use qwalk3::config::{parse_config, ConfigError, OutputFormat, RunConfig};
use qwalk3::models::BuiltinModel;
use qwalk3::report::{run, RunError};

#[derive(Parser)]
#[command(name = "qwalk3", version, about = "Stationary measures of three-state quantum walks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one or more configuration files.
    Run {
        #[arg(required = true)]
        configs: Vec<PathBuf>,
        /// Override the window.
        #[arg(long, num_args = 2, value_names = ["MIN", "MAX"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
        /// Override the number of oracle steps.
        #[arg(long)]
        steps: Option<usize>,
        /// Override the output format (csv or json).
        #[arg(long)]
        format: Option<String>,
        /// Override the output path (single config only).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List built-in models.
    Models,
}

struct Overrides {
    window: Option<(i64, i64)>,
    steps: Option<usize>,
    format: Option<OutputFormat>,
    out: Option<PathBuf>,
}

enum Failure {
    Config(ConfigError),
    Run(RunError),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Config(_) => 1,
            Failure::Run(e) => e.exit_code() as u8,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Config(e) => e.fmt(f),
            Failure::Run(e) => e.fmt(f),
        }
    }
}

fn load(path: &PathBuf, o: &Overrides) -> Result<RunConfig, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Config(ConfigError::Parse(format!("{}: {e}", path.display()))))?;
    let mut config = parse_config(&text).map_err(Failure::Config)?;
    if let Some(w) = o.window {
        config.window = w;
    }
    if let Some(s) = o.steps {
        config.oracle_steps = s;
    }
    if let Some(f) = o.format {
        config.output_format = f;
    }
    if let Some(p) = &o.out {
        config.output_path = Some(p.clone());
    }
    config.validate().map_err(Failure::Config)?;
    Ok(config)
}

fn execute(path: &PathBuf, o: &Overrides) -> Result<String, Failure> {
    let config = load(path, o)?;
    let report = run(&config).map_err(Failure::Run)?;
    match &config.output_path {
        Some(p) => {
            let file = File::create(p).map_err(|e| Failure::Run(e.into()))?;
            let mut w = BufWriter::new(file);
            report
                .write(config.output_format, &mut w)
                .map_err(Failure::Run)?;
            w.flush().map_err(|e| Failure::Run(e.into()))?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            report
                .write(config.output_format, &mut lock)
                .map_err(Failure::Run)?;
        }
    }
    Ok(report.summary())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Models => {
            for m in BuiltinModel::ALL {
                println!("{:<14} {}", m.name(), m.description());
            }
            ExitCode::SUCCESS
        }
        Command::Run {
            configs,
            window,
            steps,
            format,
            out,
        } => {
            let format = match format.as_deref().map(str::parse::<OutputFormat>).transpose() {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            };
            if out.is_some() && configs.len() > 1 {
                eprintln!("error: --out requires a single config file");
                return ExitCode::from(1);
            }
            let overrides = Overrides {
                window: window.map(|w| (w[0], w[1])),
                steps,
                format,
                out,
            };
            let results: Vec<_> = thread::scope(|s| {
                let handles: Vec<_> = configs
                    .iter()
                    .map(|p| s.spawn(|| execute(p, &overrides)))
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("run thread panicked"))
                    .collect()
            });
            let mut code = 0u8;
            for (path, result) in configs.iter().zip(results) {
                match result {
                    Ok(summary) => eprintln!("{}: {summary}", path.display()),
                    Err(e) => {
                        eprintln!("{}: error: {e}", path.display());
                        code = code.max(e.exit_code());
                    }
                }
            }
            ExitCode::from(code)
        }
    }
}
