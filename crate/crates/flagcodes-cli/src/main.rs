//! Command-line front end: analyze code files, compute distances, simulate
//! erasure-channel transmissions, and decode received stuttering flags.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use flagcodes::{
    parse_code, parse_stuttering, run_simulation, CoherentDecoder, Error, ExperimentConfig,
    FlagCode, LossModel,
};

#[derive(Parser)]
#[command(name = "flagcode", version, about = "Flag codes over finite fields")]
struct Cli {
    /// Emit structured key=value output instead of prose.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full structural analysis of a code file: coherence, equidistance,
    /// sunflower structure, optimum distance, intersection code.
    Analyze {
        /// Path to a flag code file.
        file: PathBuf,
    },
    /// Minimum flag distance, projected distances, and the distance bound.
    Distance {
        /// Path to a flag code file.
        file: PathBuf,
    },
    /// Monte-Carlo transmission experiment over the erasure channel.
    Simulate {
        /// Path to a coherent flag code file.
        file: PathBuf,
        #[command(flatten)]
        options: SimulateOptions,
    },
    /// Decode a received stuttering flag against a coherent code.
    Decode {
        /// Path to a coherent flag code file.
        #[arg(long)]
        code: PathBuf,
        /// Path to a received stuttering flag file (rows= header).
        #[arg(long)]
        received: PathBuf,
    },
}

#[derive(Args)]
struct SimulateOptions {
    /// Number of independent transmissions.
    #[arg(long, default_value_t = 10_000)]
    trials: usize,
    /// Per-generator loss probability.
    #[arg(long, conflicts_with = "pattern")]
    loss_prob: Option<f64>,
    /// Fixed cumulative erasure pattern e1,...,er.
    #[arg(long, value_delimiter = ',', conflicts_with = "loss_prob")]
    pattern: Option<Vec<usize>>,
    /// RNG seed; reports are byte-identical for a fixed seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; does not affect the report.
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error[{}]: {}", failure.class, failure.message);
            ExitCode::FAILURE
        }
    }
}

struct Failure {
    class: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure {
            class: e.class(),
            message: e.to_string(),
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        class: "io",
        message: format!("{}: {e}", path.display()),
    })
}

fn load_code(path: &Path) -> Result<FlagCode, Failure> {
    Ok(parse_code(&read_file(path)?)?)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Analyze { file } => {
            let code = load_code(file)?;
            Ok(if cli.machine {
                render::analyze_machine(&code)
            } else {
                render::analyze_human(&code)
            })
        }
        Command::Distance { file } => {
            let code = load_code(file)?;
            let report = code.coherence_report();
            Ok(if cli.machine {
                render::distance_machine(&code, &report)
            } else {
                render::distance_human(&code, &report)
            })
        }
        Command::Simulate { file, options } => {
            let code = load_code(file)?;
            let loss = match (&options.loss_prob, &options.pattern) {
                (Some(p), None) => LossModel::PerVector(*p),
                (None, Some(pattern)) => LossModel::Pattern(pattern.clone()),
                (None, None) => LossModel::PerVector(0.0),
                (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
            };
            let cfg = ExperimentConfig {
                trials: options.trials.max(1),
                loss,
                seed: options.seed,
                workers: options.workers.max(1),
            };
            let report = run_simulation(&code, &cfg)?;
            Ok(report.render(cli.machine))
        }
        Command::Decode { code, received } => {
            let code = load_code(code)?;
            let received_text = read_file(received)?;
            let mut received = parse_stuttering(&received_text)?;
            if received.len() != 1 {
                return Err(Failure {
                    class: "syntax",
                    message: format!(
                        "expected exactly one received stuttering flag, found {}",
                        received.len()
                    ),
                });
            }
            let received = received.pop().expect("length checked");
            let decoder = CoherentDecoder::new(code)?;
            let outcome = decoder.decode(&received)?;
            Ok(if cli.machine {
                render::decode_machine(&outcome)
            } else {
                render::decode_human(&outcome, decoder.thresholds(), &received)
            })
        }
    }
}
