//! Thin command-line front end over the `coherence_lab` library: parse
//! arguments, run one command, print its certificate, map errors to exit
//! codes (0 success, 2 validation, 3 classifier disagreement, 1 other).

use clap::{Parser, Subcommand, ValueEnum};
use coherence_lab::commands::{
    cmd_channel, cmd_coherence, cmd_counterexample, cmd_entangled_mcs, cmd_identity_decomp,
    cmd_mcs_make, cmd_superadd, CommandError, Measure, RunOptions,
};
use coherence_lab::states::DEFAULT_TOL;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "coherence-lab",
    about = "Coherence measures, maximally coherent states, and incoherent-channel analysis",
    version
)]
struct Cli {
    /// Validation tolerance (overrides COHERENCE_LAB_TOL).
    #[arg(long, global = true, env = "COHERENCE_LAB_TOL")]
    tol: Option<f64>,

    /// Seed for the deterministic generator behind randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Re,
    L1,
}

#[derive(Subcommand)]
enum Command {
    /// Coherence of a state file: value, log2(d) bound, MCS verdict.
    Coherence {
        state_file: PathBuf,
        #[arg(long, value_enum, default_value = "re")]
        measure: MeasureArg,
    },
    /// Super-additivity report for a bipartite state file.
    Superadd {
        state_file: PathBuf,
        #[arg(long)]
        da: usize,
        #[arg(long)]
        db: usize,
    },
    /// The 2x3 linear-phase construction at a given theta.
    Counterexample {
        #[arg(long)]
        theta: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximally coherent + maximally entangled state on a d x d system.
    EntangledMcs {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Identity as a sum of d maximally coherent states.
    IdentityDecomp {
        #[arg(long)]
        d: usize,
        /// Prefix for the emitted state files ({prefix}-0.json, ...).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Incoherence/unitality checks and the MCS-preservation classifier.
    Channel {
        kraus_file: PathBuf,
        #[arg(long)]
        classify: bool,
        /// Monte-Carlo probes for the classifier.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Build a maximally coherent state from a phase vector.
    McsMake {
        #[arg(long)]
        d: Option<usize>,
        /// Comma-separated phases in radians.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        phases: Option<Vec<f64>>,
        /// Phase-matrix file providing the phases.
        #[arg(long)]
        phases_file: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> Result<String, CommandError> {
    let mut opts = RunOptions {
        tol: cli.tol.unwrap_or(DEFAULT_TOL),
        seed: cli.seed,
        ..RunOptions::default()
    };
    let cert = match cli.command {
        Command::Coherence { state_file, measure } => {
            let measure = match measure {
                MeasureArg::Re => Measure::RelativeEntropy,
                MeasureArg::L1 => Measure::L1,
            };
            cmd_coherence(&state_file, measure, opts)?
        }
        Command::Superadd { state_file, da, db } => cmd_superadd(&state_file, da, db, opts)?,
        Command::Counterexample { theta, out } => cmd_counterexample(theta, out.as_deref(), opts)?,
        Command::EntangledMcs { d, out } => cmd_entangled_mcs(d, out.as_deref(), opts)?,
        Command::IdentityDecomp { d, out } => cmd_identity_decomp(d, out.as_deref(), opts)?,
        Command::Channel { kraus_file, classify, samples } => {
            opts.samples = samples;
            cmd_channel(&kraus_file, classify, opts)?
        }
        Command::McsMake { d, phases, phases_file, out } => {
            cmd_mcs_make(d, phases.as_deref(), phases_file.as_deref(), &out, opts)?
        }
    };
    Ok(cert.render())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
