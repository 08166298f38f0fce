mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "holoflow", version, about = "Exact checks for lattice gauge operators and their flat-state series")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Operator: `cubical`, `alt3`, `sphere`, inline JSON, or a JSON file.
    #[arg(long, global = true)]
    pub op: Option<String>,
    /// Window radius (max-norm, in lattice coordinates).
    #[arg(long, global = true, value_parser = clap::value_parser!(i64).range(1..))]
    pub window: Option<i64>,
    /// Comma-separated scales, e.g. `--scales=-1,0,1`.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub scales: Option<Vec<i32>>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for sweeps.
    #[arg(long, global = true, env = "HOLOFLOW_JOBS", value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Add a rounded decimal next to every exact value.
    #[arg(long, global = true)]
    pub decimal: Option<usize>,
    /// Ambient dimension for the `cubical`/`alt3` shorthands.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(3..))]
    pub d: Option<u32>,
    /// Sphere plaquette areas, e.g. `1/2,1/4,1/4`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub areas: Option<Vec<String>>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gauge residuals over every (cube, plaquette) site in the window.
    VerifyInvariance,
    /// Compatibility residuals between each scale and the next finer one.
    VerifyCompat {
        /// Also show the refinement sum for one pair of plaquettes.
        #[arg(long, num_args = 2, value_names = ["P", "Q"], allow_hyphen_values = true)]
        pair: Option<Vec<String>>,
    },
    /// Flat-state series against Gaussian moments on the sphere.
    SphereCheck {
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
    },
    /// Dump coefficients on a box as an explicit operator.
    Tables {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(0..))]
        range: i64,
    },
    /// `mu_0 exp(lambda L) f` for one polynomial.
    Moments {
        #[arg(long)]
        poly: String,
    },
    /// Coefficient of lambda in the second moments over a window.
    Covariance {
        /// Also report the leading principal minors.
        #[arg(long)]
        psd: bool,
    },
    /// Normal forms of `L(f_c g)` for ideal generators and random `g`.
    Welldefined {
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli.command, &cli.global) {
        Ok(report) => {
            if let Err(e) = report.emit(cli.global.format, cli.global.out.as_deref()) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
