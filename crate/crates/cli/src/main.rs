//! cantorlab: build self-similar ultrametric Cantor sets from stationary
//! Bratteli diagrams; compute their zeta abscissa and Hausdorff dimension,
//! certified Lipschitz/Hölder embeddings, and Pearson-Bellissard spectra.
//!
//! Exit codes: 0 success, 2 configuration error, 3 precondition or
//! tech-condition failure, 4 invariant violation.

mod commands;
mod config;
mod fmt;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Precondition(String),
    Invariant(String),
}

impl From<cantorlab_core::Error> for CliError {
    fn from(e: cantorlab_core::Error) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "config error: {m}"),
            CliError::Precondition(m) => write!(f, "precondition failure: {m}"),
            CliError::Invariant(m) => write!(f, "invariant violation: {m}"),
        }
    }
}

const AFTER_HELP: &str = "\
Config file (JSON): give exactly one diagram source plus a metric block:
  { \"substitution\": {\"alphabet\": [\"a\",\"b\"], \"rules\": {\"a\":\"ab\",\"b\":\"a\"}},
    \"metric\": {\"mode\": \"tiling\", \"d\": 1} }
or
  { \"diagram\": {\"vertices\": [\"a\"], \"edges\": [[0,0],[0,0]]},
    \"metric\": {\"mode\": \"regular\", \"alpha\": 0.3333333333333333} }
Optional sections \"dim\", \"embed\", \"spectrum\", \"verify\" tune each
subcommand; command-line flags override them.

Outputs (per subcommand, under --out):
  info     info.json (diagram dump, primitivity, Cantor verdicts, Perron data)
  dim      dim.json  (s0_closed, s0_numeric bracket, dims_equal, zeta, content curve)
  embed    embed_points.csv (word, coordinates), embed_report.json (distortion)
  spectrum spectrum_eigen.csv (word, eigenvalue, multiplicity; seed-relative),
           spectrum_omega.csv (value, tail_bound), spectrum.json
  verify   verify.json plus one PASS/FAIL line per invariant

All floats are printed with 12 significant digits. CANTORLAB_ENUM_CAP
overrides the path-enumeration cap (default 1000000).";

#[derive(Parser)]
#[command(name = "cantorlab", version, about, after_help = AFTER_HELP)]
struct Cli {
    /// Path to the JSON run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Directory for report files.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
    /// Sampling seed (overrides the config).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Diagram summary: adjacency, primitivity, Cantor verdicts, Perron data.
    Info,
    /// Zeta abscissa (closed form and numeric bracket), Hausdorff dimension,
    /// covering-content curve.
    Dim,
    /// Embed sampled paths into R^n (Lipschitz) or R (Hölder) and certify
    /// the two-sided distortion constants.
    Embed {
        /// Target dimension for the Lipschitz map.
        #[arg(long)]
        n: Option<u32>,
        /// Exponent for the Hölder line map.
        #[arg(long)]
        s: Option<f64>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        /// Plan a telescoped embedding into R^([dim_H]+1) and certify it.
        #[arg(long)]
        plan: bool,
    },
    /// Laplacian eigenvalue table and omega-spectrum approximation.
    Spectrum {
        #[arg(long)]
        s: Option<f64>,
        #[arg(long)]
        depth: Option<usize>,
        /// "enumerate" or "sample".
        #[arg(long)]
        mode: Option<String>,
        /// JSON coefficient table: {"edges": [..]} or {"per_s": [{"s":.., "edges":[..]}]}.
        #[arg(long)]
        beta_file: Option<PathBuf>,
        /// JSON array of per-vertex seed eigenvalues.
        #[arg(long)]
        seeds_file: Option<PathBuf>,
    },
    /// Run the cross-module invariant suite.
    Verify {
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        depth: Option<usize>,
        /// Include the spectrum tech-condition and omega checks.
        #[arg(long)]
        spectrum: bool,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            match e {
                CliError::Config(_) => ExitCode::from(2),
                CliError::Precondition(_) => ExitCode::from(3),
                CliError::Invariant(_) => ExitCode::from(4),
            }
        }
    }
}

fn enum_cap() -> Result<usize, CliError> {
    match std::env::var("CANTORLAB_ENUM_CAP") {
        Ok(v) => v
            .parse()
            .map_err(|_| CliError::Config(format!("CANTORLAB_ENUM_CAP is not a number: {v}"))),
        Err(_) => Ok(cantorlab_core::DEFAULT_ENUM_CAP),
    }
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    let config_path = cli
        .config
        .as_ref()
        .ok_or_else(|| CliError::Config("--config FILE is required".into()))?;
    let mut config = config::load(config_path)?;
    let ws = config::build(&config)?;
    let io = commands::Io {
        out_dir: &cli.out,
        seed: cli.seed.or(config.seed).unwrap_or(0),
        cap: enum_cap()?,
    };

    match cli.command {
        Command::Info => commands::info(&ws, &io),
        Command::Dim => commands::dim(&ws, &config.dim, &io),
        Command::Embed { n, s, depth, samples, plan } => {
            if n.is_some() && s.is_some() {
                return Err(CliError::Config("give at most one of --n and --s".into()));
            }
            if let Some(n) = n {
                config.embed.map = config::MapKind::Lipschitz;
                config.embed.n = n;
            }
            if let Some(s) = s {
                config.embed.map = config::MapKind::Hoelder;
                config.embed.s = s;
            }
            if let Some(depth) = depth {
                config.embed.depth = depth;
            }
            if let Some(samples) = samples {
                config.embed.samples = samples;
            }
            config.embed.use_plan = config.embed.use_plan || plan;
            commands::embed_cmd(&ws, &config.embed, &io)
        }
        Command::Spectrum { s, depth, mode, beta_file, seeds_file } => {
            if let Some(s) = s {
                config.spectrum.s = Some(s);
            }
            if let Some(depth) = depth {
                config.spectrum.depth = depth;
            }
            if let Some(mode) = mode {
                config.spectrum.mode = match mode.as_str() {
                    "enumerate" => config::OmegaModeCfg::Enumerate,
                    "sample" => config::OmegaModeCfg::Sample,
                    other => {
                        return Err(CliError::Config(format!(
                            "unknown mode '{other}' (expected enumerate or sample)"
                        )))
                    }
                };
            }
            let args = commands::SpectrumArgs { beta_file, seeds_file };
            commands::spectrum(&ws, &config.spectrum, &args, &io)
        }
        Command::Verify { samples, depth, spectrum } => {
            if let Some(samples) = samples {
                config.verify.samples = samples;
            }
            if let Some(depth) = depth {
                config.verify.depth = depth;
            }
            config.verify.spectrum = config.verify.spectrum || spectrum;
            commands::verify_cmd(&ws, &config.verify, &io)
        }
    }
}
