use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pseudocodeword::cli::{exit_code, run, AnalysisConfig, Command, SimChannel};
use pseudocodeword::decode::Algorithm;
use pseudocodeword::graph::MatrixFormat;

#[derive(Parser)]
#[command(name = "tanner", about = "Pseudocodeword analysis of Tanner graphs")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Matrix file, or fixture:<name> for a bundled graph.
    #[arg(long, global = true, default_value = "fixture:hamming7-a")]
    input: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Alist)]
    format: Format,
    #[arg(long, global = true, value_enum, default_value_t = Chan::Awgn)]
    channel: Chan,
    /// ms, sp or ml.
    #[arg(long, global = true, default_value = "ms")]
    decoder: Algorithm,
    #[arg(long, global = true, value_delimiter = ',', default_value = "4,6,8")]
    snr_list: Vec<f64>,
    #[arg(long, global = true, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 100)]
    max_iters: usize,
    #[arg(long, global = true, default_value_t = 2)]
    order: usize,
    #[arg(long, global = true)]
    max_weight: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    root: usize,
    /// Computation-tree iterations.
    #[arg(long, global = true, default_value_t = 2)]
    depth: usize,
    /// Pseudocodeword for `realize`, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    p: Option<Vec<i64>>,
    #[arg(long, global = true, default_value_t = 16)]
    max_degree: usize,
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    Analyze,
    Enumerate,
    Simulate,
    Sweep,
    Comptree,
    Augment,
    Realize,
}

#[derive(ValueEnum, Clone, Copy)]
enum Format {
    Alist,
    Dense,
}

#[derive(ValueEnum, Clone, Copy)]
enum Chan {
    Awgn,
    Bsc,
    Bec,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let command = match cli.command {
        Cmd::Analyze => Command::Analyze,
        Cmd::Enumerate => Command::Enumerate,
        Cmd::Simulate => Command::Simulate,
        Cmd::Sweep => Command::Sweep,
        Cmd::Comptree => Command::Comptree,
        Cmd::Augment => Command::Augment,
        Cmd::Realize => Command::Realize,
    };
    let mut cfg = AnalysisConfig::new(command, cli.input);
    cfg.format = match cli.format {
        Format::Alist => MatrixFormat::Alist,
        Format::Dense => MatrixFormat::Dense,
    };
    cfg.channel = match cli.channel {
        Chan::Awgn => SimChannel::Awgn,
        Chan::Bsc => SimChannel::Bsc,
        Chan::Bec => SimChannel::Bec,
    };
    cfg.decoder = cli.decoder;
    cfg.snr_list = cli.snr_list;
    cfg.trials = cli.trials;
    cfg.seed = cli.seed;
    cfg.max_iters = cli.max_iters;
    cfg.order = cli.order;
    cfg.max_weight = cli.max_weight;
    cfg.root = cli.root;
    cfg.depth = cli.depth;
    cfg.p = cli.p;
    cfg.max_degree = Some(cli.max_degree);
    cfg.threads = cli.threads;

    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            log::warn!("could not size the thread pool: {e}");
        }
    }
    let result = run(&cfg).and_then(|text| match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(Into::into),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
