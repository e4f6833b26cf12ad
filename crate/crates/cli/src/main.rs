use std::io;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use tangle_cli::bench::BenchConfig;
use tangle_cli::commands::{self, exit, BenchArgs, CheckMode, Family, ListFormat, SolveArgs};
use tangle_core::render::Format;
use tangle_core::{Algo, Budget};

/// Minimum-height tangles for swap lists.
///
/// Exit status: 0 success or positive answer, 1 negative answer (infeasible,
/// inconsistent, separable, counterexample), 2 time limit hit, 3 memory limit
/// hit, 4 malformed input or arguments, 5 any other failure.
#[derive(Parser)]
#[command(name = "tangle", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Simple,
    General,
    Baseline,
}

impl From<AlgoArg> for Algo {
    fn from(a: AlgoArg) -> Algo {
        match a {
            AlgoArg::Simple => Algo::Simple,
            AlgoArg::General => Algo::General,
            AlgoArg::Baseline => Algo::Baseline,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Consistency,
    Feasibility,
    NonSeparability,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Ln,
    E,
    Random,
    Hardness,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormatArg {
    Json,
    Matrix,
}

#[derive(Clone, Copy, ValueEnum)]
enum DrawFormatArg {
    Svg,
    Ascii,
}

#[derive(clap::Args)]
struct Limits {
    /// Wall-clock limit in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Approximate memory limit in MiB.
    #[arg(long)]
    mem_limit: Option<usize>,
}

impl Limits {
    fn budget(&self) -> Budget {
        let mut b = Budget::unlimited();
        if let Some(s) = self.time_limit {
            b = b.with_time(Duration::from_secs_f64(s.max(0.0)));
        }
        if let Some(m) = self.mem_limit {
            b = b.with_memory(m.saturating_mul(1 << 20));
        }
        b
    }
}

#[derive(Subcommand)]
enum Command {
    /// Find a minimum-height tangle for a list file; prints a JSON report.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "general")]
        algo: AlgoArg,
        #[command(flatten)]
        limits: Limits,
        /// Also write the tangle to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Answer a yes/no question about a list file.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "feasibility")]
        mode: ModeArg,
    },
    /// Write an instance list.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Wire count for ln, e and random.
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Number of swaps for random.
        #[arg(long, default_value_t = 8)]
        total: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Redraws allowed before random gives up.
        #[arg(long, default_value_t = 10_000)]
        max_rounds: usize,
        /// Number of triples for a seeded hardness instance.
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Triple sum for a seeded hardness instance.
        #[arg(long, default_value_t = 20)]
        target: u64,
        /// Explicit 3-Partition values for hardness, comma separated.
        #[arg(long, value_delimiter = ',')]
        values: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value = "json")]
        format: ListFormatArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Draw a tangle file.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "svg")]
        format: DrawFormatArg,
        #[arg(long)]
        column_width: Option<u32>,
        #[arg(long)]
        row_height: Option<u32>,
        #[arg(long)]
        no_labels: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time solvers on every list file in a directory; writes CSV.
    Bench {
        /// Directory of list files.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "general,baseline")]
        algo: Vec<AlgoArg>,
        #[command(flatten)]
        limits: Limits,
        #[arg(long, default_value_t = 1)]
        repeats: u32,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Let the baseline revisit equal states instead of merging them.
        #[arg(long)]
        no_dedup: bool,
        /// Per-run records; stdout if absent.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Per-instance means; stderr if absent.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Check that every non-separable even list is feasible, exhaustively.
    VerifyConjecture {
        #[arg(long)]
        n: usize,
        /// Largest entry; must be even.
        #[arg(long, default_value_t = 2)]
        bound: u32,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn run(command: Command) -> anyhow::Result<u8> {
    let stdout = &mut io::stdout().lock();
    match command {
        Command::Solve { input, algo, limits, output } => {
            commands::cmd_solve(&SolveArgs { input, algo: algo.into(), budget: limits.budget(), output }, stdout)
        }
        Command::Check { input, mode } => {
            let mode = match mode {
                ModeArg::Consistency => CheckMode::Consistency,
                ModeArg::Feasibility => CheckMode::Feasibility,
                ModeArg::NonSeparability => CheckMode::NonSeparability,
            };
            commands::cmd_check(&input, mode, stdout)
        }
        Command::Gen { family, n, total, seed, max_rounds, m, target, values, format, output } => {
            let family = match family {
                FamilyArg::Ln => Family::Ln { n },
                FamilyArg::E => Family::E { n },
                FamilyArg::Random => Family::Random { n, total, seed, max_rounds },
                FamilyArg::Hardness => Family::Hardness { values, m, target, seed },
            };
            let format = match format {
                ListFormatArg::Json => ListFormat::Json,
                ListFormatArg::Matrix => ListFormat::Matrix,
            };
            commands::cmd_gen(&family, format, output.as_deref(), stdout)
        }
        Command::Render { input, format, column_width, row_height, no_labels, output } => {
            let mut spec = commands::default_spec(match format {
                DrawFormatArg::Svg => Format::Svg,
                DrawFormatArg::Ascii => Format::Ascii,
            });
            spec.column_width = column_width.unwrap_or(spec.column_width);
            spec.row_height = row_height.unwrap_or(spec.row_height);
            spec.labels = !no_labels;
            commands::cmd_render(&input, &spec, output.as_deref(), stdout)
        }
        Command::Bench { input, algo, limits, repeats, workers, no_dedup, output, summary } => {
            let config = BenchConfig {
                algos: algo.into_iter().map(Algo::from).collect(),
                budget: limits.budget(),
                repeats,
                workers,
                baseline_dedup: !no_dedup,
            };
            commands::cmd_bench(&BenchArgs { input, config, output, summary }, stdout, &mut io::stderr())
        }
        Command::VerifyConjecture { n, bound, workers, output } => {
            commands::cmd_verify_conjecture(n, bound, workers, output.as_deref(), stdout)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::INPUT } else { exit::OK });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::error_status(&e))
        }
    }
}
