//! Command-line interface: count solutions, verify against the brute-force
//! oracle, run benchmarks, and render charts, tables, and boards.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use queens::bench::{
    default_trial_schedule, parse_trials_file, read_summaries_csv, run_bench, summarize,
    write_summaries_csv, write_summaries_json, write_trials_csv, BenchConfig, BenchSummary,
};
use queens::oracle::brute_force_count;
use queens::parallel::{count_parallel, hardware_workers, ExecutionMode, ModeKind};
use queens::report::{emit_chart, emit_table, render_board, ChartSpec, Scale};
use queens::solver::{count_all_solutions, enumerate_solutions, BoardSize};

#[derive(Parser)]
#[command(
    name = "queens",
    version,
    about = "Count N-queens solutions and benchmark sequential vs parallel strategies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count all solutions for one board size.
    Count {
        /// Board size.
        #[arg(long)]
        n: usize,
        /// Execution strategy.
        #[arg(long, default_value = "seq")]
        mode: ModeKind,
        /// Worker threads for para/pool (default: hardware parallelism).
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Compare the solver against the brute-force oracle for one board size.
    Verify {
        /// Board size (oracle limit: 11).
        #[arg(long)]
        n: usize,
    },
    /// Run timed trials and write trial and summary results.
    Bench {
        /// Smallest board size to benchmark.
        #[arg(long, default_value_t = 8)]
        min_n: usize,
        /// Largest board size to benchmark.
        #[arg(long, default_value_t = 15)]
        max_n: usize,
        /// Comma-separated execution strategies to benchmark.
        #[arg(long, value_delimiter = ',', default_value = "seq,para,pool")]
        modes: Vec<ModeKind>,
        /// File of `<n> <trials>` lines replacing the default trial schedule.
        #[arg(long)]
        trials_file: Option<PathBuf>,
        /// Worker threads for para/pool (default: hardware parallelism).
        #[arg(long)]
        workers: Option<usize>,
        /// Output path (default: bench.csv, or bench.json for JSON format).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format: csv writes trials plus a sibling summary file,
        /// json writes one document of summaries with the config echoed.
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        /// Unrecorded runs before each cell's timed trials.
        #[arg(long, default_value_t = 1)]
        warmup: usize,
    },
    /// Render a summary CSV as an SVG chart.
    Plot {
        /// Summary CSV produced by `bench`.
        #[arg(long = "in")]
        input: PathBuf,
        /// Vertical axis scale.
        #[arg(long, default_value = "linear")]
        scale: Scale,
        /// Output SVG path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Print a summary CSV as an aligned text table.
    Table {
        /// Summary CSV produced by `bench`.
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print the first few solutions as ASCII boards.
    Show {
        /// Board size.
        #[arg(long)]
        n: usize,
        /// Maximum number of boards to print.
        #[arg(long, default_value_t = 3)]
        limit: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

fn main() -> anyhow::Result<ExitCode> {
    env_logger::init();
    let cli = Cli::parse();
    match cli.command {
        Command::Count { n, mode, workers } => count(n, mode, workers),
        Command::Verify { n } => verify(n),
        Command::Bench {
            min_n,
            max_n,
            modes,
            trials_file,
            workers,
            out,
            format,
            warmup,
        } => bench(
            min_n,
            max_n,
            modes,
            trials_file,
            workers,
            out,
            format,
            warmup,
        ),
        Command::Plot { input, scale, out } => plot(&input, scale, &out),
        Command::Table { input } => table(&input),
        Command::Show { n, limit } => show(n, limit),
    }
}

fn count(n: usize, mode: ModeKind, workers: Option<usize>) -> anyhow::Result<ExitCode> {
    let workers = workers.unwrap_or_else(hardware_workers);
    let mode = ExecutionMode::new(mode, workers)?;
    let count = count_parallel(BoardSize::new(n), mode)?;
    println!("{count}");
    Ok(ExitCode::SUCCESS)
}

fn verify(n: usize) -> anyhow::Result<ExitCode> {
    let board = BoardSize::new(n);
    let solver_count = count_all_solutions(board);
    let oracle_count = brute_force_count(board)?.count;
    println!("solver: {solver_count}");
    println!("oracle: {oracle_count}");
    if solver_count == oracle_count {
        println!("AGREE");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("DISAGREE");
        Ok(ExitCode::FAILURE)
    }
}

#[allow(clippy::too_many_arguments)]
fn bench(
    min_n: usize,
    max_n: usize,
    modes: Vec<ModeKind>,
    trials_file: Option<PathBuf>,
    workers: Option<usize>,
    out: Option<PathBuf>,
    format: OutputFormat,
    warmup: usize,
) -> anyhow::Result<ExitCode> {
    let trial_schedule = match &trials_file {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading trials file {}", path.display()))?;
            parse_trials_file(&text)?
        }
        None => default_trial_schedule(),
    };
    let config = BenchConfig {
        min_n,
        max_n,
        modes,
        trial_schedule,
        warmup_runs: warmup,
        workers: workers.unwrap_or_else(hardware_workers),
    };
    let records = run_bench(&config)?;
    let summaries = summarize(&records);

    match format {
        OutputFormat::Csv => {
            let trials_path = out.unwrap_or_else(|| PathBuf::from("bench.csv"));
            let summary_path = summary_sibling(&trials_path);
            let trials_out = fs::File::create(&trials_path)
                .with_context(|| format!("creating {}", trials_path.display()))?;
            write_trials_csv(&records, trials_out)?;
            let summary_out = fs::File::create(&summary_path)
                .with_context(|| format!("creating {}", summary_path.display()))?;
            write_summaries_csv(&summaries, summary_out)?;
            eprintln!(
                "wrote {} trial records to {} and {} summaries to {}",
                records.len(),
                trials_path.display(),
                summaries.len(),
                summary_path.display()
            );
        }
        OutputFormat::Json => {
            let path = out.unwrap_or_else(|| PathBuf::from("bench.json"));
            let file =
                fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
            write_summaries_json(&config, &summaries, file)?;
            eprintln!("wrote {} summaries to {}", summaries.len(), path.display());
        }
    }
    print!("{}", emit_table(&summaries));
    Ok(ExitCode::SUCCESS)
}

/// `bench.csv` → `bench.summary.csv`, keeping the directory.
fn summary_sibling(trials_path: &Path) -> PathBuf {
    trials_path.with_extension("summary.csv")
}

fn read_summaries(path: &Path) -> anyhow::Result<Vec<BenchSummary>> {
    let file =
        fs::File::open(path).with_context(|| format!("opening summary CSV {}", path.display()))?;
    Ok(read_summaries_csv(file)?)
}

fn plot(input: &Path, scale: Scale, out: &Path) -> anyhow::Result<ExitCode> {
    let summaries = read_summaries(input)?;
    let spec = ChartSpec::from_summaries(&summaries, scale);
    emit_chart(&spec, out)?;
    eprintln!("wrote {}", out.display());
    Ok(ExitCode::SUCCESS)
}

fn table(input: &Path) -> anyhow::Result<ExitCode> {
    let summaries = read_summaries(input)?;
    print!("{}", emit_table(&summaries));
    Ok(ExitCode::SUCCESS)
}

fn show(n: usize, limit: usize) -> anyhow::Result<ExitCode> {
    let solutions = enumerate_solutions(BoardSize::new(n), Some(limit));
    if solutions.is_empty() {
        println!("no solutions for n={n}");
        return Ok(ExitCode::SUCCESS);
    }
    for (index, placement) in solutions.iter().enumerate() {
        if index > 0 {
            println!();
        }
        print!("{}", render_board(placement));
    }
    Ok(ExitCode::SUCCESS)
}
