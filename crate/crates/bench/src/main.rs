use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qstrings_bench::runner::{
    execute, generate_table, BackendId, DistributionSpec, ProblemId, RunSpec,
};
use qstrings_bench::sweep::{run_sweep, write_csv, SweepParams, VaryParam};
use qstrings_core::adversary::{
    adversary_game, ReadAllStrategy, SamplingStrategy, Strategy, Verdict,
};
use qstrings_core::oracle::StringTable;

#[derive(Parser)]
#[command(
    name = "qstrings",
    version,
    about = "Query-model laboratory for string search, sorting and intersection \
             with a simulated quantum comparator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute one experiment and report its answer and query ledger.
    Run(RunArgs),
    /// Run a problem across a range of k or n, fit the log-log slope and
    /// optionally dump raw points as CSV.
    Sweep(SweepArgs),
    /// Play the deterministic-lower-bound adversary game.
    Adversary(AdversaryArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Number of strings n.
    #[arg(long, default_value_t = 16)]
    n: usize,
    /// Number of request strings m (intersection problems).
    #[arg(long, default_value_t = 0)]
    m: usize,
    /// String length k.
    #[arg(long, default_value_t = 16)]
    k: usize,
    /// Alphabet size d.
    #[arg(long, default_value_t = 4)]
    alphabet: u32,
    /// Cell distribution: uniform | shared-prefix:T | mismatch-at:P |
    /// mismatch-at:last. Default: mismatch-at:last for compare, uniform
    /// otherwise (sweeps over k default to shared-prefix:1).
    #[arg(long)]
    distribution: Option<String>,
}

#[derive(Args)]
struct EngineArgs {
    #[arg(long, value_enum, default_value_t = BackendId::ClosedForm)]
    backend: BackendId,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Override the boost base B (default: n, or n+m for intersection).
    #[arg(long)]
    boost_base: Option<u32>,
    /// Growth factor of the BBHT iteration ceiling.
    #[arg(long, default_value_t = 1.2)]
    bbht_growth: f64,
    /// BBHT effort cutoff factor (aborts at cutoff·√N).
    #[arg(long, default_value_t = 9.0)]
    bbht_cutoff: f64,
    /// Amplitude cap of the statevector backend.
    #[arg(long, default_value_t = 65536)]
    statevector_cap: usize,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_enum)]
    problem: ProblemId,
    #[command(flatten)]
    table: TableArgs,
    #[command(flatten)]
    engine: EngineArgs,
    /// Load the main sequence from a text file (one string per line) instead
    /// of generating it.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Load the request sequence from a text file.
    #[arg(long)]
    requests: Option<PathBuf>,
    /// Emit the report as JSON instead of a human summary.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    problem: ProblemId,
    /// Which dimension to sweep.
    #[arg(long, value_enum)]
    vary: VaryParam,
    /// Sweep values, comma separated (at least 4).
    #[arg(long, value_delimiter = ',', required = true)]
    values: Vec<usize>,
    /// Seeded repetitions per sweep value (at least 10).
    #[arg(long, default_value_t = 30)]
    repeats: u32,
    #[command(flatten)]
    table: TableArgs,
    #[command(flatten)]
    engine: EngineArgs,
    /// Write raw per-run rows to this CSV file.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Emit the fit as JSON instead of a human summary.
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, clap::ValueEnum)]
enum StrategyKind {
    /// Reads every cell, then answers.
    ReadAll,
    /// Reads a random strict subset of cells, then answers.
    Sample,
}

#[derive(Args)]
struct AdversaryArgs {
    /// Number of strings n (must be even).
    #[arg(long, default_value_t = 16)]
    n: usize,
    /// String length k.
    #[arg(long, default_value_t = 8)]
    k: usize,
    #[arg(long, value_enum, default_value_t = StrategyKind::Sample)]
    strategy: StrategyKind,
    /// Fraction of cells the sampling strategy reads.
    #[arg(long, default_value_t = 0.1)]
    fraction: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit the verdict as JSON.
    #[arg(long)]
    json: bool,
}

enum CliError {
    Usage(String),
    Runtime(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    match dispatch() {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn dispatch() -> Result<(), CliError> {
    match Cli::parse().command {
        Command::Run(args) => cmd_run(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Adversary(args) => cmd_adversary(args),
    }
}

fn parse_distribution(
    raw: &Option<String>,
    default: DistributionSpec,
) -> Result<DistributionSpec, CliError> {
    match raw {
        None => Ok(default),
        Some(s) => s.parse().map_err(usage),
    }
}

fn build_spec(problem: ProblemId, engine: &EngineArgs) -> RunSpec {
    RunSpec {
        problem,
        backend: engine.backend,
        seed: engine.seed,
        boost_base: engine.boost_base,
        bbht_growth: engine.bbht_growth,
        bbht_cutoff: engine.bbht_cutoff,
        statevector_cap: engine.statevector_cap,
    }
}

fn read_rows(path: &PathBuf) -> Result<Vec<Vec<u32>>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Runtime(format!("cannot read {}: {e}", path.display())))?;
    Ok(text
        .lines()
        .filter(|l| !l.is_empty())
        .map(|l| l.chars().map(|c| c as u32).collect())
        .collect())
}

fn cmd_run(args: RunArgs) -> Result<(), CliError> {
    let default_dist = match args.problem {
        ProblemId::Compare => DistributionSpec::MismatchAtLast,
        _ => DistributionSpec::Uniform,
    };
    let dist = parse_distribution(&args.table.distribution, default_dist)?;

    let (table, dist_label) = match &args.input {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Runtime(format!("cannot read {}: {e}", path.display())))?;
            let mut table = StringTable::parse_text(&text).map_err(usage_from_core)?;
            if let Some(req) = &args.requests {
                table = table
                    .with_requests(&read_rows(req)?)
                    .map_err(usage_from_core)?;
            }
            (table, "file".to_owned())
        }
        None => {
            if args.requests.is_some() {
                return Err(usage(
                    "--requests needs --input; use --m to generate requests",
                ));
            }
            let table = generate_table(
                args.table.n,
                args.table.m,
                args.table.k,
                args.table.alphabet,
                args.engine.seed,
                dist,
            )
            .map_err(usage_from_core)?;
            (table, dist.label(args.table.k))
        }
    };

    if args.problem == ProblemId::Compare && table.string_count() < 2 {
        return Err(usage("compare needs a table with at least 2 strings"));
    }
    if args.problem.needs_requests() && table.request_count() == 0 {
        return Err(usage(
            "intersection problems need requests: pass --m ≥ 1 or --requests FILE",
        ));
    }

    let spec = build_spec(args.problem, &args.engine);
    let report =
        execute(&table, &spec, &dist_label).map_err(|e| CliError::Runtime(e.to_string()))?;

    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        println!(
            "problem={} backend={} n={} m={} k={} d={} seed={} B={} r={} distribution={}",
            report.problem,
            report.backend,
            report.n,
            report.m,
            report.k,
            report.alphabet,
            report.seed,
            report.boost_base,
            report.repetitions,
            report.distribution,
        );
        println!("answer: {} correct={}", report.answer, report.correct);
        println!(
            "queries: classical={} quantum={} verification={} total={} alphabet_overhead={}",
            report.ledger.classical_reads,
            report.ledger.quantum_oracle_calls,
            report.ledger.verification_reads,
            report.total_queries,
            report.alphabet_overhead,
        );
        println!("wall: {:.3} ms", report.wall_time_ms);
    }
    Ok(())
}

fn usage_from_core(e: qstrings_core::Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let default_dist = match (args.problem, args.vary) {
        (ProblemId::Compare, _) => DistributionSpec::MismatchAtLast,
        (_, VaryParam::K) => DistributionSpec::SharedPrefix { tail: 1 },
        (_, VaryParam::N) => DistributionSpec::Uniform,
    };
    let dist = parse_distribution(&args.table.distribution, default_dist)?;
    let fixed_n = match (args.problem, args.vary) {
        (_, VaryParam::N) => 0,
        (ProblemId::Compare, _) => 2,
        _ => args.table.n,
    };
    if args.problem.needs_requests() && args.table.m == 0 {
        return Err(usage("intersection sweeps need --m ≥ 1"));
    }

    let params = SweepParams {
        spec: build_spec(args.problem, &args.engine),
        vary: args.vary,
        values: args.values.clone(),
        repeats: args.repeats,
        fixed_n,
        fixed_m: args.table.m,
        fixed_k: args.table.k,
        alphabet: args.table.alphabet,
        distribution: dist,
        seed: args.engine.seed,
    };
    let outcome = run_sweep(&params).map_err(usage)?;

    if let Some(path) = &args.csv {
        let file = fs::File::create(path)
            .map_err(|e| CliError::Runtime(format!("cannot create {}: {e}", path.display())))?;
        write_csv(&outcome.rows, file).map_err(|e| CliError::Runtime(e.to_string()))?;
    }

    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&outcome.fit).expect("fit serializes")
        );
    } else {
        println!(
            "sweep problem={} vary={} backend={} repeats={} seed={} distribution={}",
            args.problem,
            args.vary.as_str(),
            args.engine.backend,
            args.repeats,
            args.engine.seed,
            dist.label_generic(),
        );
        for p in &outcome.fit.points {
            println!(
                "  {}={}: mean total queries {:.1}",
                args.vary.as_str(),
                p.value,
                p.mean_queries
            );
        }
        println!(
            "slope={:.4} intercept={:.4} residual={:.6}",
            outcome.fit.slope, outcome.fit.intercept, outcome.fit.residual
        );
        if let Some(path) = &args.csv {
            println!("csv: {} ({} rows)", path.display(), outcome.rows.len());
        }
    }
    Ok(())
}

fn cmd_adversary(args: AdversaryArgs) -> Result<(), CliError> {
    let (mut strategy, cells): (Box<dyn Strategy>, usize) = match args.strategy {
        StrategyKind::ReadAll => (
            Box::new(ReadAllStrategy::new(args.n, args.k)),
            args.n * args.k,
        ),
        StrategyKind::Sample => {
            let s = SamplingStrategy::random(args.n, args.k, args.fraction, args.seed);
            let cells = s.cells_to_read();
            (Box::new(s), cells)
        }
    };
    let verdict = adversary_game(strategy.as_mut(), args.n, args.k).map_err(usage_from_core)?;
    let verdict_str = match &verdict {
        Verdict::AlgorithmWrong => "algorithm_wrong",
        Verdict::AlgorithmReadAll => "algorithm_read_all",
        Verdict::Inconclusive => "inconclusive",
        Verdict::StrategyError(_) => "strategy_error",
    };
    if args.json {
        let detail = match &verdict {
            Verdict::StrategyError(why) => format!(",\"detail\":\"{why}\""),
            _ => String::new(),
        };
        println!(
            "{{\"verdict\":\"{verdict_str}\",\"n\":{},\"k\":{},\"cells_read\":{cells}{detail}}}",
            args.n, args.k
        );
    } else {
        println!(
            "verdict: {verdict_str} (strategy reads {cells} of {} cells)",
            args.n * args.k
        );
        if let Verdict::StrategyError(why) = &verdict {
            println!("detail: {why}");
        }
    }
    Ok(())
}
