use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use a1score_cli::commands::{
    run_compare, run_plot, run_rank, CompareFormat, Emit, EvalArgs, ProfileArgs,
};
use a1score_cli::CliError;

/// Compare algorithms' combined time and space efficiency with the
/// A1-Score metric.
#[derive(Parser)]
#[command(name = "a1score", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two algorithms at a decision point n and print a verdict.
    Compare(CompareArgs),
    /// Sample A1-Scores over a range and write CSV and/or SVG plot data.
    Plot(PlotArgs),
    /// Rank a catalog of algorithms by round-robin pairwise comparison.
    Rank(RankArgs),
}

#[derive(Args, Clone)]
struct PairFlags {
    /// Time complexity of algorithm X, e.g. "n log n".
    #[arg(long = "x-time")]
    x_time: String,
    /// Space complexity of algorithm X.
    #[arg(long = "x-space")]
    x_space: String,
    /// Time complexity of algorithm Y.
    #[arg(long = "y-time")]
    y_time: String,
    /// Space complexity of algorithm Y.
    #[arg(long = "y-space")]
    y_space: String,
    /// Display name for algorithm X.
    #[arg(long = "x-name", default_value = "X")]
    x_name: String,
    /// Display name for algorithm Y.
    #[arg(long = "y-name", default_value = "Y")]
    y_name: String,
}

impl PairFlags {
    fn profiles(&self) -> (ProfileArgs, ProfileArgs) {
        (
            ProfileArgs {
                name: self.x_name.clone(),
                time: self.x_time.clone(),
                space: self.x_space.clone(),
            },
            ProfileArgs {
                name: self.y_name.clone(),
                time: self.y_time.clone(),
                space: self.y_space.clone(),
            },
        )
    }
}

#[derive(Args, Clone, Copy)]
struct EvalFlags {
    /// Scaling factor xi.
    #[arg(long, default_value_t = 1.0)]
    xi: f64,
    /// Logarithm base (must exceed 1).
    #[arg(long = "log-base", default_value_t = 2.0)]
    log_base: f64,
}

impl EvalFlags {
    fn args(&self) -> EvalArgs {
        EvalArgs {
            xi: self.xi,
            log_base: self.log_base,
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum FormatFlag {
    Text,
    Kv,
}

#[derive(ValueEnum, Clone, Copy)]
enum EmitFlag {
    Csv,
    Svg,
    Both,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    pair: PairFlags,
    /// Decision point n (a real greater than 1).
    #[arg(long = "n", default_value_t = 3.0)]
    n: f64,
    #[command(flatten)]
    eval: EvalFlags,
    /// Crossover scan range as lo:hi:samples.
    #[arg(long, default_value = "2:1000:512")]
    scan: String,
    /// Report format: human-readable text or key=value lines.
    #[arg(long, value_enum, default_value_t = FormatFlag::Text)]
    format: FormatFlag,
}

#[derive(Args)]
struct PlotArgs {
    #[command(flatten)]
    pair: PairFlags,
    #[command(flatten)]
    eval: EvalFlags,
    /// Sample range as lo:hi:samples.
    #[arg(long, default_value = "2:1000:512")]
    scan: String,
    /// Output path; the extension is set per emitted format.
    #[arg(long)]
    out: PathBuf,
    /// Which file(s) to write.
    #[arg(long, value_enum, default_value_t = EmitFlag::Csv)]
    emit: EmitFlag,
}

#[derive(Args)]
struct RankArgs {
    /// Catalog CSV with header name,time,space.
    catalog: PathBuf,
    /// Decision point n (a real greater than 1).
    #[arg(long = "n", default_value_t = 3.0)]
    n: f64,
    #[command(flatten)]
    eval: EvalFlags,
    /// Crossover scan range as lo:hi:samples.
    #[arg(long, default_value = "2:1000:512")]
    scan: String,
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compare(args) => {
            let (x, y) = args.pair.profiles();
            let format = match args.format {
                FormatFlag::Text => CompareFormat::Text,
                FormatFlag::Kv => CompareFormat::Kv,
            };
            let report = run_compare(&x, &y, args.n, args.eval.args(), &args.scan, format)?;
            print!("{report}");
            Ok(())
        }
        Command::Plot(args) => {
            let (x, y) = args.pair.profiles();
            let emit = match args.emit {
                EmitFlag::Csv => Emit::Csv,
                EmitFlag::Svg => Emit::Svg,
                EmitFlag::Both => Emit::Both,
            };
            let outcome = run_plot(&x, &y, args.eval.args(), &args.scan, &args.out, emit)?;
            if outcome.skipped > 0 {
                eprintln!(
                    "warning: {} sample(s) omitted (overflow in double precision)",
                    outcome.skipped
                );
            }
            for path in &outcome.files {
                println!("wrote {} ({} samples)", path.display(), outcome.rows);
            }
            Ok(())
        }
        Command::Rank(args) => {
            let report = run_rank(&args.catalog, args.n, args.eval.args(), &args.scan)?;
            print!("{report}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version land here too; they exit 0.
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
