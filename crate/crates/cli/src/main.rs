use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use signed_inference::decompose::ZeroPolicy;
use signed_inference_cli::{batch_status, batch_to_json, parse_p_list, run, run_batch, Command, Flags};

/// Exact inference from comparative-likelihood rankings.
#[derive(Parser, Debug)]
#[command(name = "sinfer", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,

    /// JSON input file (not needed for `archery`).
    input: Option<PathBuf>,

    /// Side of the Hahn split for zero-weight atoms.
    #[arg(long, default_value = "to-pos", value_parser = ["to-pos", "to-neg", "enumerate-all"])]
    zero_policy: String,

    /// Comma-separated prior weights for `bayes`, e.g. `23/100,73/150`.
    #[arg(long, value_delimiter = ',')]
    p: Option<Vec<String>>,

    /// Polar grid JSON for `archery` and `knife`.
    #[arg(long)]
    grid: Option<PathBuf>,

    /// Most violations listed per axiom checker.
    #[arg(long, default_value_t = 100)]
    max_violations: usize,

    /// Run the command on every `*.json` file in this directory.
    #[arg(long, conflicts_with = "input")]
    batch: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let p = match args.p.as_deref().map(parse_p_list).transpose() {
        Ok(p) => p,
        Err(msg) => {
            eprintln!("invalid --p: {msg}");
            return ExitCode::from(1);
        }
    };
    let flags = Flags {
        zero_policy: ZeroPolicy::parse(&args.zero_policy).expect("clap restricts the values"),
        p,
        grid: args.grid,
        max_violations: args.max_violations,
    };

    let (output, code) = match &args.batch {
        Some(dir) => match run_batch(args.command, dir, &flags) {
            Ok(reports) => (batch_to_json(&reports), batch_status(&reports).exit_code()),
            Err(msg) => {
                eprintln!("{msg}");
                return ExitCode::from(1);
            }
        },
        None => {
            let report = run(args.command, args.input.as_deref(), &flags);
            (report.to_json(), report.status.exit_code())
        }
    };
    let text = serde_json::to_string_pretty(&output).expect("reports serialize");
    // A closed pipe downstream is not this command's failure.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(code as u8)
}
