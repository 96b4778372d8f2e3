use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cmtate_cli::{parse_top_values, run, CliError, Command, DatumSource, OutputFormat, RunConfig};

#[derive(Parser)]
#[command(name = "cmtate", version, about = "Lefschetz and Frobenius tori from CM Galois data")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// List every Frobenius function of the datum
    Enumerate(Common),
    /// Tate report (dim L, dim P, exotic) for one function or all of them
    Analyze(Common),
    /// Enumerated class count next to the closed forms
    Census(Common),
    /// Region pair G-set of the signed permutation representation
    Hazama(Common),
    /// Reduce every CM type to a Frobenius function
    Reduce(Common),
}

#[derive(Args)]
struct Common {
    /// Built-in datum: ell-c2, biq-c2c2, s3c2
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    builtin: Option<String>,
    /// Datum JSON file
    #[arg(long)]
    input: Option<PathBuf>,
    /// Comma-separated values on the iota-orbit representatives
    #[arg(long = "f", value_name = "V1,V2,...")]
    f: Option<String>,
    /// Use every enumerated function
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Enumeration cap on (d+1)^t
    #[arg(long, default_value_t = cmtate::DEFAULT_ENUMERATION_CAP)]
    cap: u128,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn config(cli: Cli) -> Result<RunConfig, CliError> {
    let (command, args) = match cli.command {
        Sub::Enumerate(a) => (Command::Enumerate, a),
        Sub::Analyze(a) => (Command::Analyze, a),
        Sub::Census(a) => (Command::Census, a),
        Sub::Hazama(a) => (Command::Hazama, a),
        Sub::Reduce(a) => (Command::Reduce, a),
    };
    let source = match (args.builtin, args.input) {
        (Some(name), None) => DatumSource::Builtin(name),
        (None, Some(path)) => DatumSource::File(path),
        _ => return Err(CliError::Usage("give exactly one of --builtin or --input".into())),
    };
    let mut config = RunConfig::new(command, source);
    config.format = match args.format {
        Format::Json => OutputFormat::Json,
        Format::Csv => OutputFormat::Csv,
    };
    config.enumeration_cap = args.cap;
    config.top_values = args.f.as_deref().map(parse_top_values).transpose()?;
    config.all = args.all;
    Ok(config)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match config(cli).and_then(|c| run(&c)) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(report.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("cmtate: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
