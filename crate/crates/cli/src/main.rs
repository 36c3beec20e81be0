use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use higher_auslander::workbench::{parse_instance, run, Cache, Command, Outcome, RunOptions, SubcategoryChoice};
use higher_auslander::Error;

#[derive(Parser)]
#[command(name = "hiaus", version, about = "Check n-abelian axioms, find n-cluster tilting subcategories and verify the higher Auslander formula")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the n-abelian axioms on a subcategory.
    CheckAxioms(Args),
    /// Enumerate the n-cluster tilting subcategories.
    FindCt(Args),
    /// Verify the higher Auslander formula for a subcategory.
    VerifyAuslander(Args),
    /// All of the above in one report.
    Report(Args),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args)]
struct Args {
    /// Instance file (hiaus-instance/1).
    instance: PathBuf,
    /// Overrides the instance's n.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Ignore the result cache.
    #[arg(long)]
    no_cache: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// A subcategory named in the instance, `all` or `auto`.
    #[arg(long, default_value = "auto")]
    subcategory: SubcategoryChoice,
    /// Also write `<instance>.<command>.json` into this directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include wall-clock timings (the report is then no longer reproducible).
    #[arg(long)]
    timings: bool,
}

fn execute(command: Command, args: &Args) -> Result<Outcome, Error> {
    let instance = parse_instance(&args.instance)?;
    let opts = RunOptions { n: args.n, seed: args.seed, subcategory: args.subcategory.clone(), timings: args.timings };
    let mut cache = if args.no_cache { Cache::disabled() } else { Cache::from_env(args.seed) };
    let outcome = run(command, &instance, &opts, &mut cache)?;
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join(format!("{}.{}.json", instance.name(), command.name())), outcome.json())?;
    }
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match &cli.command {
        Cmd::CheckAxioms(a) => (Command::CheckAxioms, a),
        Cmd::FindCt(a) => (Command::FindCt, a),
        Cmd::VerifyAuslander(a) => (Command::VerifyAuslander, a),
        Cmd::Report(a) => (Command::Report, a),
    };
    match execute(command, args) {
        Ok(outcome) => {
            match args.format {
                Format::Json => print!("{}", outcome.json()),
                Format::Text => print!("{}", outcome.text()),
            }
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
