use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use usv_cli::commands::{self, EXIT_FAIL};
use usv_core::Execution;

#[derive(Parser)]
#[command(
    name = "usv",
    version,
    about = "Exact arithmetic over unsigned pairs, cyclic triples and 3x3 hypercomplex matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate expressions given as arguments, or one per line from stdin.
    #[command(after_help = commands::language_help())]
    Eval { exprs: Vec<String> },
    /// Interactive evaluator.
    #[command(after_help = commands::language_help())]
    Repl,
    /// Verify the three 8x8 unit multiplication tables (192 cells).
    Tables {
        /// One tab-separated record per cell.
        #[arg(long)]
        machine: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// Property-check ring laws, homomorphisms, norms and zero families.
    Verify {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// One tab-separated record per property.
        #[arg(long)]
        machine: bool,
        /// Run cases on one thread (results are identical either way).
        #[arg(long)]
        sequential: bool,
    },
    /// Check the listed square roots of 9 and -27 and the unit roots of +1 and -1.
    Roots {
        #[arg(long)]
        machine: bool,
    },
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

fn run(command: Command) -> io::Result<u8> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut err = io::stderr().lock();
    let code = match command {
        Command::Eval { exprs } if exprs.is_empty() => {
            commands::run_eval_lines(&mut io::stdin().lock(), &mut out, &mut err)?
        }
        Command::Eval { exprs } => commands::run_eval(&exprs, &mut out, &mut err)?,
        Command::Repl => commands::run_repl(&mut io::stdin().lock(), &mut out, &mut err)?,
        Command::Tables {
            machine,
            sequential,
        } => commands::run_tables(machine, execution(sequential), &mut out)?,
        Command::Verify {
            samples,
            seed,
            machine,
            sequential,
        } => commands::run_verify(samples, seed, machine, execution(sequential), &mut out)?,
        Command::Roots { machine } => commands::run_roots(machine, &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
