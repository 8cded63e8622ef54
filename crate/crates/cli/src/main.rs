use std::io::Write;
use std::process::ExitCode;

use arithcorr_cli::commands::{run, Cli};
use arithcorr_cli::polytable::PolyTable;
use arithcorr_cli::{Output, UsageError, EXIT_USAGE};
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let out = execute(&cli);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}

fn execute(cli: &Cli) -> Output {
    let table = match PolyTable::from_env() {
        Ok(table) => table,
        Err(e) => return Output::usage(e),
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            return Output::usage(UsageError("--threads must be at least 1".into()));
        }
        builder = builder.num_threads(n);
    }
    match builder.build() {
        Ok(pool) => pool.install(|| run(cli, &table)),
        Err(e) => Output::usage(UsageError(format!("thread pool: {e}"))),
    }
}
