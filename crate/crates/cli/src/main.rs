mod args;
mod commands;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{Failure, EXIT_BAD_CONFIG};

fn run(cli: &Cli) -> commands::CmdResult {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match &cli.command {
        Command::Pell(a) => commands::pell(a, &mut out),
        Command::Det(a) => commands::det(a, &mut out),
        Command::Expand(a) => commands::expand(a, &mut out),
        Command::Verify(a) => commands::verify(a, &mut out),
        Command::Bench(a) => commands::bench(a, &mut out),
    }?;
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_BAD_CONFIG } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        // A closed downstream pipe (`| head`) is not an error.
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pellmat: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
