use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hopfgal_cli::{max_dim_from_env, run, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = match max_dim_from_env() {
        Ok(max_dim) => run(&cli, max_dim),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    print!("{}", exec.stdout);
    eprint!("{}", exec.stderr);
    std::io::stdout().flush().ok();
    ExitCode::from(exec.code)
}
