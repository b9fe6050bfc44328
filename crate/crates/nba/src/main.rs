use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(nba::cli::run(std::env::args_os(), &mut std::io::stdout().lock()))
}
