use std::process::ExitCode;

fn main() -> ExitCode {
    spclosure::cli::run(std::env::args_os())
}
