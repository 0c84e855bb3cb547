use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(magnomech::cli::run(std::env::args()) as u8)
}
