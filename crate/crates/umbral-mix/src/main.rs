use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(umbral_mix::cli::run() as u8)
}
