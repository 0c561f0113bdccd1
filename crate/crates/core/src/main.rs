use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(msg) = sidonlab::cli::configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let argv: Vec<String> = std::env::args().collect();
    ExitCode::from(sidonlab::cli::run_command(&argv) as u8)
}
