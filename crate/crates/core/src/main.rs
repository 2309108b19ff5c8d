use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = axial::cli::run(std::env::args_os());
    if outcome.exit_code == 2 {
        let _ = std::io::stderr().write_all(outcome.report.as_bytes());
    } else {
        let _ = std::io::stdout().write_all(outcome.report.as_bytes());
    }
    ExitCode::from(outcome.exit_code as u8)
}
