use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, output) = mechsynth_cli::run(std::env::args());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(output.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(code as u8)
}
