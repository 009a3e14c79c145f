use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    match wps_core::cli::run(std::env::args_os()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", wps_core::cli::diagnostic(&e));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
