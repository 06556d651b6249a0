use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let json = std::env::args().any(|a| a == "--json");
    let report = qnoeth::run(std::env::args_os());
    let out = report.render(json && !report.command.is_empty());
    print!("{out}");
    if let (Some(err), false) = (&report.error, json) {
        let err = err.trim_end();
        if err.starts_with("error:") {
            eprintln!("{err}");
        } else {
            eprintln!("error: {err}");
        }
    }
    let _ = std::io::stdout().flush();
    ExitCode::from(report.exit_code as u8)
}
