use std::process::ExitCode;

use qpoly::cli::run_args;
use qpoly::format::to_json_string;

fn main() -> ExitCode {
    let response = run_args(std::env::args_os());
    for line in &response.diagnostics {
        eprintln!("{line}");
    }
    if let Some(body) = &response.body {
        println!("{}", to_json_string(body));
    }
    ExitCode::from(response.code as u8)
}
