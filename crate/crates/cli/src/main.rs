use std::process::ExitCode;

use polyweyl_cli::error::CliError;

fn main() -> ExitCode {
    match polyweyl_cli::main_with_args(std::env::args_os().collect()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Usage(usage) => {
                    let _ = usage.print();
                }
                other => eprintln!("error: {other}"),
            }
            ExitCode::from(e.exit_code())
        }
    }
}
