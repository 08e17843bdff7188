use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let run = refmon_cli::execute(std::env::args_os());
    print!("{}", run.stdout);
    eprint!("{}", run.stderr);
    std::io::stdout().flush().ok();
    ExitCode::from(run.code as u8)
}
