use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let done = dedekind_cli::run_args(std::env::args_os());
    print!("{}", done.stdout);
    eprint!("{}", done.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(done.code as u8)
}
