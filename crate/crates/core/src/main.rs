use std::process::ExitCode;

fn main() -> ExitCode {
    symseq::cli::run(std::env::args_os())
}
