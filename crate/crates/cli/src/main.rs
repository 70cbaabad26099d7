use std::io::{stderr, stdout, BufWriter, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = stdout();
    let mut out = BufWriter::new(out.lock());
    let code = valuative_cli::run(std::env::args_os(), &mut out, &mut stderr());
    let _ = out.flush();
    ExitCode::from(code as u8)
}
