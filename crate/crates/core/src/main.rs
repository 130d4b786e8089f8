use std::io::Write;
use subalg::cli::{init_logging, run_args, EXIT_OK, EXIT_VERIFY};

fn main() {
    init_logging();
    let out = run_args(std::env::args_os());
    let json = std::env::args().any(|a| a == "--json");
    let body = if json { serde_json::to_string_pretty(&out.json).unwrap_or_default() } else { out.text };
    let _ = if json || out.code == EXIT_OK || out.code == EXIT_VERIFY {
        writeln!(std::io::stdout().lock(), "{}", body)
    } else {
        writeln!(std::io::stderr().lock(), "{}", body)
    };
    std::process::exit(out.code);
}
