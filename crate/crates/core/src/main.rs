// SPDX-License-Identifier: Apache-2.0
use clap::Parser;
use thermsched::cli::{run, Cli};

fn main() {
    // Exit code 2 is reserved for screening failures, so usage errors map to 1.
    let cli = Cli::try_parse().unwrap_or_else(|e| {
        let code = if e.use_stderr() { 1 } else { 0 };
        let _ = e.print();
        std::process::exit(code);
    });
    if let Err(e) = run(&cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
