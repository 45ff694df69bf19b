use std::io::Write;

fn main() {
    let outcome = distgraph::cli::run(std::env::args_os());
    // a closed pipe is not worth a panic
    let _ = writeln!(std::io::stdout().lock(), "{}", outcome.payload);
    std::process::exit(outcome.exit_code);
}
