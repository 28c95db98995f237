use std::process::exit;

fn main() {
    exit(coherence_order::cli::run(std::env::args_os()));
}
