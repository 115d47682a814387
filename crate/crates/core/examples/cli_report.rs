//! Drives the command line entry point in process and prints its JSON report.
//!
//! cargo run --example cli_report -- had components --in paley12.json

fn main() {
    let mut argv: Vec<String> = std::env::args().collect();
    if argv.len() == 1 {
        argv.extend(["tl", "gram", "--k", "3", "--delta", "2cos(pi/4)", "--rank"].map(String::from));
    }
    let code = planar::cli::main_with_args(argv, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
