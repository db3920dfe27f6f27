use clap::Parser;

use scalelaw::{execute, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Prints usage to stderr and exits 2 (help/version print and exit 0).
        Err(err) => err.exit(),
    };
    match execute(cli) {
        Ok(report) => println!("{report}"),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
