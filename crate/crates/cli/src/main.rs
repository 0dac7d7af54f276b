use clap::Parser;

use equilines_cli::config::Cli;

fn main() {
    let cli = Cli::parse();
    std::process::exit(equilines_cli::execute(&cli));
}
