use clap::Parser;

fn main() {
    let cli = oadlc_cli::Cli::parse();
    std::process::exit(oadlc_cli::run(&cli));
}
