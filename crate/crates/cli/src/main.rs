use clap::Parser;

fn main() {
    let cli = braidgt::cli::Cli::parse();
    std::process::exit(braidgt::run(&cli));
}
