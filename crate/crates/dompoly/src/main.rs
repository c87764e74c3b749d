use clap::Parser;

fn main() {
    let cli = dompoly::cli::Cli::parse();
    std::process::exit(dompoly::cli::run(cli));
}
