use clap::Parser;
use orbitcat_cli::Cli;

fn main() {
    let cli = Cli::parse();
    match cli.run() {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
