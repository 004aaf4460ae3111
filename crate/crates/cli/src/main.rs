use assocform_cli::cli::{run, Cli};
use clap::Parser;

fn main() {
    let args = Cli::parse();
    match run(&args.cmd) {
        Ok(out) => {
            println!("{}", out.json);
            eprintln!("{}", out.summary);
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
