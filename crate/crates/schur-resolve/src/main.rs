use clap::error::ErrorKind;
use clap::Parser;

use schur_resolve::cli::{run, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{e}");
                std::process::exit(0);
            }
            _ => {
                eprint!("{e}");
                std::process::exit(1);
            }
        },
    };
    match run(&cli) {
        Ok(out) => {
            match &out.out_path {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &out.text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        std::process::exit(1);
                    }
                }
                None => println!("{}", out.text.trim_end_matches('\n')),
            }
            std::process::exit(if out.invariant_failure { 2 } else { 0 });
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
