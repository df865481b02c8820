use std::io::Read;
use std::process::ExitCode;

use clap::Parser;
use gradres_cli::spec::Overrides;
use gradres_cli::{demo_source, run, Command};

/// Minimal free resolutions, associated graded modules and linearity
/// defects over quotients of polynomial rings.
#[derive(Parser, Debug)]
#[command(name = "gradres", version)]
struct Args {
    command: Command,
    /// Problem file (`-` for stdin); for `demo`, the scenario name.
    input: Option<String>,
    /// Number of resolution steps.
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long = "degree-cap")]
    degree_cap: Option<i64>,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Monomial order: degrevlex or deglex.
    #[arg(long)]
    order: Option<String>,
}

fn read_input(args: &Args) -> Result<(String, Option<String>), String> {
    let Some(path) = &args.input else {
        return Err(match args.command {
            Command::Demo => "demo needs a scenario name: contro or cyclic".into(),
            _ => "missing input file".into(),
        });
    };
    if args.command == Command::Demo {
        return demo_source(path).map(|s| (s.to_string(), Some(path.clone()))).map_err(|e| e.to_string());
    }
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s).map_err(|e| format!("stdin: {e}"))?
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    Ok((text, None))
}

fn main() -> ExitCode {
    let args = Args::parse();
    let (text, demo) = match read_input(&args) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let overrides = Overrides { steps: args.steps, degree_cap: args.degree_cap, order: args.order.clone() };
    match run(args.command, &text, demo.as_deref(), &overrides) {
        Ok(rep) => {
            if args.json {
                print!("{}", rep.to_json());
            } else {
                print!("{}", rep.text);
            }
            if rep.passed == Some(false) {
                eprintln!("assertion failed");
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
