use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use cp3_cli::{run_cli, Cli, EXIT_INTERNAL};

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let out = run_cli(&cli, argv[1..].join(" "));
    let mut code = out.code;
    if let Some(m) = &out.message {
        eprintln!("{}", m.trim_end());
    }
    if let Some(report) = &out.report {
        if !cli.quiet {
            let _ = report.write_table(std::io::stderr().lock());
        }
        let json = report.to_json();
        let written = match &cli.report {
            Some(path) => std::fs::write(path, json + "\n").map_err(|e| format!("{}: {e}", path.display())),
            None => writeln!(std::io::stdout().lock(), "{json}").map_err(|e| e.to_string()),
        };
        if let Err(e) = written {
            eprintln!("cannot write report: {e}");
            code = EXIT_INTERNAL;
        }
    }
    ExitCode::from(code as u8)
}
