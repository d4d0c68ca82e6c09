use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use platknot_cli::{parse_document, run_command, CliError, Command, Format, Options};

/// Plat presentations of links and their cyclic branched coverings.
#[derive(Debug, Parser)]
#[command(name = "platknot", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Input document; `-` reads standard input
    #[arg(long = "in", value_name = "FILE", default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Render as SVG instead of ASCII
    #[arg(long)]
    svg: bool,
    /// With `normalize`, print the normalized document instead of the moves
    #[arg(long)]
    emit_normalized: bool,
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn run(args: &Args) -> Result<String, CliError> {
    let doc = parse_document(&read_input(&args.input)?)?;
    let opts = Options {
        format: args.format,
        svg: args.svg,
        emit_normalized: args.emit_normalized,
    };
    run_command(args.command, &doc, &opts)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&args) {
        Ok(out) => {
            let _ = io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("platknot: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
