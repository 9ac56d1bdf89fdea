use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use applike::RecordType;

mod commands;

#[derive(Parser)]
#[command(name = "applike", version, about = "Record transformations in applicative-like style")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Encoding {
    /// fields as a cons-list
    #[default]
    Lisp,
    /// fields handed to a continuation
    Scott,
}

fn record_type(name: &str) -> Result<RecordType, String> {
    RecordType::from_name(name).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
pub enum Command {
    /// JSON record on stdin, lexeme line on stdout
    Show {
        #[arg(long = "type", value_name = "TYPE", value_parser = record_type)]
        ty: RecordType,
        #[arg(long, value_enum, default_value_t)]
        encoding: Encoding,
    },
    /// Lexeme line on stdin, JSON record on stdout
    Parse {
        #[arg(long = "type", value_name = "TYPE", value_parser = record_type)]
        ty: RecordType,
    },
    /// Maps the example device through not, +100, +200
    MapDemo {
        #[arg(long, value_enum, default_value_t)]
        encoding: Encoding,
    },
    /// Zips the example device with its mapped image
    ZipDemo {
        #[arg(long, value_enum, default_value_t)]
        encoding: Encoding,
    },
    /// Rewrites the example device with pop, push, dup
    RemapDemo,
    /// Averages newline-separated JSON benchmarks
    Avg,
    /// JSON record on stdin, binary image as hex on stdout
    EncodeBin {
        #[arg(long = "type", value_name = "TYPE", value_parser = record_type)]
        ty: RecordType,
    },
    /// Binary image as hex on stdin, JSON record on stdout
    DecodeBin {
        #[arg(long = "type", value_name = "TYPE", value_parser = record_type)]
        ty: RecordType,
    },
    /// Constructor notation on stdin (`Device False 19 1`), JSON on stdout
    ToJson,
    /// JSON record on stdin, constructor notation on stdout
    FromJson {
        #[arg(long = "type", value_name = "TYPE", value_parser = record_type)]
        ty: RecordType,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut input = String::new();
    if cli.command.reads_stdin() {
        if let Err(e) = io::stdin().read_to_string(&mut input) {
            eprintln!("applike: reading stdin: {e}");
            return ExitCode::FAILURE;
        }
    }
    match commands::run(&cli.command, &input) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if writeln!(stdout, "{out}").and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("applike: {e}");
            ExitCode::FAILURE
        }
    }
}
