use std::error::Error;

use applike::codec::lexeme::parse_text;
use applike::codec::{decode_binary, encode_binary, from_named, to_lexemes, to_named};
use applike::pipeline::{self, average, example_device, run_map, run_zip};
use applike::scott::{self, run_map_cps, run_show_cps, run_zip_cps};
use applike::{Benchmark, Record, RecordType};

use crate::{Command, Encoding};

pub type CliResult<T> = Result<T, Box<dyn Error>>;

impl Command {
    pub fn reads_stdin(&self) -> bool {
        !matches!(
            self,
            Command::MapDemo { .. } | Command::ZipDemo { .. } | Command::RemapDemo
        )
    }
}

/// Drops one trailing line break; spaces are significant in lexeme lines.
fn line(input: &str) -> &str {
    let input = input.strip_suffix('\n').unwrap_or(input);
    input.strip_suffix('\r').unwrap_or(input)
}

fn json_record(input: &str, ty: RecordType) -> CliResult<Record> {
    Ok(from_named(line(input), ty)?)
}

fn show(r: &Record, encoding: Encoding) -> CliResult<String> {
    let lexemes = to_lexemes(r)?;
    match encoding {
        Encoding::Lisp => Ok(lexemes),
        Encoding::Scott => {
            let t = r.record_type();
            Ok(run_show_cps(scott::show_record_cps(t).run(r)?)?)
        }
    }
}

fn map_demo(encoding: Encoding) -> CliResult<Record> {
    let d = example_device();
    Ok(match encoding {
        Encoding::Lisp => run_map(pipeline::map_device().run(&d)?)?,
        Encoding::Scott => run_map_cps(scott::map_device_cps().run(&d)?)?,
    })
}

/// `zipDevice exampleDevice (mapDevice exampleDevice)`
fn zip_demo(encoding: Encoding) -> CliResult<Record> {
    let d = example_device();
    let mapped = applike::Device::try_from(map_demo(encoding)?)?;
    Ok(match encoding {
        Encoding::Lisp => run_zip(pipeline::zip_device().run(&d, &mapped)?)?,
        Encoding::Scott => run_zip_cps(scott::zip_device_cps().run(&d, &mapped)?)?,
    })
}

fn avg(input: &str) -> CliResult<Record> {
    let mut runs = Vec::new();
    for (i, l) in input.lines().enumerate() {
        if l.trim().is_empty() {
            continue;
        }
        let r = from_named(l, RecordType::Benchmark).map_err(|e| format!("line {}: {e}", i + 1))?;
        runs.push(Benchmark::try_from(r)?);
    }
    Ok(average(&runs)?.into())
}

fn decode_hex(input: &str, ty: RecordType) -> CliResult<Record> {
    let bytes = hex::decode(input.trim()).map_err(|e| format!("bad hex: {e}"))?;
    Ok(decode_binary(&bytes, ty)?)
}

/// `Device False 19 1`
fn constructor_notation(r: &Record) -> CliResult<String> {
    Ok(format!("{} {}", r.record_type().name(), to_lexemes(r)?))
}

fn from_constructor_notation(input: &str) -> CliResult<Record> {
    let input = line(input);
    let (head, rest) = input.split_once(' ').unwrap_or((input, ""));
    let ty = RecordType::from_name(head)?;
    if head != ty.name() {
        return Err(format!("constructor `{head}` should be written `{}`", ty.name()).into());
    }
    Ok(parse_text(rest, ty)?)
}

pub fn run(cmd: &Command, input: &str) -> CliResult<String> {
    match *cmd {
        Command::Show { ty, encoding } => show(&json_record(input, ty)?, encoding),
        Command::Parse { ty } => Ok(to_named(&parse_text(line(input), ty)?)?),
        Command::MapDemo { encoding } => Ok(to_named(&map_demo(encoding)?)?),
        Command::ZipDemo { encoding } => Ok(to_named(&zip_demo(encoding)?)?),
        Command::RemapDemo => {
            let r = run_map(pipeline::remap_device().run(&example_device())?)?;
            Ok(to_named(&r)?)
        }
        Command::Avg => Ok(to_named(&avg(input)?)?),
        Command::EncodeBin { ty } => Ok(hex::encode(encode_binary(&json_record(input, ty)?)?)),
        Command::DecodeBin { ty } => Ok(to_named(&decode_hex(input, ty)?)?),
        Command::ToJson => Ok(to_named(&from_constructor_notation(input)?)?),
        Command::FromJson { ty } => constructor_notation(&json_record(input, ty)?),
    }
}
