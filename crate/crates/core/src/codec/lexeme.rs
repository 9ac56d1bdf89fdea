//! Lexeme text: the show pipeline's output and the parser that inverts it.
//!
//! A record parser is a builder lifted with `p_pure` and then applied to one
//! primitive parser per field. Only canonical lexemes are accepted, so
//! `parse . show` is the identity and every accepted text is the show of
//! exactly one record.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::num::IntErrorKind;

use crate::builder::Builder;
use crate::pipeline::{run_show, show_record};
use crate::record::{FieldType, Record, RecordType};
use crate::value::{format_real, FieldKind, Value};

use super::parser::{p_ap, p_pure, Parser};
use super::{validate, CodecError};

pub type LexemeParser<T> = Parser<[String], T>;

/// Lexemes plus the index of the next unconsumed one.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LexemeStream {
    lexemes: Vec<String>,
    cursor: usize,
}

impl LexemeStream {
    pub fn new(lexemes: Vec<String>) -> Self {
        LexemeStream { lexemes, cursor: 0 }
    }

    pub fn from_text(text: &str) -> Self {
        Self::new(lexemes_of(text))
    }

    pub fn lexemes(&self) -> &[String] {
        &self.lexemes
    }

    pub fn cursor(&self) -> usize {
        self.cursor
    }

    pub fn remaining(&self) -> usize {
        self.lexemes.len() - self.cursor
    }
}

/// Splits on single spaces. Empty text has no lexemes.
pub fn lexemes_of(text: &str) -> Vec<String> {
    if text.is_empty() {
        return Vec::new();
    }
    text.split(' ').map(String::from).collect()
}

fn lexeme<T: 'static>(
    expected: &'static str,
    read: impl Fn(usize, &str) -> Result<T, CodecError> + Send + Sync + 'static,
) -> LexemeParser<T> {
    Parser::new(move |input: &[String], at| match input.get(at) {
        Some(l) => Ok((read(at, l)?, at + 1)),
        None => Err(CodecError::Exhausted {
            position: at,
            expected,
        }),
    })
}

fn unexpected(position: usize, expected: &'static str, found: &str) -> CodecError {
    CodecError::Unexpected {
        position,
        expected,
        found: found.to_string(),
    }
}

fn read_bool(at: usize, l: &str) -> Result<Value, CodecError> {
    match l {
        "True" => Ok(Value::Bool(true)),
        "False" => Ok(Value::Bool(false)),
        _ => Err(unexpected(at, "True or False", l)),
    }
}

fn is_int_shaped(l: &str) -> bool {
    let digits = l.strip_prefix('-').unwrap_or(l);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

fn read_int(at: usize, l: &str) -> Result<Value, CodecError> {
    match l.parse::<i64>() {
        Ok(i) if i.to_string() == l => Ok(Value::Int(i)),
        Ok(_) => Err(CodecError::NonCanonical {
            position: at,
            lexeme: l.to_string(),
        }),
        Err(e) if is_int_shaped(l)
            && matches!(e.kind(), IntErrorKind::PosOverflow | IntErrorKind::NegOverflow) =>
        {
            Err(CodecError::OutOfRange {
                position: at,
                lexeme: l.to_string(),
            })
        }
        Err(_) => Err(unexpected(at, "an integer", l)),
    }
}

fn read_real(at: usize, l: &str) -> Result<Value, CodecError> {
    match l.parse::<f64>() {
        Ok(r) if format_real(r) == l => Ok(Value::Real(r)),
        Ok(_) => Err(CodecError::NonCanonical {
            position: at,
            lexeme: l.to_string(),
        }),
        Err(_) => Err(unexpected(at, "a real", l)),
    }
}

pub fn p_bool() -> LexemeParser<Value> {
    lexeme("a Bool", read_bool)
}

/// Minimal decimal in the `i64` range: no `+`, no leading zeros, no `-0`.
pub fn p_int() -> LexemeParser<Value> {
    lexeme("an Int", read_int)
}

/// Any lexeme, taken verbatim.
pub fn p_str() -> LexemeParser<Value> {
    lexeme("a Str", |_, l| Ok(Value::Str(l.to_string())))
}

/// A real as written by [`format_real`].
pub fn p_real() -> LexemeParser<Value> {
    lexeme("a Real", read_real)
}

/// A type-parameter slot: an integer lexeme reads as `Int`, anything else as
/// `Real`.
pub fn p_number() -> LexemeParser<Value> {
    lexeme("a number", |at, l| {
        if is_int_shaped(l) {
            read_int(at, l)
        } else {
            read_real(at, l)
        }
    })
}

pub fn p_field(ty: FieldType) -> LexemeParser<Value> {
    match ty {
        FieldType::Kind(FieldKind::Bool) => p_bool(),
        FieldType::Kind(FieldKind::Int) => p_int(),
        FieldType::Kind(FieldKind::Str) => p_str(),
        FieldType::Kind(FieldKind::Real) => p_real(),
        FieldType::Param => p_number(),
    }
}

/// Builder for `target`, then one field parser per schema entry.
pub fn record_parser(target: RecordType) -> LexemeParser<Record> {
    target
        .schema()
        .fields
        .iter()
        .fold(p_pure(Builder::new(target)), |p, &(_, ty)| {
            p_ap(p, p_field(ty))
        })
        .map(|b| b.finish().map_err(CodecError::record(0)))
}

/// Parses one record and requires the stream to be used up.
pub fn parse_record(stream: &mut LexemeStream, target: RecordType) -> Result<Record, CodecError> {
    let (r, end) = record_parser(target).run(&stream.lexemes, stream.cursor)?;
    stream.cursor = end;
    if stream.remaining() > 0 {
        return Err(CodecError::TrailingInput {
            position: end,
            remaining: stream.remaining(),
        });
    }
    Ok(r)
}

/// Parses a whole line of lexemes.
pub fn parse_text(text: &str, target: RecordType) -> Result<Record, CodecError> {
    parse_record(&mut LexemeStream::from_text(text), target)
}

/// Shows `r`, refusing strings that would not survive re-splitting.
pub fn to_lexemes(r: &Record) -> Result<String, CodecError> {
    validate(r)?;
    let t = r.record_type();
    for (v, &(field, _)) in r.values().iter().zip(t.schema().fields) {
        if let Value::Str(s) = v {
            if s.contains(' ') {
                return Err(CodecError::LexemeHasSpace {
                    field,
                    text: s.clone(),
                });
            }
        }
    }
    let st = show_record(t)
        .run(r)
        .map_err(CodecError::record(0))?;
    Ok(run_show(st))
}
