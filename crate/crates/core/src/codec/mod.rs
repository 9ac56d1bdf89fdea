//! Parsers and serializers generated from the one field schema of each
//! record type.
//!
//! * [`lexeme`]: the inverse of the show pipeline, an applicative parser over
//!   space-separated lexemes.
//! * [`binary`]: a fixed little-endian wire format.
//! * [`json`]: a flat JSON subset with named fields.
//!
//! Decoders are applicative chains (`p_pure(builder).ap(..).ap(..)`) built
//! with the combinators in [`parser`]; encoders are chop pipelines. Both walk
//! `RecordType::schema()` and nothing else.

use alloc::string::String;

use crate::builder::Builder;
use crate::error::Error;
use crate::record::{FieldType, Record};
use crate::value::{FieldKind, Value};

pub mod binary;
pub mod json;
pub mod lexeme;
pub mod parser;

pub use binary::{decode_binary, encode_binary};
pub use json::{from_named, to_named};
pub use lexeme::{lexemes_of, parse_record, to_lexemes, LexemeStream};
pub use parser::{p_ap, p_pure, Apply, Identity, Parser};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CodecError {
    #[error("at {position}: input exhausted, expected {expected}")]
    Exhausted {
        position: usize,
        expected: &'static str,
    },

    #[error("at {position}: expected {expected}, found `{found}`")]
    Unexpected {
        position: usize,
        expected: &'static str,
        found: String,
    },

    #[error("at {position}: `{lexeme}` is not in canonical form")]
    NonCanonical { position: usize, lexeme: String },

    #[error("at {position}: `{lexeme}` is out of range")]
    OutOfRange { position: usize, lexeme: String },

    #[error("at {position}: {remaining} trailing lexeme(s)")]
    TrailingInput { position: usize, remaining: usize },

    #[error("at byte {position}: truncated, {needed} more byte(s) needed")]
    Truncated { position: usize, needed: usize },

    #[error("at byte {position}: invalid bool byte {byte:#04x}")]
    InvalidBool { position: usize, byte: u8 },

    #[error("at byte {position}: {remaining} trailing byte(s)")]
    TrailingBytes { position: usize, remaining: usize },

    #[error("at byte {position}: invalid UTF-8")]
    InvalidUtf8 { position: usize },

    #[error("{field}: string of {len} bytes does not fit a u32 length")]
    StrTooLong { field: &'static str, len: usize },

    #[error("at byte {position}: malformed JSON, {message}")]
    MalformedJson {
        position: usize,
        message: &'static str,
    },

    #[error("expected a JSON object")]
    NotAnObject,

    #[error("missing key `{0}`")]
    MissingKey(&'static str),

    #[error("unexpected key `{0}`")]
    ExtraKey(String),

    #[error("duplicate key `{0}`")]
    DuplicateKey(String),

    #[error("`{key}`: expected {expected}, found {found}")]
    WrongValueKind {
        key: &'static str,
        expected: &'static str,
        found: &'static str,
    },

    #[error("{field}: reals have no binary encoding")]
    UnsupportedReal { field: &'static str },

    #[error("{field}: non-finite reals have no JSON form")]
    NonFiniteReal { field: &'static str },

    #[error("{field}: a {found} cannot fill a numeric type-parameter slot")]
    UnsupportedParam {
        field: &'static str,
        found: FieldKind,
    },

    #[error("{field}: `{text}` contains a space and would split into several lexemes")]
    LexemeHasSpace { field: &'static str, text: String },

    #[error("at {position}: {source}")]
    Record { position: usize, source: Error },
}

impl CodecError {
    pub(crate) fn record(position: usize) -> impl FnOnce(Error) -> CodecError {
        move |source| CodecError::Record { position, source }
    }
}

/// Re-checks `r` against its schema.
///
/// Records are plain data and can be built with mismatched type-parameter
/// slots; encoders refuse those instead of writing an image that will not
/// decode. Type-parameter slots must hold a number in every codec.
pub(crate) fn validate(r: &Record) -> Result<(), CodecError> {
    let t = r.record_type();
    let mut b = Builder::new(t);
    for (v, &(field, ty)) in r.values().into_iter().zip(t.schema().fields) {
        if ty == FieldType::Param && !matches!(v, Value::Int(_) | Value::Real(_)) {
            return Err(CodecError::UnsupportedParam {
                field,
                found: v.kind(),
            });
        }
        b = b.apply_field(v).map_err(CodecError::record(0))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record::{Benchmark, RecordType};

    #[test]
    fn one_schema_per_type() {
        for (i, t) in RecordType::ALL.into_iter().enumerate() {
            assert_eq!(t.schema().type_name, t.name());
            assert!(core::ptr::eq(t.schema(), t.schema()));
            for u in &RecordType::ALL[i + 1..] {
                assert_ne!(t.schema().type_name, u.schema().type_name);
            }
            let names: alloc::vec::Vec<_> = t.schema().fields.iter().map(|f| f.0).collect();
            for (j, n) in names.iter().enumerate() {
                assert!(!names[j + 1..].contains(n), "duplicate field {n}");
            }
        }
    }

    #[test]
    fn mixed_parameter_slots_are_refused() {
        let b = Benchmark::new(1, "a", 2.5, "b");
        assert!(matches!(
            validate(&b.into()),
            Err(CodecError::Record { .. })
        ));
        let b = Benchmark::new("x", "a", "y", "b");
        assert!(matches!(
            validate(&b.into()),
            Err(CodecError::UnsupportedParam { field: "firstApp", .. })
        ));
    }
}
