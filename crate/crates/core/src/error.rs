use alloc::string::String;

use crate::value::FieldKind;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Failures of the record, pipeline and continuation layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A field list or builder had the wrong number of fields for `op`.
    #[error("{op}: arity error, {remaining} field(s) remaining")]
    Arity { op: &'static str, remaining: usize },

    #[error("{target}: expected arity {expected}, got {given}")]
    ArityMismatch {
        target: &'static str,
        expected: usize,
        given: usize,
    },

    #[error("{field}: expected {expected}, found {found}")]
    FieldType {
        field: &'static str,
        expected: &'static str,
        found: FieldKind,
    },

    #[error("unknown record type `{0}`")]
    UnknownType(String),

    #[error("{op}: integer overflow")]
    Overflow { op: &'static str },

    #[error("empty input")]
    EmptyInput,

    /// A continuation was fed a different number of arguments than it takes.
    #[error("continuation shape: expected {expected} argument(s), got {actual}")]
    ContinuationShape { expected: usize, actual: usize },

    /// A continuation produced the wrong kind of accumulator.
    #[error("expected a {expected} accumulator, found a {found}")]
    Accumulator {
        expected: &'static str,
        found: &'static str,
    },

    #[error("{name}: no ports left to plug")]
    Exhausted { name: &'static str },

    #[error("{name}: {remaining} port(s) still open")]
    PortsOpen { name: &'static str, remaining: usize },

    #[error("{name}: expected a {expected} piece, got a {found}")]
    PieceKind {
        name: &'static str,
        expected: &'static str,
        found: &'static str,
    },

    #[error("{name}: expected {expected} input record(s), got {given}")]
    InputCount {
        name: &'static str,
        expected: usize,
        given: usize,
    },

    #[error("expected a {expected} record, got a {found}")]
    RecordType {
        expected: &'static str,
        found: &'static str,
    },
}
