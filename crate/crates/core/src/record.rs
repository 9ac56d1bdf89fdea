use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::list::FieldList;
use crate::value::{FieldKind, Value};

/// The sample three-field record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Device {
    pub block: bool,
    pub major: i64,
    pub minor: i64,
}

/// Per-application results of a benchmark run.
///
/// `first_app` and `second_app` share one type parameter: both are `Int`
/// for raw outputs, both `Real` for averages.
#[derive(Debug, Clone, PartialEq)]
pub struct Benchmark {
    pub first_app: Value,
    pub first_log: String,
    pub second_app: Value,
    pub second_log: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Record {
    Device(Device),
    Benchmark(Benchmark),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RecordType {
    Device,
    Benchmark,
}

/// Type of one schema slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldType {
    Kind(FieldKind),
    /// The record's type parameter; every `Param` slot of one record holds
    /// the same kind.
    Param,
}

/// Ordered field names and types of a record constructor.
#[derive(Debug, PartialEq, Eq)]
pub struct FieldSchema {
    pub type_name: &'static str,
    pub fields: &'static [(&'static str, FieldType)],
}

impl FieldSchema {
    pub fn arity(&self) -> usize {
        self.fields.len()
    }
}

static DEVICE_SCHEMA: FieldSchema = FieldSchema {
    type_name: "Device",
    fields: &[
        ("block", FieldType::Kind(FieldKind::Bool)),
        ("major", FieldType::Kind(FieldKind::Int)),
        ("minor", FieldType::Kind(FieldKind::Int)),
    ],
};

static BENCHMARK_SCHEMA: FieldSchema = FieldSchema {
    type_name: "Benchmark",
    fields: &[
        ("firstApp", FieldType::Param),
        ("firstLog", FieldType::Kind(FieldKind::Str)),
        ("secondApp", FieldType::Param),
        ("secondLog", FieldType::Kind(FieldKind::Str)),
    ],
};

impl RecordType {
    pub const ALL: [RecordType; 2] = [RecordType::Device, RecordType::Benchmark];

    pub fn name(self) -> &'static str {
        self.schema().type_name
    }

    /// The single registered schema for this type.
    pub fn schema(self) -> &'static FieldSchema {
        match self {
            RecordType::Device => &DEVICE_SCHEMA,
            RecordType::Benchmark => &BENCHMARK_SCHEMA,
        }
    }

    pub fn arity(self) -> usize {
        self.schema().arity()
    }

    /// Resolves a type name, ignoring ASCII case.
    pub fn from_name(name: &str) -> Result<RecordType> {
        RecordType::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::UnknownType(name.to_string()))
    }
}

impl Device {
    pub fn new(block: bool, major: i64, minor: i64) -> Self {
        Device {
            block,
            major,
            minor,
        }
    }

    /// `(block, (major, (minor, ())))`
    pub fn destructure(&self) -> FieldList {
        FieldList::from_values([
            Value::Bool(self.block),
            Value::Int(self.major),
            Value::Int(self.minor),
        ])
    }
}

impl Benchmark {
    pub fn new(
        first_app: impl Into<Value>,
        first_log: impl Into<String>,
        second_app: impl Into<Value>,
        second_log: impl Into<String>,
    ) -> Self {
        Benchmark {
            first_app: first_app.into(),
            first_log: first_log.into(),
            second_app: second_app.into(),
            second_log: second_log.into(),
        }
    }

    pub fn destructure(&self) -> FieldList {
        FieldList::from_values([
            self.first_app.clone(),
            Value::Str(self.first_log.clone()),
            self.second_app.clone(),
            Value::Str(self.second_log.clone()),
        ])
    }
}

impl Record {
    pub fn record_type(&self) -> RecordType {
        match self {
            Record::Device(_) => RecordType::Device,
            Record::Benchmark(_) => RecordType::Benchmark,
        }
    }

    pub fn destructure(&self) -> FieldList {
        match self {
            Record::Device(d) => d.destructure(),
            Record::Benchmark(b) => b.destructure(),
        }
    }

    /// Field values in constructor order.
    pub fn values(&self) -> Vec<Value> {
        self.destructure().into_iter().collect()
    }

    pub fn as_device(&self) -> Option<&Device> {
        match self {
            Record::Device(d) => Some(d),
            _ => None,
        }
    }

    pub fn as_benchmark(&self) -> Option<&Benchmark> {
        match self {
            Record::Benchmark(b) => Some(b),
            _ => None,
        }
    }

    /// Assembles a record from already type-checked fields.
    pub(crate) fn assemble(target: RecordType, fields: Vec<Value>) -> Record {
        let mut it = fields.into_iter();
        let mut next = || it.next().expect("builder checked the arity");
        match target {
            RecordType::Device => {
                let (block, major, minor) = (next(), next(), next());
                Record::Device(Device {
                    block: block.as_bool().expect("schema checked"),
                    major: major.as_int().expect("schema checked"),
                    minor: minor.as_int().expect("schema checked"),
                })
            }
            RecordType::Benchmark => {
                let (first_app, first_log, second_app, second_log) =
                    (next(), next(), next(), next());
                Record::Benchmark(Benchmark {
                    first_app,
                    first_log: into_string(first_log),
                    second_app,
                    second_log: into_string(second_log),
                })
            }
        }
    }
}

fn into_string(v: Value) -> String {
    match v {
        Value::Str(s) => s,
        _ => unreachable!("schema checked"),
    }
}

impl From<Device> for Record {
    fn from(d: Device) -> Self {
        Record::Device(d)
    }
}

impl From<Benchmark> for Record {
    fn from(b: Benchmark) -> Self {
        Record::Benchmark(b)
    }
}

impl TryFrom<Record> for Device {
    type Error = Error;

    fn try_from(r: Record) -> Result<Self> {
        match r {
            Record::Device(d) => Ok(d),
            other => Err(Error::RecordType {
                expected: "Device",
                found: other.record_type().name(),
            }),
        }
    }
}

impl TryFrom<Record> for Benchmark {
    type Error = Error;

    fn try_from(r: Record) -> Result<Self> {
        match r {
            Record::Benchmark(b) => Ok(b),
            other => Err(Error::RecordType {
                expected: "Benchmark",
                found: other.record_type().name(),
            }),
        }
    }
}
