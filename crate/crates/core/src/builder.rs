use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::record::{FieldType, Record, RecordType};
use crate::value::{FieldKind, Value};

/// A curried record constructor that has received some of its fields.
///
/// Each application is checked against the type's schema; `finish` yields
/// the record once exactly `arity` fields have been supplied.
#[derive(Debug, Clone, PartialEq)]
pub struct Builder {
    target: RecordType,
    supplied: Vec<Value>,
    // kind bound to the record's type parameter by the first `Param` slot
    param: Option<FieldKind>,
}

/// Starts a builder for `target`, which must have exactly `arity` fields.
pub fn builder_new(target: RecordType, arity: usize) -> Result<Builder> {
    if arity != target.arity() {
        return Err(Error::ArityMismatch {
            target: target.name(),
            expected: target.arity(),
            given: arity,
        });
    }
    Ok(Builder::new(target))
}

impl Builder {
    pub fn new(target: RecordType) -> Self {
        Builder {
            target,
            supplied: Vec::with_capacity(target.arity()),
            param: None,
        }
    }

    pub fn target(&self) -> RecordType {
        self.target
    }

    pub fn arity(&self) -> usize {
        self.target.arity()
    }

    pub fn supplied(&self) -> &[Value] {
        &self.supplied
    }

    pub fn remaining(&self) -> usize {
        self.arity() - self.supplied.len()
    }

    pub fn is_complete(&self) -> bool {
        self.remaining() == 0
    }

    /// Applies the constructor to its next field.
    pub fn apply_field(mut self, v: Value) -> Result<Builder> {
        let schema = self.target.schema();
        let Some(&(name, ty)) = schema.fields.get(self.supplied.len()) else {
            return Err(Error::Arity {
                op: "apply_field",
                remaining: 0,
            });
        };
        let found = v.kind();
        match ty {
            FieldType::Kind(k) if k != found => {
                return Err(Error::FieldType {
                    field: name,
                    expected: k.name(),
                    found,
                })
            }
            FieldType::Kind(_) => {}
            FieldType::Param => match self.param {
                Some(k) if k != found => {
                    return Err(Error::FieldType {
                        field: name,
                        expected: k.name(),
                        found,
                    })
                }
                Some(_) => {}
                None => self.param = Some(found),
            },
        }
        self.supplied.push(v);
        Ok(self)
    }

    pub fn finish(self) -> Result<Record> {
        if !self.is_complete() {
            return Err(Error::Arity {
                op: "finish",
                remaining: self.remaining(),
            });
        }
        Ok(Record::assemble(self.target, self.supplied))
    }
}
