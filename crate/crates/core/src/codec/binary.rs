//! Fixed binary layout.
//!
//! | kind | bytes                                         |
//! |------|-----------------------------------------------|
//! | Bool | `00` or `01`                                  |
//! | Int  | 8, little-endian two's complement             |
//! | Str  | `u32` little-endian byte length, then UTF-8   |
//!
//! Fields are concatenated in schema order with no header. Type-parameter
//! slots are written and read as `Int`; reals have no encoding.

use alloc::string::String;
use alloc::vec::Vec;

use crate::builder::Builder;
use crate::chop::{chop, hom_wrap, Pipeline, State1};
use crate::error::Result;
use crate::record::{FieldType, Record, RecordType};
use crate::value::{FieldKind, Value};

use super::parser::{p_ap, p_pure, Parser};
use super::{validate, CodecError};

pub type ByteParser<T> = Parser<[u8], T>;

fn put(mut buf: Vec<u8>, v: Value) -> Result<Vec<u8>> {
    match v {
        Value::Bool(b) => buf.push(u8::from(b)),
        Value::Int(i) => buf.extend_from_slice(&i.to_le_bytes()),
        Value::Str(s) => {
            let len = u32::try_from(s.len()).expect("length checked before encoding");
            buf.extend_from_slice(&len.to_le_bytes());
            buf.extend_from_slice(s.as_bytes());
        }
        Value::Real(_) => unreachable!("reals refused before encoding"),
    }
    Ok(buf)
}

/// Destructure, then one writing step per field.
fn put_pipeline(target: RecordType) -> Pipeline<Record, State1<Vec<u8>>> {
    let seed = Pipeline::new(|r: &Record| Ok(State1::new(Vec::new(), r.destructure())));
    (0..target.arity()).fold(seed, |p, _| hom_wrap(|st, _: &()| chop(st, put), p, ()))
}

pub fn encode_binary(r: &Record) -> Result<Vec<u8>, CodecError> {
    validate(r)?;
    let schema = r.record_type().schema();
    for (v, &(field, _)) in r.values().iter().zip(schema.fields) {
        match v {
            Value::Real(_) => return Err(CodecError::UnsupportedReal { field }),
            Value::Str(s) if u32::try_from(s.len()).is_err() => {
                return Err(CodecError::StrTooLong {
                    field,
                    len: s.len(),
                })
            }
            _ => {}
        }
    }
    let st = put_pipeline(r.record_type())
        .run(r)
        .map_err(CodecError::record(0))?;
    Ok(st.acc)
}

fn take<const N: usize>(input: &[u8], at: usize) -> Result<[u8; N], CodecError> {
    match input.get(at..at + N) {
        Some(bytes) => Ok(bytes.try_into().expect("slice of length N")),
        None => Err(CodecError::Truncated {
            position: at,
            needed: at + N - input.len(),
        }),
    }
}

pub fn get_bool() -> ByteParser<Value> {
    Parser::new(|input: &[u8], at| match take::<1>(input, at)?[0] {
        0 => Ok((Value::Bool(false), at + 1)),
        1 => Ok((Value::Bool(true), at + 1)),
        byte => Err(CodecError::InvalidBool { position: at, byte }),
    })
}

pub fn get_int() -> ByteParser<Value> {
    Parser::new(|input: &[u8], at| {
        Ok((Value::Int(i64::from_le_bytes(take(input, at)?)), at + 8))
    })
}

pub fn get_str() -> ByteParser<Value> {
    Parser::new(|input: &[u8], at| {
        let len = u32::from_le_bytes(take(input, at)?) as usize;
        let start = at + 4;
        let Some(bytes) = input.get(start..start + len) else {
            return Err(CodecError::Truncated {
                position: start,
                needed: start + len - input.len(),
            });
        };
        let s = core::str::from_utf8(bytes).map_err(|e| CodecError::InvalidUtf8 {
            position: start + e.valid_up_to(),
        })?;
        Ok((Value::Str(String::from(s)), start + len))
    })
}

fn get_field(ty: FieldType) -> ByteParser<Value> {
    match ty {
        FieldType::Kind(FieldKind::Bool) => get_bool(),
        FieldType::Kind(FieldKind::Int) | FieldType::Param => get_int(),
        FieldType::Kind(FieldKind::Str) => get_str(),
        FieldType::Kind(FieldKind::Real) => Parser::new(|_, at| {
            Err(CodecError::Unexpected {
                position: at,
                expected: "a field with a binary encoding",
                found: String::from("Real"),
            })
        }),
    }
}

/// Builder for `target`, then one reader per schema entry.
pub fn record_decoder(target: RecordType) -> ByteParser<Record> {
    target
        .schema()
        .fields
        .iter()
        .fold(p_pure(Builder::new(target)), |p, &(_, ty)| {
            p_ap(p, get_field(ty))
        })
        .map(|b| b.finish().map_err(CodecError::record(0)))
}

pub fn decode_binary(bytes: &[u8], target: RecordType) -> Result<Record, CodecError> {
    let (r, end) = record_decoder(target).run(bytes, 0)?;
    if end < bytes.len() {
        return Err(CodecError::TrailingBytes {
            position: end,
            remaining: bytes.len() - end,
        });
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record::{Benchmark, Device};
    use alloc::vec;

    #[test]
    fn example_device_image() {
        let img = encode_binary(&Device::new(false, 19, 1).into()).unwrap();
        let mut want = vec![0x00, 0x13];
        want.extend([0; 7]);
        want.push(0x01);
        want.extend([0; 7]);
        assert_eq!(img, want);
        assert_eq!(
            decode_binary(&img, RecordType::Device).unwrap(),
            Device::new(false, 19, 1).into()
        );
    }

    #[test]
    fn zero_device() {
        let img = encode_binary(&Device::new(true, 0, 0).into()).unwrap();
        assert_eq!(img[0], 1);
        assert_eq!(&img[1..], &[0; 16]);
    }

    #[test]
    fn benchmark_layout() {
        let r: Record = Benchmark::new(-1, "ab", 2, "").into();
        let img = encode_binary(&r).unwrap();
        let mut want = vec![0xff; 8];
        want.extend([2, 0, 0, 0, b'a', b'b']);
        want.extend(2i64.to_le_bytes());
        want.extend([0; 4]);
        assert_eq!(img, want);
        assert_eq!(decode_binary(&img, RecordType::Benchmark).unwrap(), r);
    }

    #[test]
    fn decode_errors() {
        let img = encode_binary(&Device::new(true, 5, 6).into()).unwrap();
        assert_eq!(
            decode_binary(&img[..10], RecordType::Device),
            Err(CodecError::Truncated {
                position: 9,
                needed: 7
            })
        );
        let mut bad = img.clone();
        bad[0] = 2;
        assert_eq!(
            decode_binary(&bad, RecordType::Device),
            Err(CodecError::InvalidBool {
                position: 0,
                byte: 2
            })
        );
        let mut long = img.clone();
        long.push(0);
        assert_eq!(
            decode_binary(&long, RecordType::Device),
            Err(CodecError::TrailingBytes {
                position: 17,
                remaining: 1
            })
        );
        let mut utf = vec![0; 8];
        utf.extend([2, 0, 0, 0, b'a', 0xff]);
        assert!(matches!(
            decode_binary(&utf, RecordType::Benchmark),
            Err(CodecError::InvalidUtf8 { position: 13 })
        ));
        assert!(matches!(
            decode_binary(&[], RecordType::Device),
            Err(CodecError::Truncated { position: 0, .. })
        ));
    }

    #[test]
    fn reals_are_not_encoded() {
        let r = Benchmark::new(20.0, "ac", 30.0, "bd").into();
        assert_eq!(
            encode_binary(&r),
            Err(CodecError::UnsupportedReal { field: "firstApp" })
        );
    }
}
