//! Named fields as a flat JSON object.
//!
//! Output is canonical: keys in schema order, no whitespace, strings escape
//! only `"` and `\`, reals always carry a decimal point. Input accepts any
//! flat object of booleans, numbers and strings with insignificant
//! whitespace and the usual string escapes; nesting, arrays and `null` are
//! rejected.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::builder::Builder;
use crate::chop::{chop, hom_wrap, Pipeline, State1};
use crate::record::{FieldType, Record, RecordType};
use crate::value::{format_real, FieldKind, Value};

use super::parser::{p_ap, p_pure, Parser};
use super::{validate, CodecError};

/// A scalar JSON value.
#[derive(Debug, Clone, PartialEq)]
pub enum Json {
    Bool(bool),
    Int(i64),
    Real(f64),
    Str(String),
}

impl Json {
    fn kind(&self) -> &'static str {
        match self {
            Json::Bool(_) => "a boolean",
            Json::Int(_) => "an integer",
            Json::Real(_) => "a real",
            Json::Str(_) => "a string",
        }
    }
}

/// Entries of a flat object in source order; keys are unique.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct JsonObject {
    pub entries: Vec<(String, Json)>,
}

impl JsonObject {
    pub fn get(&self, key: &str) -> Option<&Json> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

fn escape_into(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
}

fn write_value(out: &mut String, v: &Value) {
    match v {
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Int(i) => out.push_str(&i.to_string()),
        Value::Real(r) => out.push_str(&format_real(*r)),
        Value::Str(s) => escape_into(out, s),
    }
}

/// `object ["block" .= b, ...]` as a chop pipeline emitting one pair per step.
fn named_pipeline(target: RecordType) -> Pipeline<Record, State1<String>> {
    let seed = Pipeline::new(|r: &Record| Ok(State1::new(String::from("{"), r.destructure())));
    target
        .schema()
        .fields
        .iter()
        .enumerate()
        .fold(seed, |p, (i, &(name, _))| {
            hom_wrap(
                move |st, _: &()| {
                    chop(st, |mut out: String, v| {
                        if i > 0 {
                            out.push(',');
                        }
                        escape_into(&mut out, name);
                        out.push(':');
                        write_value(&mut out, &v);
                        Ok(out)
                    })
                },
                p,
                (),
            )
        })
}

pub fn to_named(r: &Record) -> Result<String, CodecError> {
    validate(r)?;
    let schema = r.record_type().schema();
    for (v, &(field, _)) in r.values().iter().zip(schema.fields) {
        if matches!(v, Value::Real(x) if !x.is_finite()) {
            return Err(CodecError::NonFiniteReal { field });
        }
    }
    let mut out = named_pipeline(r.record_type())
        .run(r)
        .map_err(CodecError::record(0))?
        .acc;
    out.push('}');
    Ok(out)
}

struct Scanner<'a> {
    text: &'a str,
    at: usize,
}

impl Scanner<'_> {
    fn malformed(&self, message: &'static str) -> CodecError {
        CodecError::MalformedJson {
            position: self.at,
            message,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.at).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.at += 1;
        }
    }

    fn expect(&mut self, b: u8, message: &'static str) -> Result<(), CodecError> {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.malformed(message))
        }
    }

    fn literal(&mut self, word: &str, v: Json) -> Result<Json, CodecError> {
        if self.text[self.at..].starts_with(word) {
            self.at += word.len();
            Ok(v)
        } else {
            Err(self.malformed("unknown literal"))
        }
    }

    fn hex4(&mut self) -> Result<u32, CodecError> {
        let digits = self
            .text
            .get(self.at..self.at + 4)
            .filter(|d| d.bytes().all(|b| b.is_ascii_hexdigit()))
            .ok_or_else(|| self.malformed("bad \\u escape"))?;
        self.at += 4;
        Ok(u32::from_str_radix(digits, 16).expect("checked hex digits"))
    }

    fn string(&mut self) -> Result<String, CodecError> {
        self.expect(b'"', "expected a string")?;
        let mut out = String::new();
        loop {
            let Some(c) = self.text[self.at..].chars().next() else {
                return Err(self.malformed("unterminated string"));
            };
            self.at += c.len_utf8();
            match c {
                '"' => return Ok(out),
                '\\' => {
                    let Some(e) = self.peek() else {
                        return Err(self.malformed("unterminated string"));
                    };
                    self.at += 1;
                    match e {
                        b'"' => out.push('"'),
                        b'\\' => out.push('\\'),
                        b'/' => out.push('/'),
                        b'b' => out.push('\u{8}'),
                        b'f' => out.push('\u{c}'),
                        b'n' => out.push('\n'),
                        b'r' => out.push('\r'),
                        b't' => out.push('\t'),
                        b'u' => out.push(self.unicode_escape()?),
                        _ => return Err(self.malformed("unknown escape")),
                    }
                }
                c => out.push(c),
            }
        }
    }

    fn unicode_escape(&mut self) -> Result<char, CodecError> {
        let hi = self.hex4()?;
        let code = if (0xD800..0xDC00).contains(&hi) {
            if !self.text[self.at..].starts_with("\\u") {
                return Err(self.malformed("unpaired surrogate"));
            }
            self.at += 2;
            let lo = self.hex4()?;
            if !(0xDC00..0xE000).contains(&lo) {
                return Err(self.malformed("unpaired surrogate"));
            }
            0x10000 + ((hi - 0xD800) << 10) + (lo - 0xDC00)
        } else {
            hi
        };
        char::from_u32(code).ok_or_else(|| self.malformed("unpaired surrogate"))
    }

    fn digits(&mut self) -> usize {
        let start = self.at;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.at += 1;
        }
        self.at - start
    }

    fn number(&mut self) -> Result<Json, CodecError> {
        let start = self.at;
        if self.peek() == Some(b'-') {
            self.at += 1;
        }
        let int_start = self.at;
        match self.digits() {
            0 => return Err(self.malformed("expected digits")),
            n if n > 1 && self.text.as_bytes()[int_start] == b'0' => {
                return Err(self.malformed("leading zero"))
            }
            _ => {}
        }
        let mut real = false;
        if self.peek() == Some(b'.') {
            self.at += 1;
            if self.digits() == 0 {
                return Err(self.malformed("expected fraction digits"));
            }
            real = true;
        }
        if matches!(self.peek(), Some(b'e' | b'E')) {
            self.at += 1;
            if matches!(self.peek(), Some(b'+' | b'-')) {
                self.at += 1;
            }
            if self.digits() == 0 {
                return Err(self.malformed("expected exponent digits"));
            }
            real = true;
        }
        let text = &self.text[start..self.at];
        if real {
            let r: f64 = text.parse().map_err(|_| self.malformed("bad number"))?;
            Ok(Json::Real(r))
        } else {
            text.parse().map(Json::Int).map_err(|_| CodecError::OutOfRange {
                position: start,
                lexeme: text.to_string(),
            })
        }
    }

    fn value(&mut self) -> Result<Json, CodecError> {
        self.skip_ws();
        match self.peek() {
            Some(b'"') => self.string().map(Json::Str),
            Some(b't') => self.literal("true", Json::Bool(true)),
            Some(b'f') => self.literal("false", Json::Bool(false)),
            Some(b'-' | b'0'..=b'9') => self.number(),
            Some(b'n') => Err(self.malformed("null is not supported")),
            Some(b'{' | b'[') => Err(self.malformed("nested values are not supported")),
            _ => Err(self.malformed("expected a value")),
        }
    }
}

/// Parses a flat object.
pub fn parse_object(text: &str) -> Result<JsonObject, CodecError> {
    let mut sc = Scanner { text, at: 0 };
    sc.skip_ws();
    match sc.peek() {
        Some(b'{') => sc.at += 1,
        None => return Err(sc.malformed("empty input")),
        Some(_) => return Err(CodecError::NotAnObject),
    }
    let mut obj = JsonObject::default();
    sc.skip_ws();
    if sc.peek() == Some(b'}') {
        sc.at += 1;
    } else {
        loop {
            sc.skip_ws();
            let key = sc.string()?;
            sc.expect(b':', "expected `:`")?;
            let value = sc.value()?;
            if obj.get(&key).is_some() {
                return Err(CodecError::DuplicateKey(key));
            }
            obj.entries.push((key, value));
            sc.skip_ws();
            match sc.peek() {
                Some(b',') => sc.at += 1,
                Some(b'}') => {
                    sc.at += 1;
                    break;
                }
                _ => return Err(sc.malformed("expected `,` or `}`")),
            }
        }
    }
    sc.skip_ws();
    if sc.at < text.len() {
        return Err(sc.malformed("trailing characters"));
    }
    Ok(obj)
}

/// `v .: "key"`
pub fn p_key(key: &'static str, ty: FieldType) -> Parser<JsonObject, Value> {
    Parser::new(move |obj: &JsonObject, at| {
        let found = obj.get(key).ok_or(CodecError::MissingKey(key))?;
        let v = match (ty, found) {
            (FieldType::Kind(FieldKind::Bool), Json::Bool(b)) => Value::Bool(*b),
            (FieldType::Kind(FieldKind::Int) | FieldType::Param, Json::Int(i)) => Value::Int(*i),
            (FieldType::Kind(FieldKind::Real) | FieldType::Param, Json::Real(r)) => {
                Value::Real(*r)
            }
            (FieldType::Kind(FieldKind::Str), Json::Str(s)) => Value::Str(s.clone()),
            (ty, other) => {
                return Err(CodecError::WrongValueKind {
                    key,
                    expected: match ty {
                        FieldType::Kind(FieldKind::Bool) => "a boolean",
                        FieldType::Kind(FieldKind::Int) => "an integer",
                        FieldType::Kind(FieldKind::Real) => "a real",
                        FieldType::Kind(FieldKind::Str) => "a string",
                        FieldType::Param => "a number",
                    },
                    found: other.kind(),
                })
            }
        };
        Ok((v, at))
    })
}

/// Builder for `target`, then one keyed lookup per schema entry.
pub fn object_decoder(target: RecordType) -> Parser<JsonObject, Record> {
    target
        .schema()
        .fields
        .iter()
        .fold(p_pure(Builder::new(target)), |p, &(name, ty)| {
            p_ap(p, p_key(name, ty))
        })
        .map(|b| b.finish().map_err(CodecError::record(0)))
}

pub fn from_object(obj: &JsonObject, target: RecordType) -> Result<Record, CodecError> {
    let (r, _) = object_decoder(target).run(obj, 0)?;
    let fields = target.schema().fields;
    if let Some((extra, _)) = obj
        .entries
        .iter()
        .find(|(k, _)| !fields.iter().any(|(name, _)| name == k))
    {
        return Err(CodecError::ExtraKey(extra.clone()));
    }
    Ok(r)
}

pub fn from_named(text: &str, target: RecordType) -> Result<Record, CodecError> {
    from_object(&parse_object(text)?, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record::{Benchmark, Device};

    #[test]
    fn example_device() {
        let r: Record = Device::new(false, 19, 1).into();
        let text = to_named(&r).unwrap();
        assert_eq!(text, r#"{"block":false,"major":19,"minor":1}"#);
        assert_eq!(from_named(&text, RecordType::Device).unwrap(), r);
    }

    #[test]
    fn average_layout() {
        let r: Record = Benchmark::new(20.0, "ac", 30.0, "bd").into();
        let text = to_named(&r).unwrap();
        assert_eq!(
            text,
            r#"{"firstApp":20.0,"firstLog":"ac","secondApp":30.0,"secondLog":"bd"}"#
        );
        assert_eq!(from_named(&text, RecordType::Benchmark).unwrap(), r);
    }

    #[test]
    fn escapes() {
        let r: Record = Benchmark::new(1, "a\"b\\c", 2, "ü\n").into();
        let text = to_named(&r).unwrap();
        assert_eq!(
            text,
            "{\"firstApp\":1,\"firstLog\":\"a\\\"b\\\\c\",\"secondApp\":2,\"secondLog\":\"ü\n\"}"
        );
        assert_eq!(from_named(&text, RecordType::Benchmark).unwrap(), r);
        let with_escapes = r#"{"firstApp":1,"firstLog":"é😀\n","secondApp":2,"secondLog":""}"#;
        let b = from_named(with_escapes, RecordType::Benchmark).unwrap();
        assert_eq!(b.as_benchmark().unwrap().first_log, "é😀\n");
    }

    #[test]
    fn lookup_is_by_name() {
        let text = r#" { "minor" : 1 , "block" : false , "major" : 19 } "#;
        assert_eq!(
            from_named(text, RecordType::Device).unwrap(),
            Device::new(false, 19, 1).into()
        );
    }

    #[test]
    fn rejections() {
        let dev = |t: &str| from_named(t, RecordType::Device);
        assert_eq!(dev("[1,2]"), Err(CodecError::NotAnObject));
        assert_eq!(
            dev(r#"{"block":false,"major":19}"#),
            Err(CodecError::MissingKey("minor"))
        );
        assert_eq!(
            dev(r#"{"block":false,"major":19,"minor":1,"x":1}"#),
            Err(CodecError::ExtraKey("x".into()))
        );
        assert_eq!(
            dev(r#"{"block":false,"block":true,"major":19,"minor":1}"#),
            Err(CodecError::DuplicateKey("block".into()))
        );
        assert_eq!(
            dev(r#"{"block":0,"major":19,"minor":1}"#),
            Err(CodecError::WrongValueKind {
                key: "block",
                expected: "a boolean",
                found: "an integer"
            })
        );
        assert!(matches!(
            dev(r#"{"block":false,"major":19.0,"minor":1}"#),
            Err(CodecError::WrongValueKind { key: "major", .. })
        ));
        assert!(matches!(
            dev(r#"{"block":null,"major":19,"minor":1}"#),
            Err(CodecError::MalformedJson { .. })
        ));
        assert!(matches!(
            dev(r#"{"block":{},"major":19,"minor":1}"#),
            Err(CodecError::MalformedJson { .. })
        ));
        assert!(matches!(
            dev(r#"{"block":false,"major":019,"minor":1}"#),
            Err(CodecError::MalformedJson { .. })
        ));
        assert!(matches!(
            dev(r#"{"block":false,"major":9223372036854775808,"minor":1}"#),
            Err(CodecError::OutOfRange { .. })
        ));
        assert!(matches!(dev("{} x"), Err(CodecError::MalformedJson { .. })));
        assert!(matches!(dev(""), Err(CodecError::MalformedJson { .. })));
    }

    #[test]
    fn non_finite_reals_are_refused() {
        let r = Benchmark::new(f64::NAN, "a", f64::NAN, "b").into();
        assert_eq!(
            to_named(&r),
            Err(CodecError::NonFiniteReal { field: "firstApp" })
        );
    }
}
