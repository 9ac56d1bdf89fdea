//! Field-level functions used as pipeline pieces.

use alloc::string::String;

use crate::error::{Error, Result};
use crate::value::{FieldKind, Value};

fn kind_error(op: &'static str, expected: FieldKind, v: &Value) -> Error {
    Error::FieldType {
        field: op,
        expected: expected.name(),
        found: v.kind(),
    }
}

fn int(op: &'static str, v: &Value) -> Result<i64> {
    v.as_int().ok_or_else(|| kind_error(op, FieldKind::Int, v))
}

fn boolean(op: &'static str, v: &Value) -> Result<bool> {
    v.as_bool().ok_or_else(|| kind_error(op, FieldKind::Bool, v))
}

pub fn id(v: Value) -> Result<Value> {
    Ok(v)
}

pub fn not(v: Value) -> Result<Value> {
    Ok(Value::Bool(!boolean("not", &v)?))
}

/// `(+ k)` on integers.
pub fn add(k: i64) -> impl Fn(Value) -> Result<Value> + Clone + Send + Sync + 'static {
    move |v| {
        int("add", &v)?
            .checked_add(k)
            .map(Value::Int)
            .ok_or(Error::Overflow { op: "add" })
    }
}

pub fn and(a: Value, b: Value) -> Result<Value> {
    Ok(Value::Bool(boolean("and", &a)? && boolean("and", &b)?))
}

pub fn or(a: Value, b: Value) -> Result<Value> {
    Ok(Value::Bool(boolean("or", &a)? || boolean("or", &b)?))
}

/// Checked integer `(+)`.
pub fn plus(a: Value, b: Value) -> Result<Value> {
    int("plus", &a)?
        .checked_add(int("plus", &b)?)
        .map(Value::Int)
        .ok_or(Error::Overflow { op: "plus" })
}

/// String `(++)`.
pub fn concat(a: Value, b: Value) -> Result<Value> {
    match (a, b) {
        (Value::Str(mut x), Value::Str(y)) => {
            x.push_str(&y);
            Ok(Value::Str(x))
        }
        (Value::Str(_), other) | (other, _) => Err(kind_error("concat", FieldKind::Str, &other)),
    }
}

/// `(/ len) . fromIntegral`
pub fn avg(len: usize) -> impl Fn(Value) -> Result<Value> + Clone + Send + Sync + 'static {
    let len = len as f64;
    move |v| Ok(Value::Real(int("avg", &v)? as f64 / len))
}

/// First projection, `\a _ -> a`.
pub fn left(a: Value, _b: Value) -> Result<Value> {
    Ok(a)
}

/// Second projection, `\_ b -> b`.
pub fn right(_a: Value, b: Value) -> Result<Value> {
    Ok(b)
}

/// A constant piece; handy for type-error tests.
pub fn constant(v: Value) -> impl Fn(Value) -> Result<Value> + Clone + Send + Sync + 'static {
    move |_| Ok(v.clone())
}

/// Tags a rendered lexeme with the position of the piece that produced it.
pub fn tag_lexeme(position: usize, lexeme: &str) -> String {
    alloc::format!("{position}:{lexeme}")
}
