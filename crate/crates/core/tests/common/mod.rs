#![allow(dead_code)]

use applike::{Benchmark, Device, Record, Value};
use proptest::prelude::*;

pub fn device() -> impl Strategy<Value = Device> {
    (any::<bool>(), any::<i64>(), any::<i64>()).prop_map(|(b, x, y)| Device::new(b, x, y))
}

/// Devices whose fields leave room for the demo arithmetic.
pub fn small_device() -> impl Strategy<Value = Device> {
    (any::<bool>(), -1_000_000i64..1_000_000, -1_000_000i64..1_000_000)
        .prop_map(|(b, x, y)| Device::new(b, x, y))
}

/// Up to 64 bytes of UTF-8.
pub fn text() -> impl Strategy<Value = String> + Clone {
    "\\PC{0,16}"
}

/// Text that survives splitting on spaces.
pub fn word() -> impl Strategy<Value = String> + Clone {
    "[^ ]{0,16}"
}

pub fn finite_real() -> impl Strategy<Value = f64> {
    any::<f64>().prop_filter("finite", |r| r.is_finite())
}

fn benchmark_with<S>(app: BoxedStrategy<Value>, log: S) -> impl Strategy<Value = Benchmark>
where
    S: Strategy<Value = String> + Clone,
{
    (app.clone(), log.clone(), app, log).prop_map(|(a, l, b, m)| Benchmark::new(a, l, b, m))
}

pub fn int_benchmark() -> impl Strategy<Value = Benchmark> {
    benchmark_with(any::<i64>().prop_map(Value::Int).boxed(), text())
}

pub fn real_benchmark() -> impl Strategy<Value = Benchmark> {
    benchmark_with(finite_real().prop_map(Value::Real).boxed(), text())
}

pub fn benchmark() -> impl Strategy<Value = Benchmark> {
    prop_oneof![int_benchmark(), real_benchmark()]
}

/// Benchmarks whose logs contain no spaces.
pub fn word_benchmark() -> impl Strategy<Value = Benchmark> {
    prop_oneof![
        benchmark_with(any::<i64>().prop_map(Value::Int).boxed(), word()),
        benchmark_with(finite_real().prop_map(Value::Real).boxed(), word()),
    ]
}

/// A pair of Benchmarks instantiated at the same kind.
pub fn benchmark_pair() -> impl Strategy<Value = (Benchmark, Benchmark)> {
    prop_oneof![
        (int_benchmark(), int_benchmark()),
        (real_benchmark(), real_benchmark()),
    ]
}

pub fn record() -> impl Strategy<Value = Record> {
    prop_oneof![device().prop_map(Record::from), benchmark().prop_map(Record::from)]
}

/// A field function defined on every kind.
pub fn bump(v: Value) -> applike::Result<Value> {
    Ok(match v {
        Value::Bool(b) => Value::Bool(!b),
        Value::Int(i) => Value::Int(i.wrapping_mul(3).wrapping_sub(1)),
        Value::Str(s) => Value::Str(format!("<{s}>")),
        Value::Real(r) => Value::Real(r * 0.5),
    })
}

/// A field combiner defined on every pair of equal kinds.
pub fn merge(a: Value, b: Value) -> applike::Result<Value> {
    Ok(match (a, b) {
        (Value::Bool(x), Value::Bool(y)) => Value::Bool(x ^ y),
        (Value::Int(x), Value::Int(y)) => Value::Int(x.wrapping_sub(y)),
        (Value::Str(x), Value::Str(y)) => Value::Str(y + &x),
        (Value::Real(x), Value::Real(y)) => Value::Real(x - y),
        (a, _) => a,
    })
}
