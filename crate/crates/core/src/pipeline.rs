//! Concrete pipelines over the cons-list encoding: pretty-printing,
//! mapping, zipping, stack-machine operators and the benchmark average.
//!
//! Every operator here is a `hom_wrap*` of a `chop*`, so pipelines compose
//! left to right like applicative expressions:
//!
//! ```
//! use applike::pipeline::{depure_show, run_show};
//! use applike::{render, Device};
//!
//! let show_device = depure_show(Device::destructure)
//!     .showa(render)
//!     .showa(render)
//!     .showa(render);
//! let st = show_device.run(&Device::new(false, 19, 1)).unwrap();
//! assert_eq!(run_show(st), "False 19 1");
//! ```

use alloc::string::String;
use alloc::vec::Vec;

use crate::builder::Builder;
use crate::chop::{chop, chop2, hom_wrap, hom_wrap0, hom_wrap2, Pipeline, Pipeline2, State1, State2};
use crate::error::{Error, Result};
use crate::list::{cons, uncons, FieldList};
use crate::ops;
use crate::record::{Benchmark, Device, Record, RecordType};
use crate::value::{render, Value};

/// Lexemes emitted so far. The most recent lexeme is on top.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LexemeStack {
    // bottom first; the top is the last element
    lexemes: Vec<String>,
}

impl LexemeStack {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a stack from lexemes listed most recent first.
    pub fn from_top_down<I: IntoIterator<Item = String>>(lexemes: I) -> Self {
        let mut lexemes: Vec<String> = lexemes.into_iter().collect();
        lexemes.reverse();
        LexemeStack { lexemes }
    }

    /// `(f a) : s`
    pub fn push(mut self, lexeme: String) -> Self {
        self.lexemes.push(lexeme);
        self
    }

    pub fn len(&self) -> usize {
        self.lexemes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lexemes.is_empty()
    }

    pub fn top_down(&self) -> impl Iterator<Item = &str> {
        self.lexemes.iter().rev().map(String::as_str)
    }

    /// Lexemes in emission order (oldest first).
    pub fn into_emission_order(self) -> Vec<String> {
        self.lexemes
    }
}

fn renamed<T>(op: &'static str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Arity { op: "chop" | "chop2", remaining } => Error::Arity { op, remaining },
        e => e,
    })
}

/// Seeds an empty lexeme stack next to the destructured fields.
pub fn depure_show<R: 'static>(
    destruct: impl Fn(&R) -> FieldList + Send + Sync + 'static,
) -> Pipeline<R, State1<LexemeStack>> {
    Pipeline::new(move |r| Ok(State1::new(LexemeStack::new(), destruct(r))))
}

/// Renders the next field and pushes it onto the lexeme stack.
pub fn showa<R: 'static>(
    p: Pipeline<R, State1<LexemeStack>>,
    render: impl Fn(&Value) -> String + Send + Sync + 'static,
) -> Pipeline<R, State1<LexemeStack>> {
    hom_wrap(
        |st, f: &_| renamed("showa", chop(st, |s: LexemeStack, a| Ok(s.push(f(&a))))),
        p,
        render,
    )
}

/// Reverses the lexeme stack and joins it with single spaces.
pub fn run_show(st: State1<LexemeStack>) -> String {
    st.acc.into_emission_order().join(" ")
}

/// Seeds a fresh builder for `target` next to the destructured fields.
pub fn depure_map<R: 'static>(
    target: RecordType,
    destruct: impl Fn(&R) -> FieldList + Send + Sync + 'static,
) -> Pipeline<R, State1<Builder>> {
    Pipeline::new(move |r| Ok(State1::new(Builder::new(target), destruct(r))))
}

/// Feeds `f` of the next field to the builder.
pub fn mapa<R: 'static>(
    p: Pipeline<R, State1<Builder>>,
    f: impl Fn(Value) -> Result<Value> + Send + Sync + 'static,
) -> Pipeline<R, State1<Builder>> {
    hom_wrap(
        |st, f: &_| renamed("mapa", chop(st, |s: Builder, a| s.apply_field(f(a)?))),
        p,
        f,
    )
}

/// Finishes the builder; every field must have been consumed.
pub fn run_map(st: State1<Builder>) -> Result<Record> {
    if !st.rest.is_nil() {
        return Err(Error::Arity {
            op: "run_map",
            remaining: st.rest.len(),
        });
    }
    st.acc.finish()
}

/// Seeds a fresh builder next to both destructured field lists.
pub fn depure_zip<Ra: 'static, Rb: 'static>(
    target: RecordType,
    destruct_a: impl Fn(&Ra) -> FieldList + Send + Sync + 'static,
    destruct_b: impl Fn(&Rb) -> FieldList + Send + Sync + 'static,
) -> Pipeline2<Ra, Rb, State2<Builder>> {
    Pipeline2::new(move |ra, rb| {
        Ok(State2::new(Builder::new(target), destruct_a(ra), destruct_b(rb)))
    })
}

/// Feeds `f` of the next field pair to the builder.
pub fn zipa<Ra: 'static, Rb: 'static>(
    p: Pipeline2<Ra, Rb, State2<Builder>>,
    f: impl Fn(Value, Value) -> Result<Value> + Send + Sync + 'static,
) -> Pipeline2<Ra, Rb, State2<Builder>> {
    hom_wrap2(
        |st, f: &_| renamed("zipa", chop2(st, |s: Builder, a, b| s.apply_field(f(a, b)?))),
        p,
        f,
    )
}

/// Finishes the builder; both field lists must be exhausted.
pub fn run_zip(st: State2<Builder>) -> Result<Record> {
    let leftover = st.rest_a.len() + st.rest_b.len();
    if leftover > 0 {
        return Err(Error::Arity {
            op: "run_zip",
            remaining: leftover,
        });
    }
    st.acc.finish()
}

/// Drops the next field.
pub fn pop<R: 'static, S: 'static>(p: Pipeline<R, State1<S>>) -> Pipeline<R, State1<S>> {
    hom_wrap0(
        |st: State1<S>| {
            let (_, b) = uncons(st.rest).map_err(|_| Error::Arity {
                op: "pop",
                remaining: 0,
            })?;
            Ok(State1::new(st.acc, b))
        },
        p,
    )
}

/// Puts `v` in front of the remaining fields.
pub fn push<R: 'static, S: 'static>(p: Pipeline<R, State1<S>>, v: Value) -> Pipeline<R, State1<S>> {
    hom_wrap(
        |st: State1<S>, a: &Value| Ok(State1::new(st.acc, cons(a.clone(), st.rest))),
        p,
        v,
    )
}

/// Copies the next field.
pub fn dup<R: 'static, S: 'static>(p: Pipeline<R, State1<S>>) -> Pipeline<R, State1<S>> {
    hom_wrap0(
        |st: State1<S>| {
            let a = st.rest.head().cloned().ok_or(Error::Arity {
                op: "dup",
                remaining: 0,
            })?;
            Ok(State1::new(st.acc, cons(a, st.rest)))
        },
        p,
    )
}

impl<R: 'static> Pipeline<R, State1<LexemeStack>> {
    pub fn showa(self, render: impl Fn(&Value) -> String + Send + Sync + 'static) -> Self {
        showa(self, render)
    }
}

impl<R: 'static> Pipeline<R, State1<Builder>> {
    pub fn mapa(self, f: impl Fn(Value) -> Result<Value> + Send + Sync + 'static) -> Self {
        mapa(self, f)
    }
}

impl<R: 'static, S: 'static> Pipeline<R, State1<S>> {
    pub fn pop(self) -> Self {
        pop(self)
    }

    pub fn push(self, v: impl Into<Value>) -> Self {
        push(self, v.into())
    }

    pub fn dup(self) -> Self {
        dup(self)
    }
}

impl<R, S> Pipeline<R, S> {
    /// `f(self)`, for left-to-right chaining.
    pub fn and_then<T>(self, f: impl FnOnce(Self) -> T) -> T {
        f(self)
    }
}

impl<Ra: 'static, Rb: 'static> Pipeline2<Ra, Rb, State2<Builder>> {
    pub fn zipa(self, f: impl Fn(Value, Value) -> Result<Value> + Send + Sync + 'static) -> Self {
        zipa(self, f)
    }
}

/// `Device False 19 1`
pub fn example_device() -> Device {
    Device::new(false, 19, 1)
}

pub fn show_device() -> Pipeline<Device, State1<LexemeStack>> {
    depure_show(Device::destructure)
        .showa(render)
        .showa(render)
        .showa(render)
}

pub fn map_device() -> Pipeline<Device, State1<Builder>> {
    depure_map(RecordType::Device, Device::destructure)
        .mapa(ops::not)
        .mapa(ops::add(100))
        .mapa(ops::add(200))
}

pub fn zip_device() -> Pipeline2<Device, Device, State2<Builder>> {
    depure_zip(RecordType::Device, Device::destructure, Device::destructure)
        .zipa(ops::and)
        .zipa(ops::plus)
        .zipa(ops::plus)
}

/// A stack-machine rewrite: drop `block`, push `True`, keep it, drop
/// `major`, duplicate `minor`, keep both.
pub fn remap_device() -> Pipeline<Device, State1<Builder>> {
    depure_map(RecordType::Device, Device::destructure)
        .and_then(pop)
        .push(true)
        .mapa(ops::id)
        .and_then(pop)
        .and_then(dup)
        .mapa(ops::id)
        .mapa(ops::id)
}

/// Shows any record with the canonical renderer, one step per field.
pub fn show_record(target: RecordType) -> Pipeline<Record, State1<LexemeStack>> {
    (0..target.arity()).fold(depure_show(Record::destructure), |p, _| p.showa(render))
}

/// Maps every field of a `target` record through the same function.
pub fn map_record(
    target: RecordType,
    f: impl Fn(Value) -> Result<Value> + Clone + Send + Sync + 'static,
) -> Pipeline<Record, State1<Builder>> {
    (0..target.arity()).fold(depure_map(target, Record::destructure), |p, _| {
        p.mapa(f.clone())
    })
}

/// Zips every field pair of two `target` records through the same function.
pub fn zip_record(
    target: RecordType,
    f: impl Fn(Value, Value) -> Result<Value> + Clone + Send + Sync + 'static,
) -> Pipeline2<Record, Record, State2<Builder>> {
    (0..target.arity()).fold(
        depure_zip(target, Record::destructure, Record::destructure),
        |p, _| p.zipa(f.clone()),
    )
}

/// Point-wise sum of the app fields and concatenation of the logs, then
/// division of the app sums by the number of runs.
pub fn average(outputs: &[Benchmark]) -> Result<Benchmark> {
    if outputs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let bappend = depure_zip(
        RecordType::Benchmark,
        Benchmark::destructure,
        Benchmark::destructure,
    )
    .zipa(ops::plus)
    .zipa(ops::concat)
    .zipa(ops::plus)
    .zipa(ops::concat);

    let seed = Benchmark::new(0, "", 0, "");
    let folded = outputs.iter().try_fold(seed, |acc, b| {
        Benchmark::try_from(run_zip(bappend.run(&acc, b)?)?)
    })?;

    let avg = ops::avg(outputs.len());
    let bdivide = depure_map(RecordType::Benchmark, Benchmark::destructure)
        .mapa(avg.clone())
        .mapa(ops::id)
        .mapa(avg)
        .mapa(ops::id);
    Benchmark::try_from(run_map(bdivide.run(&folded)?)?)
}
