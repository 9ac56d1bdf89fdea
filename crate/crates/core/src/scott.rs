//! The continuation-passing track.
//!
//! A record is a function that hands all of its fields to a continuation at
//! once. Pipelines cons an accumulator in front of those fields with
//! [`cons_cps`], and each [`chop_cps`] rewrites the continuation so the
//! accumulator absorbs the next field.
//!
//! Continuations are curried closures over the untyped [`Term`] language. A
//! term fed the wrong number of arguments fails with
//! [`Error::ContinuationShape`]. Builders are data, not functions: steps feed
//! them explicitly, so a pipeline with too few or too many steps fails instead
//! of silently absorbing the leftover fields.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::builder::Builder;
use crate::chop::{hom_wrap, hom_wrap2, Pipeline, Pipeline2};
use crate::error::{Error, Result};
use crate::ops;
use crate::pipeline::LexemeStack;
use crate::record::{Benchmark, Device, Record, RecordType};
use crate::value::{render, Value};

/// A value in continuation land.
#[derive(Clone)]
pub enum Term {
    Value(Value),
    Lexemes(LexemeStack),
    Builder(Builder),
    Tuple(Vec<Term>),
    Func(Func),
}

type Body = dyn Fn(Vec<Term>) -> Result<Term> + Send + Sync;

/// A curried function of `arity` arguments, possibly partially applied.
#[derive(Clone)]
pub struct Func {
    arity: usize,
    args: Vec<Term>,
    body: Arc<Body>,
}

impl Func {
    pub fn new(arity: usize, body: impl Fn(Vec<Term>) -> Result<Term> + Send + Sync + 'static) -> Self {
        assert!(arity > 0, "functions take at least one argument");
        Func {
            arity,
            args: Vec::new(),
            body: Arc::new(body),
        }
    }

    /// Arguments still expected before the body runs.
    pub fn pending(&self) -> usize {
        self.arity - self.args.len()
    }

    fn shape_error(&self) -> Error {
        Error::ContinuationShape {
            expected: self.arity,
            actual: self.args.len(),
        }
    }
}

impl Term {
    fn kind(&self) -> &'static str {
        match self {
            Term::Value(_) => "value",
            Term::Lexemes(_) => "lexeme stack",
            Term::Builder(_) => "builder",
            Term::Tuple(_) => "tuple",
            Term::Func(_) => "function",
        }
    }

    pub fn into_value(self) -> Result<Value> {
        match self {
            Term::Value(v) => Ok(v),
            other => Err(unexpected(other, "value")),
        }
    }
}

fn unexpected(t: Term, expected: &'static str) -> Error {
    match t {
        // a continuation that still waits for arguments was run too early
        Term::Func(f) => f.shape_error(),
        other => Error::Accumulator {
            expected,
            found: other.kind(),
        },
    }
}

impl PartialEq for Term {
    // functions are never equal
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Term::Value(a), Term::Value(b)) => a == b,
            (Term::Lexemes(a), Term::Lexemes(b)) => a == b,
            (Term::Builder(a), Term::Builder(b)) => a == b,
            (Term::Tuple(a), Term::Tuple(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Value(v) => write!(f, "{v:?}"),
            Term::Lexemes(s) => write!(f, "{s:?}"),
            Term::Builder(b) => write!(f, "{b:?}"),
            Term::Tuple(items) => f.debug_tuple("").field(items).finish(),
            Term::Func(func) => write!(f, "<fn {}/{}>", func.args.len(), func.arity),
        }
    }
}

impl From<Value> for Term {
    fn from(v: Value) -> Self {
        Term::Value(v)
    }
}

impl From<Builder> for Term {
    fn from(b: Builder) -> Self {
        Term::Builder(b)
    }
}

impl From<LexemeStack> for Term {
    fn from(s: LexemeStack) -> Self {
        Term::Lexemes(s)
    }
}

impl From<Func> for Term {
    fn from(f: Func) -> Self {
        Term::Func(f)
    }
}

pub fn func1(body: impl Fn(Term) -> Result<Term> + Send + Sync + 'static) -> Term {
    Term::Func(Func::new(1, move |mut args| body(args.remove(0))))
}

pub fn func2(body: impl Fn(Term, Term) -> Result<Term> + Send + Sync + 'static) -> Term {
    Term::Func(Func::new(2, move |args| {
        let [a, b]: [Term; 2] = args.try_into().expect("arity 2");
        body(a, b)
    }))
}

/// The identity continuation.
pub fn id() -> Term {
    func1(Ok)
}

/// Applies `f` to `args` one at a time.
///
/// Feeding an argument to something that is not a function fails with
/// `ContinuationShape { expected: consumed, actual: args.len() }`.
pub fn apply_all(f: Term, args: impl IntoIterator<Item = Term>) -> Result<Term> {
    let args: Vec<Term> = args.into_iter().collect();
    let total = args.len();
    let mut current = f;
    for (consumed, arg) in args.into_iter().enumerate() {
        current = match current {
            Term::Func(mut func) => {
                func.args.push(arg);
                if func.args.len() == func.arity {
                    (func.body)(func.args)?
                } else {
                    Term::Func(func)
                }
            }
            _ => {
                return Err(Error::ContinuationShape {
                    expected: consumed,
                    actual: total,
                })
            }
        };
    }
    Ok(current)
}

pub fn apply(f: Term, x: Term) -> Result<Term> {
    apply_all(f, [x])
}

/// Hands the three device fields to a continuation.
pub fn destructure_device_cps(d: &Device) -> Term {
    let fields = [Value::Bool(d.block), Value::Int(d.major), Value::Int(d.minor)];
    func1(move |k| apply_all(k, fields.clone().map(Term::Value)))
}

/// Hands the four benchmark fields to a continuation.
pub fn destructure_benchmark_cps(b: &Benchmark) -> Term {
    let fields = [
        b.first_app.clone(),
        Value::Str(b.first_log.clone()),
        b.second_app.clone(),
        Value::Str(b.second_log.clone()),
    ];
    func1(move |k| apply_all(k, fields.clone().map(Term::Value)))
}

pub fn destructure_cps(r: &Record) -> Term {
    match r {
        Record::Device(d) => destructure_device_cps(d),
        Record::Benchmark(b) => destructure_benchmark_cps(b),
    }
}

/// Puts accumulator `s` in front of the fields of `ab`.
pub fn cons_cps(s: Term, ab: Term) -> Term {
    func1(move |sa| apply(ab.clone(), apply(sa, s.clone())?))
}

type Step2 = dyn Fn(Term, Term) -> Result<Term> + Send + Sync;
type Step3 = dyn Fn(Term, Term, Term) -> Result<Term> + Send + Sync;

/// Rewrites the continuation so `f` folds the next field into the
/// accumulator.
pub fn chop_cps(i: Term, f: impl Fn(Term, Term) -> Result<Term> + Send + Sync + 'static) -> Term {
    let f: Arc<Step2> = Arc::new(f);
    func1(move |o| {
        let f = f.clone();
        apply(i.clone(), func2(move |s, a| apply(o.clone(), f(s, a)?)))
    })
}

/// Reaches through the inner record to its accumulator and head field.
/// Shared by the multi-record chops.
fn reach_into(sabc: Term, k: impl Fn(Term, Term) -> Result<Term> + Send + Sync + 'static) -> Term {
    let k: Arc<Step2> = Arc::new(k);
    func1(move |tb| {
        let k = k.clone();
        apply(sabc.clone(), func2(move |s, a| apply(tb.clone(), k(s, a)?)))
    })
}

/// Folds the head field of both records into the accumulator.
///
/// `i` must be left-nested: `cons_cps(cons_cps(acc, ra), rb)`.
pub fn chop2_cps(
    i: Term,
    f: impl Fn(Term, Term, Term) -> Result<Term> + Send + Sync + 'static,
) -> Term {
    let f: Arc<Step3> = Arc::new(f);
    func1(move |o| {
        let f = f.clone();
        apply(
            i.clone(),
            func2(move |sabc, d| {
                let f = f.clone();
                apply(o.clone(), reach_into(sabc, move |s, a| f(s, a, d.clone())))
            }),
        )
    })
}

/// [`chop2_cps`] written as a single [`chop_cps`] on the outer record.
///
/// The same operator as [`chop2_cps`], derived from [`chop_cps`].
pub fn chop2_cps_via_chop(
    i: Term,
    f: impl Fn(Term, Term, Term) -> Result<Term> + Send + Sync + 'static,
) -> Term {
    let f: Arc<Step3> = Arc::new(f);
    chop_cps(i, move |sabc, d| {
        let f = f.clone();
        Ok(reach_into(sabc, move |s, a| f(s, a, d.clone())))
    })
}

/// Three-record chop, written with [`chop2_cps`].
pub fn chop3_cps(
    i: Term,
    f: impl Fn(Term, Term, Term, Term) -> Result<Term> + Send + Sync + 'static,
) -> Term {
    let f: Arc<dyn Fn(Term, Term, Term, Term) -> Result<Term> + Send + Sync> = Arc::new(f);
    chop2_cps(i, move |sabc, d, g| {
        let f = f.clone();
        Ok(reach_into(sabc, move |s, a| f(s, a, d.clone(), g.clone())))
    })
}

/// Seeds an empty lexeme stack.
pub fn depure_show_cps<R: 'static>(
    destruct: impl Fn(&R) -> Term + Send + Sync + 'static,
) -> Pipeline<R, Term> {
    Pipeline::new(move |r| Ok(cons_cps(LexemeStack::new().into(), destruct(r))))
}

/// Seeds a fresh builder for `target`.
pub fn depure_map_cps<R: 'static>(
    target: RecordType,
    destruct: impl Fn(&R) -> Term + Send + Sync + 'static,
) -> Pipeline<R, Term> {
    Pipeline::new(move |r| Ok(cons_cps(Builder::new(target).into(), destruct(r))))
}

/// Seeds a fresh builder, left-nested over both records.
pub fn depure_zip_cps<Ra: 'static, Rb: 'static>(
    target: RecordType,
    destruct_a: impl Fn(&Ra) -> Term + Send + Sync + 'static,
    destruct_b: impl Fn(&Rb) -> Term + Send + Sync + 'static,
) -> Pipeline2<Ra, Rb, Term> {
    Pipeline2::new(move |ra, rb| {
        let inner = cons_cps(Builder::new(target).into(), destruct_a(ra));
        Ok(cons_cps(inner, destruct_b(rb)))
    })
}

/// Seeds a fresh builder, left-nested over three records.
pub fn depure_zip3_cps<Ra: 'static, Rb: 'static, Rc: 'static>(
    target: RecordType,
    destruct_a: impl Fn(&Ra) -> Term + Send + Sync + 'static,
    destruct_b: impl Fn(&Rb) -> Term + Send + Sync + 'static,
    destruct_c: impl Fn(&Rc) -> Term + Send + Sync + 'static,
) -> Pipeline<(Ra, Rb, Rc), Term> {
    Pipeline::new(move |(ra, rb, rc): &(Ra, Rb, Rc)| {
        let ab = cons_cps(
            cons_cps(Builder::new(target).into(), destruct_a(ra)),
            destruct_b(rb),
        );
        Ok(cons_cps(ab, destruct_c(rc)))
    })
}

fn apply_field(s: Term, v: Value) -> Result<Term> {
    match s {
        Term::Builder(b) => Ok(Term::Builder(b.apply_field(v)?)),
        other => Err(unexpected(other, "builder")),
    }
}

type Renderer = dyn Fn(&Value) -> String + Send + Sync;
type Unary = dyn Fn(Value) -> Result<Value> + Send + Sync;
type Binary = dyn Fn(Value, Value) -> Result<Value> + Send + Sync;
type Ternary = dyn Fn(Value, Value, Value) -> Result<Value> + Send + Sync;

/// Renders the next field onto the lexeme stack.
pub fn showa_cps<R: 'static>(
    p: Pipeline<R, Term>,
    render: impl Fn(&Value) -> String + Send + Sync + 'static,
) -> Pipeline<R, Term> {
    let render: Arc<Renderer> = Arc::new(render);
    hom_wrap(
        |st, f: &Arc<Renderer>| {
            let f = f.clone();
            Ok(chop_cps(st, move |s, a| match s {
                Term::Lexemes(stack) => Ok(Term::Lexemes(stack.push(f(&a.into_value()?)))),
                other => Err(unexpected(other, "lexeme stack")),
            }))
        },
        p,
        render,
    )
}

/// Feeds `f` of the next field to the builder.
pub fn mapa_cps<R: 'static>(
    p: Pipeline<R, Term>,
    f: impl Fn(Value) -> Result<Value> + Send + Sync + 'static,
) -> Pipeline<R, Term> {
    let f: Arc<Unary> = Arc::new(f);
    hom_wrap(
        |st, f: &Arc<Unary>| {
            let f = f.clone();
            Ok(chop_cps(st, move |s, a| apply_field(s, f(a.into_value()?)?)))
        },
        p,
        f,
    )
}

/// Feeds `f` of the next field pair to the builder.
pub fn zipa_cps<Ra: 'static, Rb: 'static>(
    p: Pipeline2<Ra, Rb, Term>,
    f: impl Fn(Value, Value) -> Result<Value> + Send + Sync + 'static,
) -> Pipeline2<Ra, Rb, Term> {
    let f: Arc<Binary> = Arc::new(f);
    hom_wrap2(
        |st, f: &Arc<Binary>| {
            let f = f.clone();
            Ok(chop2_cps(st, move |s, a, b| {
                apply_field(s, f(a.into_value()?, b.into_value()?)?)
            }))
        },
        p,
        f,
    )
}

/// Three-record zip step built on [`chop3_cps`].
pub fn zip3a_cps<R: 'static>(
    p: Pipeline<R, Term>,
    f: impl Fn(Value, Value, Value) -> Result<Value> + Send + Sync + 'static,
) -> Pipeline<R, Term> {
    let f: Arc<Ternary> = Arc::new(f);
    hom_wrap(
        |st, f: &Arc<Ternary>| {
            let f = f.clone();
            Ok(chop3_cps(st, move |s, a, b, c| {
                apply_field(s, f(a.into_value()?, b.into_value()?, c.into_value()?)?)
            }))
        },
        p,
        f,
    )
}

fn into_builder(t: Term) -> Result<Builder> {
    match t {
        Term::Builder(b) => Ok(b),
        other => Err(unexpected(other, "builder")),
    }
}

/// Closes with the identity continuation and joins the lexemes.
pub fn run_show_cps(st: Term) -> Result<String> {
    match apply(st, id())? {
        Term::Lexemes(stack) => Ok(stack.into_emission_order().join(" ")),
        other => Err(unexpected(other, "lexeme stack")),
    }
}

/// Closes with the identity continuation and finishes the builder.
pub fn run_map_cps(st: Term) -> Result<Record> {
    into_builder(apply(st, id())?)?.finish()
}

/// Closes both records with the identity continuation.
pub fn run_zip_cps(st: Term) -> Result<Record> {
    into_builder(apply_all(st, [id(), id()])?)?.finish()
}

/// `f id id id`
pub fn run_zip3_cps(st: Term) -> Result<Record> {
    into_builder(apply_all(st, [id(), id(), id()])?)?.finish()
}

impl<R: 'static> Pipeline<R, Term> {
    pub fn showa_cps(self, render: impl Fn(&Value) -> String + Send + Sync + 'static) -> Self {
        showa_cps(self, render)
    }

    pub fn mapa_cps(self, f: impl Fn(Value) -> Result<Value> + Send + Sync + 'static) -> Self {
        mapa_cps(self, f)
    }

    pub fn zip3a_cps(
        self,
        f: impl Fn(Value, Value, Value) -> Result<Value> + Send + Sync + 'static,
    ) -> Self {
        zip3a_cps(self, f)
    }
}

impl<Ra: 'static, Rb: 'static> Pipeline2<Ra, Rb, Term> {
    pub fn zipa_cps(self, f: impl Fn(Value, Value) -> Result<Value> + Send + Sync + 'static) -> Self {
        zipa_cps(self, f)
    }
}

pub fn show_device_cps() -> Pipeline<Device, Term> {
    depure_show_cps(destructure_device_cps)
        .showa_cps(render)
        .showa_cps(render)
        .showa_cps(render)
}

pub fn map_device_cps() -> Pipeline<Device, Term> {
    depure_map_cps(RecordType::Device, destructure_device_cps)
        .mapa_cps(ops::not)
        .mapa_cps(ops::add(100))
        .mapa_cps(ops::add(200))
}

pub fn zip_device_cps() -> Pipeline2<Device, Device, Term> {
    depure_zip_cps(
        RecordType::Device,
        destructure_device_cps,
        destructure_device_cps,
    )
    .zipa_cps(ops::and)
    .zipa_cps(ops::plus)
    .zipa_cps(ops::plus)
}

pub fn show_record_cps(target: RecordType) -> Pipeline<Record, Term> {
    (0..target.arity()).fold(depure_show_cps(destructure_cps), |p, _| p.showa_cps(render))
}

pub fn map_record_cps(
    target: RecordType,
    f: impl Fn(Value) -> Result<Value> + Clone + Send + Sync + 'static,
) -> Pipeline<Record, Term> {
    (0..target.arity()).fold(depure_map_cps(target, destructure_cps), |p, _| {
        p.mapa_cps(f.clone())
    })
}

pub fn zip_record_cps(
    target: RecordType,
    f: impl Fn(Value, Value) -> Result<Value> + Clone + Send + Sync + 'static,
) -> Pipeline2<Record, Record, Term> {
    (0..target.arity()).fold(
        depure_zip_cps(target, destructure_cps, destructure_cps),
        |p, _| p.zipa_cps(f.clone()),
    )
}

/// Collects the fields a CPS record hands to its continuation.
pub fn collect_fields(cps: Term, arity: usize) -> Result<Vec<Value>> {
    let collector = Func::new(arity, |args| Ok(Term::Tuple(args)));
    match apply(cps, Term::Func(collector))? {
        Term::Tuple(items) => items.into_iter().map(Term::into_value).collect(),
        other => Err(unexpected(other, "tuple")),
    }
}
