//! Step-fold combinators over pipeline states.
//!
//! A state pairs an accumulator with the fields still to be consumed. `chop`
//! feeds the next field to a step function and keeps the tail; `chop2` and
//! `chop3` do the same across two or three field lists in lockstep. The
//! `hom_wrap*` family lifts a chopper to work on reader pipelines, functions
//! from the input record(s) to a state, so that whole transformations can be
//! written without binding the input.

use alloc::sync::Arc;

use crate::error::{Error, Result};
use crate::list::{uncons, FieldList};
use crate::value::Value;

/// An accumulator and one remaining field list, `(s, (a, b))`.
#[derive(Debug, Clone, PartialEq)]
pub struct State1<S> {
    pub acc: S,
    pub rest: FieldList,
}

/// An accumulator and two remaining field lists, `(s, (a, b), (c, d))`.
#[derive(Debug, Clone, PartialEq)]
pub struct State2<S> {
    pub acc: S,
    pub rest_a: FieldList,
    pub rest_b: FieldList,
}

#[derive(Debug, Clone, PartialEq)]
pub struct State3<S> {
    pub acc: S,
    pub rest_a: FieldList,
    pub rest_b: FieldList,
    pub rest_c: FieldList,
}

/// `((s, ra), rb)`: the left-consed form of [`State2`].
pub type LeftState2<S> = (State1<S>, FieldList);

impl<S> State1<S> {
    pub fn new(acc: S, rest: FieldList) -> Self {
        State1 { acc, rest }
    }
}

impl<S> State2<S> {
    pub fn new(acc: S, rest_a: FieldList, rest_b: FieldList) -> Self {
        State2 {
            acc,
            rest_a,
            rest_b,
        }
    }

    /// `(s, ra, rb)` to `((s, ra), rb)`.
    pub fn into_left(self) -> LeftState2<S> {
        (State1::new(self.acc, self.rest_a), self.rest_b)
    }

    /// `((s, ra), rb)` to `(s, ra, rb)`.
    pub fn from_left((inner, rest_b): LeftState2<S>) -> Self {
        State2::new(inner.acc, inner.rest, rest_b)
    }
}

impl<S> State3<S> {
    pub fn new(acc: S, rest_a: FieldList, rest_b: FieldList, rest_c: FieldList) -> Self {
        State3 {
            acc,
            rest_a,
            rest_b,
            rest_c,
        }
    }
}

fn exhausted(op: &'static str, rests: &[&FieldList]) -> Error {
    Error::Arity {
        op,
        remaining: rests.iter().map(|l| l.len()).sum(),
    }
}

/// Folds the head field into the accumulator and keeps the tail.
pub fn chop<S, T>(st: State1<S>, f: impl FnOnce(S, Value) -> Result<T>) -> Result<State1<T>> {
    let State1 { acc, rest } = st;
    let (a, b) = uncons(rest).map_err(|_| exhausted("chop", &[]))?;
    Ok(State1::new(f(acc, a)?, b))
}

/// Folds the head of each field list into the accumulator in one step.
pub fn chop2<S, T>(
    st: State2<S>,
    f: impl FnOnce(S, Value, Value) -> Result<T>,
) -> Result<State2<T>> {
    if st.rest_a.is_nil() || st.rest_b.is_nil() {
        return Err(exhausted("chop2", &[&st.rest_a, &st.rest_b]));
    }
    let State2 {
        acc,
        rest_a,
        rest_b,
    } = st;
    let (a, b) = uncons(rest_a)?;
    let (c, d) = uncons(rest_b)?;
    Ok(State2::new(f(acc, a, c)?, b, d))
}

/// [`chop2`] over the left-nested state: the second record's head is
/// captured, then [`chop`] runs on the inner pair.
///
/// Equal to [`chop2`] up to [`State2::into_left`]/[`State2::from_left`].
pub fn chop2_left<S, T>(
    st: LeftState2<S>,
    f: impl FnOnce(S, Value, Value) -> Result<T>,
) -> Result<LeftState2<T>> {
    let (sab, rest_b) = st;
    if sab.rest.is_nil() || rest_b.is_nil() {
        return Err(exhausted("chop2_left", &[&sab.rest, &rest_b]));
    }
    let (c, d) = uncons(rest_b)?;
    Ok((chop(sab, |s, a| f(s, a, c))?, d))
}

pub fn chop3<S, T>(
    st: State3<S>,
    f: impl FnOnce(S, Value, Value, Value) -> Result<T>,
) -> Result<State3<T>> {
    if st.rest_a.is_nil() || st.rest_b.is_nil() || st.rest_c.is_nil() {
        return Err(exhausted("chop3", &[&st.rest_a, &st.rest_b, &st.rest_c]));
    }
    let State3 {
        acc,
        rest_a,
        rest_b,
        rest_c,
    } = st;
    let (a, ra) = uncons(rest_a)?;
    let (b, rb) = uncons(rest_b)?;
    let (c, rc) = uncons(rest_c)?;
    Ok(State3::new(f(acc, a, b, c)?, ra, rb, rc))
}

/// A reader pipeline: a shareable function from an input record to a state.
type Reader<R, S> = dyn Fn(&R) -> Result<S> + Send + Sync;
type Reader2<Ra, Rb, S> = dyn Fn(&Ra, &Rb) -> Result<S> + Send + Sync;

pub struct Pipeline<R, S>(Arc<Reader<R, S>>);

/// A reader pipeline over two inputs.
pub struct Pipeline2<Ra, Rb, S>(Arc<Reader2<Ra, Rb, S>>);

impl<R, S> Clone for Pipeline<R, S> {
    fn clone(&self) -> Self {
        Pipeline(Arc::clone(&self.0))
    }
}

impl<Ra, Rb, S> Clone for Pipeline2<Ra, Rb, S> {
    fn clone(&self) -> Self {
        Pipeline2(Arc::clone(&self.0))
    }
}

impl<R, S> Pipeline<R, S> {
    pub fn new(f: impl Fn(&R) -> Result<S> + Send + Sync + 'static) -> Self {
        Pipeline(Arc::new(f))
    }

    /// Ignores its input and always yields `s`.
    pub fn constant(s: S) -> Self
    where
        S: Clone + Send + Sync + 'static,
    {
        Pipeline::new(move |_| Ok(s.clone()))
    }

    pub fn run(&self, r: &R) -> Result<S> {
        (self.0)(r)
    }
}

impl<Ra, Rb, S> Pipeline2<Ra, Rb, S> {
    pub fn new(f: impl Fn(&Ra, &Rb) -> Result<S> + Send + Sync + 'static) -> Self {
        Pipeline2(Arc::new(f))
    }

    pub fn constant(s: S) -> Self
    where
        S: Clone + Send + Sync + 'static,
    {
        Pipeline2::new(move |_, _| Ok(s.clone()))
    }

    pub fn run(&self, ra: &Ra, rb: &Rb) -> Result<S> {
        (self.0)(ra, rb)
    }
}

/// Runs `o`, then `chopper` with the stored argument `f`.
pub fn hom_wrap<R, S, T, F>(
    chopper: impl Fn(S, &F) -> Result<T> + Send + Sync + 'static,
    o: Pipeline<R, S>,
    f: F,
) -> Pipeline<R, T>
where
    R: 'static,
    S: 'static,
    F: Send + Sync + 'static,
{
    Pipeline::new(move |r| chopper(o.run(r)?, &f))
}

/// Runs `o`, then `chopper`.
pub fn hom_wrap0<R, S, T>(
    chopper: impl Fn(S) -> Result<T> + Send + Sync + 'static,
    o: Pipeline<R, S>,
) -> Pipeline<R, T>
where
    R: 'static,
    S: 'static,
{
    Pipeline::new(move |r| chopper(o.run(r)?))
}

/// Two-input [`hom_wrap`].
pub fn hom_wrap2<Ra, Rb, S, T, F>(
    chopper: impl Fn(S, &F) -> Result<T> + Send + Sync + 'static,
    o: Pipeline2<Ra, Rb, S>,
    f: F,
) -> Pipeline2<Ra, Rb, T>
where
    Ra: 'static,
    Rb: 'static,
    S: 'static,
    F: Send + Sync + 'static,
{
    Pipeline2::new(move |ra, rb| chopper(o.run(ra, rb)?, &f))
}

/// Reversed application, `andThen x f = f x`.
pub fn and_then<X, Y>(x: X, f: impl FnOnce(X) -> Y) -> Y {
    f(x)
}
