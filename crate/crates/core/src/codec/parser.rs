//! A small applicative parser over any indexed input.
//!
//! A parser maps `(input, cursor)` to `(value, new cursor)`. Only `p_pure`
//! and `p_ap` are needed to chain field parsers into a record parser; there
//! is no bind.

use alloc::sync::Arc;

use crate::builder::Builder;
use crate::error::Error;
use crate::value::Value;

use super::CodecError;

pub type Step<T> = Result<(T, usize), CodecError>;

type Run<I, T> = dyn Fn(&I, usize) -> Step<T> + Send + Sync;

pub struct Parser<I: ?Sized, T>(Arc<Run<I, T>>);

impl<I: ?Sized, T> Clone for Parser<I, T> {
    fn clone(&self) -> Self {
        Parser(self.0.clone())
    }
}

impl<I: ?Sized + 'static, T: 'static> Parser<I, T> {
    pub fn new(f: impl Fn(&I, usize) -> Step<T> + Send + Sync + 'static) -> Self {
        Parser(Arc::new(f))
    }

    /// Runs from `cursor`; on success the returned cursor is never behind it.
    pub fn run(&self, input: &I, cursor: usize) -> Step<T> {
        (self.0)(input, cursor)
    }

    /// `self <*> pa`
    pub fn ap<A: 'static>(self, pa: Parser<I, A>) -> Parser<I, T::Output>
    where
        T: Apply<A>,
    {
        p_ap(self, pa)
    }

    pub fn map<U: 'static>(
        self,
        f: impl Fn(T) -> Result<U, CodecError> + Send + Sync + 'static,
    ) -> Parser<I, U> {
        Parser::new(move |input, cursor| {
            let (t, next) = self.run(input, cursor)?;
            Ok((f(t)?, next))
        })
    }
}

/// Something that can sit on the left of `<*>`.
pub trait Apply<A> {
    type Output: 'static;

    fn apply(self, a: A) -> Result<Self::Output, Error>;
}

/// A curried constructor takes its next field.
impl Apply<Value> for Builder {
    type Output = Builder;

    fn apply(self, a: Value) -> Result<Builder, Error> {
        self.apply_field(a)
    }
}

/// The identity step, `id`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Identity;

impl<A: 'static> Apply<A> for Identity {
    type Output = A;

    fn apply(self, a: A) -> Result<A, Error> {
        Ok(a)
    }
}

/// `pure v`: consumes nothing.
pub fn p_pure<I: ?Sized + 'static, T: Clone + Send + Sync + 'static>(v: T) -> Parser<I, T> {
    Parser::new(move |_, cursor| Ok((v.clone(), cursor)))
}

/// `pf <*> pa`: runs `pf`, then `pa` from where it stopped, and applies.
pub fn p_ap<I, S, A>(pf: Parser<I, S>, pa: Parser<I, A>) -> Parser<I, S::Output>
where
    I: ?Sized + 'static,
    S: Apply<A> + 'static,
    A: 'static,
{
    Parser::new(move |input, cursor| {
        let (f, mid) = pf.run(input, cursor)?;
        let (a, end) = pa.run(input, mid)?;
        let out = f.apply(a).map_err(CodecError::record(mid))?;
        Ok((out, end))
    })
}
