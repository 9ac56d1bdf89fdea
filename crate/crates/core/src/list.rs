use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::value::{render, Value};

/// Heterogeneous cons-list of field values, `(a, (b, (c, ())))`.
///
/// Tails are shared, so `cons`, `uncons` and `clone` are O(1).
#[derive(Clone, Default, PartialEq)]
pub struct FieldList(Option<Arc<Cell>>);

#[derive(PartialEq)]
struct Cell {
    head: Value,
    tail: FieldList,
}

impl FieldList {
    pub const fn nil() -> Self {
        FieldList(None)
    }

    pub fn is_nil(&self) -> bool {
        self.0.is_none()
    }

    pub fn len(&self) -> usize {
        self.iter().count()
    }

    pub fn is_empty(&self) -> bool {
        self.is_nil()
    }

    pub fn head(&self) -> Option<&Value> {
        self.0.as_ref().map(|c| &c.head)
    }

    pub fn tail(&self) -> Option<&FieldList> {
        self.0.as_ref().map(|c| &c.tail)
    }

    pub fn from_values<I>(values: I) -> Self
    where
        I: IntoIterator<Item = Value>,
    {
        let values: Vec<Value> = values.into_iter().collect();
        values
            .into_iter()
            .rev()
            .fold(FieldList::nil(), |rest, v| cons(v, rest))
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter(self)
    }
}

/// Prepends `v` to `rest`.
pub fn cons(v: Value, rest: FieldList) -> FieldList {
    FieldList(Some(Arc::new(Cell {
        head: v,
        tail: rest,
    })))
}

/// Splits a non-empty list into its head and tail.
pub fn uncons(mut l: FieldList) -> Result<(Value, FieldList)> {
    match l.0.take() {
        None => Err(Error::Arity {
            op: "uncons",
            remaining: 0,
        }),
        Some(cell) => Ok(match Arc::try_unwrap(cell) {
            Ok(Cell { head, tail }) => (head, tail),
            Err(shared) => (shared.head.clone(), shared.tail.clone()),
        }),
    }
}

pub struct Iter<'a>(&'a FieldList);

impl<'a> Iterator for Iter<'a> {
    type Item = &'a Value;

    fn next(&mut self) -> Option<&'a Value> {
        let cell = self.0 .0.as_ref()?;
        self.0 = &cell.tail;
        Some(&cell.head)
    }
}

impl IntoIterator for FieldList {
    type Item = Value;
    type IntoIter = IntoIter;

    fn into_iter(self) -> IntoIter {
        IntoIter(self)
    }
}

pub struct IntoIter(FieldList);

impl Iterator for IntoIter {
    type Item = Value;

    fn next(&mut self) -> Option<Value> {
        let (head, tail) = uncons(core::mem::take(&mut self.0)).ok()?;
        self.0 = tail;
        Some(head)
    }
}

impl FromIterator<Value> for FieldList {
    fn from_iter<I: IntoIterator<Item = Value>>(iter: I) -> Self {
        FieldList::from_values(iter)
    }
}

impl Drop for FieldList {
    // Unlink iteratively so long lists do not recurse on drop.
    fn drop(&mut self) {
        let mut next = self.0.take();
        while let Some(cell) = next {
            match Arc::try_unwrap(cell) {
                Ok(mut c) => next = c.tail.0.take(),
                Err(_) => break,
            }
        }
    }
}

impl fmt::Display for FieldList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for v in self.iter() {
            write!(f, "{}, ", render(v))?;
        }
        f.write_str("•]")
    }
}

impl fmt::Debug for FieldList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for v in self.iter() {
            write!(f, "{v:?}, ")?;
        }
        f.write_str("•]")
    }
}
