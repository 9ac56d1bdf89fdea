//! Applicative-like transformations over single-constructor records.
//!
//! A record is destructured into a heterogeneous cons-list ([`FieldList`]) or
//! into a continuation-passing value ([`scott::Term`]), and then folded back
//! one field at a time by small state transformers (`chop` and friends).
//! Expressions built this way read like applicative parsers:
//!
//! ```
//! use applike::pipeline::{depure_map, run_map};
//! use applike::{ops, Device, RecordType};
//!
//! let map_device = depure_map(RecordType::Device, Device::destructure)
//!     .mapa(ops::not)
//!     .mapa(ops::add(100))
//!     .mapa(ops::add(200));
//!
//! let example = Device::new(false, 19, 1);
//! let mapped = run_map(map_device.run(&example).unwrap()).unwrap();
//! assert_eq!(mapped, Device::new(true, 119, 201).into());
//! ```
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod builder;
mod error;
mod list;
mod record;
mod value;

pub mod chop;
pub mod codec;
pub mod ops;
pub mod pipeline;
pub mod plug;
pub mod scott;

pub use builder::{builder_new, Builder};
pub use error::{Error, Result};
pub use list::{cons, uncons, FieldList};
pub use record::{Benchmark, Device, FieldSchema, FieldType, Record, RecordType};
pub use value::{format_real, render, FieldKind, Value};
