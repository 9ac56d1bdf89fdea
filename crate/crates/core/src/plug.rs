//! One plugging protocol over every pipeline family.
//!
//! A whole-record handler exposes one port per field. Each plug fills the
//! leftmost open port with a per-field handler and returns a handler with one
//! port fewer.
//!
//! Two layers are provided. [`PlugInstance`] is dynamic: it wraps any of the
//! pipeline families over [`Record`], counts its ports and checks the kind of
//! each piece when it is plugged. [`ApplicativeLike`] is the typed face, with
//! the piece type as an associated type, implemented by [`Mapper`] and
//! [`MapperCps`]. There is no generic `depure`; every family is seeded by its
//! own constructor.

use alloc::string::String;
use alloc::sync::Arc;
use core::fmt;

use crate::builder::Builder;
use crate::chop::{Pipeline, Pipeline2, State1, State2};
use crate::error::{Error, Result};
use crate::pipeline::{self, LexemeStack};
use crate::record::{Record, RecordType};
use crate::scott::{self, Term};
use crate::value::Value;

pub type Unary = dyn Fn(Value) -> Result<Value> + Send + Sync;
pub type Binary = dyn Fn(Value, Value) -> Result<Value> + Send + Sync;
pub type Renderer = dyn Fn(&Value) -> String + Send + Sync;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceKind {
    UnaryField,
    BinaryField,
    Renderer,
}

impl PieceKind {
    pub fn name(self) -> &'static str {
        match self {
            PieceKind::UnaryField => "unary field function",
            PieceKind::BinaryField => "binary field function",
            PieceKind::Renderer => "renderer",
        }
    }
}

impl fmt::Display for PieceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A piece handler for one port.
#[derive(Clone)]
pub enum Piece {
    Unary(Arc<Unary>),
    Binary(Arc<Binary>),
    Render(Arc<Renderer>),
}

impl Piece {
    pub fn unary(f: impl Fn(Value) -> Result<Value> + Send + Sync + 'static) -> Self {
        Piece::Unary(Arc::new(f))
    }

    pub fn binary(f: impl Fn(Value, Value) -> Result<Value> + Send + Sync + 'static) -> Self {
        Piece::Binary(Arc::new(f))
    }

    pub fn render(f: impl Fn(&Value) -> String + Send + Sync + 'static) -> Self {
        Piece::Render(Arc::new(f))
    }

    pub fn kind(&self) -> PieceKind {
        match self {
            Piece::Unary(_) => PieceKind::UnaryField,
            Piece::Binary(_) => PieceKind::BinaryField,
            Piece::Render(_) => PieceKind::Renderer,
        }
    }
}

impl fmt::Debug for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} piece>", self.kind())
    }
}

#[derive(Clone)]
enum Track {
    Mapper(Pipeline<Record, State1<Builder>>),
    MapperCps(Pipeline<Record, Term>),
    Shower(Pipeline<Record, State1<LexemeStack>>),
    ShowerCps(Pipeline<Record, Term>),
    Zipper(Pipeline2<Record, Record, State2<Builder>>),
    ZipperCps(Pipeline2<Record, Record, Term>),
}

/// What running an instance yields.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Record(Record),
    Text(String),
}

impl Output {
    pub fn into_record(self) -> Option<Record> {
        match self {
            Output::Record(r) => Some(r),
            Output::Text(_) => None,
        }
    }

    pub fn into_text(self) -> Option<String> {
        match self {
            Output::Text(t) => Some(t),
            Output::Record(_) => None,
        }
    }
}

/// A pipeline of some family together with its open ports.
///
/// Instances are immutable; [`plug`](PlugInstance::plug) returns a new one.
#[derive(Clone)]
pub struct PlugInstance {
    name: &'static str,
    target: RecordType,
    track: Track,
    steps_remaining: usize,
}

impl fmt::Debug for PlugInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PlugInstance")
            .field("name", &self.name)
            .field("target", &self.target)
            .field("piece_kind", &self.piece_kind())
            .field("steps_remaining", &self.steps_remaining)
            .finish()
    }
}

impl PlugInstance {
    fn seeded(name: &'static str, target: RecordType, track: Track) -> Self {
        PlugInstance {
            name,
            target,
            track,
            steps_remaining: target.arity(),
        }
    }

    /// Map pipeline on the list track, seeded for `target`.
    pub fn mapper(target: RecordType) -> Self {
        let seed = pipeline::depure_map(target, Record::destructure);
        Self::seeded("Mapper", target, Track::Mapper(seed))
    }

    /// Map pipeline on the continuation track, seeded for `target`.
    pub fn mapper_cps(target: RecordType) -> Self {
        let seed = scott::depure_map_cps(target, scott::destructure_cps);
        Self::seeded("MapperCps", target, Track::MapperCps(seed))
    }

    pub fn shower(target: RecordType) -> Self {
        let seed = pipeline::depure_show(Record::destructure);
        Self::seeded("Shower", target, Track::Shower(seed))
    }

    pub fn shower_cps(target: RecordType) -> Self {
        let seed = scott::depure_show_cps(scott::destructure_cps);
        Self::seeded("ShowerCps", target, Track::ShowerCps(seed))
    }

    pub fn zipper(target: RecordType) -> Self {
        let seed = pipeline::depure_zip(target, Record::destructure, Record::destructure);
        Self::seeded("Zipper", target, Track::Zipper(seed))
    }

    pub fn zipper_cps(target: RecordType) -> Self {
        let seed = scott::depure_zip_cps(target, scott::destructure_cps, scott::destructure_cps);
        Self::seeded("ZipperCps", target, Track::ZipperCps(seed))
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn target(&self) -> RecordType {
        self.target
    }

    pub fn steps_remaining(&self) -> usize {
        self.steps_remaining
    }

    pub fn piece_kind(&self) -> PieceKind {
        match self.track {
            Track::Mapper(_) | Track::MapperCps(_) => PieceKind::UnaryField,
            Track::Shower(_) | Track::ShowerCps(_) => PieceKind::Renderer,
            Track::Zipper(_) | Track::ZipperCps(_) => PieceKind::BinaryField,
        }
    }

    /// Number of records [`run_instance`](PlugInstance::run_instance) takes.
    pub fn input_count(&self) -> usize {
        match self.track {
            Track::Zipper(_) | Track::ZipperCps(_) => 2,
            _ => 1,
        }
    }

    /// Fills the leftmost open port.
    pub fn plug(&self, piece: Piece) -> Result<PlugInstance> {
        if self.steps_remaining == 0 {
            return Err(Error::Exhausted { name: self.name });
        }
        let track = match (self.track.clone(), piece) {
            (Track::Mapper(p), Piece::Unary(f)) => Track::Mapper(p.mapa(move |v| f(v))),
            (Track::MapperCps(p), Piece::Unary(f)) => Track::MapperCps(p.mapa_cps(move |v| f(v))),
            (Track::Shower(p), Piece::Render(f)) => Track::Shower(p.showa(move |v| f(v))),
            (Track::ShowerCps(p), Piece::Render(f)) => Track::ShowerCps(p.showa_cps(move |v| f(v))),
            (Track::Zipper(p), Piece::Binary(f)) => Track::Zipper(p.zipa(move |a, b| f(a, b))),
            (Track::ZipperCps(p), Piece::Binary(f)) => {
                Track::ZipperCps(p.zipa_cps(move |a, b| f(a, b)))
            }
            (_, piece) => {
                return Err(Error::PieceKind {
                    name: self.name,
                    expected: self.piece_kind().name(),
                    found: piece.kind().name(),
                })
            }
        };
        Ok(PlugInstance {
            track,
            steps_remaining: self.steps_remaining - 1,
            ..*self
        })
    }

    /// Plugs `pieces` left to right.
    pub fn plug_all(&self, pieces: impl IntoIterator<Item = Piece>) -> Result<PlugInstance> {
        pieces
            .into_iter()
            .try_fold(self.clone(), |inst, piece| inst.plug(piece))
    }

    /// Runs a fully plugged instance on its input record(s).
    pub fn run_instance(&self, inputs: &[Record]) -> Result<Output> {
        if self.steps_remaining > 0 {
            return Err(Error::PortsOpen {
                name: self.name,
                remaining: self.steps_remaining,
            });
        }
        if inputs.len() != self.input_count() {
            return Err(Error::InputCount {
                name: self.name,
                expected: self.input_count(),
                given: inputs.len(),
            });
        }
        for r in inputs {
            if r.record_type() != self.target {
                return Err(Error::RecordType {
                    expected: self.target.name(),
                    found: r.record_type().name(),
                });
            }
        }
        match &self.track {
            Track::Mapper(p) => pipeline::run_map(p.run(&inputs[0])?).map(Output::Record),
            Track::MapperCps(p) => scott::run_map_cps(p.run(&inputs[0])?).map(Output::Record),
            Track::Shower(p) => Ok(Output::Text(pipeline::run_show(p.run(&inputs[0])?))),
            Track::ShowerCps(p) => scott::run_show_cps(p.run(&inputs[0])?).map(Output::Text),
            Track::Zipper(p) => {
                pipeline::run_zip(p.run(&inputs[0], &inputs[1])?).map(Output::Record)
            }
            Track::ZipperCps(p) => {
                scott::run_zip_cps(p.run(&inputs[0], &inputs[1])?).map(Output::Record)
            }
        }
    }
}

/// The typed plug. Each call consumes one port and fills it with `Piece`.
///
/// The remaining-fields part of the type is
/// not tracked statically; running with ports still open fails at run time.
pub trait ApplicativeLike: Sized {
    type Input;
    type Piece;
    type Output;

    fn plug(self, piece: Self::Piece) -> Self;

    fn run(&self, input: &Self::Input) -> Result<Self::Output>;
}

/// Same as `whole.plug(piece)`.
pub fn plug<A: ApplicativeLike>(whole: A, piece: A::Piece) -> A {
    whole.plug(piece)
}

/// The list-track map family: a reader from `R` to a builder plus fields.
pub struct Mapper<R>(Pipeline<R, State1<Builder>>);

impl<R> Clone for Mapper<R> {
    fn clone(&self) -> Self {
        Mapper(self.0.clone())
    }
}

impl<R: 'static> Mapper<R> {
    pub fn new(seed: Pipeline<R, State1<Builder>>) -> Self {
        Mapper(seed)
    }

    pub fn run_mapper(&self, r: &R) -> Result<State1<Builder>> {
        self.0.run(r)
    }
}

impl<R: 'static> ApplicativeLike for Mapper<R> {
    type Input = R;
    type Piece = Arc<Unary>;
    type Output = Record;

    fn plug(self, piece: Arc<Unary>) -> Self {
        Mapper(self.0.mapa(move |v| piece(v)))
    }

    fn run(&self, r: &R) -> Result<Record> {
        pipeline::run_map(self.run_mapper(r)?)
    }
}

/// The continuation-track map family.
pub struct MapperCps<R>(Pipeline<R, Term>);

impl<R> Clone for MapperCps<R> {
    fn clone(&self) -> Self {
        MapperCps(self.0.clone())
    }
}

impl<R: 'static> MapperCps<R> {
    pub fn new(seed: Pipeline<R, Term>) -> Self {
        MapperCps(seed)
    }

    pub fn run_mapper(&self, r: &R) -> Result<Term> {
        self.0.run(r)
    }
}

impl<R: 'static> ApplicativeLike for MapperCps<R> {
    type Input = R;
    type Piece = Arc<Unary>;
    type Output = Record;

    fn plug(self, piece: Arc<Unary>) -> Self {
        MapperCps(self.0.mapa_cps(move |v| piece(v)))
    }

    fn run(&self, r: &R) -> Result<Record> {
        scott::run_map_cps(self.run_mapper(r)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops;
    use crate::pipeline::example_device;
    use crate::record::Device;
    use crate::value::render;
    use alloc::vec;
    use alloc::vec::Vec;

    fn device_pieces() -> Vec<Piece> {
        vec![
            Piece::unary(ops::not),
            Piece::unary(ops::add(100)),
            Piece::unary(ops::add(200)),
        ]
    }

    #[test]
    fn mapper_and_mapper_cps_agree_on_the_demo() {
        let want = Output::Record(Device::new(true, 119, 201).into());
        let input = [Record::from(example_device())];
        for inst in [
            PlugInstance::mapper(RecordType::Device),
            PlugInstance::mapper_cps(RecordType::Device),
        ] {
            let done = inst.plug_all(device_pieces()).unwrap();
            assert_eq!(done.steps_remaining(), 0);
            assert_eq!(done.run_instance(&input).unwrap(), want);
        }
    }

    #[test]
    fn fourth_plug_is_exhausted() {
        let done = PlugInstance::mapper(RecordType::Device)
            .plug_all(device_pieces())
            .unwrap();
        assert_eq!(
            done.plug(Piece::unary(ops::id)).unwrap_err(),
            Error::Exhausted { name: "Mapper" }
        );
    }

    #[test]
    fn open_ports_refuse_to_run() {
        let half = PlugInstance::shower(RecordType::Device)
            .plug(Piece::render(render))
            .unwrap();
        assert_eq!(
            half.run_instance(&[example_device().into()]).unwrap_err(),
            Error::PortsOpen {
                name: "Shower",
                remaining: 2
            }
        );
    }

    #[test]
    fn piece_kind_is_checked_at_plug_time() {
        let err = PlugInstance::zipper(RecordType::Device)
            .plug(Piece::unary(ops::id))
            .unwrap_err();
        assert_eq!(
            err,
            Error::PieceKind {
                name: "Zipper",
                expected: "binary field function",
                found: "unary field function"
            }
        );
    }

    #[test]
    fn inputs_are_checked() {
        let zip = PlugInstance::zipper(RecordType::Device)
            .plug_all((0..3).map(|_| Piece::binary(ops::left)))
            .unwrap();
        let d: Record = example_device().into();
        assert!(matches!(
            zip.run_instance(core::slice::from_ref(&d)),
            Err(Error::InputCount { expected: 2, given: 1, .. })
        ));
        let b = crate::record::Benchmark::new(1, "a", 2, "b").into();
        assert!(matches!(
            zip.run_instance(&[d, b]),
            Err(Error::RecordType { .. })
        ));
    }

    #[test]
    fn show_instance() {
        let out = PlugInstance::shower_cps(RecordType::Device)
            .plug_all((0..3).map(|_| Piece::render(render)))
            .unwrap()
            .run_instance(&[example_device().into()])
            .unwrap();
        assert_eq!(out, Output::Text("False 19 1".into()));
    }

    #[test]
    fn typed_mappers() {
        let pieces: [Arc<Unary>; 3] = [
            Arc::new(ops::not),
            Arc::new(ops::add(100)),
            Arc::new(ops::add(200)),
        ];
        let m = pieces.iter().cloned().fold(
            Mapper::new(pipeline::depure_map(RecordType::Device, Device::destructure)),
            plug,
        );
        let ms = pieces.iter().cloned().fold(
            MapperCps::new(scott::depure_map_cps(
                RecordType::Device,
                scott::destructure_device_cps,
            )),
            plug,
        );
        let want: Record = Device::new(true, 119, 201).into();
        assert_eq!(m.run(&example_device()).unwrap(), want);
        assert_eq!(ms.run(&example_device()).unwrap(), want);
    }
}
