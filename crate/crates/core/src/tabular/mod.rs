//! Half diagrams, the table datum and the cellular basis built on it.

mod datum;
mod half;

pub(crate) use datum::variant;
pub use datum::{CellKey, CellLabel, Coverage, IndexData, LayerPoly, Located, Report, TableDatum};
pub use half::{decompose, enumerate_m, phi, reconstruct, HalfDiagram, HalfVariant, TabularIndex};
