//! Exact computations in the algebra of Z2-relations, the signed partition
//! algebra and the partition algebra.
//!
//! Diagrams are Z2-stable set partitions of signed vertices
//! ([`zpart`]); elements are finite sums of diagrams with coefficients in
//! `Q[x]` ([`dalg`]). On top of the diagram basis the crate builds the
//! tabular structure (half diagrams, the `phi` map, the table datum axioms,
//! [`tabular`]), the cellular basis obtained by inserting Murphy bases of
//! `Z2 wr S_n` and `S_n` ([`gcell`]), and the cell modules with their Gram
//! matrices and radicals ([`repn`]). All arithmetic is exact ([`ring`]).

pub mod dalg;
pub mod error;
pub mod gcell;
pub mod repn;
pub mod ring;
pub mod tabular;
pub mod verify;
pub mod zpart;

mod uf;

pub use dalg::{Algebra, AlgebraElement};
pub use error::{Error, Result};
pub use gcell::{BiShape, Perm, Shape, WreathElement};
pub use repn::{CellModule, GramMatrix};
pub use ring::{Poly, ScalarField};
pub use tabular::{CellLabel, HalfDiagram, TableDatum, TabularIndex};
pub use zpart::{Row, Sign, Vertex, ZStablePartition};
