//! Murphy-type cellular bases of `Q S_n` and `Q[Z2 wr S_n]`.

mod group;
mod murphy;
mod shape;

pub use group::{GroupAlgebraElement, GroupElem, LayerElement, Perm, WreathElement};
pub use murphy::{
    dump_entry_sym, dump_entry_wreath, layer_basis, murphy_sym, murphy_wreath, murphy_wreath_in,
    Cell, CellBasis, CellEntry, CellOrder, LayerBasis, LayerKind, LayerLabel, LayerTableau,
};
pub use shape::{
    standard_bitableaux, standard_tableaux, standard_tableaux_on, BiShape, BiTableau, Shape,
    Tableau,
};
