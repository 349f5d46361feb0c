//! Cell modules, Gram matrices and dimensions of simple modules.

use std::fmt;

use num::{BigRational, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::dalg::{self, Algebra, AlgebraElement};
use crate::error::{Error, Result};
use crate::gcell::{
    murphy_sym, murphy_wreath, BiShape, BiTableau, CellBasis, GroupAlgebraElement, LayerKind, Perm,
    Shape, Tableau, WreathElement,
};
use crate::ring::{rank_over, Characteristic, ExactMatrix, Poly, RankMethod, ScalarField};
use crate::tabular::{phi, CellKey, CellLabel, HalfDiagram, TableDatum};

/// The left cell module `W[label]` with a pinned basis: halves major,
/// then layer tableaux.
#[derive(Clone, Debug)]
pub struct CellModule {
    datum: TableDatum,
    label: CellLabel,
    index: usize,
    layer_cell: usize,
    basis: Vec<(usize, usize)>,
}

/// Gram matrix of the cellular form on a cell module.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    pub label: CellLabel,
    pub entries: ExactMatrix,
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries == self.entries.transpose()
    }

    pub fn det(&self) -> Poly {
        self.entries.det()
    }

    pub fn to_csv(&self) -> String {
        self.entries.to_csv()
    }
}

/// Builds the module for `label` in the given algebra.
pub fn cell_module(label: &CellLabel, algebra: Algebra, k: usize) -> Result<CellModule> {
    CellModule::new(&TableDatum::new(algebra, k)?, label)
}

impl CellModule {
    pub fn new(datum: &TableDatum, label: &CellLabel) -> Result<Self> {
        let (index, layer_cell) = datum.find_label(label)?;
        let data = &datum.indices()[index];
        let n = data.layer.cells()[layer_cell].tableaux.len();
        let basis = (0..data.halves.len())
            .flat_map(|a| (0..n).map(move |s| (a, s)))
            .collect();
        Ok(Self {
            datum: datum.clone(),
            label: label.clone(),
            index,
            layer_cell,
            basis,
        })
    }

    pub fn label(&self) -> &CellLabel {
        &self.label
    }

    pub fn algebra(&self) -> Algebra {
        self.datum.algebra()
    }

    pub fn k(&self) -> usize {
        self.datum.k()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn datum(&self) -> &TableDatum {
        &self.datum
    }

    /// `(half, tableau)` positions of the basis.
    pub fn basis(&self) -> &[(usize, usize)] {
        &self.basis
    }

    pub fn half(&self, i: usize) -> &HalfDiagram {
        &self.datum.indices()[self.index].halves[self.basis[i].0]
    }

    pub fn tableau(&self, i: usize) -> (&BiTableau, &Tableau) {
        let cell = &self.datum.indices()[self.index].layer.cells()[self.layer_cell];
        let (b, t) = &cell.tableaux[self.basis[i].1];
        (b, t)
    }

    pub fn basis_json(&self) -> Vec<Value> {
        (0..self.dim())
            .map(|i| {
                let (b, t) = self.tableau(i);
                json!({"half": self.half(i).to_json(), "bitableau": b.to_json(), "tableau": t.to_json()})
            })
            .collect()
    }

    fn key(&self, left: (usize, usize), right: (usize, usize)) -> CellKey {
        CellKey {
            index: self.index,
            layer_cell: self.layer_cell,
            left,
            right,
        }
    }

    /// Matrix of `a` on the module.
    pub fn action_matrix(&self, a: &AlgebraElement) -> Result<ExactMatrix> {
        if a.algebra() != self.algebra() || a.k() != self.k() {
            return Err(Error::Incompatible(format!(
                "element of {} at k={} acting on a module of {} at k={}",
                a.algebra(),
                a.k(),
                self.algebra(),
                self.k()
            )));
        }
        let n = self.dim();
        let mut m = ExactMatrix::new(n, n, Poly::zero());
        for (j, &left) in self.basis.iter().enumerate() {
            let coeffs = self
                .datum
                .left_action(a, &self.key(left, self.basis[0]))
                .map_err(Error::Incompatible)?;
            for (pos, c) in coeffs {
                let i = self
                    .basis
                    .iter()
                    .position(|&b| b == pos)
                    .expect("left part in module");
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    /// Gram matrix from the factorized formula: `x^l` from gluing the two
    /// halves times the group-layer structure constants of the glue element.
    pub fn gram(&self) -> Result<GramMatrix> {
        let layer = Factors::new(&self.datum, self.index, self.layer_cell)?;
        let n = self.dim();
        let halves = &self.datum.indices()[self.index].halves;
        let mut m = ExactMatrix::new(n, n, Poly::zero());
        for (i, &(a, s)) in self.basis.iter().enumerate() {
            for (j, &(b, t)) in self.basis.iter().enumerate() {
                if let Some((l, delta)) = phi(&halves[a], &halves[b])? {
                    let c = layer.struct_const(s, t, &delta.wreath, &delta.sym)?;
                    m.set(i, j, Poly::monomial(c, l as usize));
                }
            }
        }
        Ok(GramMatrix {
            label: self.label.clone(),
            entries: m,
        })
    }

    /// Entry `(i, j)` by brute force: the coefficient of `C'_{S,T}` in
    /// `C'_{S,S} C'_{T,T}`, checking that everything else is lower.
    pub fn gram_oracle_entry(&self, i: usize, j: usize) -> Result<Poly> {
        let (si, sj) = (self.basis[i], self.basis[j]);
        let left = self.datum.basis_element(&self.key(si, si));
        let right = self.datum.basis_element(&self.key(sj, sj));
        let coords = self.datum.cellular_coords(&left.multiply(&right)?)?;
        let target = self.key(si, sj);
        let mut out = Poly::zero();
        for (key, c) in coords {
            if key == target {
                out = c;
            } else if !self.datum.label_of(&key).below(&self.label) {
                return Err(Error::Incompatible(format!(
                    "C'_SS C'_TT has a component {:?} in cell {}",
                    key,
                    self.datum.label_of(&key)
                )));
            }
        }
        Ok(out)
    }

    pub fn gram_oracle(&self) -> Result<GramMatrix> {
        let n = self.dim();
        let mut m = ExactMatrix::new(n, n, Poly::zero());
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.gram_oracle_entry(i, j)?);
            }
        }
        Ok(GramMatrix {
            label: self.label.clone(),
            entries: m,
        })
    }

    /// Checks that every basis element maps the radical at `x` into itself.
    pub fn radical_is_invariant(&self, x: &BigRational) -> Result<bool> {
        let zero = BigRational::zero();
        let g = self.gram()?.entries.map(zero.clone(), |e| e.eval(x));
        let kernel = g.kernel();
        let n = self.dim();
        for d in dalg::basis(self.algebra(), self.k())? {
            let a = AlgebraElement::from_diagram(self.algebra(), d)?;
            let act = self.action_matrix(&a)?.map(zero.clone(), |e| e.eval(x));
            for v in &kernel {
                let w: Vec<BigRational> = (0..n)
                    .map(|i| (0..n).fold(zero.clone(), |acc, j| acc + act.get(i, j) * &v[j]))
                    .collect();
                let gw = (0..n).all(|i| {
                    (0..n)
                        .fold(zero.clone(), |acc, j| acc + g.get(i, j) * &w[j])
                        .is_zero()
                });
                if !gw {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// The layer basis split into its wreath and symmetric factors.
struct Factors {
    kind: LayerKind,
    wreath: Option<(CellBasis<WreathElement, BiShape, BiTableau>, usize)>,
    sym: (CellBasis<Perm, Shape, Tableau>, usize),
    width: usize,
}

impl Factors {
    fn new(datum: &TableDatum, index: usize, layer_cell: usize) -> Result<Self> {
        let data = &datum.indices()[index];
        let (bishape, shape) = &data.layer.cells()[layer_cell].label;
        let missing = || Error::UnknownLabel(format!("{bishape} {shape}"));
        let kind = crate::tabular::variant(datum.algebra()).1;
        Ok(match kind {
            LayerKind::Signed => {
                let w = murphy_wreath(data.index.s1);
                let wc = w.cell_of(bishape).ok_or_else(missing)?;
                let s = murphy_sym(data.index.s2);
                let sc = s.cell_of(shape).ok_or_else(missing)?;
                let width = s.cells()[sc].tableaux.len();
                Self {
                    kind,
                    wreath: Some((w, wc)),
                    sym: (s, sc),
                    width,
                }
            }
            LayerKind::Untwisted => {
                let s = murphy_sym(data.index.s1);
                let sc = s.cell_of(&bishape.first).ok_or_else(missing)?;
                Self {
                    kind,
                    wreath: None,
                    sym: (s, sc),
                    width: 1,
                }
            }
        })
    }

    fn struct_const(&self, s: usize, t: usize, w: &WreathElement, p: &Perm) -> Result<BigRational> {
        match (self.kind, &self.wreath) {
            (LayerKind::Signed, Some((wb, wc))) => {
                let (sb, sc) = &self.sym;
                let a = wb.struct_const(
                    *wc,
                    s / self.width,
                    t / self.width,
                    &GroupAlgebraElement::basis(w.clone()),
                )?;
                let b = sb.struct_const(
                    *sc,
                    s % self.width,
                    t % self.width,
                    &GroupAlgebraElement::basis(p.clone()),
                )?;
                Ok(a * b)
            }
            _ => {
                let (sb, sc) = &self.sym;
                sb.struct_const(*sc, s, t, &GroupAlgebraElement::basis(w.perm.clone()))
            }
        }
    }
}

/// Rank of the Gram matrix in a field, which is the dimension of the
/// simple head of the module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalReport {
    pub dim_w: usize,
    pub rank: usize,
    pub dim_rad: usize,
    pub method: RankMethod,
}

pub fn radical_and_irreducible(
    module: &CellModule,
    field: &ScalarField,
    seed: u64,
) -> Result<RadicalReport> {
    field.check()?;
    let g = module.gram()?;
    let r = rank_over(&g.entries, field, seed)?;
    Ok(RadicalReport {
        dim_w: g.dim(),
        rank: r.rank,
        dim_rad: g.dim() - r.rank,
        method: r.method,
    })
}

/// True iff every component of the label is `p`-restricted.
pub fn p_restricted(label: &CellLabel, p: u64) -> bool {
    label.bishape.is_p_restricted(p) && label.shape.is_p_restricted(p)
}

/// One line of an irreducible-dimension table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibleRow {
    pub label: String,
    pub dim_w: usize,
    pub dim_d: usize,
    pub nonzero: bool,
    /// `p`-restriction of the label, only in characteristic `p`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_restricted: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibleTable {
    pub algebra: String,
    pub k: usize,
    pub field: String,
    pub rows: Vec<IrreducibleRow>,
    pub dim_algebra: usize,
    pub sum_dim_d_squared: usize,
}

impl IrreducibleTable {
    /// Aligned text rendering.
    pub fn to_text(&self) -> String {
        let mut out = format!("# {} k={} over {}\n", self.algebra, self.k, self.field);
        let w = self
            .rows
            .iter()
            .map(|r| r.label.len())
            .max()
            .unwrap_or(5)
            .max(5);
        out.push_str(&format!(
            "{:<w$}  {:>5}  {:>5}  {:>7}  {:>12}\n",
            "label", "dim W", "dim D", "nonzero", "p-restricted"
        ));
        for r in &self.rows {
            let pr = match r.p_restricted {
                Some(b) => b.to_string(),
                None => "-".into(),
            };
            out.push_str(&format!(
                "{:<w$}  {:>5}  {:>5}  {:>7}  {:>12}\n",
                r.label, r.dim_w, r.dim_d, r.nonzero, pr
            ));
        }
        out.push_str(&format!(
            "sum dim(D)^2 = {}, dim algebra = {}\n",
            self.sum_dim_d_squared, self.dim_algebra
        ));
        out
    }
}

impl fmt::Display for IrreducibleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn irreducible_table(
    algebra: Algebra,
    k: usize,
    field: &ScalarField,
    seed: u64,
) -> Result<IrreducibleTable> {
    field.check()?;
    let datum = TableDatum::new(algebra, k)?;
    let mut rows = Vec::new();
    for label in datum.labels() {
        let module = CellModule::new(&datum, &label)?;
        let r = radical_and_irreducible(&module, field, seed)?;
        rows.push(IrreducibleRow {
            label: label.to_label_string(),
            dim_w: r.dim_w,
            dim_d: r.rank,
            nonzero: r.rank > 0,
            p_restricted: match field.characteristic {
                Characteristic::Zero => None,
                Characteristic::Prime(p) => Some(p_restricted(&label, p)),
            },
        });
    }
    Ok(IrreducibleTable {
        algebra: algebra.name().into(),
        k,
        field: field.to_string(),
        sum_dim_d_squared: rows.iter().map(|r| r.dim_d * r.dim_d).sum(),
        dim_algebra: datum.census(),
        rows,
    })
}
