use std::collections::HashMap;
use std::fmt;

use num::{BigRational, One, Zero};
use rand::Rng;
use serde_json::{json, Value};

use super::group::{GroupAlgebraElement, GroupElem, LayerElement, Perm, WreathElement};
use super::shape::{standard_bitableaux, standard_tableaux, BiShape, BiTableau, Shape, Tableau};
use crate::error::{Error, Result};
use crate::ring::{Matrix, ScalarField};

/// Partial order on cell labels. `below` is strict and points towards the
/// ideal: products only ever leak into labels that are below.
pub trait CellOrder: Clone + Ord + fmt::Debug {
    fn below(&self, other: &Self) -> bool;
}

impl CellOrder for Shape {
    fn below(&self, other: &Self) -> bool {
        self != other && self.dominates(other)
    }
}

impl CellOrder for BiShape {
    fn below(&self, other: &Self) -> bool {
        self != other && self.dominates(other)
    }
}

impl<A: CellOrder, B: CellOrder> CellOrder for (A, B) {
    fn below(&self, other: &Self) -> bool {
        self != other
            && (self.0 == other.0 || self.0.below(&other.0))
            && (self.1 == other.1 || self.1.below(&other.1))
    }
}

#[derive(Clone, Debug)]
pub struct Cell<L, D> {
    pub label: L,
    pub tableaux: Vec<D>,
}

#[derive(Clone, Debug)]
pub struct CellEntry<G: GroupElem> {
    pub cell: usize,
    pub s: usize,
    pub t: usize,
    pub element: GroupAlgebraElement<G>,
}

/// A cellular basis `m^L_{s,t}` of a finite group algebra over `Q`, with
/// the inverse change of basis for exact coordinates.
#[derive(Clone, Debug)]
pub struct CellBasis<G: GroupElem, L, D> {
    group: Vec<G>,
    group_index: HashMap<G, usize>,
    cells: Vec<Cell<L, D>>,
    offsets: Vec<usize>,
    entries: Vec<CellEntry<G>>,
    to_cell: Matrix<BigRational>,
}

fn q0() -> BigRational {
    BigRational::zero()
}

impl<G: GroupElem, L: CellOrder, D: Clone> CellBasis<G, L, D> {
    pub fn new(
        group: Vec<G>,
        cells: Vec<Cell<L, D>>,
        mut element: impl FnMut(usize, &Cell<L, D>, usize, usize) -> GroupAlgebraElement<G>,
    ) -> Result<Self> {
        let group_index: HashMap<G, usize> = group
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, g)| (g, i))
            .collect();
        let mut offsets = Vec::with_capacity(cells.len());
        let mut entries = Vec::new();
        for (c, cell) in cells.iter().enumerate() {
            offsets.push(entries.len());
            let n = cell.tableaux.len();
            for s in 0..n {
                for t in 0..n {
                    entries.push(CellEntry {
                        cell: c,
                        s,
                        t,
                        element: element(c, cell, s, t),
                    });
                }
            }
        }
        if entries.len() != group.len() {
            return Err(Error::Incompatible(format!(
                "{} basis elements for a group of order {}",
                entries.len(),
                group.len()
            )));
        }
        let mut change = Matrix::new(group.len(), group.len(), q0());
        for (j, e) in entries.iter().enumerate() {
            for (g, c) in e.element.terms() {
                let i = *group_index
                    .get(g)
                    .ok_or_else(|| Error::Incompatible(format!("{g:?} is outside the group")))?;
                change.set(i, j, c.clone());
            }
        }
        let to_cell = change
            .solve(&Matrix::identity(group.len(), q0()))
            .ok_or_else(|| Error::Incompatible("cell basis is not linearly independent".into()))?;
        Ok(Self {
            group,
            group_index,
            cells,
            offsets,
            entries,
            to_cell,
        })
    }

    pub fn group(&self) -> &[G] {
        &self.group
    }

    pub fn cells(&self) -> &[Cell<L, D>] {
        &self.cells
    }

    pub fn entries(&self) -> &[CellEntry<G>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn cell_of(&self, label: &L) -> Option<usize> {
        self.cells.iter().position(|c| &c.label == label)
    }

    pub fn entry_index(&self, cell: usize, s: usize, t: usize) -> usize {
        let n = self.cells[cell].tableaux.len();
        self.offsets[cell] + s * n + t
    }

    pub fn element(&self, cell: usize, s: usize, t: usize) -> &GroupAlgebraElement<G> {
        &self.entries[self.entry_index(cell, s, t)].element
    }

    /// Coordinates of `x` in the cell basis, indexed like `entries`.
    pub fn coords(&self, x: &GroupAlgebraElement<G>) -> Result<Vec<BigRational>> {
        let mut v = vec![q0(); self.group.len()];
        for (g, c) in x.terms() {
            let i = *self
                .group_index
                .get(g)
                .ok_or_else(|| Error::Incompatible(format!("{g:?} is outside the group")))?;
            v[i] = c.clone();
        }
        let n = self.group.len();
        Ok((0..n)
            .map(|i| {
                (0..n).fold(q0(), |acc, j| {
                    if v[j].is_zero() {
                        acc
                    } else {
                        acc + self.to_cell.get(i, j) * &v[j]
                    }
                })
            })
            .collect())
    }

    pub fn from_coords(&self, c: &[BigRational]) -> GroupAlgebraElement<G> {
        let mut out = GroupAlgebraElement::zero();
        for (e, v) in self.entries.iter().zip(c) {
            if !v.is_zero() {
                out = out.add(&e.element.scale(v));
            }
        }
        out
    }

    /// Coefficients `r(s')` with `h m_{s,t} = sum r(s') m_{s',t}` modulo
    /// cells below. Fails if the product has a component that is neither
    /// below nor in column `t` of the same cell.
    pub fn left_coefficients(
        &self,
        h: &GroupAlgebraElement<G>,
        cell: usize,
        s: usize,
        t: usize,
    ) -> std::result::Result<Vec<BigRational>, String> {
        let prod = h.mul(self.element(cell, s, t));
        let c = self.coords(&prod).map_err(|e| e.to_string())?;
        let n = self.cells[cell].tableaux.len();
        let mut out = vec![q0(); n];
        for (e, v) in self.entries.iter().zip(&c) {
            if v.is_zero() {
                continue;
            }
            if e.cell == cell && e.t == t {
                out[e.s] = v.clone();
            } else if !self.cells[e.cell].label.below(&self.cells[cell].label) {
                return Err(format!(
                    "{:?} m({:?},{s},{t}) has a component in {:?} ({},{})",
                    h, self.cells[cell].label, self.cells[e.cell].label, e.s, e.t
                ));
            }
        }
        Ok(out)
    }

    /// Checks the left cell congruence for `h` on row `s` of `cell`, with
    /// coefficients independent of the column.
    pub fn check_congruence(
        &self,
        h: &GroupAlgebraElement<G>,
        cell: usize,
        s: usize,
    ) -> std::result::Result<(), String> {
        let n = self.cells[cell].tableaux.len();
        let first = self.left_coefficients(h, cell, s, 0)?;
        for t in 1..n {
            if self.left_coefficients(h, cell, s, t)? != first {
                return Err(format!(
                    "coefficients of {:?} on m({:?},{s},{t}) depend on the column",
                    h, self.cells[cell].label
                ));
            }
        }
        Ok(())
    }

    /// `m_{s,t}^* = m_{t,s}` modulo cells below.
    pub fn check_star(&self, cell: usize, s: usize, t: usize) -> std::result::Result<(), String> {
        let diff = self
            .element(cell, s, t)
            .star()
            .add(&self.element(cell, t, s).scale(&-BigRational::one()));
        let c = self.coords(&diff).map_err(|e| e.to_string())?;
        for (e, v) in self.entries.iter().zip(&c) {
            if !v.is_zero() && !self.cells[e.cell].label.below(&self.cells[cell].label) {
                return Err(format!(
                    "star of m({:?},{s},{t}) is not m(t,s)",
                    self.cells[cell].label
                ));
            }
        }
        Ok(())
    }

    /// Exhaustive cellularity check over every group element, row and
    /// column. Returns the failures.
    pub fn verify_exhaustive(&self) -> Vec<String> {
        let mut failures = Vec::new();
        for (ci, cell) in self.cells.iter().enumerate() {
            let n = cell.tableaux.len();
            for s in 0..n {
                for t in 0..n {
                    if let Err(e) = self.check_star(ci, s, t) {
                        failures.push(e);
                    }
                }
                for g in &self.group {
                    if let Err(e) =
                        self.check_congruence(&GroupAlgebraElement::basis(g.clone()), ci, s)
                    {
                        failures.push(e);
                    }
                }
            }
        }
        failures
    }

    /// Cellularity check on `samples` random `(group element, basis
    /// element)` pairs.
    pub fn verify_sampled(&self, rng: &mut impl Rng, samples: usize) -> Vec<String> {
        let mut failures = Vec::new();
        for _ in 0..samples {
            let g = &self.group[rng.gen_range(0..self.group.len())];
            let e = &self.entries[rng.gen_range(0..self.entries.len())];
            if let Err(msg) =
                self.check_congruence(&GroupAlgebraElement::basis(g.clone()), e.cell, e.s)
            {
                failures.push(msg);
            }
            if let Err(msg) = self.check_star(e.cell, e.s, e.t) {
                failures.push(msg);
            }
        }
        failures
    }

    /// The scalar `phi` with `m_{s,s} δ m_{t,t} = phi m_{s,t}` modulo cells
    /// below.
    pub fn struct_const(
        &self,
        cell: usize,
        s: usize,
        t: usize,
        delta: &GroupAlgebraElement<G>,
    ) -> Result<BigRational> {
        let prod = self
            .element(cell, s, s)
            .mul(delta)
            .mul(self.element(cell, t, t));
        let c = self.coords(&prod)?;
        let target = self.entry_index(cell, s, t);
        for (i, (e, v)) in self.entries.iter().zip(&c).enumerate() {
            if i != target
                && !v.is_zero()
                && !self.cells[e.cell].label.below(&self.cells[cell].label)
            {
                return Err(Error::Incompatible(format!(
                    "m_ss d m_tt leaves a component in {:?}",
                    self.cells[e.cell].label
                )));
            }
        }
        Ok(c[target].clone())
    }

    /// Tensor product basis of the direct product group; cells ordered with
    /// the first factor major.
    pub fn product<H: GroupElem, M: CellOrder, E: Clone>(
        &self,
        other: &CellBasis<H, M, E>,
    ) -> Result<ProductBasis<G, H, L, M, D, E>> {
        let group = self
            .group
            .iter()
            .flat_map(|a| other.group.iter().map(move |b| (a.clone(), b.clone())))
            .collect();
        let mut cells = Vec::new();
        let mut src = Vec::new();
        for (ia, ca) in self.cells.iter().enumerate() {
            for (ib, cb) in other.cells.iter().enumerate() {
                let tableaux = ca
                    .tableaux
                    .iter()
                    .flat_map(|x| cb.tableaux.iter().map(move |y| (x.clone(), y.clone())))
                    .collect();
                cells.push(Cell {
                    label: (ca.label.clone(), cb.label.clone()),
                    tableaux,
                });
                src.push((ia, ib));
            }
        }
        let widths: Vec<usize> = other.cells.iter().map(|c| c.tableaux.len()).collect();
        CellBasis::new(group, cells, |ci, _, s, t| {
            let (ia, ib) = src[ci];
            let w = widths[ib];
            self.element(ia, s / w, t / w)
                .tensor(other.element(ib, s % w, t % w))
        })
    }
}

impl<G: GroupElem, L: CellOrder, D: Clone> CellBasis<G, L, D> {
    /// Transport along an injective group homomorphism.
    pub fn map_group<H: GroupElem>(&self, f: impl Fn(&G) -> H) -> CellBasis<H, L, D> {
        let group: Vec<H> = self.group.iter().map(&f).collect();
        let group_index = group
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, g)| (g, i))
            .collect();
        CellBasis {
            group,
            group_index,
            cells: self.cells.clone(),
            offsets: self.offsets.clone(),
            entries: self
                .entries
                .iter()
                .map(|e| CellEntry {
                    cell: e.cell,
                    s: e.s,
                    t: e.t,
                    element: e.element.map(&f),
                })
                .collect(),
            to_cell: self.to_cell.clone(),
        }
    }
}

/// Permutation carrying the letters of `from` to the letters of `to`,
/// cell by cell.
fn cell_map(from: &[(usize, usize)], to: &[(usize, usize)], n: usize) -> Perm {
    let mut images = vec![0; n];
    for (&(_, a), &(_, b)) in from.iter().zip(to) {
        images[a] = b;
    }
    Perm::from_images(images)
}

fn row_stabilizer(rows: &[Vec<usize>], n: usize) -> Vec<Perm> {
    let mut row_of = vec![0; n];
    for (i, r) in rows.iter().enumerate() {
        for &v in r {
            row_of[v] = i;
        }
    }
    Perm::all(n)
        .into_iter()
        .filter(|p| (0..n).all(|i| row_of[p.apply(i)] == row_of[i]))
        .collect()
}

fn flat(t: &Tableau) -> Vec<(usize, usize)> {
    t.cells().map(|((i, j), v)| (i * 64 + j, v)).collect()
}

/// Murphy basis of `Q S_n`: `m_{s,t} = d(s)^{-1} x_μ d(t)`.
pub fn murphy_sym(n: usize) -> CellBasis<Perm, Shape, Tableau> {
    let cells: Vec<Cell<Shape, Tableau>> = Shape::all(n)
        .into_iter()
        .map(|mu| Cell {
            tableaux: standard_tableaux(&mu),
            label: mu,
        })
        .collect();
    let mut cache: HashMap<Shape, GroupAlgebraElement<Perm>> = HashMap::new();
    CellBasis::new(Perm::all(n), cells, |_, cell, s, t| {
        let canonical = Tableau::canonical(&cell.label, &(0..n).collect::<Vec<_>>());
        let x = cache
            .entry(cell.label.clone())
            .or_insert_with(|| {
                row_stabilizer(canonical.rows(), n)
                    .into_iter()
                    .fold(GroupAlgebraElement::zero(), |acc, p| {
                        acc.add(&GroupAlgebraElement::basis(p))
                    })
            })
            .clone();
        let d = |tab: &Tableau| cell_map(&flat(&canonical), &flat(tab), n);
        let ds = GroupAlgebraElement::basis(d(&cell.tableaux[s]).inverse());
        let dt = GroupAlgebraElement::basis(d(&cell.tableaux[t]));
        ds.mul(&x).mul(&dt)
    })
    .expect("Murphy elements form a basis")
}

fn bitableau_cells(b: &BiTableau) -> Vec<(usize, usize)> {
    let mut v = flat(&b.first);
    v.extend(flat(&b.second).into_iter().map(|(c, x)| ((c + 1) << 20, x)));
    v
}

/// Cellular basis of `Q[Z2 wr S_n]`:
/// `m_{s,t} = d(s)^{-1} E x_{λ1} x_{λ2} d(t)` where `E` projects the
/// letters of the first component onto `(1+g)/2` and the rest onto
/// `(1-g)/2`.
pub fn murphy_wreath(n: usize) -> CellBasis<WreathElement, BiShape, BiTableau> {
    let cells: Vec<Cell<BiShape, BiTableau>> = BiShape::all(n)
        .into_iter()
        .map(|l| Cell {
            tableaux: standard_bitableaux(&l),
            label: l,
        })
        .collect();
    let half = BigRational::new(1.into(), 2.into());
    CellBasis::new(WreathElement::all(n), cells, |_, cell, s, t| {
        let canonical = BiTableau::canonical(&cell.label);
        let a = cell.label.first.size();
        let mut proj = GroupAlgebraElement::basis(WreathElement::identity(n));
        for i in 0..n {
            let sign = if i < a { half.clone() } else { -half.clone() };
            let factor = GroupAlgebraElement::term(WreathElement::identity(n), half.clone()).add(
                &GroupAlgebraElement::term(WreathElement::sign_at(n, i), sign),
            );
            proj = proj.mul(&factor);
        }
        let mut rows: Vec<Vec<usize>> = canonical.first.rows().to_vec();
        rows.extend(canonical.second.rows().iter().cloned());
        let x = row_stabilizer(&rows, n)
            .into_iter()
            .fold(GroupAlgebraElement::zero(), |acc, p| {
                acc.add(&GroupAlgebraElement::basis(WreathElement::from_perm(p)))
            });
        let d = |tab: &BiTableau| {
            WreathElement::from_perm(cell_map(
                &bitableau_cells(&canonical),
                &bitableau_cells(tab),
                n,
            ))
        };
        let ds = GroupAlgebraElement::basis(d(&cell.tableaux[s]).inverse());
        let dt = GroupAlgebraElement::basis(d(&cell.tableaux[t]));
        ds.mul(&proj).mul(&x).mul(&dt)
    })
    .expect("wreath Murphy elements form a basis")
}

/// Wreath basis after checking that 2 is invertible in `field`.
pub fn murphy_wreath_in(
    n: usize,
    field: &ScalarField,
) -> Result<CellBasis<WreathElement, BiShape, BiTableau>> {
    field.check()?;
    Ok(murphy_wreath(n))
}

/// Cellular basis of a direct product of two groups.
pub type ProductBasis<G, H, L, M, D, E> = CellBasis<(G, H), (L, M), (D, E)>;

/// Tableau data of a layer basis element.
pub type LayerTableau = (BiTableau, Tableau);
pub type LayerLabel = (BiShape, Shape);
pub type LayerBasis = CellBasis<LayerElement, LayerLabel, LayerTableau>;

/// Which group layer the tabular structure inserts into each index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LayerKind {
    /// `Z2 wr S_{s1} x S_{s2}`.
    Signed,
    /// `S_{s1}` embedded with trivial signs, labels `((μ, ∅), ∅)`.
    Untwisted,
}

/// Cellular basis of the group layer for `(s1, s2)`.
pub fn layer_basis(s1: usize, s2: usize, kind: LayerKind) -> LayerBasis {
    match kind {
        LayerKind::Signed => murphy_wreath(s1)
            .product(&murphy_sym(s2))
            .expect("product of bases")
            .map_group(|(w, p)| LayerElement::new(w.clone(), p.clone())),
        LayerKind::Untwisted => {
            assert_eq!(s2, 0, "untwisted layers carry no fixed classes");
            let sym = murphy_sym(s1);
            let cells = sym
                .cells()
                .iter()
                .map(|c| Cell {
                    label: (
                        BiShape::new(c.label.clone(), Shape::empty()),
                        Shape::empty(),
                    ),
                    tableaux: c
                        .tableaux
                        .iter()
                        .map(|t| {
                            (
                                BiTableau {
                                    first: t.clone(),
                                    second: Tableau::from_rows(Vec::new()),
                                },
                                Tableau::from_rows(Vec::new()),
                            )
                        })
                        .collect(),
                })
                .collect();
            let embed = |p: &Perm| {
                LayerElement::new(WreathElement::from_perm(p.clone()), Perm::identity(0))
            };
            CellBasis::new(
                sym.group().iter().map(embed).collect(),
                cells,
                |ci, _, s, t| sym.element(ci, s, t).map(embed),
            )
            .expect("embedded basis")
        }
    }
}

/// One JSON line of a basis dump.
pub fn dump_entry_wreath(basis: &CellBasis<WreathElement, BiShape, BiTableau>, i: usize) -> Value {
    let e = &basis.entries()[i];
    let cell = &basis.cells()[e.cell];
    json!({
        "label": {"l1": cell.label.first.to_json(), "l2": cell.label.second.to_json()},
        "s": cell.tableaux[e.s].to_json(),
        "t": cell.tableaux[e.t].to_json(),
        "expansion": e.element.terms().iter().map(|(g, c)| json!([g.perm.word(), g.sign_vector(), c.to_string()])).collect::<Vec<_>>(),
    })
}

/// One JSON line of a symmetric-group basis dump.
pub fn dump_entry_sym(basis: &CellBasis<Perm, Shape, Tableau>, i: usize) -> Value {
    let e = &basis.entries()[i];
    let cell = &basis.cells()[e.cell];
    json!({
        "label": {"l1": cell.label.to_json(), "l2": []},
        "s": cell.tableaux[e.s].to_json(),
        "t": cell.tableaux[e.t].to_json(),
        "expansion": e.element.terms().iter().map(|(g, c)| json!([g.word(), vec![0u8; g.degree()], c.to_string()])).collect::<Vec<_>>(),
    })
}
