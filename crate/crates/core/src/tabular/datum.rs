use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::Zero;
use rand::Rng;

use super::half::{decompose, enumerate_m, reconstruct, HalfDiagram, HalfVariant, TabularIndex};
use crate::dalg::{Algebra, AlgebraElement};
use crate::error::{Error, Result};
use crate::gcell::{
    layer_basis, BiShape, CellOrder, GroupAlgebraElement, GroupElem, LayerBasis, LayerElement,
    LayerKind, Shape,
};
use crate::ring::Poly;
use crate::zpart::ZStablePartition;

/// Label `((r, (s1, s2)), ((λ1, λ2), μ))` of a cell.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellLabel {
    pub index: TabularIndex,
    pub bishape: BiShape,
    pub shape: Shape,
}

impl CellLabel {
    /// Strict cell order, pointing towards the ideal.
    pub fn below(&self, other: &Self) -> bool {
        self.index.below(&other.index)
            || (self.index == other.index
                && (self.bishape.clone(), self.shape.clone())
                    .below(&(other.bishape.clone(), other.shape.clone())))
    }

    /// `r,s1,s2,l1,l2,mu` with shape parts joined by `.` and `0` for the
    /// empty shape.
    pub fn to_label_string(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.index.r,
            self.index.s1,
            self.index.s2,
            self.bishape.first.to_label(),
            self.bishape.second.to_label(),
            self.shape.to_label()
        )
    }

    pub fn parse(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.split(',').collect();
        if fields.len() != 6 {
            return Err(Error::Parse(format!(
                "label {s:?} needs six fields r,s1,s2,l1,l2,mu"
            )));
        }
        let num = |f: &str| {
            f.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer {f:?}")))
        };
        let (r, s1, s2) = (num(fields[0])?, num(fields[1])?, num(fields[2])?);
        if r != 2 * s1 + s2 {
            return Err(Error::Parse(format!("r = {r} differs from 2*s1 + s2")));
        }
        Ok(Self {
            index: TabularIndex::new(s1, s2),
            bishape: BiShape::new(Shape::from_label(fields[3])?, Shape::from_label(fields[4])?),
            shape: Shape::from_label(fields[5])?,
        })
    }
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},({},{}))", self.index, self.bishape, self.shape)
    }
}

/// Everything attached to one tabular index.
#[derive(Clone, Debug)]
pub struct IndexData {
    pub index: TabularIndex,
    pub halves: Vec<HalfDiagram>,
    lookup: HashMap<HalfDiagram, usize>,
    pub layer: LayerBasis,
}

impl IndexData {
    pub fn half_position(&self, h: &HalfDiagram) -> Option<usize> {
        self.lookup.get(h).copied()
    }
}

/// Address of a cellular basis element `C'[(A, s), (B, t)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellKey {
    /// Position of the tabular index.
    pub index: usize,
    /// Cell of the group layer.
    pub layer_cell: usize,
    /// `(half, tableau)` on the left.
    pub left: (usize, usize),
    /// `(half, tableau)` on the right.
    pub right: (usize, usize),
}

/// Location of a diagram in the table datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Located {
    pub index: usize,
    pub top: usize,
    pub bottom: usize,
    pub group: LayerElement,
}

/// The table datum of one algebra at one `k`, with the cellular basis built
/// on it.
#[derive(Clone, Debug)]
pub struct TableDatum {
    algebra: Algebra,
    k: usize,
    indices: Vec<IndexData>,
    position: HashMap<TabularIndex, usize>,
}

pub(crate) fn variant(algebra: Algebra) -> (HalfVariant, LayerKind) {
    match algebra {
        Algebra::Z2Rel => (HalfVariant::Plain, LayerKind::Signed),
        Algebra::Signed => (HalfVariant::Signed, LayerKind::Signed),
        Algebra::Partition => (HalfVariant::Untwisted, LayerKind::Untwisted),
    }
}

/// Polynomial-coefficient element of a layer group algebra.
pub type LayerPoly = BTreeMap<LayerElement, Poly>;

fn add_into(map: &mut LayerPoly, g: LayerElement, c: Poly) {
    let sum = match map.remove(&g) {
        Some(old) => &old + &c,
        None => c,
    };
    if !sum.is_zero() {
        map.insert(g, sum);
    }
}

impl TableDatum {
    pub fn new(algebra: Algebra, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidSize("k must be positive".into()));
        }
        let (hv, lk) = variant(algebra);
        let mut indices = Vec::new();
        for index in TabularIndex::all(k) {
            if lk == LayerKind::Untwisted && index.s2 > 0 {
                continue;
            }
            let halves = enumerate_m(k, index.s1, index.s2, hv)?;
            if halves.is_empty() {
                continue;
            }
            let lookup = halves
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, h)| (h, i))
                .collect();
            indices.push(IndexData {
                index,
                halves,
                lookup,
                layer: layer_basis(index.s1, index.s2, lk),
            });
        }
        let position = indices
            .iter()
            .enumerate()
            .map(|(i, d)| (d.index, i))
            .collect();
        Ok(Self {
            algebra,
            k,
            indices,
            position,
        })
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn indices(&self) -> &[IndexData] {
        &self.indices
    }

    pub fn index_position(&self, index: &TabularIndex) -> Option<usize> {
        self.position.get(index).copied()
    }

    /// Number of diagrams the datum accounts for.
    pub fn census(&self) -> usize {
        self.indices
            .iter()
            .map(|d| d.halves.len().pow(2) * d.layer.group().len())
            .sum()
    }

    pub fn locate(&self, d: &ZStablePartition) -> Result<Located> {
        let (top, bottom, group) = decompose(d)?;
        let index = self
            .index_position(&top.index())
            .ok_or_else(|| Error::Incompatible(format!("{d} has an index outside the datum")))?;
        let data = &self.indices[index];
        let pos = |h: &HalfDiagram| {
            data.half_position(h)
                .ok_or_else(|| Error::Incompatible(format!("{d} has a half outside the index set")))
        };
        Ok(Located {
            index,
            top: pos(&top)?,
            bottom: pos(&bottom)?,
            group,
        })
    }

    pub fn diagram(
        &self,
        index: usize,
        top: usize,
        bottom: usize,
        g: &LayerElement,
    ) -> ZStablePartition {
        let data = &self.indices[index];
        reconstruct(&data.halves[top], &data.halves[bottom], g).expect("halves of one index")
    }

    /// All cell labels, in increasing total order.
    pub fn labels(&self) -> Vec<CellLabel> {
        let mut out: Vec<CellLabel> = self
            .indices
            .iter()
            .flat_map(|d| {
                d.layer.cells().iter().map(move |c| CellLabel {
                    index: d.index,
                    bishape: c.label.0.clone(),
                    shape: c.label.1.clone(),
                })
            })
            .collect();
        out.sort();
        out
    }

    /// `(index position, layer cell)` of a label.
    pub fn find_label(&self, label: &CellLabel) -> Result<(usize, usize)> {
        let unknown = || Error::UnknownLabel(label.to_label_string());
        let index = self.index_position(&label.index).ok_or_else(unknown)?;
        let cell = self.indices[index]
            .layer
            .cell_of(&(label.bishape.clone(), label.shape.clone()))
            .ok_or_else(unknown)?;
        Ok((index, cell))
    }

    pub fn label_of(&self, key: &CellKey) -> CellLabel {
        let data = &self.indices[key.index];
        let (b, s) = data.layer.cells()[key.layer_cell].label.clone();
        CellLabel {
            index: data.index,
            bishape: b,
            shape: s,
        }
    }

    /// Every cellular basis key, grouped by index then layer cell.
    pub fn keys(&self) -> Vec<CellKey> {
        let mut out = Vec::new();
        for (i, d) in self.indices.iter().enumerate() {
            for (c, cell) in d.layer.cells().iter().enumerate() {
                let n = cell.tableaux.len();
                for a in 0..d.halves.len() {
                    for s in 0..n {
                        for b in 0..d.halves.len() {
                            for t in 0..n {
                                out.push(CellKey {
                                    index: i,
                                    layer_cell: c,
                                    left: (a, s),
                                    right: (b, t),
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// One JSON line per cellular basis element.
    pub fn dump_cellular_basis(&self) -> Vec<serde_json::Value> {
        self.keys()
            .iter()
            .map(|key| {
                let data = &self.indices[key.index];
                let cell = &data.layer.cells()[key.layer_cell];
                let side = |(h, t): (usize, usize)| {
                    let (bt, st) = &cell.tableaux[t];
                    serde_json::json!({
                        "half": data.halves[h].to_json(),
                        "bitableau": bt.to_json(),
                        "tableau": st.to_json(),
                    })
                };
                serde_json::json!({
                    "label": self.label_of(key).to_label_string(),
                    "left": side(key.left),
                    "right": side(key.right),
                    "element": self.basis_element(key).to_json(),
                })
            })
            .collect()
    }

    /// `C^b_{A,B} = sum_g b_g C^g_{A,B}`.
    pub fn layer_element(
        &self,
        index: usize,
        top: usize,
        bottom: usize,
        b: &GroupAlgebraElement<LayerElement>,
    ) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.algebra, self.k);
        for (g, c) in b.terms() {
            let d = self.diagram(index, top, bottom, g);
            let term = AlgebraElement::term(self.algebra, d, Poly::constant(c.clone()))
                .expect("basis diagram");
            out = out.add(&term).expect("same algebra");
        }
        out
    }

    /// The cellular basis element `C'[(A, s), (B, t)] = C^{m_{s,t}}_{A,B}`.
    pub fn basis_element(&self, key: &CellKey) -> AlgebraElement {
        let layer = &self.indices[key.index].layer;
        let m = layer.element(key.layer_cell, key.left.1, key.right.1);
        self.layer_element(key.index, key.left.0, key.right.0, m)
    }

    /// Splits an element into its `(index, A, B)` blocks with polynomial
    /// layer coefficients.
    pub fn blocks_of(
        &self,
        a: &AlgebraElement,
    ) -> Result<BTreeMap<(usize, usize, usize), LayerPoly>> {
        let mut out: BTreeMap<(usize, usize, usize), LayerPoly> = BTreeMap::new();
        for (d, c) in a.terms() {
            let loc = self.locate(d)?;
            add_into(
                out.entry((loc.index, loc.top, loc.bottom)).or_default(),
                loc.group,
                c.clone(),
            );
        }
        Ok(out)
    }

    /// Coordinates in the cellular basis.
    pub fn cellular_coords(&self, a: &AlgebraElement) -> Result<BTreeMap<CellKey, Poly>> {
        let mut out = BTreeMap::new();
        for ((index, top, bottom), coeffs) in self.blocks_of(a)? {
            let layer = &self.indices[index].layer;
            let max_deg = coeffs.values().filter_map(Poly::degree).max().unwrap_or(0);
            for deg in 0..=max_deg {
                let mut slice = GroupAlgebraElement::zero();
                for (g, c) in &coeffs {
                    slice.add_term(g.clone(), c.coeff(deg));
                }
                if slice.is_zero() {
                    continue;
                }
                let coords = layer.coords(&slice)?;
                for (e, v) in layer.entries().iter().zip(coords) {
                    if v.is_zero() {
                        continue;
                    }
                    let key = CellKey {
                        index,
                        layer_cell: e.cell,
                        left: (top, e.s),
                        right: (bottom, e.t),
                    };
                    let term = Poly::monomial(v, deg);
                    let sum = match out.remove(&key) {
                        Some(old) => &old + &term,
                        None => term,
                    };
                    if !sum.is_zero() {
                        out.insert(key, sum);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Left coefficients `r_a[(A', s'), (A, s)]` of `a C'[(A, s), (B, t)]`
    /// modulo lower cells. Fails with a witness when a surviving component
    /// has another right part.
    pub fn left_action(
        &self,
        a: &AlgebraElement,
        key: &CellKey,
    ) -> std::result::Result<BTreeMap<(usize, usize), Poly>, String> {
        let prod = a
            .multiply(&self.basis_element(key))
            .map_err(|e| e.to_string())?;
        let coords = self.cellular_coords(&prod).map_err(|e| e.to_string())?;
        let label = self.label_of(key);
        let mut out = BTreeMap::new();
        for (k2, v) in coords {
            if self.label_of(&k2).below(&label) {
                continue;
            }
            if k2.index != key.index || k2.layer_cell != key.layer_cell || k2.right != key.right {
                return Err(format!(
                    "component {} (left {:?}, right {:?}) survives in a C'{:?}",
                    self.label_of(&k2),
                    k2.left,
                    k2.right,
                    key
                ));
            }
            out.insert(k2.left, v);
        }
        Ok(out)
    }

    /// Residue of `a C^g_{A,B}` modulo lower indices, as left coefficients
    /// `r[A']` in the layer group algebra with `g` stripped on the right.
    pub fn tabular_action(
        &self,
        a: &AlgebraElement,
        index: usize,
        top: usize,
        bottom: usize,
        g: &LayerElement,
    ) -> std::result::Result<BTreeMap<usize, LayerPoly>, String> {
        let d = self.diagram(index, top, bottom, g);
        let c = AlgebraElement::from_diagram(self.algebra, d).map_err(|e| e.to_string())?;
        let prod = a.multiply(&c).map_err(|e| e.to_string())?;
        let here = self.indices[index].index;
        let ginv = g.inverse();
        let mut out: BTreeMap<usize, LayerPoly> = BTreeMap::new();
        for ((i2, t2, b2), coeffs) in self.blocks_of(&prod).map_err(|e| e.to_string())? {
            let idx2 = self.indices[i2].index;
            if idx2.below(&here) {
                continue;
            }
            if i2 != index || b2 != bottom {
                return Err(format!(
                    "product leaves a term at index {idx2} with right half {b2} (expected {here}, {bottom})"
                ));
            }
            let entry = out.entry(t2).or_default();
            for (h, c) in coeffs {
                add_into(entry, h.mul(&ginv), c);
            }
        }
        Ok(out)
    }
}

/// Outcome of a verification sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct Report {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    fn record(&mut self, r: std::result::Result<(), String>) {
        self.checked += 1;
        if let Err(e) = r {
            self.failures.push(e);
        }
    }
}

/// How many pairs a sweep visits.
pub enum Coverage<'a, R: Rng> {
    Exhaustive,
    Sampled { rng: &'a mut R, samples: usize },
}

impl TableDatum {
    fn basis_elements(&self) -> Result<Vec<AlgebraElement>> {
        crate::dalg::basis(self.algebra, self.k)?
            .into_iter()
            .map(|d| AlgebraElement::from_diagram(self.algebra, d))
            .collect()
    }

    fn all_cells(&self) -> Vec<(usize, usize, usize, LayerElement)> {
        let mut out = Vec::new();
        for (i, data) in self.indices.iter().enumerate() {
            for a in 0..data.halves.len() {
                for b in 0..data.halves.len() {
                    for g in data.layer.group() {
                        out.push((i, a, b, g.clone()));
                    }
                }
            }
        }
        out
    }

    /// Checks the triangular left action of the table datum: the residue of
    /// `a C^g_{A,B}` modulo lower indices keeps `B`, and its left
    /// coefficients do not depend on `B` or `g`.
    pub fn verify_table_datum<R: Rng>(&self, coverage: Coverage<'_, R>) -> Result<Report> {
        let basis = self.basis_elements()?;
        let cells = self.all_cells();
        let mut report = Report::default();
        let compare = |a: &AlgebraElement,
                       (i, top, b1, g1): &(usize, usize, usize, LayerElement),
                       b2: usize,
                       g2: &LayerElement| {
            let r1 = self.tabular_action(a, *i, *top, *b1, g1)?;
            let r2 = self.tabular_action(a, *i, *top, b2, g2)?;
            if r1 != r2 {
                return Err(format!(
                    "left coefficients of a C_(A={top}) depend on the right half: ({b1}, {g1}) vs ({b2}, {g2})"
                ));
            }
            Ok(())
        };
        match coverage {
            Coverage::Exhaustive => {
                for a in &basis {
                    for c in &cells {
                        let data = &self.indices[c.0];
                        let reference = (0, data.layer.group()[0].clone());
                        report.record(compare(a, c, reference.0, &reference.1));
                    }
                }
            }
            Coverage::Sampled { rng, samples } => {
                for _ in 0..samples {
                    let a = &basis[rng.gen_range(0..basis.len())];
                    let c = &cells[rng.gen_range(0..cells.len())];
                    let data = &self.indices[c.0];
                    let b2 = rng.gen_range(0..data.halves.len());
                    let g2 = data.layer.group()[rng.gen_range(0..data.layer.group().len())].clone();
                    report.record(compare(a, c, b2, &g2));
                }
            }
        }
        Ok(report)
    }

    /// Checks that the cellular basis is a basis and that the left action
    /// on it is triangular with coefficients independent of the right part.
    pub fn verify_cellular<R: Rng>(&self, coverage: Coverage<'_, R>) -> Result<Report> {
        let mut report = Report::default();
        let keys = self.keys();
        report.record(if keys.len() == self.census() {
            Ok(())
        } else {
            Err(format!(
                "{} cellular elements for a census of {}",
                keys.len(),
                self.census()
            ))
        });
        let basis = self.basis_elements()?;
        report.record(if keys.len() == basis.len() {
            Ok(())
        } else {
            Err(format!(
                "{} cellular elements for dimension {}",
                keys.len(),
                basis.len()
            ))
        });
        let check = |a: &AlgebraElement, key: &CellKey, other_right: (usize, usize)| {
            let r1 = self.left_action(a, key)?;
            let key2 = CellKey {
                right: other_right,
                ..*key
            };
            let r2 = self.left_action(a, &key2)?;
            if r1 != r2 {
                return Err(format!(
                    "left coefficients on C'{key:?} depend on the right part"
                ));
            }
            Ok(())
        };
        let rights = |key: &CellKey| {
            let data = &self.indices[key.index];
            let n = data.layer.cells()[key.layer_cell].tableaux.len();
            (data.halves.len(), n)
        };
        match coverage {
            Coverage::Exhaustive => {
                // the basis property: every diagram has coordinates that rebuild it
                for d in &basis {
                    let coords = self.cellular_coords(d)?;
                    let mut rebuilt = AlgebraElement::zero(self.algebra, self.k);
                    for (key, c) in &coords {
                        rebuilt = rebuilt.add(&self.basis_element(key).scale(c))?;
                    }
                    report.record(if &rebuilt == d {
                        Ok(())
                    } else {
                        Err("cellular coordinates do not rebuild a diagram".into())
                    });
                }
                for a in &basis {
                    for key in &keys {
                        let (nb, nt) = rights(key);
                        for b in 0..nb {
                            for t in 0..nt {
                                if (b, t) != key.right {
                                    report.record(check(a, key, (b, t)));
                                }
                            }
                        }
                        if nb * nt == 1 {
                            report.record(self.left_action(a, key).map(|_| ()));
                        }
                    }
                }
            }
            Coverage::Sampled { rng, samples } => {
                for _ in 0..samples {
                    let a = &basis[rng.gen_range(0..basis.len())];
                    let key = &keys[rng.gen_range(0..keys.len())];
                    let (nb, nt) = rights(key);
                    let other = (rng.gen_range(0..nb), rng.gen_range(0..nt));
                    report.record(check(a, key, other));
                    let d = &basis[rng.gen_range(0..basis.len())];
                    let coords = self.cellular_coords(d)?;
                    let mut rebuilt = AlgebraElement::zero(self.algebra, self.k);
                    for (key, c) in &coords {
                        rebuilt = rebuilt.add(&self.basis_element(key).scale(c))?;
                    }
                    report.record(if &rebuilt == d {
                        Ok(())
                    } else {
                        Err("cellular coordinates do not rebuild a diagram".into())
                    });
                }
            }
        }
        Ok(report)
    }

    /// `decompose` followed by `reconstruct` is the identity on the basis,
    /// and every diagram lands in the datum.
    pub fn verify_roundtrip(&self) -> Result<Report> {
        let mut report = Report::default();
        for d in crate::dalg::basis(self.algebra, self.k)? {
            let r = match self.locate(&d) {
                Ok(loc) => {
                    let back = self.diagram(loc.index, loc.top, loc.bottom, &loc.group);
                    if back == d {
                        Ok(())
                    } else {
                        Err(format!("{d} rebuilt as {back}"))
                    }
                }
                Err(e) => Err(e.to_string()),
            };
            report.record(r);
        }
        Ok(report)
    }
}
