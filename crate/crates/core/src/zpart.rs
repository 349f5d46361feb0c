//! Z2-stable set partitions of signed vertices.
//!
//! A one-row partition lives on `[k] x Z2`, a two-row diagram on
//! `([k] u [k']) x Z2`. Vertices are numbered so that the numeric order is
//! the total order `(row, index, sign)` with top before bottom and `e`
//! before `g`:
//!
//! ```text
//! id = row * 2k + 2 * (index - 1) + sign
//! ```
//!
//! The sign flip is therefore `id ^ 1`. Blocks are stored sorted, and the
//! block list is sorted by minimal vertex, so two partitions are equal iff
//! their representations are equal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::uf::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    E,
    G,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::E => Sign::G,
            Sign::G => Sign::E,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Row {
    Top,
    Bottom,
}

/// A signed vertex `(i, s)` or `(i', s)`; `index` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub row: Row,
    pub index: usize,
    pub sign: Sign,
}

impl Vertex {
    pub fn new(row: Row, index: usize, sign: Sign) -> Self {
        Self { row, index, sign }
    }

    pub fn top(index: usize, sign: Sign) -> Self {
        Self::new(Row::Top, index, sign)
    }

    pub fn bottom(index: usize, sign: Sign) -> Self {
        Self::new(Row::Bottom, index, sign)
    }

    pub fn id(self, k: usize) -> usize {
        let row = match self.row {
            Row::Top => 0,
            Row::Bottom => 1,
        };
        let sign = match self.sign {
            Sign::E => 0,
            Sign::G => 1,
        };
        row * 2 * k + 2 * (self.index - 1) + sign
    }

    pub fn from_id(id: usize, k: usize) -> Self {
        let row = if id >= 2 * k { Row::Bottom } else { Row::Top };
        let local = id % (2 * k);
        let sign = if local.is_multiple_of(2) {
            Sign::E
        } else {
            Sign::G
        };
        Self::new(row, local / 2 + 1, sign)
    }

    pub fn flip(self) -> Self {
        Self {
            sign: self.sign.flip(),
            ..self
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prime = if self.row == Row::Bottom { "'" } else { "" };
        let sign = if self.sign == Sign::E { 'e' } else { 'g' };
        write!(f, "({}{},{})", self.index, prime, sign)
    }
}

/// Whether a block is mapped to a different block (`EPair`) or to itself
/// (`Z2Class`) by the sign flip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ComponentKind {
    EPair,
    Z2Class,
}

/// Through-class counts of a two-row diagram: `s1` flip-paired couples of
/// `{e}`-classes, `s2` flip-fixed classes, `r = 2 s1 + s2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PropagatingData {
    pub s1: usize,
    pub s2: usize,
    pub r: usize,
}

/// Horizontal-edge counts of a diagram, per row.
///
/// `{e}`-type components count once per flip-paired couple and only when
/// their image in the unsigned quotient has at least two points; `Z2`-type
/// components count at any size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HorizontalCounts {
    pub e_top: usize,
    pub z2_top: usize,
    pub e_bottom: usize,
    pub z2_bottom: usize,
}

/// A Z2-stable set partition in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZStablePartition {
    k: usize,
    rows: usize,
    blocks: Vec<Vec<u8>>,
}

/// True iff the sign flip permutes the blocks of `blocks`.
pub fn is_z2_stable(blocks: &[Vec<Vertex>]) -> bool {
    let normalize = |b: &[Vertex]| {
        let mut b = b.to_vec();
        b.sort();
        b
    };
    let all: Vec<Vec<Vertex>> = blocks.iter().map(|b| normalize(b)).collect();
    all.iter().all(|b| {
        let image = normalize(&b.iter().map(|v| v.flip()).collect::<Vec<_>>());
        all.contains(&image)
    })
}

impl ZStablePartition {
    /// Builds the canonical form of a raw block list.
    pub fn canonicalize(blocks: Vec<Vec<Vertex>>, k: usize, rows: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidSize("k must be positive".into()));
        }
        if rows != 1 && rows != 2 {
            return Err(Error::InvalidSize(format!(
                "rows must be 1 or 2, got {rows}"
            )));
        }
        let n = 2 * k * rows;
        let mut seen = vec![false; n];
        let mut raw = Vec::with_capacity(blocks.len());
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::MalformedPartition("empty block".into()));
            }
            let mut ids = Vec::with_capacity(block.len());
            for v in block {
                if v.index == 0 || v.index > k || (rows == 1 && v.row == Row::Bottom) {
                    return Err(Error::MalformedPartition(format!(
                        "vertex {v} out of range"
                    )));
                }
                let id = v.id(k);
                if seen[id] {
                    return Err(Error::MalformedPartition(format!(
                        "vertex {v} appears twice"
                    )));
                }
                seen[id] = true;
                ids.push(id as u8);
            }
            raw.push(ids);
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::MalformedPartition(format!(
                "vertex {} is not covered",
                Vertex::from_id(missing, k)
            )));
        }
        let d = Self::from_raw(k, rows, raw);
        if !d.check_stable() {
            return Err(Error::NotZ2Stable);
        }
        Ok(d)
    }

    /// Canonical form from vertex-id blocks that are already known to form a
    /// Z2-stable partition.
    pub(crate) fn from_raw(k: usize, rows: usize, mut blocks: Vec<Vec<u8>>) -> Self {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Self { k, rows, blocks }
    }

    /// Canonical form from a per-vertex class label.
    pub(crate) fn from_labels(k: usize, rows: usize, labels: &[usize]) -> Self {
        let mut slot = vec![usize::MAX; labels.iter().max().map_or(0, |m| m + 1)];
        let mut blocks: Vec<Vec<u8>> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            if slot[l] == usize::MAX {
                slot[l] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[slot[l]].push(v as u8);
        }
        Self { k, rows, blocks }
    }

    fn check_stable(&self) -> bool {
        let label = self.labels();
        self.blocks.iter().all(|b| {
            let image = label[(b[0] ^ 1) as usize];
            b.iter().all(|&v| label[(v ^ 1) as usize] == image)
                && self.blocks[image].len() == b.len()
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn num_vertices(&self) -> usize {
        2 * self.k * self.rows
    }

    /// Blocks as sorted vertex ids, in canonical order.
    pub fn raw_blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    pub fn blocks(&self) -> Vec<Vec<Vertex>> {
        self.blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&v| Vertex::from_id(v as usize, self.k))
                    .collect()
            })
            .collect()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.num_vertices()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v as usize] = i;
            }
        }
        out
    }

    /// Index of the block that is the flip of block `i`.
    pub(crate) fn partner(&self, i: usize) -> usize {
        let first = self.blocks[i][0] ^ 1;
        self.blocks
            .iter()
            .position(|b| b.binary_search(&first).is_ok())
            .expect("partition is flip-stable")
    }

    pub(crate) fn raw_kind(block: &[u8]) -> ComponentKind {
        // a block is flip-fixed iff it holds both signs of one vertex
        let first = block[0] ^ 1;
        if block.binary_search(&first).is_ok() {
            ComponentKind::Z2Class
        } else {
            ComponentKind::EPair
        }
    }

    fn row_of(&self, id: u8) -> Row {
        if (id as usize) < 2 * self.k {
            Row::Top
        } else {
            Row::Bottom
        }
    }

    pub(crate) fn is_through(&self, block: &[u8]) -> bool {
        self.rows == 2
            && self.row_of(block[0]) == Row::Top
            && self.row_of(*block.last().unwrap()) == Row::Bottom
    }

    /// All-singletons partition.
    pub fn singletons(k: usize, rows: usize) -> Self {
        Self {
            k,
            rows,
            blocks: (0..2 * k * rows).map(|v| vec![v as u8]).collect(),
        }
    }

    /// Identity diagram: `(i, s) ~ (i', s)`.
    pub fn identity(k: usize) -> Self {
        let blocks = (0..2 * k)
            .map(|v| vec![v as u8, (v + 2 * k) as u8])
            .collect();
        Self { k, rows: 2, blocks }
    }

    pub fn kind_of(&self, block: &[Vertex]) -> Result<ComponentKind> {
        component_kind(self, block)
    }

    /// Unsigned quotient `R^d` as blocks of unsigned positions; top position
    /// `i` is `i - 1`, bottom position `i'` is `k + i - 1`.
    pub fn quotient(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for b in &self.blocks {
            let mut q: Vec<usize> = b.iter().map(|&v| (v / 2) as usize).collect();
            q.dedup();
            if !out.contains(&q) {
                out.push(q);
            }
        }
        out.sort();
        out
    }

    /// Through-class counts. Fails on one-row partitions.
    pub fn propagating_data(&self) -> Result<PropagatingData> {
        if self.rows != 2 {
            return Err(Error::NotADiagram);
        }
        let (mut e, mut z) = (0, 0);
        for b in self.blocks.iter().filter(|b| self.is_through(b)) {
            match Self::raw_kind(b) {
                ComponentKind::EPair => e += 1,
                ComponentKind::Z2Class => z += 1,
            }
        }
        debug_assert!(e % 2 == 0);
        Ok(PropagatingData {
            s1: e / 2,
            s2: z,
            r: e + z,
        })
    }

    /// Number of through classes.
    pub fn propagating_number(&self) -> usize {
        self.blocks.iter().filter(|b| self.is_through(b)).count()
    }

    /// Restriction `d+` (top) or `d-` (bottom, primes erased).
    pub fn restrict(&self, which: Row) -> Result<Self> {
        if self.rows != 2 {
            return Err(Error::NotADiagram);
        }
        let two_k = (2 * self.k) as u8;
        let blocks = self
            .blocks
            .iter()
            .filter_map(|b| {
                let part: Vec<u8> = match which {
                    Row::Top => b.iter().copied().filter(|&v| v < two_k).collect(),
                    Row::Bottom => b
                        .iter()
                        .filter(|&&v| v >= two_k)
                        .map(|&v| v - two_k)
                        .collect(),
                };
                (!part.is_empty()).then_some(part)
            })
            .collect();
        Ok(Self::from_raw(self.k, 1, blocks))
    }

    /// Horizontal counts `(H_e(d+), H_Z2(d+), H_e(d-), H_Z2(d-))`.
    pub fn horizontal_counts(&self) -> Result<HorizontalCounts> {
        if self.rows != 2 {
            return Err(Error::NotADiagram);
        }
        let mut c = HorizontalCounts {
            e_top: 0,
            z2_top: 0,
            e_bottom: 0,
            z2_bottom: 0,
        };
        for b in self.blocks.iter().filter(|b| !self.is_through(b)) {
            let top = self.row_of(b[0]) == Row::Top;
            match Self::raw_kind(b) {
                ComponentKind::Z2Class => {
                    if top {
                        c.z2_top += 1
                    } else {
                        c.z2_bottom += 1
                    }
                }
                // count each couple once, through the member holding the e-sign of its minimum
                ComponentKind::EPair if b[0] % 2 == 0 && b.len() >= 2 => {
                    if top {
                        c.e_top += 1
                    } else {
                        c.e_bottom += 1
                    }
                }
                ComponentKind::EPair => {}
            }
        }
        Ok(c)
    }

    /// Top and bottom rows exchanged.
    pub fn flip_rows(&self) -> Self {
        assert_eq!(self.rows, 2);
        let n = 4 * self.k;
        let h = 2 * self.k;
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&v| ((v as usize + h) % n) as u8).collect())
            .collect();
        Self::from_raw(self.k, 2, blocks)
    }

    /// Number of components (blocks).
    pub fn num_components(&self) -> usize {
        self.blocks.len()
    }

    /// True iff every block carries a single sign, i.e. `d` is the untwisted
    /// lift of a set partition of `[2k]`.
    pub fn is_sign_homogeneous(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&v| v % 2 == b[0] % 2))
    }
}

impl fmt::Display for ZStablePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (j, v) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// Kind of `block`, which must be a block of `d`.
pub fn component_kind(d: &ZStablePartition, block: &[Vertex]) -> Result<ComponentKind> {
    let mut ids: Vec<u8> = block.iter().map(|v| v.id(d.k) as u8).collect();
    ids.sort_unstable();
    if !d.blocks.contains(&ids) {
        return Err(Error::UnknownBlock);
    }
    Ok(ZStablePartition::raw_kind(&ids))
}

/// All Z2-stable partitions on `rows` rows of `k` signed points, sorted.
///
/// Blocks are grown one flip-orbit `{(v,e), (v,g)}` at a time: the
/// e-vertex joins an existing block or opens a new one, and the g-vertex is
/// forced by stability (same block if flip-fixed, partner block otherwise),
/// except that a new block may be opened either as a fixed class or as a
/// couple.
pub fn enumerate(k: usize, rows: usize) -> Result<Vec<ZStablePartition>> {
    if k == 0 {
        return Err(Error::InvalidSize("k must be positive".into()));
    }
    if rows != 1 && rows != 2 {
        return Err(Error::InvalidSize(format!(
            "rows must be 1 or 2, got {rows}"
        )));
    }
    struct State {
        blocks: Vec<Vec<u8>>,
        partner: Vec<Option<usize>>,
    }
    fn rec(
        m: usize,
        orbits: usize,
        k: usize,
        rows: usize,
        st: &mut State,
        out: &mut Vec<ZStablePartition>,
    ) {
        if m == orbits {
            out.push(ZStablePartition {
                k,
                rows,
                blocks: st.blocks.clone(),
            });
            return;
        }
        let (e, g) = ((2 * m) as u8, (2 * m + 1) as u8);
        for b in 0..st.blocks.len() {
            st.blocks[b].push(e);
            let gb = st.partner[b].unwrap_or(b);
            st.blocks[gb].push(g);
            rec(m + 1, orbits, k, rows, st, out);
            st.blocks[gb].pop();
            st.blocks[b].pop();
        }
        let n = st.blocks.len();
        st.blocks.push(vec![e, g]);
        st.partner.push(None);
        rec(m + 1, orbits, k, rows, st, out);
        st.blocks.pop();
        st.partner.pop();

        st.blocks.push(vec![e]);
        st.blocks.push(vec![g]);
        st.partner.push(Some(n + 1));
        st.partner.push(Some(n));
        rec(m + 1, orbits, k, rows, st, out);
        st.blocks.truncate(n);
        st.partner.truncate(n);
    }
    let mut out = Vec::new();
    let mut st = State {
        blocks: Vec::new(),
        partner: Vec::new(),
    };
    rec(0, k * rows, k, rows, &mut st, &mut out);
    out.sort();
    Ok(out)
}

/// Stacks `d1` above `d2` and glues the bottom row of `d1` to the top row of
/// `d2`. Returns the outer diagram and the number of components that lie
/// entirely in the glued middle row.
pub fn compose(d1: &ZStablePartition, d2: &ZStablePartition) -> Result<(ZStablePartition, u32)> {
    if d1.rows != 2 || d2.rows != 2 {
        return Err(Error::NotADiagram);
    }
    if d1.k != d2.k {
        return Err(Error::SizeMismatch(d1.k, d2.k));
    }
    let h = 2 * d1.k;
    // 0..h top of d1, h..2h middle, 2h..3h bottom of d2
    let mut uf = UnionFind::new(3 * h);
    let mut buf = Vec::new();
    for b in &d1.blocks {
        buf.clear();
        buf.extend(b.iter().map(|&v| v as usize));
        uf.union_all(&buf);
    }
    for b in &d2.blocks {
        buf.clear();
        buf.extend(b.iter().map(|&v| v as usize + h));
        uf.union_all(&buf);
    }
    let mut outer_root = vec![false; 3 * h];
    let mut labels = Vec::with_capacity(2 * h);
    for v in (0..h).chain(2 * h..3 * h) {
        let r = uf.find(v);
        outer_root[r] = true;
        labels.push(r);
    }
    let mut middle_roots: Vec<usize> = (h..2 * h)
        .map(|v| uf.find(v))
        .filter(|&r| !outer_root[r])
        .collect();
    middle_roots.sort_unstable();
    middle_roots.dedup();
    Ok((
        ZStablePartition::from_labels(d1.k, 2, &labels),
        middle_roots.len() as u32,
    ))
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    k: usize,
    rows: usize,
    blocks: Vec<Vec<(String, String)>>,
}

fn parse_vertex(index: &str, sign: &str) -> Result<Vertex> {
    let (row, digits) = match index.strip_suffix('\'') {
        Some(d) => (Row::Bottom, d),
        None => (Row::Top, index),
    };
    let index: usize = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex index {index:?}")))?;
    let sign = match sign {
        "e" => Sign::E,
        "g" => Sign::G,
        other => return Err(Error::Parse(format!("bad sign {other:?}"))),
    };
    Ok(Vertex::new(row, index, sign))
}

impl ZStablePartition {
    pub fn to_json(&self) -> serde_json::Value {
        let blocks = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|v| {
                        let prime = if v.row == Row::Bottom { "'" } else { "" };
                        let sign = if v.sign == Sign::E { "e" } else { "g" };
                        (format!("{}{}", v.index, prime), sign.to_string())
                    })
                    .collect()
            })
            .collect();
        serde_json::to_value(DiagramJson {
            k: self.k,
            rows: self.rows,
            blocks,
        })
        .expect("diagram serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: DiagramJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let blocks = raw
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|(i, s)| parse_vertex(i, s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::canonicalize(blocks, raw.k, raw.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{E, G};

    fn t(i: usize, s: Sign) -> Vertex {
        Vertex::top(i, s)
    }
    fn b(i: usize, s: Sign) -> Vertex {
        Vertex::bottom(i, s)
    }

    fn full_block() -> ZStablePartition {
        ZStablePartition::canonicalize(vec![vec![t(1, E), t(1, G), b(1, E), b(1, G)]], 1, 2)
            .unwrap()
    }

    fn e_diagram() -> ZStablePartition {
        ZStablePartition::canonicalize(vec![vec![t(1, E), t(1, G)], vec![b(1, E), b(1, G)]], 1, 2)
            .unwrap()
    }

    #[test]
    fn canonicalize_sorts() {
        let d = ZStablePartition::canonicalize(vec![vec![t(1, G), t(1, E)]], 1, 1).unwrap();
        assert_eq!(d.blocks(), vec![vec![t(1, E), t(1, G)]]);
        let d = ZStablePartition::canonicalize(vec![vec![t(1, G)], vec![t(1, E)]], 1, 1).unwrap();
        assert_eq!(d.blocks(), vec![vec![t(1, E)], vec![t(1, G)]]);
    }

    #[test]
    fn canonicalize_rejects_bad_input() {
        let err = ZStablePartition::canonicalize(vec![vec![t(1, E), b(1, E)], vec![t(1, G)]], 1, 2);
        assert!(matches!(err, Err(Error::MalformedPartition(_))));
        let err = ZStablePartition::canonicalize(vec![vec![t(1, E), t(1, E)], vec![t(1, G)]], 1, 1);
        assert!(matches!(err, Err(Error::MalformedPartition(_))));
        let err = ZStablePartition::canonicalize(
            vec![vec![t(1, E), t(2, E)], vec![t(1, G)], vec![t(2, G)]],
            2,
            1,
        );
        assert_eq!(err, Err(Error::NotZ2Stable));
    }

    #[test]
    fn stability_predicate() {
        assert!(is_z2_stable(&[vec![t(1, E), t(1, G)]]));
        assert!(is_z2_stable(&[
            vec![t(1, E), t(2, E)],
            vec![t(1, G), t(2, G)]
        ]));
        assert!(!is_z2_stable(&[
            vec![t(1, E), t(2, E)],
            vec![t(1, G)],
            vec![t(2, G)]
        ]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(1, 1).unwrap().len(), 2);
        assert_eq!(enumerate(1, 2).unwrap().len(), 7);
        assert_eq!(enumerate(2, 2).unwrap().len(), 164);
        assert_eq!(
            enumerate(0, 2),
            Err(Error::InvalidSize("k must be positive".into()))
        );
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(ZStablePartition::identity(1).quotient(), vec![vec![0, 1]]);
        assert_eq!(
            ZStablePartition::singletons(1, 2).quotient(),
            vec![vec![0], vec![1]]
        );
        let d = ZStablePartition::canonicalize(
            vec![vec![t(1, E), t(2, G)], vec![t(1, G), t(2, E)]],
            2,
            1,
        )
        .unwrap();
        assert_eq!(d.quotient(), vec![vec![0, 1]]);
    }

    #[test]
    fn kinds() {
        let d = ZStablePartition::canonicalize(vec![vec![t(1, E), t(1, G)]], 1, 1).unwrap();
        assert_eq!(
            component_kind(&d, &[t(1, E), t(1, G)]),
            Ok(ComponentKind::Z2Class)
        );
        let id = ZStablePartition::identity(1);
        assert_eq!(
            component_kind(&id, &[t(1, E), b(1, E)]),
            Ok(ComponentKind::EPair)
        );
        assert_eq!(component_kind(&id, &[t(1, E)]), Err(Error::UnknownBlock));
        let d =
            ZStablePartition::canonicalize(vec![vec![t(1, E), t(2, E), t(1, G), t(2, G)]], 2, 1)
                .unwrap();
        assert_eq!(
            component_kind(&d, &[t(2, G), t(1, E), t(2, E), t(1, G)]),
            Ok(ComponentKind::Z2Class)
        );
    }

    #[test]
    fn propagating_examples() {
        let p = |d: &ZStablePartition| {
            let p = d.propagating_data().unwrap();
            (p.s1, p.s2, p.r)
        };
        assert_eq!(p(&ZStablePartition::identity(1)), (1, 0, 2));
        assert_eq!(p(&full_block()), (0, 1, 1));
        assert_eq!(p(&ZStablePartition::singletons(1, 2)), (0, 0, 0));
        assert_eq!(
            ZStablePartition::singletons(1, 1).propagating_data(),
            Err(Error::NotADiagram)
        );
    }

    #[test]
    fn restriction_examples() {
        let top = ZStablePartition::identity(1).restrict(Row::Top).unwrap();
        assert_eq!(top, ZStablePartition::singletons(1, 1));
        let bottom = full_block().restrict(Row::Bottom).unwrap();
        assert_eq!(bottom.blocks(), vec![vec![t(1, E), t(1, G)]]);
        let d = ZStablePartition::canonicalize(
            vec![
                vec![t(1, E), t(2, E), b(1, E)],
                vec![t(1, G), t(2, G), b(1, G)],
                vec![b(2, E)],
                vec![b(2, G)],
            ],
            2,
            2,
        )
        .unwrap();
        let top = d.restrict(Row::Top).unwrap();
        assert_eq!(
            top.blocks(),
            vec![vec![t(1, E), t(2, E)], vec![t(1, G), t(2, G)]]
        );
        assert_eq!(top.restrict(Row::Top), Err(Error::NotADiagram));
    }

    #[test]
    fn compose_examples() {
        for d in enumerate(1, 2).unwrap() {
            assert_eq!(
                compose(&ZStablePartition::identity(1), &d).unwrap(),
                (d.clone(), 0)
            );
        }
        let e = e_diagram();
        assert_eq!(compose(&e, &e).unwrap(), (e.clone(), 1));
        let s = ZStablePartition::singletons(1, 2);
        assert_eq!(compose(&s, &s).unwrap(), (s.clone(), 2));
        assert_eq!(
            compose(&s, &ZStablePartition::identity(2)),
            Err(Error::SizeMismatch(1, 2))
        );
    }

    #[test]
    fn horizontal_examples() {
        let h = |d: &ZStablePartition| {
            let c = d.horizontal_counts().unwrap();
            (c.e_top, c.z2_top, c.e_bottom, c.z2_bottom)
        };
        assert_eq!(h(&ZStablePartition::singletons(1, 2)), (0, 0, 0, 0));
        assert_eq!(h(&e_diagram()), (0, 1, 0, 1));
        let d = ZStablePartition::canonicalize(
            vec![
                vec![t(1, E), t(2, E)],
                vec![t(1, G), t(2, G)],
                vec![b(1, E)],
                vec![b(1, G)],
                vec![b(2, E)],
                vec![b(2, G)],
            ],
            2,
            2,
        )
        .unwrap();
        assert_eq!(h(&d), (1, 0, 0, 0));
    }

    #[test]
    fn json_roundtrip() {
        for d in enumerate(1, 2).unwrap() {
            assert_eq!(ZStablePartition::from_json(&d.to_json()).unwrap(), d);
        }
        let v: serde_json::Value = serde_json::from_str(
            r#"{"k":1,"rows":2,"blocks":[[["1","e"],["1'","g"]],[["1","g"],["1'","e"]]]}"#,
        )
        .unwrap();
        let d = ZStablePartition::from_json(&v).unwrap();
        assert_eq!(d.propagating_data().unwrap().s1, 1);
    }
}
