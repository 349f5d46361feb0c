use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gcell::{LayerElement, Perm, WreathElement};
use crate::uf::UnionFind;
use crate::zpart::{self, ComponentKind, ZStablePartition};

/// Tabular index `(r, (s1, s2))`, `r = 2 s1 + s2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TabularIndex {
    pub r: usize,
    pub s1: usize,
    pub s2: usize,
}

impl TabularIndex {
    pub fn new(s1: usize, s2: usize) -> Self {
        Self {
            r: 2 * s1 + s2,
            s1,
            s2,
        }
    }

    /// All indices whose through classes fit on `k` points.
    pub fn all(k: usize) -> Vec<TabularIndex> {
        let mut out: Vec<TabularIndex> = (0..=k)
            .flat_map(|s1| (0..=k - s1).map(move |s2| TabularIndex::new(s1, s2)))
            .collect();
        out.sort();
        out
    }

    /// Strict order: smaller `r`, or equal `r` and fewer through classes.
    pub fn below(&self, other: &Self) -> bool {
        self.r < other.r || (self.r == other.r && self.s1 + self.s2 < other.s1 + other.s2)
    }
}

impl Ord for TabularIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.r, self.s1 + self.s2, self.s1).cmp(&(other.r, other.s1 + other.s2, other.s1))
    }
}

impl PartialOrd for TabularIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TabularIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},({},{}))", self.r, self.s1, self.s2)
    }
}

/// Which half diagrams are admitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HalfVariant {
    /// Every marking.
    Plain,
    /// The restricted index set of the signed partition algebra.
    Signed,
    /// Sign-homogeneous bases, `{e}` marks only.
    Untwisted,
}

/// A one-row partition with marked components.
///
/// An `{e}`-couple `{b, σ(b)}` is represented by the block holding the
/// `e`-copy of the smallest point of the couple; marks are block indices
/// into the canonical base, kept sorted, which orders them by smallest
/// point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfDiagram {
    base: ZStablePartition,
    marked_e: Vec<usize>,
    marked_z: Vec<usize>,
}

fn is_e_rep(block: &[u8]) -> bool {
    ZStablePartition::raw_kind(block) == ComponentKind::EPair && block[0].is_multiple_of(2)
}

impl HalfDiagram {
    pub fn new(
        base: ZStablePartition,
        mut marked_e: Vec<usize>,
        mut marked_z: Vec<usize>,
    ) -> Result<Self> {
        if base.rows() != 1 {
            return Err(Error::Incompatible("half diagrams live on one row".into()));
        }
        marked_e.sort_unstable();
        marked_e.dedup();
        marked_z.sort_unstable();
        marked_z.dedup();
        let blocks = base.raw_blocks();
        if marked_e
            .iter()
            .any(|&i| i >= blocks.len() || !is_e_rep(&blocks[i]))
        {
            return Err(Error::Incompatible(
                "an {e}-mark is not a couple representative".into(),
            ));
        }
        if marked_z.iter().any(|&i| {
            i >= blocks.len() || ZStablePartition::raw_kind(&blocks[i]) != ComponentKind::Z2Class
        }) {
            return Err(Error::Incompatible("a Z2-mark is not a fixed class".into()));
        }
        Ok(Self {
            base,
            marked_e,
            marked_z,
        })
    }

    pub fn base(&self) -> &ZStablePartition {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.base.k()
    }

    pub fn s1(&self) -> usize {
        self.marked_e.len()
    }

    pub fn s2(&self) -> usize {
        self.marked_z.len()
    }

    pub fn index(&self) -> TabularIndex {
        TabularIndex::new(self.s1(), self.s2())
    }

    pub fn marked_e(&self) -> &[usize] {
        &self.marked_e
    }

    pub fn marked_z(&self) -> &[usize] {
        &self.marked_z
    }

    /// Block indices of `P_i^e`, `P_i^g`.
    pub fn couple(&self, i: usize) -> (usize, usize) {
        let e = self.marked_e[i];
        (e, self.base.partner(e))
    }

    /// Unmarked `{e}`-couples and unmarked fixed classes.
    pub fn unmarked_counts(&self) -> (usize, usize) {
        let blocks = self.base.raw_blocks();
        let couples = blocks.iter().filter(|b| is_e_rep(b)).count();
        let fixed = blocks
            .iter()
            .filter(|b| ZStablePartition::raw_kind(b) == ComponentKind::Z2Class)
            .count();
        (couples - self.s1(), fixed - self.s2())
    }

    fn admitted(&self, variant: HalfVariant) -> bool {
        let k = self.k();
        match variant {
            HalfVariant::Plain => true,
            HalfVariant::Untwisted => self.base.is_sign_homogeneous() && self.s2() == 0,
            HalfVariant::Signed => {
                let (s1, s2) = (self.s1(), self.s2());
                let (r1, r2) = self.unmarked_counts();
                let t = s1 + s2 + r1 + r2;
                s2 < k && (t < k || (t == k && (s1 == k || r1 != 0)))
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let blocks = self.base.blocks();
        let show = |i: &usize| blocks[*i].iter().map(|v| v.to_string()).collect::<Vec<_>>();
        json!({
            "base": self.base.to_json(),
            "marked_e": self.marked_e.iter().map(show).collect::<Vec<_>>(),
            "marked_z": self.marked_z.iter().map(show).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for HalfDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} e[{}] z[{}]",
            self.base,
            self.marked_e.iter().join(","),
            self.marked_z.iter().join(",")
        )
    }
}

/// The index set `M[(2 s1 + s2, (s1, s2))]` for the given variant.
pub fn enumerate_m(
    k: usize,
    s1: usize,
    s2: usize,
    variant: HalfVariant,
) -> Result<Vec<HalfDiagram>> {
    let mut out = Vec::new();
    for base in zpart::enumerate(k, 1)? {
        if variant == HalfVariant::Untwisted && (!base.is_sign_homogeneous() || s2 > 0) {
            continue;
        }
        let blocks = base.raw_blocks();
        let couples: Vec<usize> = (0..blocks.len())
            .filter(|&i| is_e_rep(&blocks[i]))
            .collect();
        let fixed: Vec<usize> = (0..blocks.len())
            .filter(|&i| ZStablePartition::raw_kind(&blocks[i]) == ComponentKind::Z2Class)
            .collect();
        for me in couples.iter().copied().combinations(s1) {
            for mz in fixed.iter().copied().combinations(s2) {
                let h = HalfDiagram {
                    base: base.clone(),
                    marked_e: me.clone(),
                    marked_z: mz,
                };
                if h.admitted(variant) {
                    out.push(h);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Splits a diagram into its two marked halves and the group element that
/// records how the through classes connect them.
pub fn decompose(d: &ZStablePartition) -> Result<(HalfDiagram, HalfDiagram, LayerElement)> {
    if d.rows() != 2 {
        return Err(Error::NotADiagram);
    }
    let k = d.k();
    let h = (2 * k) as u8;
    let top = d.restrict(crate::zpart::Row::Top)?;
    let bottom = d.restrict(crate::zpart::Row::Bottom)?;
    let top_labels = top.labels();
    let bottom_labels = bottom.labels();
    // (top block, bottom block) of each through class
    let through: Vec<(usize, usize)> = d
        .raw_blocks()
        .iter()
        .filter(|b| d.is_through(b))
        .map(|b| {
            (
                top_labels[b[0] as usize],
                bottom_labels[(b[b.len() - 1] - h) as usize],
            )
        })
        .collect();
    let tb = top.raw_blocks();
    let bb = bottom.raw_blocks();
    let mut marked_e_top = Vec::new();
    let mut marked_z_top = Vec::new();
    let mut marked_e_bottom = Vec::new();
    let mut marked_z_bottom = Vec::new();
    for &(t, b) in &through {
        match ZStablePartition::raw_kind(&tb[t]) {
            ComponentKind::Z2Class => {
                marked_z_top.push(t);
                marked_z_bottom.push(b);
            }
            ComponentKind::EPair => {
                if is_e_rep(&tb[t]) {
                    marked_e_top.push(t);
                }
                if is_e_rep(&bb[b]) {
                    marked_e_bottom.push(b);
                }
            }
        }
    }
    let top_half = HalfDiagram::new(top.clone(), marked_e_top, marked_z_top)?;
    let bottom_half = HalfDiagram::new(bottom.clone(), marked_e_bottom, marked_z_bottom)?;
    let partner_of = |t: usize| {
        through
            .iter()
            .find(|&&(x, _)| x == t)
            .map(|&(_, b)| b)
            .expect("through")
    };
    let s1 = top_half.s1();
    let mut images = vec![0; s1];
    let mut signs = vec![false; s1];
    for i in 0..s1 {
        let b = partner_of(top_half.marked_e[i]);
        for j in 0..s1 {
            let (qe, qg) = bottom_half.couple(j);
            if b == qe || b == qg {
                images[i] = j;
                signs[i] = b == qg;
            }
        }
    }
    let s2 = top_half.s2();
    let mut sym = vec![0; s2];
    for (i, img) in sym.iter_mut().enumerate() {
        let b = partner_of(top_half.marked_z[i]);
        *img = bottom_half
            .marked_z
            .iter()
            .position(|&q| q == b)
            .expect("fixed through class");
    }
    let g = LayerElement::new(
        WreathElement::new(signs, Perm::from_images(images)),
        Perm::from_images(sym),
    );
    Ok((top_half, bottom_half, g))
}

/// Inverse of [`decompose`].
pub fn reconstruct(
    top: &HalfDiagram,
    bottom: &HalfDiagram,
    g: &LayerElement,
) -> Result<ZStablePartition> {
    let k = top.k();
    if bottom.k() != k {
        return Err(Error::SizeMismatch(k, bottom.k()));
    }
    if top.s1() != bottom.s1()
        || top.s2() != bottom.s2()
        || g.wreath.degree() != top.s1()
        || g.sym.degree() != top.s2()
    {
        return Err(Error::Incompatible(
            "halves and group element disagree on (s1, s2)".into(),
        ));
    }
    let h = (2 * k) as u8;
    let tb = top.base.raw_blocks();
    let bb = bottom.base.raw_blocks();
    let mut used_top = vec![false; tb.len()];
    let mut used_bottom = vec![false; bb.len()];
    let mut blocks: Vec<Vec<u8>> = Vec::new();
    let mut join = |t: usize, b: usize, used_top: &mut Vec<bool>, used_bottom: &mut Vec<bool>| {
        used_top[t] = true;
        used_bottom[b] = true;
        let mut block = tb[t].clone();
        block.extend(bb[b].iter().map(|&v| v + h));
        blocks.push(block);
    };
    for i in 0..top.s1() {
        let (pe, pg) = top.couple(i);
        let (qe, qg) = bottom.couple(g.wreath.perm.apply(i));
        let (a, b) = if g.wreath.signs[i] {
            (qg, qe)
        } else {
            (qe, qg)
        };
        join(pe, a, &mut used_top, &mut used_bottom);
        join(pg, b, &mut used_top, &mut used_bottom);
    }
    for i in 0..top.s2() {
        join(
            top.marked_z[i],
            bottom.marked_z[g.sym.apply(i)],
            &mut used_top,
            &mut used_bottom,
        );
    }
    for (i, b) in tb.iter().enumerate() {
        if !used_top[i] {
            blocks.push(b.clone());
        }
    }
    for (i, b) in bb.iter().enumerate() {
        if !used_bottom[i] {
            blocks.push(b.iter().map(|&v| v + h).collect());
        }
    }
    Ok(ZStablePartition::from_raw(k, 2, blocks))
}

/// Glues the bottom half `p` of one diagram to the top half `q` of the
/// next. Returns `(l, group element)` when the marks match up one to one
/// and `None` when the product leaves the index.
pub fn phi(p: &HalfDiagram, q: &HalfDiagram) -> Result<Option<(u32, LayerElement)>> {
    let k = p.k();
    if q.k() != k {
        return Err(Error::SizeMismatch(k, q.k()));
    }
    if p.s1() != q.s1() || p.s2() != q.s2() {
        return Err(Error::Incompatible("halves have different (s1, s2)".into()));
    }
    let n = 2 * k;
    let mut uf = UnionFind::new(n);
    let mut buf = Vec::new();
    for b in p.base.raw_blocks().iter().chain(q.base.raw_blocks()) {
        buf.clear();
        buf.extend(b.iter().map(|&v| v as usize));
        uf.union_all(&buf);
    }
    let root_of = |half: &HalfDiagram, block: usize, uf: &mut UnionFind| {
        uf.find(half.base.raw_blocks()[block][0] as usize)
    };
    // marks per component: P marks and Q marks, tagged (kind, index, is_g)
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        E(usize, bool),
        Z(usize),
    }
    let mut pm: Vec<Vec<Mark>> = vec![Vec::new(); n];
    let mut qm: Vec<Vec<Mark>> = vec![Vec::new(); n];
    for (half, marks) in [(p, &mut pm), (q, &mut qm)] {
        for i in 0..half.s1() {
            let (e, g) = half.couple(i);
            marks[root_of(half, e, &mut uf)].push(Mark::E(i, false));
            marks[root_of(half, g, &mut uf)].push(Mark::E(i, true));
        }
        for i in 0..half.s2() {
            marks[root_of(half, half.marked_z[i], &mut uf)].push(Mark::Z(i));
        }
    }
    let s1 = p.s1();
    let mut images = vec![0; s1];
    let mut signs = vec![false; s1];
    let mut sym = vec![0; p.s2()];
    let mut l = 0;
    let mut roots: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
    roots.sort_unstable();
    roots.dedup();
    for r in roots {
        match (pm[r].as_slice(), qm[r].as_slice()) {
            ([], []) => l += 1,
            ([Mark::E(i, false)], [Mark::E(j, gj)]) => {
                images[*i] = *j;
                signs[*i] = *gj;
            }
            ([Mark::E(_, true)], [Mark::E(_, _)]) => {}
            ([Mark::Z(i)], [Mark::Z(j)]) => sym[*i] = *j,
            _ => return Ok(None),
        }
    }
    Ok(Some((
        l,
        LayerElement::new(
            WreathElement::new(signs, Perm::from_images(images)),
            Perm::from_images(sym),
        ),
    )))
}
