//! The diagram algebras as free `Q[x]`-modules on their diagram bases.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gcell::{Perm, WreathElement};
use crate::ring::Poly;
use crate::zpart::{self, Row, Sign, Vertex, ZStablePartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algebra {
    /// All Z2-stable diagrams.
    Z2Rel,
    /// The signed partition algebra.
    Signed,
    /// The partition algebra `P_2k(x^2)`, as diagrams whose blocks carry a
    /// single sign.
    Partition,
}

impl Algebra {
    pub const ALL: [Algebra; 3] = [Algebra::Z2Rel, Algebra::Signed, Algebra::Partition];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::Z2Rel => "z2rel",
            Algebra::Signed => "signed",
            Algebra::Partition => "partition",
        }
    }

    /// Basis membership of a two-row diagram.
    pub fn contains(self, d: &ZStablePartition) -> bool {
        if d.rows() != 2 {
            return false;
        }
        match self {
            Algebra::Z2Rel => true,
            Algebra::Signed => signed_filter(d),
            Algebra::Partition => d.is_sign_homogeneous(),
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "z2rel" => Ok(Algebra::Z2Rel),
            "signed" => Ok(Algebra::Signed),
            "partition" => Ok(Algebra::Partition),
            other => Err(Error::Parse(format!("unknown algebra {other:?}"))),
        }
    }
}

fn signed_filter(d: &ZStablePartition) -> bool {
    let k = d.k();
    let p = d.propagating_data().expect("two-row diagram");
    if p.s1 == k {
        return true;
    }
    let h = d.horizontal_counts().expect("two-row diagram");
    let through = p.s1 + p.s2;
    2 * p.s1 + p.s2 < 2 * k
        && p.s1 < k
        && p.s2 < k
        && through + h.e_top + h.z2_top < k
        && through + h.e_bottom + h.z2_bottom < k
}

/// Basis diagrams of `algebra`, in canonical order.
pub fn basis(algebra: Algebra, k: usize) -> Result<Vec<ZStablePartition>> {
    let mut all = zpart::enumerate(k, 2)?;
    all.retain(|d| algebra.contains(d));
    Ok(all)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Set partitions of `0..n` as block lists.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(i);
            rec(i + 1, n, cur, out);
            cur[b].pop();
        }
        cur.push(vec![i]);
        rec(i + 1, n, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

/// `n_λ` times the product over parts of `2^(λ_i - 1) + 1`, summed over
/// shapes, equals the sum over set partitions of the block products.
fn block_weight(blocks: &[Vec<usize>]) -> BigInt {
    blocks.iter().fold(BigInt::one(), |acc, b| {
        acc * ((BigInt::one() << (b.len() - 1)) + 1)
    })
}

/// Closed-form dimension.
pub fn dim_formula(algebra: Algebra, k: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidSize("k must be positive".into()));
    }
    let n = 2 * k;
    Ok(match algebra {
        Algebra::Partition => BigInt::from(set_partitions(n).len()),
        Algebra::Z2Rel => z2rel_formula(n),
        Algebra::Signed => {
            let mut total = BigRational::from_integer(factorial(k) << k);
            for d in set_partitions(n) {
                let top = |v: usize| v < k;
                let through = d
                    .iter()
                    .filter(|b| b.iter().any(|&v| top(v)) && b.iter().any(|&v| !top(v)))
                    .count();
                let is_perm =
                    d.len() == k && d.iter().all(|b| b.len() == 2 && top(b[0]) && !top(b[1]));
                if is_perm {
                    continue;
                }
                let count_row = |in_row: &dyn Fn(usize) -> bool| {
                    d.iter().filter(|b| b.iter().any(|&v| in_row(v))).count()
                };
                let s = [count_row(&top), count_row(&|v| !top(v))]
                    .iter()
                    .filter(|&&c| c == k)
                    .count();
                let r = k - through;
                let two_r = BigInt::one() << r;
                let factor = BigRational::new(two_r.clone() - 1, two_r);
                let mut term = BigRational::from_integer(block_weight(&d));
                for _ in 0..s {
                    term *= &factor;
                }
                total += term;
            }
            assert!(total.is_integer(), "dimension formula is not integral");
            total.to_integer()
        }
    })
}

/// Sum over partitions `λ` of `2k` of `n_λ * prod (2^(λ_i - 1) + 1)`, with
/// `n_λ = (2k)! / (prod λ_i! prod m_j!)` the number of set partitions of
/// shape `λ`.
fn z2rel_formula(n: usize) -> BigInt {
    let mut total = BigInt::zero();
    for lambda in crate::gcell::Shape::all(n) {
        let parts = lambda.parts();
        let mut denom = BigInt::one();
        for &p in parts {
            denom *= factorial(p);
        }
        let mut i = 0;
        while i < parts.len() {
            let j = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
            denom *= factorial(j);
            i += j;
        }
        let n_lambda = factorial(n) / denom;
        let weight = parts.iter().fold(BigInt::one(), |acc, &p| {
            acc * ((BigInt::one() << (p - 1)) + 1)
        });
        total += n_lambda * weight;
    }
    total
}

/// Diagram of `(f, σ)`: `(i, s) ~ (σ(i)', s + f(i))`.
pub fn group_diagram(w: &WreathElement) -> ZStablePartition {
    let k = w.degree();
    let blocks = (0..k)
        .flat_map(|i| {
            [Sign::E, Sign::G].map(|s| {
                let t = if w.signs[i] { s.flip() } else { s };
                vec![
                    Vertex::top(i + 1, s),
                    Vertex::bottom(w.perm.apply(i) + 1, t),
                ]
            })
        })
        .collect();
    ZStablePartition::canonicalize(blocks, k, 2).expect("group diagrams are Z2-stable")
}

/// Inverse of [`group_diagram`] on diagrams with `s1 = k`.
pub fn diagram_group(d: &ZStablePartition) -> Option<WreathElement> {
    let k = d.k();
    if d.rows() != 2 || d.propagating_data().ok()?.s1 != k {
        return None;
    }
    let mut images = vec![0; k];
    let mut signs = vec![false; k];
    for b in d.blocks() {
        let (top, bottom): (Vec<&Vertex>, Vec<&Vertex>) = b.iter().partition(|v| v.row == Row::Top);
        if top.len() != 1 || bottom.len() != 1 || top[0].sign != Sign::E {
            continue;
        }
        images[top[0].index - 1] = bottom[0].index - 1;
        signs[top[0].index - 1] = bottom[0].sign == Sign::G;
    }
    Some(WreathElement::new(signs, Perm::from_images(images)))
}

/// The top cell `I_{2k}` with its group labels, in group order.
pub fn top_cell_group(k: usize) -> Vec<(WreathElement, ZStablePartition)> {
    WreathElement::all(k)
        .into_iter()
        .map(|w| {
            let d = group_diagram(&w);
            (w, d)
        })
        .collect()
}

/// A finite `Q[x]`-combination of basis diagrams of one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    k: usize,
    algebra: Algebra,
    terms: BTreeMap<ZStablePartition, Poly>,
}

impl AlgebraElement {
    pub fn zero(algebra: Algebra, k: usize) -> Self {
        Self {
            k,
            algebra,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(algebra: Algebra, k: usize) -> Self {
        Self::from_diagram(algebra, ZStablePartition::identity(k))
            .expect("identity is a basis diagram")
    }

    pub fn from_diagram(algebra: Algebra, d: ZStablePartition) -> Result<Self> {
        Self::term(algebra, d, Poly::one())
    }

    pub fn term(algebra: Algebra, d: ZStablePartition, c: Poly) -> Result<Self> {
        if !algebra.contains(&d) {
            return Err(Error::Incompatible(format!(
                "{d} is not a basis diagram of {algebra}"
            )));
        }
        let mut out = Self::zero(algebra, d.k());
        out.add_term(d, c);
        Ok(out)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn terms(&self) -> &BTreeMap<ZStablePartition, Poly> {
        &self.terms
    }

    pub fn coeff(&self, d: &ZStablePartition) -> Poly {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, d: ZStablePartition, c: Poly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&d) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(d, sum);
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.k != other.k || self.algebra != other.algebra {
            return Err(Error::Incompatible(format!(
                "{} k={} against {} k={}",
                self.algebra, self.k, other.algebra, other.k
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = Self::zero(self.algebra, self.k);
        for (d, v) in &self.terms {
            out.add_term(d.clone(), v * c);
        }
        out
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.algebra, self.k);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let (d, l) = zpart::compose(d1, d2)?;
                out.add_term(d, (c1 * c2).shift(l as usize));
            }
        }
        Ok(out)
    }

    /// Flip of every diagram.
    pub fn star(&self) -> Self {
        let mut out = Self::zero(self.algebra, self.k);
        for (d, c) in &self.terms {
            out.add_term(d.flip_rows(), c.clone());
        }
        out
    }

    /// True iff every supported diagram is a basis diagram of the algebra.
    pub fn is_closed(&self) -> bool {
        self.terms.keys().all(|d| self.algebra.contains(d))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "algebra": self.algebra.name(),
            "k": self.k,
            "terms": self
                .terms
                .iter()
                .map(|(d, c)| json!({"coeff": c.to_json(), "diagram": d.to_json()}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let algebra: Algebra = v["algebra"]
            .as_str()
            .ok_or_else(|| Error::Parse("missing algebra".into()))?
            .parse()?;
        let k = v["k"]
            .as_u64()
            .ok_or_else(|| Error::Parse("missing k".into()))? as usize;
        let terms = v["terms"]
            .as_array()
            .ok_or_else(|| Error::Parse("missing terms".into()))?;
        let mut out = Self::zero(algebra, k);
        for t in terms {
            let d = ZStablePartition::from_json(&t["diagram"])?;
            if d.k() != k {
                return Err(Error::SizeMismatch(k, d.k()));
            }
            if !algebra.contains(&d) {
                return Err(Error::Incompatible(format!(
                    "{d} is not a basis diagram of {algebra}"
                )));
            }
            out.add_term(d, Poly::from_json(&t["coeff"])?);
        }
        Ok(out)
    }
}
