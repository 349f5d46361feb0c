use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Shape> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if n == 0 {
                out.push(Shape(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Dominance `self ⊵ other` between partitions of the same size.
    pub fn dominates(&self, other: &Shape) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.0.len().max(other.0.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Every difference of consecutive parts (the last part compared with 0)
    /// is below `p`.
    pub fn is_p_restricted(&self, p: u64) -> bool {
        let mut parts = self.0.clone();
        parts.push(0);
        parts.windows(2).all(|w| ((w[0] - w[1]) as u64) < p)
    }

    /// Parts joined by `.`; the empty shape is `0`.
    pub fn to_label(&self) -> String {
        if self.0.is_empty() {
            "0".into()
        } else {
            self.0.iter().join(".")
        }
    }

    pub fn from_label(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::empty());
        }
        let parts = s
            .split('.')
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad shape {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn to_json(&self) -> Value {
        json!(self.0)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "({})", self.0.iter().join(","))
        }
    }
}

/// A pair of partitions `(λ1, λ2)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BiShape {
    pub first: Shape,
    pub second: Shape,
}

impl BiShape {
    pub fn new(first: Shape, second: Shape) -> Self {
        Self { first, second }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    /// All bipartitions of `n`: first component size decreasing, then each
    /// component in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<BiShape> {
        let mut out = Vec::new();
        for a in (0..=n).rev() {
            for l1 in Shape::all(a) {
                for l2 in Shape::all(n - a) {
                    out.push(BiShape::new(l1.clone(), l2));
                }
            }
        }
        out
    }

    /// Cell order: a larger first component wins outright, otherwise both
    /// components must dominate.
    pub fn dominates(&self, other: &BiShape) -> bool {
        let (a, b) = (self.first.size(), other.first.size());
        a > b
            || (a == b
                && self.first.dominates(&other.first)
                && self.second.dominates(&other.second))
    }

    pub fn is_p_restricted(&self, p: u64) -> bool {
        self.first.is_p_restricted(p) && self.second.is_p_restricted(p)
    }
}

impl fmt::Display for BiShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// A tableau whose entries are distinct letters (0-based), rows left to
/// right.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    /// Row-reading filling of `shape` with `letters` in order.
    pub fn canonical(shape: &Shape, letters: &[usize]) -> Self {
        let mut it = letters.iter().copied();
        Self {
            rows: shape
                .parts()
                .iter()
                .map(|&p| it.by_ref().take(p).collect())
                .collect(),
        }
    }

    /// `(cell, letter)` pairs in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| ((i, j), v)))
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(b, a)| a < b));
        rows_ok && cols_ok
    }

    pub fn to_json(&self) -> Value {
        json!(self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v + 1).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v + 1).join(" "))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Standard tableaux of `shape` on the sorted letter set `letters`.
pub fn standard_tableaux_on(shape: &Shape, letters: &[usize]) -> Vec<Tableau> {
    fn rec(
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        next: usize,
        letters: &[usize],
        out: &mut Vec<Tableau>,
    ) {
        if next == letters.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            let fits = len < shape[i] && (i == 0 || rows[i - 1].len() > len);
            if fits {
                rows[i].push(letters[next]);
                rec(shape, rows, next + 1, letters, out);
                rows[i].pop();
            }
        }
    }
    assert_eq!(shape.size(), letters.len());
    let mut out = Vec::new();
    rec(
        shape.parts(),
        &mut vec![Vec::new(); shape.parts().len()],
        0,
        letters,
        &mut out,
    );
    out
}

pub fn standard_tableaux(shape: &Shape) -> Vec<Tableau> {
    standard_tableaux_on(shape, &(0..shape.size()).collect::<Vec<_>>())
}

/// A pair of tableaux whose letters together are `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiTableau {
    pub first: Tableau,
    pub second: Tableau,
}

impl BiTableau {
    pub fn shape(&self) -> BiShape {
        BiShape::new(self.first.shape(), self.second.shape())
    }

    pub fn canonical(shape: &BiShape) -> Self {
        let a = shape.first.size();
        let n = shape.size();
        Self {
            first: Tableau::canonical(&shape.first, &(0..a).collect::<Vec<_>>()),
            second: Tableau::canonical(&shape.second, &(a..n).collect::<Vec<_>>()),
        }
    }

    pub fn to_json(&self) -> Value {
        json!([self.first.to_json(), self.second.to_json()])
    }
}

impl fmt::Display for BiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.first, self.second)
    }
}

/// Standard bitableaux of `shape`: letter subsets for the first component in
/// lexicographic order, then standard fillings of each component.
pub fn standard_bitableaux(shape: &BiShape) -> Vec<BiTableau> {
    let n = shape.size();
    let a = shape.first.size();
    let mut out = Vec::new();
    for chosen in (0..n).combinations(a) {
        let rest: Vec<usize> = (0..n).filter(|v| !chosen.contains(v)).collect();
        for t1 in standard_tableaux_on(&shape.first, &chosen) {
            for t2 in standard_tableaux_on(&shape.second, &rest) {
                out.push(BiTableau {
                    first: t1.clone(),
                    second: t2,
                });
            }
        }
    }
    out
}
