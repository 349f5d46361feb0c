use std::fmt;

use num::{BigRational, One, Zero};

use super::fp::{Fp, FpPoly};
use super::poly::Poly;

/// The ring operations fraction-free elimination needs.
pub trait Elem: Clone + PartialEq + fmt::Debug {
    fn r_zero(&self) -> Self;
    fn r_one(&self) -> Self;
    fn r_is_zero(&self) -> bool;
    fn r_add(&self, o: &Self) -> Self;
    fn r_sub(&self, o: &Self) -> Self;
    fn r_mul(&self, o: &Self) -> Self;
    fn r_neg(&self) -> Self;
    /// Division known to be exact.
    fn r_div(&self, o: &Self) -> Self;
}

impl Elem for BigRational {
    fn r_zero(&self) -> Self {
        BigRational::zero()
    }
    fn r_one(&self) -> Self {
        BigRational::one()
    }
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn r_add(&self, o: &Self) -> Self {
        self + o
    }
    fn r_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn r_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn r_neg(&self) -> Self {
        -self
    }
    fn r_div(&self, o: &Self) -> Self {
        self / o
    }
}

impl Elem for Poly {
    fn r_zero(&self) -> Self {
        Poly::zero()
    }
    fn r_one(&self) -> Self {
        Poly::one()
    }
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn r_add(&self, o: &Self) -> Self {
        self + o
    }
    fn r_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn r_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn r_neg(&self) -> Self {
        -self
    }
    fn r_div(&self, o: &Self) -> Self {
        self.div_exact(o)
    }
}

impl Elem for Fp {
    fn r_zero(&self) -> Self {
        Fp::new(0, self.p)
    }
    fn r_one(&self) -> Self {
        Fp::new(1, self.p)
    }
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn r_add(&self, o: &Self) -> Self {
        self.add(*o)
    }
    fn r_sub(&self, o: &Self) -> Self {
        self.sub(*o)
    }
    fn r_mul(&self, o: &Self) -> Self {
        self.mul(*o)
    }
    fn r_neg(&self) -> Self {
        self.neg()
    }
    fn r_div(&self, o: &Self) -> Self {
        self.mul(o.inv())
    }
}

impl Elem for FpPoly {
    fn r_zero(&self) -> Self {
        FpPoly::zero(self.p)
    }
    fn r_one(&self) -> Self {
        FpPoly {
            coeffs: vec![1],
            p: self.p,
        }
    }
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn r_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn r_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn r_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn r_neg(&self) -> Self {
        self.neg()
    }
    fn r_div(&self, o: &Self) -> Self {
        let (q, r) = self.div_rem(o);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

/// Dense row-major matrix that carries the zero of its ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
    zero: T,
}

pub type ExactMatrix = Matrix<Poly>;

impl<T: Elem> Matrix<T> {
    pub fn new(rows: usize, cols: usize, zero: T) -> Self {
        Self {
            rows,
            cols,
            data: vec![zero.clone(); rows * cols],
            zero,
        }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        zero: T,
        mut f: impl FnMut(usize, usize) -> T,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            data,
            zero,
        }
    }

    pub fn identity(n: usize, zero: T) -> Self {
        let one = zero.r_one();
        Self::from_fn(
            n,
            n,
            zero,
            |i, j| if i == j { one.clone() } else { one.r_zero() },
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn map<U: Elem>(&self, zero: U, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            zero,
        }
    }

    pub fn try_map<U: Elem, E>(
        &self,
        zero: U,
        f: impl Fn(&T) -> Result<U, E>,
    ) -> Result<Matrix<U>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, E>>()?,
            zero,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.zero.clone(), |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix dimensions do not match");
        Self::from_fn(self.rows, o.cols, self.zero.clone(), |i, j| {
            (0..self.cols).fold(self.zero.clone(), |acc, l| {
                let a = self.get(i, l);
                if a.r_is_zero() {
                    acc
                } else {
                    acc.r_add(&a.r_mul(o.get(l, j)))
                }
            })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Elem::r_is_zero)
    }

    /// Fraction-free elimination with column skipping.
    ///
    /// Returns the rank and, for square input, the determinant.
    pub fn bareiss(&self) -> (usize, Option<T>) {
        let (n, m) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut prev: Option<T> = None;
        let mut rank = 0;
        let mut negate = false;
        for col in 0..m {
            if rank == n {
                break;
            }
            let Some(piv) = (rank..n).find(|&i| !a[i * m + col].r_is_zero()) else {
                continue;
            };
            if piv != rank {
                for j in 0..m {
                    a.swap(piv * m + j, rank * m + j);
                }
                negate = !negate;
            }
            let p = a[rank * m + col].clone();
            for i in rank + 1..n {
                let lead = a[i * m + col].clone();
                for j in col + 1..m {
                    let mut v = p.r_mul(&a[i * m + j]).r_sub(&lead.r_mul(&a[rank * m + j]));
                    if let Some(d) = &prev {
                        v = v.r_div(d);
                    }
                    a[i * m + j] = v;
                }
                a[i * m + col] = self.zero.clone();
            }
            prev = Some(p);
            rank += 1;
        }
        let det = (n == m).then(|| {
            if rank < n {
                self.zero.clone()
            } else {
                let d = prev.unwrap_or_else(|| self.zero.r_one());
                if negate {
                    d.r_neg()
                } else {
                    d
                }
            }
        });
        (rank, det)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        self.bareiss().1.expect("square")
    }
}

impl<T: Elem> Matrix<T> {
    /// Basis of the right kernel `{v : M v = 0}` over a field, as columns.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (n, m) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m {
            let Some(piv) = (row..n).find(|&i| !a[i * m + col].r_is_zero()) else {
                continue;
            };
            for j in 0..m {
                a.swap(piv * m + j, row * m + j);
            }
            let inv = a[row * m + col].r_one().r_div(&a[row * m + col]);
            for j in 0..m {
                a[row * m + j] = a[row * m + j].r_mul(&inv);
            }
            for i in 0..n {
                if i != row && !a[i * m + col].r_is_zero() {
                    let f = a[i * m + col].clone();
                    for j in 0..m {
                        let v = a[i * m + j].r_sub(&f.r_mul(&a[row * m + j]));
                        a[i * m + j] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        let mut out = Vec::new();
        for free in (0..m).filter(|c| !pivots.contains(c)) {
            let mut v = vec![self.zero.clone(); m];
            v[free] = self.zero.r_one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = a[r * m + free].r_neg();
            }
            out.push(v);
        }
        out
    }

    /// Solves `M X = B` for square invertible `M` over a field.
    pub fn solve(&self, b: &Matrix<T>) -> Option<Matrix<T>> {
        let n = self.rows;
        assert_eq!(n, self.cols);
        assert_eq!(b.rows, n);
        let w = n + b.cols;
        let mut a: Vec<T> = Vec::with_capacity(n * w);
        for i in 0..n {
            a.extend((0..n).map(|j| self.get(i, j).clone()));
            a.extend((0..b.cols).map(|j| b.get(i, j).clone()));
        }
        for col in 0..n {
            let piv = (col..n).find(|&i| !a[i * w + col].r_is_zero())?;
            for j in 0..w {
                a.swap(piv * w + j, col * w + j);
            }
            let inv = a[col * w + col].r_one().r_div(&a[col * w + col]);
            for j in col..w {
                a[col * w + j] = a[col * w + j].r_mul(&inv);
            }
            for i in 0..n {
                if i != col && !a[i * w + col].r_is_zero() {
                    let f = a[i * w + col].clone();
                    for j in col..w {
                        let v = a[i * w + j].r_sub(&f.r_mul(&a[col * w + j]));
                        a[i * w + j] = v;
                    }
                }
            }
        }
        Some(Matrix::from_fn(n, b.cols, self.zero.clone(), |i, j| {
            a[i * w + n + j].clone()
        }))
    }
}

impl<T: Elem + fmt::Display> Matrix<T> {
    /// One line per row, entries comma separated and quoted.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("\"{}\"", self.get(i, j)))
                .collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}
