//! Exact coefficient arithmetic: `Q[x]`, prime fields, and elimination.

mod fp;
mod matrix;
mod poly;

use std::fmt;

use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use fp::{check_odd_prime, Fp, FpPoly};
pub use matrix::{Elem, ExactMatrix, Matrix};
pub use poly::Poly;

use crate::error::{Error, Result};

/// Largest matrix size handled symbolically over `Q(x)`.
pub const SYMBOLIC_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

/// Treatment of the parameter `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum XValue {
    /// `x` stays transcendental: work over `K(x)`.
    Generic,
    /// `x` is specialized to a rational (reduced mod `p` in characteristic `p`).
    Value(BigRational),
}

/// Field in which Gram matrices are evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScalarField {
    pub characteristic: Characteristic,
    pub x: XValue,
}

impl ScalarField {
    pub fn rational_function_field() -> Self {
        Self {
            characteristic: Characteristic::Zero,
            x: XValue::Generic,
        }
    }

    pub fn rationals_at(x: BigRational) -> Self {
        Self {
            characteristic: Characteristic::Zero,
            x: XValue::Value(x),
        }
    }

    pub fn prime(p: u64, x: XValue) -> Result<Self> {
        check_odd_prime(p)?;
        Ok(Self {
            characteristic: Characteristic::Prime(p),
            x,
        })
    }

    pub fn check(&self) -> Result<()> {
        match self.characteristic {
            Characteristic::Zero => Ok(()),
            Characteristic::Prime(p) => check_odd_prime(p),
        }
    }

    /// Image of a polynomial in this field.
    pub fn eval(&self, a: &Poly) -> Result<FieldValue> {
        self.check()?;
        Ok(match (&self.characteristic, &self.x) {
            (Characteristic::Zero, XValue::Generic) => FieldValue::Poly(a.clone()),
            (Characteristic::Zero, XValue::Value(x)) => FieldValue::Rational(a.eval(x)),
            (Characteristic::Prime(p), XValue::Generic) => {
                FieldValue::FpPoly(FpPoly::from_poly(a, *p)?)
            }
            (Characteristic::Prime(p), XValue::Value(x)) => {
                FieldValue::Fp(FpPoly::from_poly(a, *p)?.eval(Fp::from_rational(x, *p)?))
            }
        })
    }
}

impl fmt::Display for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.characteristic {
            Characteristic::Zero => "Q".to_string(),
            Characteristic::Prime(p) => format!("F_{p}"),
        };
        match &self.x {
            XValue::Generic => write!(f, "{base}(x)"),
            XValue::Value(v) => write!(f, "{base}, x={v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FieldValue {
    Poly(Poly),
    Rational(BigRational),
    FpPoly(FpPoly),
    Fp(Fp),
}

/// How a rank was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum RankMethod {
    /// Exact elimination in the target field.
    Exact,
    /// Fraction-free elimination over the polynomial ring.
    Symbolic,
    /// Maximum rank over several specializations of `x`. A nonzero minor
    /// of the generic matrix has degree at most `degree_bound`, so it
    /// vanishes at no more than that many points.
    Sampled {
        points: Vec<String>,
        degree_bound: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub rank: usize,
    #[serde(flatten)]
    pub method: RankMethod,
}

fn rational_rank(m: &ExactMatrix, x: &BigRational) -> usize {
    m.map(BigRational::from_integer(0.into()), |e| e.eval(x))
        .rank()
}

/// Rank of a polynomial matrix in `field`.
pub fn rank_over(m: &ExactMatrix, field: &ScalarField, seed: u64) -> Result<RankReport> {
    field.check()?;
    let exact = |rank| RankReport {
        rank,
        method: RankMethod::Exact,
    };
    match (&field.characteristic, &field.x) {
        (Characteristic::Zero, XValue::Value(x)) => Ok(exact(rational_rank(m, x))),
        (Characteristic::Prime(p), XValue::Value(x)) => {
            let xv = Fp::from_rational(x, *p)?;
            let fm = m.try_map(Fp::new(0, *p), |e| {
                Ok::<_, Error>(FpPoly::from_poly(e, *p)?.eval(xv))
            })?;
            Ok(exact(fm.rank()))
        }
        (Characteristic::Prime(p), XValue::Generic) => {
            let fm = m.try_map(FpPoly::zero(*p), |e| FpPoly::from_poly(e, *p))?;
            Ok(RankReport {
                rank: fm.rank(),
                method: RankMethod::Symbolic,
            })
        }
        (Characteristic::Zero, XValue::Generic) => {
            if m.rows().max(m.cols()) <= SYMBOLIC_LIMIT {
                return Ok(RankReport {
                    rank: m.rank(),
                    method: RankMethod::Symbolic,
                });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut points = vec![BigRational::new(10007.into(), 3.into())];
            for _ in 0..2 {
                let n: i64 = rng.gen_range(1_000..1_000_000);
                let d: i64 = rng.gen_range(1..1_000);
                points.push(BigRational::new(n.into(), d.into()));
            }
            let rank = points
                .iter()
                .map(|x| rational_rank(m, x))
                .max()
                .unwrap_or(0);
            let max_deg = (0..m.rows())
                .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
                .filter_map(|(i, j)| m.get(i, j).degree())
                .max()
                .unwrap_or(0);
            Ok(RankReport {
                rank,
                method: RankMethod::Sampled {
                    points: points.iter().map(ToString::to_string).collect(),
                    degree_bound: m.rows().min(m.cols()) * max_deg,
                },
            })
        }
    }
}
