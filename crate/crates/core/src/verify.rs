//! Verification sweeps with JSON reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dalg::{self, Algebra, AlgebraElement};
use crate::error::{Error, Result};
use crate::repn::CellModule;
use crate::tabular::{Coverage, Report, TableDatum};

pub const DEFAULT_SAMPLES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Assoc,
    Roundtrip,
    Tabular,
    Cellular,
    GramOracle,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Assoc,
        Suite::Roundtrip,
        Suite::Tabular,
        Suite::Cellular,
        Suite::GramOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Assoc => "assoc",
            Suite::Roundtrip => "roundtrip",
            Suite::Tabular => "tabular",
            Suite::Cellular => "cellular",
            Suite::GramOracle => "gram-oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Settings of a sweep. Sizes with `k = 1` are swept exhaustively.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub seed: u64,
    pub samples: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            seed: 0,
            samples: DEFAULT_SAMPLES,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub algebra: String,
    pub k: usize,
    pub exhaustive: bool,
    pub seed: u64,
    pub checked: usize,
    pub passed: bool,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

fn basis_elements(algebra: Algebra, k: usize) -> Result<Vec<AlgebraElement>> {
    dalg::basis(algebra, k)?
        .into_iter()
        .map(|d| AlgebraElement::from_diagram(algebra, d))
        .collect()
}

fn check(report: &mut Report, ok: bool, msg: impl FnOnce() -> String) {
    report.checked += 1;
    if !ok {
        report.failures.push(msg());
    }
}

/// Associativity on basis triples and the star anti-automorphism on pairs.
pub fn associativity(
    algebra: Algebra,
    k: usize,
    exhaustive: bool,
    rng: &mut ChaCha8Rng,
    samples: usize,
) -> Result<Report> {
    let basis = basis_elements(algebra, k)?;
    let mut report = Report::default();
    let mut triple = |a: &AlgebraElement, b: &AlgebraElement, c: &AlgebraElement| -> Result<()> {
        let l = a.multiply(b)?.multiply(c)?;
        let r = a.multiply(&b.multiply(c)?)?;
        check(&mut report, l == r, || {
            format!("(ab)c != a(bc) for {a:?}, {b:?}, {c:?}")
        });
        Ok(())
    };
    if exhaustive {
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    triple(a, b, c)?;
                }
            }
        }
    } else {
        for _ in 0..samples {
            let pick: Vec<&AlgebraElement> = (0..3)
                .map(|_| basis.choose(rng).expect("nonempty basis"))
                .collect();
            triple(pick[0], pick[1], pick[2])?;
        }
    }
    let pairs: Vec<(usize, usize)> = if exhaustive {
        (0..basis.len())
            .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
            .collect()
    } else {
        (0..samples)
            .map(|_| (rng.gen_range(0..basis.len()), rng.gen_range(0..basis.len())))
            .collect()
    };
    for (i, j) in pairs {
        let (a, b) = (&basis[i], &basis[j]);
        let l = a.multiply(b)?.star();
        let r = b.star().multiply(&a.star())?;
        check(&mut report, l == r, || {
            format!("(ab)* != b*a* for basis elements {i}, {j}")
        });
    }
    Ok(report)
}

/// Compares every Gram entry from the factorized formula with the brute
/// force product, either all entries or `samples` per label.
pub fn gram_oracle(
    datum: &TableDatum,
    exhaustive: bool,
    rng: &mut ChaCha8Rng,
    samples: usize,
) -> Result<Report> {
    let mut report = Report::default();
    for label in datum.labels() {
        let w = CellModule::new(datum, &label)?;
        let g = w.gram()?;
        let n = w.dim();
        let entries: Vec<(usize, usize)> = if exhaustive || n * n <= samples {
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
        } else {
            (0..samples)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect()
        };
        for (i, j) in entries {
            match w.gram_oracle_entry(i, j) {
                Ok(v) => check(&mut report, &v == g.entries.get(i, j), || {
                    format!(
                        "label {label}: entry ({i},{j}) is {} by formula, {v} by product",
                        g.entries.get(i, j)
                    )
                }),
                Err(e) => check(&mut report, false, || format!("label {label}: {e}")),
            }
        }
    }
    Ok(report)
}

pub fn run_suite(suite: Suite, algebra: Algebra, k: usize, opts: Options) -> Result<SuiteReport> {
    let start = Instant::now();
    let exhaustive = k <= 1;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let coverage = |rng| {
        if exhaustive {
            Coverage::Exhaustive
        } else {
            Coverage::Sampled {
                rng,
                samples: opts.samples,
            }
        }
    };
    let report = match suite {
        Suite::Assoc => associativity(algebra, k, exhaustive, &mut rng, opts.samples)?,
        Suite::Roundtrip => TableDatum::new(algebra, k)?.verify_roundtrip()?,
        Suite::Tabular => TableDatum::new(algebra, k)?.verify_table_datum(coverage(&mut rng))?,
        Suite::Cellular => TableDatum::new(algebra, k)?.verify_cellular(coverage(&mut rng))?,
        Suite::GramOracle => gram_oracle(
            &TableDatum::new(algebra, k)?,
            exhaustive,
            &mut rng,
            opts.samples,
        )?,
    };
    Ok(SuiteReport {
        suite: suite.name().into(),
        algebra: algebra.name().into(),
        k,
        exhaustive: exhaustive || suite == Suite::Roundtrip,
        seed: opts.seed,
        checked: report.checked,
        passed: report.passed(),
        failures: report.failures,
        elapsed_ms: Some(start.elapsed().as_millis()),
    })
}
