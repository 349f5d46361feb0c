use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;
use serde_json::{json, Value};

use zrel_core::dalg::{self, dim_formula};
use zrel_core::gcell::LayerElement;
use zrel_core::repn::{cell_module, irreducible_table};
use zrel_core::ring::XValue;
use zrel_core::tabular::decompose;
use zrel_core::verify::{run_suite, Options, Suite, DEFAULT_SAMPLES};
use zrel_core::{Algebra, AlgebraElement, CellLabel, ScalarField, ZStablePartition};

#[derive(Parser)]
#[command(
    name = "zrel",
    version,
    about = "Exact computations in algebras of Z2-relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Z2rel,
    Signed,
    Partition,
}

impl From<AlgebraArg> for Algebra {
    fn from(a: AlgebraArg) -> Self {
        match a {
            AlgebraArg::Z2rel => Algebra::Z2Rel,
            AlgebraArg::Signed => Algebra::Signed,
            AlgebraArg::Partition => Algebra::Partition,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Formula,
    Enumerate,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Assoc,
    Roundtrip,
    Tabular,
    Cellular,
    GramOracle,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Assoc => Suite::Assoc,
            SuiteArg::Roundtrip => Suite::Roundtrip,
            SuiteArg::Tabular => Suite::Tabular,
            SuiteArg::Cellular => Suite::Cellular,
            SuiteArg::GramOracle => Suite::GramOracle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the dimension of an algebra.
    Dim {
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
    },
    /// Write the diagram basis as JSON lines.
    Basis {
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Multiply two elements given as JSON files.
    Mul {
        #[arg(long)]
        k: usize,
        a: PathBuf,
        b: PathBuf,
    },
    /// Split a diagram into its two half diagrams and group element.
    Decompose {
        #[arg(long)]
        k: usize,
        diagram: PathBuf,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Leave out the elapsed time so output is byte-stable.
        #[arg(long)]
        no_timing: bool,
    },
    /// Write the Gram matrix of a cell module as CSV.
    Gram {
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        #[arg(long)]
        k: usize,
        /// `r,s1,s2,l1,l2,mu`, shape parts joined by `.`, `0` for empty.
        #[arg(long, allow_hyphen_values = true)]
        label: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate cell modules and simple heads.
    Irreducibles {
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        #[arg(long)]
        k: usize,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        /// Specialize x; generic when absent.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_element(path: &Path, k: usize) -> Result<AlgebraElement> {
    let a = AlgebraElement::from_json(&read_json(path)?)
        .with_context(|| format!("element in {}", path.display()))?;
    if a.k() != k {
        bail!(
            "{} holds an element with k={}, expected {k}",
            path.display(),
            a.k()
        );
    }
    Ok(a)
}

fn group_json(g: &LayerElement) -> Value {
    json!({
        "signs": g.wreath.sign_vector(),
        "perm": g.wreath.perm.images().iter().map(|i| i + 1).collect::<Vec<_>>(),
        "sym": g.sym.images().iter().map(|i| i + 1).collect::<Vec<_>>(),
    })
}

fn parse_rational(s: &str) -> Result<BigRational> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|_| anyhow::anyhow!("invalid rational {s:?}"))
}

/// `Ok(false)` means a verification ran and failed.
fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Dim { algebra, k, method } => {
            let alg = Algebra::from(algebra);
            let n = match method {
                Method::Formula => dim_formula(alg, k)?,
                Method::Enumerate => dalg::basis(alg, k)?.len().into(),
            };
            println!("{n}");
        }
        Command::Basis { algebra, k, out } => {
            let mut text = String::new();
            for d in dalg::basis(algebra.into(), k)? {
                text.push_str(&d.to_json().to_string());
                text.push('\n');
            }
            emit(out.as_deref(), &text)?;
        }
        Command::Mul { k, a, b } => {
            let x = read_element(&a, k)?;
            let y = read_element(&b, k)?;
            println!("{}", x.multiply(&y)?.to_json());
        }
        Command::Decompose { k, diagram } => {
            let v = read_json(&diagram)?;
            let d = ZStablePartition::from_json(&v)
                .with_context(|| format!("diagram in {}", diagram.display()))?;
            if d.k() != k || d.rows() != 2 {
                bail!("{} is not a two-row diagram with k={k}", diagram.display());
            }
            let (top, bottom, g) = decompose(&d)?;
            let out = json!({
                "top": top.to_json(),
                "bottom": bottom.to_json(),
                "group": group_json(&g),
            });
            println!("{out}");
        }
        Command::Verify {
            suite,
            algebra,
            k,
            seed,
            samples,
            no_timing,
        } => {
            let mut report = run_suite(suite.into(), algebra.into(), k, Options { seed, samples })?;
            if no_timing {
                report.elapsed_ms = None;
            }
            println!("{}", serde_json::to_string_pretty(&report)?);
            return Ok(report.passed);
        }
        Command::Gram {
            algebra,
            k,
            label,
            out,
        } => {
            let label = CellLabel::parse(&label)?;
            let w = cell_module(&label, algebra.into(), k)?;
            emit(out.as_deref(), &w.gram()?.to_csv())?;
        }
        Command::Irreducibles {
            algebra,
            k,
            characteristic,
            x,
            format,
            seed,
        } => {
            let xv = match x {
                Some(s) => XValue::Value(parse_rational(&s)?),
                None => XValue::Generic,
            };
            let field = match characteristic {
                0 => ScalarField {
                    characteristic: zrel_core::ring::Characteristic::Zero,
                    x: xv,
                },
                p => ScalarField::prime(p, xv)?,
            };
            let table = irreducible_table(algebra.into(), k, &field, seed)?;
            match format {
                Format::Text => print!("{}", table.to_text()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&table)?),
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
