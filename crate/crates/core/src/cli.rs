//! JSON documents and the `kss` command line.
//!
//! Exit codes: 0 success, 1 malformed input, 2 domain error, 3 failed suite.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::kr_crystal::{CoordArray, Letter, Rank, RectTableau};
use crate::kss::{phi, phi_inv, phi_q, phi_q_inv};
use crate::r_matrix::r_at;
use crate::rational::{format_q, parse_q, q, Q};
use crate::rigged_config::{enumerate_rcs, MultiplicityArray, RiggedConfig, Row};
use crate::tensor_path::{enumerate_paths, Path, RationalPath, TensorShape};
use crate::verify::{run_suite, Suite, SuiteConfig};
use crate::weight::Weight;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("IoError: {0}")]
    Io(String),
    #[error("{0}")]
    Domain(#[from] Error),
    #[error("VerificationFailed: {0}")]
    Suite(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 1,
            CliError::Domain(_) => 2,
            CliError::Suite(_) => 3,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Compact,
    Pretty,
}

/// A parsed input document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Path(Path),
    RationalPath(RationalPath),
    Rc(RiggedConfig),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PathDoc {
    kind: String,
    n: usize,
    factors: Vec<FactorDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FactorDoc {
    Rows { rows: Vec<Vec<u64>> },
    Coords { coords: CoordsDoc },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoordsDoc {
    r: usize,
    s: String,
    x: Vec<(usize, usize, String)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RcDoc {
    kind: String,
    n: usize,
    #[serde(rename = "L")]
    l: Vec<(usize, String, u64)>,
    nu: Vec<Vec<(String, String)>>,
}

#[derive(Serialize)]
struct DeltaDoc {
    letter: Letter,
    rc: RcDoc,
}

#[derive(Serialize)]
struct WeightDoc {
    kind: &'static str,
    n: usize,
    fundamental: Vec<String>,
    root: Vec<String>,
    epsilon: Vec<String>,
}

fn parse_rational(text: &str, field: &str) -> CliResult<Q> {
    parse_q(text).ok_or_else(|| CliError::Parse(format!("field {field}: {text:?} is not a rational number")))
}

fn rank_of(n: usize) -> CliResult<Rank> {
    Ok(Rank::new(n)?)
}

fn path_doc(b: &Path) -> PathDoc {
    PathDoc {
        kind: "path".into(),
        n: b.rank().n(),
        factors: b
            .factors()
            .iter()
            .map(|t| FactorDoc::Rows {
                rows: t.to_rows().iter().map(|r| r.iter().map(|&x| x as u64).collect()).collect(),
            })
            .collect(),
    }
}

fn coords_doc(c: &CoordArray) -> FactorDoc {
    FactorDoc::Coords {
        coords: CoordsDoc {
            r: c.height(),
            s: format_q(&c.width()),
            x: c.entries().filter(|(_, _, v)| *v != q(0)).map(|(i, j, v)| (i, j, format_q(&v))).collect(),
        },
    }
}

fn rational_path_doc(b: &RationalPath) -> PathDoc {
    PathDoc { kind: "path".into(), n: b.rank().n(), factors: b.factors().iter().map(coords_doc).collect() }
}

fn rc_doc(rc: &RiggedConfig) -> RcDoc {
    let n = rc.rank().n();
    let mut l: Vec<(usize, String, u64)> = Vec::new();
    for a in 1..=n {
        let mut entries: Vec<(Q, u64)> =
            rc.multiplicities().entries().filter(|e| e.0 == a).map(|(_, len, c)| (len, c)).collect();
        entries.reverse();
        l.extend(entries.into_iter().map(|(len, c)| (a, format_q(&len), c)));
    }
    RcDoc {
        kind: "rc".into(),
        n,
        l,
        nu: rc
            .levels()
            .iter()
            .map(|rows| rows.iter().map(|r| (format_q(&r.length), format_q(&r.rigging))).collect())
            .collect(),
    }
}

fn to_text<T: Serialize>(value: &T, format: Format) -> String {
    let mut s = match format {
        Format::Compact => serde_json::to_string(value),
        Format::Pretty => serde_json::to_string_pretty(value),
    }
    .expect("documents always serialize");
    s.push('\n');
    s
}

/// Canonical text of a document, newline terminated.
pub fn serialize_document(doc: &Document, format: Format) -> String {
    match doc {
        Document::Path(b) => to_text(&path_doc(b), format),
        Document::RationalPath(b) => to_text(&rational_path_doc(b), format),
        Document::Rc(rc) => to_text(&rc_doc(rc), format),
    }
}

fn factor_from_doc(f: FactorDoc, rank: Rank) -> CliResult<Result<RectTableau, CoordArray>> {
    match f {
        FactorDoc::Rows { rows } => {
            let max = rank.max_letter() as u64;
            let mut letters = Vec::with_capacity(rows.len());
            for row in rows {
                let mut out = Vec::with_capacity(row.len());
                for x in row {
                    if x == 0 || x > max {
                        return Err(Error::LetterOutOfRange { letter: x.min(i64::MAX as u64) as i64, max: max as i64 }.into());
                    }
                    out.push(x as Letter);
                }
                letters.push(out);
            }
            Ok(Ok(RectTableau::new(letters, rank)?))
        }
        FactorDoc::Coords { coords } => {
            let s = parse_rational(&coords.s, "coords.s")?;
            let mut entries = Vec::with_capacity(coords.x.len());
            for (i, j, v) in coords.x {
                entries.push((i, j, parse_rational(&v, "coords.x")?));
            }
            Ok(Err(CoordArray::from_entries(rank, coords.r, s, &entries)?))
        }
    }
}

/// Parses and validates a path or rigged configuration document.
pub fn parse_document(text: &str) -> CliResult<Document> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| CliError::Parse("field kind: missing or not a string".into()))?;
    match kind {
        "path" => {
            let doc: PathDoc = serde_json::from_value(value).map_err(|e| CliError::Parse(e.to_string()))?;
            let rank = rank_of(doc.n)?;
            let mut tableaux = Vec::new();
            let mut coords = Vec::new();
            for f in doc.factors {
                match factor_from_doc(f, rank)? {
                    Ok(t) => {
                        coords.push(t.to_coords());
                        tableaux.push(t);
                    }
                    Err(c) => coords.push(c),
                }
            }
            if tableaux.len() == coords.len() {
                Ok(Document::Path(Path::new(rank, tableaux)?))
            } else {
                Ok(Document::RationalPath(RationalPath::new(rank, coords)?))
            }
        }
        "rc" => {
            let doc: RcDoc = serde_json::from_value(value).map_err(|e| CliError::Parse(e.to_string()))?;
            let rank = rank_of(doc.n)?;
            let mut entries = Vec::new();
            for (a, len, c) in doc.l {
                entries.push((a, parse_rational(&len, "L")?, c));
            }
            let l = MultiplicityArray::from_entries(rank, &entries)?;
            let mut nu = Vec::new();
            for rows in doc.nu {
                let mut level = Vec::new();
                for (len, rig) in rows {
                    level.push(Row::new(parse_rational(&len, "nu")?, parse_rational(&rig, "nu")?));
                }
                nu.push(level);
            }
            Ok(Document::Rc(RiggedConfig::new(l, nu)?))
        }
        other => Err(CliError::Parse(format!("field kind: unknown kind {other:?}"))),
    }
}

/// Parses `RxS,RxS,...` (leftmost factor first); `S` may be rational.
pub fn parse_shape(text: &str) -> CliResult<Vec<(usize, Q)>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            let (r, s) = part
                .trim()
                .split_once('x')
                .ok_or_else(|| CliError::Parse(format!("shape factor {part:?} is not RxS")))?;
            let r: usize = r.trim().parse().map_err(|_| CliError::Parse(format!("shape factor {part:?}: bad r")))?;
            Ok((r, parse_rational(s, "shape")?))
        })
        .collect()
}

fn integral_shape(rank: Rank, factors: &[(usize, Q)]) -> CliResult<TensorShape> {
    let mut out = Vec::new();
    for &(r, s) in factors {
        if !s.is_integer() || s <= q(0) {
            return Err(Error::NotIntegral.into());
        }
        out.push((r, s.to_integer() as usize));
    }
    Ok(TensorShape::new(rank, out)?)
}

/// Parses `a:len[:count],...`.
pub fn parse_multiplicities(rank: Rank, text: &str) -> CliResult<MultiplicityArray> {
    let mut entries = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let fields: Vec<&str> = part.split(':').collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(CliError::Parse(format!("multiplicity entry {part:?} is not a:len[:count]")));
        }
        let a: usize = fields[0].trim().parse().map_err(|_| CliError::Parse(format!("entry {part:?}: bad level")))?;
        let len = parse_rational(fields[1], "L")?;
        let count: u64 = match fields.get(2) {
            Some(c) => c.trim().parse().map_err(|_| CliError::Parse(format!("entry {part:?}: bad count")))?,
            None => 1,
        };
        entries.push((a, len, count));
    }
    Ok(MultiplicityArray::from_entries(rank, &entries)?)
}

#[derive(Parser, Debug)]
#[command(name = "kss", about = "Paths, rigged configurations and the KSS bijection in type A_n^(1)")]
struct Cli {
    /// Read the input document from this file instead of stdin.
    #[arg(long = "in", global = true)]
    input: Option<String>,
    /// Write the output to this file instead of stdout.
    #[arg(long = "out", global = true)]
    output: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Compact, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Path to rigged configuration.
    Phi,
    /// Rigged configuration to path of the given shape.
    PhiInv {
        #[arg(long)]
        shape: String,
    },
    /// Rational path to rational rigged configuration.
    PhiQ,
    /// Combinatorial R at position `pos` (counted from the right).
    RMatrix {
        #[arg(long)]
        pos: usize,
    },
    /// Transpose of a highest-weight path or rigged configuration.
    Transpose {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Similarity map S_m.
    Stretch {
        #[arg(long)]
        m: String,
    },
    Delta,
    DeltaInv {
        #[arg(long)]
        letter: Letter,
    },
    Beta {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: String,
        #[arg(long)]
        inverse: bool,
    },
    Gamma {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: String,
        #[arg(long)]
        m: String,
        #[arg(long)]
        inverse: bool,
    },
    /// All highest-weight paths of a shape, one document per line.
    EnumeratePaths {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: usize,
    },
    /// All rigged configurations of a multiplicity array, one document per line.
    EnumerateRcs {
        #[arg(long = "L")]
        l: String,
        #[arg(long)]
        n: usize,
    },
    Weight,
    /// Runs a property suite and prints its report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_boxes: usize,
        /// Comma separated stretch factors.
        #[arg(long, default_value = "2,3")]
        m: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

/// Output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> CliResult<Document> {
    let text = match &cli.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| CliError::Io(e.to_string()))?;
            s
        }
    };
    parse_document(&text)
}

fn expect_path(doc: Document) -> CliResult<Path> {
    match doc {
        Document::Path(b) => Ok(b),
        Document::RationalPath(b) => Ok(b.to_path()?),
        Document::Rc(_) => Err(CliError::Parse("expected a path document".into())),
    }
}

fn expect_rc(doc: Document) -> CliResult<RiggedConfig> {
    match doc {
        Document::Rc(rc) => Ok(rc),
        _ => Err(CliError::Parse("expected an rc document".into())),
    }
}

fn weight_text(w: &Weight, format: Format) -> String {
    to_text(
        &WeightDoc {
            kind: "weight",
            n: w.rank(),
            fundamental: w.fundamental().iter().map(format_q).collect(),
            root: w.root().iter().map(format_q).collect(),
            epsilon: w.epsilon().iter().map(format_q).collect(),
        },
        format,
    )
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> CliResult<String> {
    let f = cli.format;
    let rc_text = |rc: &RiggedConfig| serialize_document(&Document::Rc(rc.clone()), f);
    match &cli.command {
        Command::Phi => {
            let b = expect_path(read_input(cli, stdin)?)?;
            Ok(rc_text(&phi(&b)?))
        }
        Command::PhiInv { shape } => {
            let rc = expect_rc(read_input(cli, stdin)?)?;
            let factors = parse_shape(shape)?;
            if rc.is_integral() && factors.iter().all(|(_, s)| s.is_integer()) {
                let shape = integral_shape(rc.rank(), &factors)?;
                Ok(serialize_document(&Document::Path(phi_inv(&rc, &shape)?), f))
            } else {
                Ok(serialize_document(&Document::RationalPath(phi_q_inv(&rc, &factors)?), f))
            }
        }
        Command::PhiQ => {
            let b = match read_input(cli, stdin)? {
                Document::Path(b) => RationalPath::from_path(&b),
                Document::RationalPath(b) => b,
                Document::Rc(_) => return Err(CliError::Parse("expected a path document".into())),
            };
            Ok(rc_text(&phi_q(&b)?))
        }
        Command::RMatrix { pos } => {
            let b = expect_path(read_input(cli, stdin)?)?;
            Ok(serialize_document(&Document::Path(r_at(&b, *pos)?), f))
        }
        Command::Transpose { n } => match read_input(cli, stdin)? {
            Document::Rc(rc) => {
                let out = match n {
                    Some(n) => rc.transpose_at_rank(rank_of(*n)?)?,
                    None => rc.transpose()?,
                };
                Ok(rc_text(&out))
            }
            doc => {
                let b = expect_path(doc)?;
                let out = match n {
                    Some(n) => b.tr_at_rank(rank_of(*n)?)?,
                    None => b.tr()?,
                };
                Ok(serialize_document(&Document::Path(out), f))
            }
        },
        Command::Stretch { m } => {
            let m = parse_rational(m, "m")?;
            if m <= q(0) {
                return Err(CliError::Parse("field m: stretch factor must be positive".into()));
            }
            match read_input(cli, stdin)? {
                Document::Rc(rc) => Ok(rc_text(&rc.stretch(m))),
                Document::Path(b) if m.is_integer() => {
                    Ok(serialize_document(&Document::Path(b.stretch(m.to_integer() as usize)), f))
                }
                Document::Path(b) => Ok(serialize_document(&Document::RationalPath(b.stretch_rational(m)), f)),
                Document::RationalPath(b) => Ok(serialize_document(&Document::RationalPath(b.stretch(m)), f)),
            }
        }
        Command::Delta => {
            let rc = expect_rc(read_input(cli, stdin)?)?;
            let (out, letter) = rc.delta()?;
            Ok(to_text(&DeltaDoc { letter, rc: rc_doc(&out) }, f))
        }
        Command::DeltaInv { letter } => {
            let rc = expect_rc(read_input(cli, stdin)?)?;
            Ok(rc_text(&rc.delta_inv(*letter)?))
        }
        Command::Beta { r, s, inverse } => {
            let rc = expect_rc(read_input(cli, stdin)?)?;
            let s = parse_rational(s, "s")?;
            let out = if *inverse { rc.beta_inv(*r, s)? } else { rc.beta(*r, s)? };
            Ok(rc_text(&out))
        }
        Command::Gamma { r, s, m, inverse } => {
            let rc = expect_rc(read_input(cli, stdin)?)?;
            let (s, m) = (parse_rational(s, "s")?, parse_rational(m, "m")?);
            let out = if *inverse { rc.gamma_inv(*r, s, m)? } else { rc.gamma(*r, s, m)? };
            Ok(rc_text(&out))
        }
        Command::EnumeratePaths { shape, n } => {
            let shape = integral_shape(rank_of(*n)?, &parse_shape(shape)?)?;
            Ok(enumerate_paths(&shape)?
                .into_iter()
                .map(|b| serialize_document(&Document::Path(b), f))
                .collect())
        }
        Command::EnumerateRcs { l, n } => {
            let l = parse_multiplicities(rank_of(*n)?, l)?;
            Ok(enumerate_rcs(&l)?.iter().map(rc_text).collect())
        }
        Command::Weight => {
            let w = match read_input(cli, stdin)? {
                Document::Path(b) => b.weight(),
                Document::RationalPath(b) => b.weight(),
                Document::Rc(rc) => rc.weight(),
            };
            Ok(weight_text(&w, f))
        }
        Command::Verify { suite, n, max_boxes, m, seed, samples } => {
            let suite: Suite = suite.parse().map_err(CliError::Parse)?;
            let m = m
                .split(',')
                .map(|x| x.trim().parse::<usize>().ok().filter(|&v| v >= 1))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| CliError::Parse(format!("field m: {m:?} is not a list of positive integers")))?;
            let config = SuiteConfig { n: *n, max_boxes: *max_boxes, m, seed: *seed, samples: *samples };
            let report = run_suite(suite, &config)?;
            let text = to_text(&report, f);
            if report.passed() {
                Ok(text)
            } else {
                Err(CliError::Suite(text))
            }
        }
    }
}

/// Runs one command line (`args[0]` is the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(text) => match &cli.output {
            Some(path) => match std::fs::write(path, &text) {
                Ok(()) => Outcome::default(),
                Err(e) => {
                    let err = CliError::Io(format!("{path}: {e}"));
                    Outcome { stdout: String::new(), stderr: format!("{err}\n"), code: err.exit_code() }
                }
            },
            None => Outcome { stdout: text, stderr: String::new(), code: 0 },
        },
        Err(CliError::Suite(report)) => Outcome {
            stdout: report,
            stderr: "VerificationFailed: suite reported failures\n".into(),
            code: 3,
        },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("{e}\n"), code: e.exit_code() },
    }
}
