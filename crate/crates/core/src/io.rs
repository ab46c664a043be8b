//! Text and JSON formats for codes, enumerators and class records.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::classify::ClassRecord;
use crate::code::KCode;
use crate::construct::BinaryCode;
use crate::enumerator::{CompleteWE, RationalWE, WeightEnum};
use crate::error::{Error, Result};
use crate::symbol::KSymbol;
use crate::word::KWord;

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Reads a code: `#` lines are comments, except `# n = N` which fixes the
/// length of a code with no generators; every other nonblank line is a
/// generator over `0abc`.
pub fn parse_code(text: &str) -> Result<KCode> {
    let mut declared = None;
    let mut gens: Vec<KWord> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(v) = comment.trim().strip_prefix("n =") {
                let n = v
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| parse_error(i + 1, 1, "bad length declaration"))?;
                declared = Some(n);
            }
            continue;
        }
        let offset = raw.len() - raw.trim_start().len();
        let mut symbols = Vec::with_capacity(line.len());
        for (j, ch) in line.chars().enumerate() {
            let s = KSymbol::from_char(ch)
                .map_err(|_| parse_error(i + 1, offset + j + 1, format!("invalid symbol `{ch}`")))?;
            symbols.push(s);
        }
        if let Some(first) = gens.first() {
            if first.len() != symbols.len() {
                return Err(parse_error(
                    i + 1,
                    1,
                    format!("generator has length {}, expected {}", symbols.len(), first.len()),
                ));
            }
        }
        let w = KWord::from_symbols(&symbols).map_err(|e| parse_error(i + 1, 1, e.to_string()))?;
        gens.push(w);
    }
    match (gens.first(), declared) {
        (Some(g), Some(n)) if g.len() != n => Err(Error::LengthMismatch {
            expected: n,
            found: g.len(),
        }),
        (Some(_), _) => KCode::span(&gens),
        (None, Some(n)) => Ok(KCode::zero(n)),
        (None, None) => Err(Error::EmptyGenerators),
    }
}

/// The code's reduced basis, preceded by its length.
pub fn emit_code(c: &KCode) -> String {
    format!("# n = {}\n{c}", c.len())
}

pub fn read_code(path: &Path) -> Result<KCode> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    parse_code(&text)
}

pub fn write_code(c: &KCode, path: &Path) -> Result<()> {
    fs::write(path, emit_code(c))
        .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))
}

/// Reads a binary code from lines over `01`.
pub fn parse_binary(text: &str) -> Result<BinaryCode> {
    text.parse()
}

pub fn emit_binary(b: &BinaryCode) -> String {
    b.to_string()
}

/// `{"n": n, "A": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeJson {
    pub n: usize,
    #[serde(rename = "A")]
    pub a: Vec<i64>,
}

impl WeJson {
    pub fn new(w: &WeightEnum) -> Result<Self> {
        let a = w
            .coeffs()
            .iter()
            .map(|c| c.to_i64().ok_or_else(|| Error::Precondition("coefficient exceeds i64".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(WeJson { n: w.n(), a })
    }
}

/// `{"n": n, "A": ["p/q", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalWeJson {
    pub n: usize,
    #[serde(rename = "A")]
    pub a: Vec<String>,
}

pub fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Precondition(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

impl RationalWeJson {
    pub fn new(w: &RationalWE) -> Self {
        RationalWeJson {
            n: w.n(),
            a: w.coeffs().iter().map(rational_string).collect(),
        }
    }
}

/// Sparse complete enumerator keyed by `"(i,j,k,l)"`, the counts of
/// `0, a, b, c`.
pub fn complete_json(w: &CompleteWE) -> BTreeMap<String, String> {
    w.poly
        .terms()
        .map(|(e, c)| (format!("({},{},{},{})", e[0], e[1], e[2], e[3]), c.to_string()))
        .collect()
}

/// One class of a classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub length: usize,
    pub even: bool,
    pub canonical_generators: Vec<String>,
    pub aut_order: u64,
    #[serde(rename = "A")]
    pub a: Vec<i64>,
    pub skeleton: String,
    pub children: Vec<usize>,
}

impl ClassJson {
    pub fn new(r: &ClassRecord) -> Result<Self> {
        Ok(ClassJson {
            length: r.n(),
            even: r.is_even,
            canonical_generators: r.code.basis().iter().map(|w| w.to_string()).collect(),
            aut_order: r
                .aut_order
                .to_u64()
                .ok_or_else(|| Error::Precondition("|Aut| exceeds u64".into()))?,
            a: WeJson::new(&r.we)?.a,
            skeleton: r.skeleton.to_string(),
            children: r.children.clone(),
        })
    }

    pub fn code(&self) -> Result<KCode> {
        let gens = self
            .canonical_generators
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<KWord>>>()?;
        if gens.is_empty() {
            Ok(KCode::zero(self.length))
        } else {
            KCode::span(&gens)
        }
    }
}
