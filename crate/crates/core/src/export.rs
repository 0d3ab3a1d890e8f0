//! JSON documents for Kostka systems and phyla, and plain-text tables.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinat::{BiPartition, Partition};
use crate::exactalg::text::parse_ratfun;
use crate::exactalg::{ExactAlgError, QRatFun, RatMatrix};
use crate::shoji::{Engine, KostkaSystem, SystemParams};
use crate::symbols::{a_value_of, AValue, Phyla, SymbolError};
use crate::weylchar::{Family, IrrLabel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExportError {
    #[error("bad label `{0}`")]
    Label(String),
    #[error("matrix or block layout does not match the labels")]
    Shape,
    #[error("field `{0}` is missing or invalid for this family")]
    Field(&'static str),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Exact(#[from] ExactAlgError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

impl From<serde_json::Error> for ExportError {
    fn from(e: serde_json::Error) -> Self {
        ExportError::Json(e.to_string())
    }
}

/// Labels for which the `a`-value of a block can be recomputed.
pub trait Phylum: IrrLabel {
    fn a_value(&self, params: &SystemParams) -> Result<AValue, ExportError>;
}

impl Phylum for Partition {
    fn a_value(&self, _: &SystemParams) -> Result<AValue, ExportError> {
        Ok(AValue::integer(Partition::a_value(self) as i64))
    }
}

impl Phylum for BiPartition {
    fn a_value(&self, params: &SystemParams) -> Result<AValue, ExportError> {
        let r = params.r.ok_or(ExportError::Field("r"))?;
        let s0 = params.s0.clone().ok_or(ExportError::Field("s0"))?;
        Ok(a_value_of(self, r, s0, params.eps_sign)?)
    }
}

/// `K` entries are written in `q` (`t = q^2`) so that every entry is exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDoc {
    pub family: Family,
    pub n: usize,
    pub r: Option<usize>,
    pub s0: Option<String>,
    pub eps_sign: i8,
    pub engine: Engine,
    pub labels: Vec<String>,
    pub blocks: Vec<Vec<usize>>,
    #[serde(rename = "K")]
    pub k: Vec<Vec<String>>,
    #[serde(rename = "Lambda")]
    pub lambda: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhylaDoc {
    pub n: usize,
    pub r: Option<usize>,
    pub s0: Option<String>,
    pub eps_sign: i8,
    pub a_values: Vec<String>,
    pub blocks: Vec<Vec<String>>,
}

fn matrix_text(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(QRatFun::to_string).collect()).collect()
}

fn matrix_parse(rows: &[Vec<String>], n: usize) -> Result<RatMatrix, ExportError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(ExportError::Shape);
    }
    let parsed = rows.iter().map(|r| r.iter().map(|e| parse_ratfun(e)).collect()).collect::<Result<Vec<Vec<_>>, _>>()?;
    Ok(RatMatrix::from_rows(parsed)?)
}

pub fn phyla_doc<L: IrrLabel>(params: &SystemParams, phyla: &Phyla<L>) -> PhylaDoc {
    PhylaDoc {
        n: params.n,
        r: params.r,
        s0: params.s0.as_ref().map(BigRational::to_string),
        eps_sign: params.eps_sign,
        a_values: phyla.a_values.iter().map(AValue::to_string).collect(),
        blocks: phyla.blocks.iter().map(|b| b.iter().map(L::to_string).collect()).collect(),
    }
}

pub fn system_doc<L: IrrLabel>(ks: &KostkaSystem<L>) -> SystemDoc {
    let mut blocks = Vec::new();
    for r in ks.phyla.ranges() {
        blocks.push(r.collect());
    }
    SystemDoc {
        family: ks.params.family,
        n: ks.params.n,
        r: ks.params.r,
        s0: ks.params.s0.as_ref().map(BigRational::to_string),
        eps_sign: ks.params.eps_sign,
        engine: ks.engine,
        labels: ks.labels().iter().map(L::to_string).collect(),
        blocks,
        k: matrix_text(&ks.k),
        lambda: matrix_text(&ks.lambda),
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, ExportError> {
    let bad = || ExportError::Field("s0");
    let s = s.trim();
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let num: num_bigint::BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: num_bigint::BigInt = den.trim().parse().map_err(|_| bad())?;
    if den == 0.into() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn params_of(doc: &SystemDoc) -> Result<SystemParams, ExportError> {
    if !(-1..=1).contains(&doc.eps_sign) {
        return Err(ExportError::Field("eps_sign"));
    }
    match doc.family {
        Family::A => Ok(SystemParams::type_a(doc.n)),
        Family::BC => {
            let r = doc.r.ok_or(ExportError::Field("r"))?;
            let s0 = parse_rational(doc.s0.as_deref().ok_or(ExportError::Field("s0"))?)?;
            Ok(SystemParams::bc(doc.n, r, s0, doc.eps_sign))
        }
    }
}

pub fn system_from_doc<L: Phylum>(doc: &SystemDoc) -> Result<KostkaSystem<L>, ExportError> {
    if doc.family != L::FAMILY {
        return Err(ExportError::Field("family"));
    }
    let params = params_of(doc)?;
    let labels = doc.labels.iter().map(|s| s.parse::<L>().map_err(|_| ExportError::Label(s.clone()))).collect::<Result<Vec<L>, _>>()?;
    let flat: Vec<usize> = doc.blocks.iter().flatten().copied().collect();
    if flat != (0..labels.len()).collect::<Vec<_>>() || doc.blocks.iter().any(Vec::is_empty) {
        return Err(ExportError::Shape);
    }
    let blocks: Vec<Vec<L>> = doc.blocks.iter().map(|b| b.iter().map(|&i| labels[i].clone()).collect()).collect();
    let a_values = blocks.iter().map(|b| b[0].a_value(&params)).collect::<Result<_, _>>()?;
    Ok(KostkaSystem {
        params,
        engine: doc.engine,
        phyla: Phyla { blocks, a_values },
        k: matrix_parse(&doc.k, labels.len())?,
        lambda: matrix_parse(&doc.lambda, labels.len())?,
    })
}

pub fn system_to_json<L: IrrLabel>(ks: &KostkaSystem<L>) -> String {
    serde_json::to_string_pretty(&system_doc(ks)).expect("documents serialize")
}

pub fn system_from_json<L: Phylum>(text: &str) -> Result<KostkaSystem<L>, ExportError> {
    system_from_doc(&serde_json::from_str(text)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    T,
    Q,
}

/// Entry in `t` when it is an even polynomial, otherwise in `q`.
pub fn entry_text(e: &QRatFun, var: Var) -> String {
    if var == Var::T {
        if let Some(s) = e.as_poly().and_then(|p| p.to_t_string()) {
            return s;
        }
    }
    e.to_string()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// `K` as CSV with a header row of labels.
pub fn render_csv<L: IrrLabel>(ks: &KostkaSystem<L>, var: Var) -> String {
    let labels: Vec<String> = ks.labels().iter().map(L::to_string).collect();
    let mut out = String::from("label");
    for l in &labels {
        out.push(',');
        out.push_str(&csv_field(l));
    }
    out.push('\n');
    for (i, l) in labels.iter().enumerate() {
        out.push_str(&csv_field(l));
        for e in ks.k.row(i) {
            out.push(',');
            out.push_str(&csv_field(&entry_text(e, var)));
        }
        out.push('\n');
    }
    out
}

/// Aligned table of `K` followed by the graded characters of its rows.
pub fn render_pretty<L: IrrLabel>(ks: &KostkaSystem<L>, var: Var) -> String {
    let labels: Vec<String> = ks.labels().iter().map(L::to_string).collect();
    let cells: Vec<Vec<String>> = (0..labels.len()).map(|i| ks.k.row(i).iter().map(|e| entry_text(e, var)).collect()).collect();
    let head = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..labels.len())
        .map(|j| cells.iter().map(|r| r[j].chars().count()).chain([labels[j].chars().count()]).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    let s = match &ks.params.s0 {
        Some(s0) => match ks.params.eps_sign {
            0 => format!(" s={s0}"),
            e if e > 0 => format!(" s={s0}+"),
            _ => format!(" s={s0}-"),
        },
        None => String::new(),
    };
    let _ = writeln!(out, "{} n={}{} engine={}", ks.params.family, ks.params.n, s, ks.engine);
    let _ = write!(out, "{:head$}", "");
    for (l, w) in labels.iter().zip(&widths) {
        let _ = write!(out, "  {l:>w$}");
    }
    out.push('\n');
    for (l, row) in labels.iter().zip(&cells) {
        let _ = write!(out, "{l:>head$}");
        for (c, w) in row.iter().zip(&widths) {
            let _ = write!(out, "  {c:>w$}");
        }
        out.push('\n');
    }
    out.push('\n');
    for (i, l) in labels.iter().enumerate() {
        let mut terms = Vec::new();
        for (j, m) in labels.iter().enumerate() {
            let e = ks.k.get(i, j);
            if e.is_zero() {
                continue;
            }
            let c = entry_text(e, var);
            terms.push(match (e.is_one(), c.contains(' ')) {
                (true, _) => format!("[{m}]"),
                (false, true) => format!("({c})[{m}]"),
                (false, false) => format!("{c}[{m}]"),
            });
        }
        let _ = writeln!(out, "gch K_{l} = {}", terms.join(" + "));
    }
    out
}
