use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::SymbolError;
use crate::combinat::{BiPartition, Partition};

/// Parameter `s = s0 + sign·ε` with `ε` a positive infinitesimal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SParam {
    pub r: usize,
    pub s0: BigRational,
    pub eps: i8,
}

impl SParam {
    pub fn new(r: usize, s0: BigRational, eps: i8) -> Result<Self, SymbolError> {
        if r == 0 || !(-1..=1).contains(&eps) {
            return Err(SymbolError::BadParameter);
        }
        Ok(SParam { r, s0, eps })
    }

    pub fn integer(r: usize, s: i64, eps: i8) -> Result<Self, SymbolError> {
        Self::new(r, BigRational::from_integer(s.into()), eps)
    }

    pub fn is_integral(&self) -> bool {
        self.s0.is_integer()
    }

    /// `n + ⌈s0/r⌉ + 2`
    pub fn canonical_m(&self, n: usize) -> usize {
        let q = &self.s0 / BigRational::from_integer(BigInt::from(self.r));
        let c = q.ceil().to_integer();
        let c: i64 = c.try_into().unwrap_or(i64::MAX / 4);
        n + c.max(0) as usize + 2
    }

    fn tie_sign(&self) -> i8 {
        if self.eps == 0 {
            1
        } else {
            self.eps
        }
    }
}

/// Entry `base + s_flag·s` of a symbol row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParamEntry {
    pub base: i64,
    pub s_flag: u8,
}

impl ParamEntry {
    pub fn value(&self, s0: &BigRational) -> BigRational {
        let b = BigRational::from_integer(self.base.into());
        if self.s_flag == 0 {
            b
        } else {
            b + s0
        }
    }

    /// Comparison at `s0 + sign·ε`.
    pub fn cmp_at(&self, other: &ParamEntry, p: &SParam) -> Ordering {
        self.value(&p.s0)
            .cmp(&other.value(&p.s0))
            .then_with(|| ((self.s_flag as i8) * p.eps).cmp(&((other.s_flag as i8) * p.eps)))
    }

    fn key(&self, p: &SParam) -> (BigRational, i8) {
        (self.value(&p.s0), self.s_flag as i8 * p.eps)
    }
}

/// `a_{s0 + sign·ε} = constant + eps_coeff·ε`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AValue {
    pub constant: BigRational,
    pub eps_coeff: i64,
}

impl AValue {
    pub fn integer(a: i64) -> Self {
        AValue { constant: BigRational::from_integer(a.into()), eps_coeff: 0 }
    }
}

impl fmt::Display for AValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.eps_coeff.cmp(&0) {
            Ordering::Equal => write!(f, "{}", self.constant),
            Ordering::Greater => write!(f, "{} + {}ε", self.constant, self.eps_coeff),
            Ordering::Less => write!(f, "{} - {}ε", self.constant, -self.eps_coeff),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbol {
    pub row0: Vec<ParamEntry>,
    pub row1: Vec<ParamEntry>,
    pub param: SParam,
    pub m: usize,
}

/// `Ψ_{r,s}(λ)` with `m + 1` entries per row.
pub fn build_symbol(bp: &BiPartition, param: &SParam, m: usize) -> Result<Symbol, SymbolError> {
    if m < bp.first.len().max(bp.second.len()) {
        return Err(SymbolError::MTooSmall);
    }
    let r = param.r as i64;
    let row = |p: &Partition, flag: u8| -> Vec<ParamEntry> {
        (1..=m)
            .map(|i| ParamEntry { base: p.part(i - 1) as i64 + r * (m + 1 - i) as i64, s_flag: flag })
            .chain(std::iter::once(ParamEntry { base: 0, s_flag: flag }))
            .collect()
    };
    Ok(Symbol { row0: row(&bp.first, 0), row1: row(&bp.second, 1), param: param.clone(), m })
}

pub fn build_canonical(bp: &BiPartition, param: &SParam) -> Symbol {
    build_symbol(bp, param, param.canonical_m(bp.size())).expect("canonical m is large enough")
}

impl Symbol {
    pub fn entries(&self) -> impl Iterator<Item = &ParamEntry> {
        self.row0.iter().chain(self.row1.iter())
    }

    /// Sorted comparison keys; equal exactly for similar symbols.
    pub fn similarity_key(&self) -> Vec<(BigRational, i8)> {
        let mut k: Vec<_> = self.entries().map(|e| e.key(&self.param)).collect();
        k.sort();
        k
    }

    /// `Σ min(a, b)` over unordered pairs of distinct positions, as
    /// `(value at s0, d/ds with ties resolved in the direction of ε)`.
    fn min_pair_sum(&self) -> (BigRational, i64) {
        let sign = self.param.tie_sign();
        let mut es: Vec<(BigRational, i8)> = self
            .entries()
            .map(|e| (e.value(&self.param.s0), e.s_flag as i8))
            .collect();
        es.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| (a.1 * sign).cmp(&(b.1 * sign))));
        let n = es.len();
        let mut constant = BigRational::zero();
        let mut slope = 0i64;
        for (i, (v, f)) in es.iter().enumerate() {
            let w = (n - 1 - i) as i64;
            constant += v * BigRational::from_integer(w.into());
            slope += *f as i64 * w;
        }
        (constant, slope)
    }

    pub fn a_value(&self) -> AValue {
        let base = build_symbol(&BiPartition::default(), &self.param, self.m).unwrap();
        let (c1, s1) = self.min_pair_sum();
        let (c0, s0) = base.min_pair_sum();
        AValue { constant: c1 - c0, eps_coeff: self.param.eps as i64 * (s1 - s0) }
    }

    pub fn is_similar(&self, other: &Symbol) -> Result<bool, SymbolError> {
        if self.param != other.param || self.m != other.m {
            return Err(SymbolError::ParamMismatch);
        }
        Ok(self.similarity_key() == other.similarity_key())
    }

    /// Integer rows (descending) at integral `s0`.
    pub fn integer_rows(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        if !self.param.is_integral() {
            return None;
        }
        let s: i64 = self.param.s0.to_integer().try_into().ok()?;
        let conv = |row: &[ParamEntry]| row.iter().map(|e| e.base + e.s_flag as i64 * s).collect();
        Some((conv(&self.row0), conv(&self.row1)))
    }

    /// Entries as rationals, rows separated.
    pub fn values(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        let s0 = &self.param.s0;
        (
            self.row0.iter().map(|e| e.value(s0)).collect(),
            self.row1.iter().map(|e| e.value(s0)).collect(),
        )
    }
}

/// Inverse of `Ψ_{r,s}` on integer rows: `None` if the rows are not a symbol.
pub fn reconstruct(row0: &[i64], row1: &[i64], r: i64, s: i64) -> Option<BiPartition> {
    let m = row0.len().checked_sub(1)?;
    if row1.len() != m + 1 || row0[m] != 0 || row1[m] != s {
        return None;
    }
    let strip = |row: &[i64], shift: i64| -> Option<Partition> {
        let parts: Vec<usize> = (1..=m)
            .map(|i| row[i - 1] - r * (m + 1 - i) as i64 - shift)
            .map(|v| usize::try_from(v).ok())
            .collect::<Option<_>>()?;
        Partition::from_padded(parts).ok()
    };
    Some(BiPartition::new(strip(row0, 0)?, strip(row1, s)?))
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.values();
        let show = |v: &[BigRational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "[{} / {}]", show(&a), show(&b))
    }
}
