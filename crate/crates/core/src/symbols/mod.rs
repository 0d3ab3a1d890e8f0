//! `(r,s)`-symbols, the `a`-function at `s ± ε`, similarity and strong
//! similarity classes, and phyla.

mod phyla;
mod strong;
mod symbol;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use phyla::{build_phyla, Phyla};
pub use strong::{strong_classes, StrongClass};
pub use symbol::{build_canonical, build_symbol, reconstruct, AValue, ParamEntry, SParam, Symbol};

use crate::combinat::BiPartition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("m is smaller than the number of parts")]
    MTooSmall,
    #[error("symbols built with different parameters")]
    ParamMismatch,
    #[error("invalid symbol parameters")]
    BadParameter,
    #[error("flipping a run did not produce a symbol")]
    InvalidFlip,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupTag {
    Symplectic,
    OddOrthogonal,
    EvenOrthogonal,
}

impl GroupTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            GroupTag::Symplectic => "symplectic",
            GroupTag::OddOrthogonal => "odd-orthogonal",
            GroupTag::EvenOrthogonal => "even-orthogonal",
        }
    }
}

/// The classical group whose generalized Springer data `Z^{2,s}` encodes.
pub fn group_dictionary(s: u64) -> Result<GroupTag, SymbolError> {
    match s {
        0 => Err(SymbolError::BadParameter),
        s if s % 2 == 1 => Ok(GroupTag::Symplectic),
        s if s % 4 == 2 => Ok(GroupTag::OddOrthogonal),
        _ => Ok(GroupTag::EvenOrthogonal),
    }
}

pub fn a_s_value(sym: &Symbol) -> AValue {
    sym.a_value()
}

pub fn similar(x: &Symbol, y: &Symbol) -> Result<bool, SymbolError> {
    x.is_similar(y)
}

/// `a`-value of `bp` at `s0 + eps·ε` with the canonical `m`.
pub fn a_value_of(bp: &BiPartition, r: usize, s0: BigRational, eps: i8) -> Result<AValue, SymbolError> {
    Ok(build_canonical(bp, &SParam::new(r, s0, eps)?).a_value())
}
