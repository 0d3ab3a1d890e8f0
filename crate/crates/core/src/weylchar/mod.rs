//! Characters of `𝔖_n` and `W_n = 𝔖_n ⋉ (ℤ/2)^n`: classes, tables,
//! induction, tensor products, fake degrees and the Ω matrix.

mod cache;
mod charge;
mod classes;
mod coinv;
mod graded;
mod induce;
mod mn;
mod table;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cache::{cache_dir, write_atomic, CACHE_ENV, CACHE_VERSION};
pub use charge::{charge, graded_char_m_lambda, kostka_foulkes, ssyt};
pub use classes::{conjugacy_classes, CycleType};
pub use coinv::{coinvariant_multiplicity, omega_class, omega_matrix};
pub use graded::GradedCharacter;
pub use induce::{induce_character, induction_product, permutation_character, Factor};
pub use mn::{remove_rim_hooks, MnMemo};
pub use table::{char_table, max_rank, tensor_decompose, CharTable, IrrLabel, MAX_RANK_A, MAX_RANK_BC};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("rank {0} exceeds the supported bound")]
    RankTooLarge(usize),
    #[error("subgroup is not a standard product of S_k and W_k factors")]
    BadSubgroup,
    #[error("fake degree did not reduce to a polynomial")]
    NonPolynomialResult,
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("class function is not a character")]
    NotACharacter,
    #[error("labels of different rank")]
    RankMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    BC,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::BC => "BC",
        })
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "BC" | "B" | "C" => Ok(Family::BC),
            _ => Err(format!("unknown family `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub family: Family,
    pub n: usize,
}

impl GroupSpec {
    pub fn new(family: Family, n: usize) -> Self {
        GroupSpec { family, n }
    }

    /// Degrees of the basic invariants; type A acts on the full
    /// `n`-dimensional permutation representation.
    pub fn degrees(&self) -> Vec<usize> {
        match self.family {
            Family::A => (1..=self.n).collect(),
            Family::BC => (1..=self.n).map(|i| 2 * i).collect(),
        }
    }

    /// Number of reflections, `Σ (d_i − 1)`.
    pub fn n_star(&self) -> usize {
        self.degrees().iter().map(|d| d - 1).sum()
    }

    pub fn order(&self) -> BigInt {
        self.degrees().iter().fold(BigInt::one(), |acc, &d| acc * BigInt::from(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(GroupSpec::new(Family::BC, 3).order(), BigInt::from(48));
        assert_eq!(GroupSpec::new(Family::A, 4).order(), BigInt::from(24));
        assert_eq!(GroupSpec::new(Family::BC, 2).n_star(), 4);
        assert_eq!(GroupSpec::new(Family::A, 3).n_star(), 3);
        for n in 0..=6 {
            let g = GroupSpec::new(Family::BC, n);
            assert_eq!(g.order(), char_table::<crate::combinat::BiPartition>(n).unwrap().order());
        }
    }

    #[test]
    fn family_text() {
        assert_eq!("bc".parse::<Family>().unwrap(), Family::BC);
        assert_eq!(Family::A.to_string(), "A");
        assert!("D".parse::<Family>().is_err());
    }
}
