use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::classes::{conjugacy_classes, CycleType};
use super::table::{char_table, IrrLabel};
use super::{Family, GroupSpec, WeylError};

/// A direct factor of a standard parabolic-type subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    /// `𝔖_k`, embedded through positive cycles.
    S(usize),
    /// `W_k`
    W(usize),
}

impl Factor {
    fn rank(&self) -> usize {
        match *self {
            Factor::S(k) | Factor::W(k) => k,
        }
    }

    fn classes(&self) -> Vec<(CycleType, BigInt)> {
        let (family, k) = match *self {
            Factor::S(k) => (Family::A, k),
            Factor::W(k) => (Family::BC, k),
        };
        conjugacy_classes(family, k)
            .into_iter()
            .map(|c| {
                let z = c.centralizer(family);
                (c, z)
            })
            .collect()
    }
}

/// `Ind_H^G (χ_1 ⊠ … ⊠ χ_k)` where `H = Π factors` and `chi[i]` is a class
/// function on factor `i` in the order of [`conjugacy_classes`].
pub fn induce_character(g: GroupSpec, factors: &[Factor], chi: &[Vec<BigRational>]) -> Result<Vec<BigRational>, WeylError> {
    if factors.iter().map(Factor::rank).sum::<usize>() != g.n || chi.len() != factors.len() {
        return Err(WeylError::BadSubgroup);
    }
    if g.family == Family::A && factors.iter().any(|f| matches!(f, Factor::W(_))) {
        return Err(WeylError::BadSubgroup);
    }
    let target = conjugacy_classes(g.family, g.n);
    let index: HashMap<&CycleType, usize> = target.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let factor_classes: Vec<_> = factors.iter().map(Factor::classes).collect();
    for (f, c) in chi.iter().zip(&factor_classes) {
        if f.len() != c.len() {
            return Err(WeylError::BadSubgroup);
        }
    }

    let mut acc = vec![BigRational::zero(); target.len()];
    let mut pick = vec![0usize; factors.len()];
    loop {
        let mut value = BigRational::one();
        let mut z = BigInt::one();
        let mut cycles = Vec::new();
        for (i, &j) in pick.iter().enumerate() {
            let (c, zc) = &factor_classes[i][j];
            value *= &chi[i][j];
            z *= zc;
            cycles.extend(c.cycles());
        }
        if !value.is_zero() {
            let fused = CycleType::from_cycles(&cycles);
            acc[index[&fused]] += value / BigRational::from_integer(z);
        }
        // odometer over factor classes
        let mut i = 0;
        loop {
            if i == pick.len() {
                return Ok(acc
                    .into_iter()
                    .zip(&target)
                    .map(|(v, c)| v * BigRational::from_integer(c.centralizer(g.family)))
                    .collect());
            }
            pick[i] += 1;
            if pick[i] < factor_classes[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// `Ind_H^G triv`
pub fn permutation_character(g: GroupSpec, factors: &[Factor]) -> Result<Vec<BigRational>, WeylError> {
    let ones: Vec<Vec<BigRational>> = factors.iter().map(|f| vec![BigRational::one(); f.classes().len()]).collect();
    induce_character(g, factors, &ones)
}

/// Decomposition of `Ind (L_a ⊠ L_b)` from `S_{|a|} × S_{|b|}` (type A,
/// Littlewood-Richardson) or `W_{|a|} × W_{|b|}` (type BC).
pub fn induction_product<L: IrrLabel>(a: &L, b: &L) -> Result<Vec<(L, u64)>, WeylError> {
    let (na, nb) = (a.rank(), b.rank());
    let factor = |k| match L::FAMILY {
        Family::A => Factor::S(k),
        Family::BC => Factor::W(k),
    };
    let ta = char_table::<L>(na)?;
    let tb = char_table::<L>(nb)?;
    let g = char_table::<L>(na + nb)?;
    let f = induce_character(
        GroupSpec::new(L::FAMILY, na + nb),
        &[factor(na), factor(nb)],
        &[ta.row_rational(a)?, tb.row_rational(b)?],
    )?;
    g.decompose(&f)
}
