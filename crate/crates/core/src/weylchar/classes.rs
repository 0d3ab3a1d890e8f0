use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::Family;
use crate::combinat::{partitions, Partition};
use crate::exactalg::QPoly;

/// Conjugacy class by signed cycle type: `pos` holds the lengths of the
/// positive cycles, `neg` those of the negative ones (always empty in type A).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    pub pos: Partition,
    pub neg: Partition,
}

impl CycleType {
    pub fn new(pos: Partition, neg: Partition) -> Self {
        CycleType { pos, neg }
    }

    pub fn identity(n: usize) -> Self {
        CycleType::new(Partition::column(n), Partition::empty())
    }

    pub fn size(&self) -> usize {
        self.pos.size() + self.neg.size()
    }

    /// Cycles as `(length, negative)`, longest first.
    pub fn cycles(&self) -> Vec<(usize, bool)> {
        let mut out: Vec<(usize, bool)> = self
            .pos
            .parts()
            .iter()
            .map(|&k| (k, false))
            .chain(self.neg.parts().iter().map(|&k| (k, true)))
            .collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    pub fn from_cycles(cycles: &[(usize, bool)]) -> Self {
        let mut pos: Vec<usize> = cycles.iter().filter(|c| !c.1).map(|c| c.0).collect();
        let mut neg: Vec<usize> = cycles.iter().filter(|c| c.1).map(|c| c.0).collect();
        pos.sort_unstable_by(|a, b| b.cmp(a));
        neg.sort_unstable_by(|a, b| b.cmp(a));
        CycleType::new(Partition::new(pos).unwrap(), Partition::new(neg).unwrap())
    }

    /// Order of the centralizer of an element of this class.
    pub fn centralizer(&self, family: Family) -> BigInt {
        let z = |p: &Partition| -> BigInt {
            let mut acc = BigInt::one();
            for (k, &mk) in p.multiplicities().iter().enumerate().skip(1) {
                for j in 1..=mk {
                    acc *= BigInt::from(k) * BigInt::from(j);
                }
            }
            acc
        };
        match family {
            Family::A => z(&self.pos),
            Family::BC => {
                let cycles = self.pos.len() + self.neg.len();
                z(&self.pos) * z(&self.neg) * (BigInt::one() << cycles)
            }
        }
    }

    /// `det(1 - t·w)` on the reflection representation, in `q` with `t = q²`.
    pub fn char_poly(&self) -> QPoly {
        let mut acc = QPoly::one();
        for (k, negative) in self.cycles() {
            let tk = QPoly::t_pow(k);
            acc = if negative { acc * (QPoly::one() + tk) } else { acc * (QPoly::one() - tk) };
        }
        acc
    }

    /// Sign of the underlying permutation.
    pub fn perm_sign(&self) -> i64 {
        let odd = self.cycles().iter().filter(|c| c.0 % 2 == 0).count();
        if odd % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `(-1)^{number of negative cycles}`
    pub fn neg_sign(&self) -> i64 {
        if self.neg.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.pos, self.neg)
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

pub fn conjugacy_classes(family: Family, n: usize) -> Vec<CycleType> {
    match family {
        Family::A => partitions(n).into_iter().map(|p| CycleType::new(p, Partition::empty())).collect(),
        Family::BC => crate::combinat::bipartitions(n)
            .into_iter()
            .map(|b| CycleType::new(b.first, b.second))
            .collect(),
    }
}
