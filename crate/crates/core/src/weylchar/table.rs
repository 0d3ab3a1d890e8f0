use std::any::Any;
use std::collections::HashMap;
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cache;
use super::classes::{conjugacy_classes, CycleType};
use super::mn::MnMemo;
use super::{Family, WeylError};
use crate::combinat::{bipartitions, partitions, BiPartition, Partition};

pub const MAX_RANK_A: usize = 8;
pub const MAX_RANK_BC: usize = 6;

/// Labels of irreducible characters of `𝔖_n` (partitions) or `W(BC_n)`
/// (bipartitions).
pub trait IrrLabel:
    Clone + Eq + Ord + Hash + Display + Debug + FromStr + Send + Sync + 'static
{
    const FAMILY: Family;
    fn rank(&self) -> usize;
    fn all(n: usize) -> Vec<Self>;
    fn triv(n: usize) -> Self;
    fn sgn(n: usize) -> Self;
    fn character(&self, class: &CycleType, memo: &mut MnMemo) -> i64;
}

impl IrrLabel for Partition {
    const FAMILY: Family = Family::A;

    fn rank(&self) -> usize {
        self.size()
    }

    fn all(n: usize) -> Vec<Self> {
        partitions(n)
    }

    fn triv(n: usize) -> Self {
        Partition::row(n)
    }

    fn sgn(n: usize) -> Self {
        Partition::column(n)
    }

    fn character(&self, class: &CycleType, memo: &mut MnMemo) -> i64 {
        memo.type_a(self, class.pos.parts())
    }
}

impl IrrLabel for BiPartition {
    const FAMILY: Family = Family::BC;

    fn rank(&self) -> usize {
        self.size()
    }

    fn all(n: usize) -> Vec<Self> {
        bipartitions(n)
    }

    fn triv(n: usize) -> Self {
        BiPartition::new(Partition::empty(), Partition::row(n))
    }

    fn sgn(n: usize) -> Self {
        BiPartition::new(Partition::column(n), Partition::empty())
    }

    fn character(&self, class: &CycleType, memo: &mut MnMemo) -> i64 {
        memo.type_bc(&self.first, &self.second, &class.cycles())
    }
}

/// Character table with rows in label enumeration order.
#[derive(Debug)]
pub struct CharTable<L> {
    pub n: usize,
    pub labels: Vec<L>,
    pub classes: Vec<CycleType>,
    pub centralizers: Vec<BigInt>,
    pub values: Vec<Vec<i64>>,
    index: HashMap<L, usize>,
    class_index: HashMap<CycleType, usize>,
}

impl<L: IrrLabel> CharTable<L> {
    pub fn compute(n: usize) -> Self {
        let labels = L::all(n);
        let classes = conjugacy_classes(L::FAMILY, n);
        let mut memo = MnMemo::default();
        let values = labels
            .iter()
            .map(|l| classes.iter().map(|c| l.character(c, &mut memo)).collect())
            .collect();
        Self::assemble(n, labels, classes, values)
    }

    pub(crate) fn assemble(n: usize, labels: Vec<L>, classes: Vec<CycleType>, values: Vec<Vec<i64>>) -> Self {
        let centralizers = classes.iter().map(|c| c.centralizer(L::FAMILY)).collect();
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let class_index = classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        CharTable { n, labels, classes, centralizers, values, index, class_index }
    }

    pub fn family(&self) -> Family {
        L::FAMILY
    }

    pub fn index_of(&self, l: &L) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn class_index_of(&self, c: &CycleType) -> Option<usize> {
        self.class_index.get(c).copied()
    }

    pub fn row(&self, l: &L) -> Result<&[i64], WeylError> {
        let i = self.index_of(l).ok_or_else(|| WeylError::UnknownLabel(l.to_string()))?;
        Ok(&self.values[i])
    }

    pub fn row_rational(&self, l: &L) -> Result<Vec<BigRational>, WeylError> {
        Ok(self.row(l)?.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    pub fn identity_class(&self) -> usize {
        self.class_index[&CycleType::identity(self.n)]
    }

    pub fn dim(&self, l: &L) -> Result<i64, WeylError> {
        Ok(self.row(l)?[self.identity_class()])
    }

    pub fn order(&self) -> BigInt {
        self.centralizers[self.identity_class()].clone()
    }

    /// `⟨f, g⟩ = Σ_c f(c) g(c) / z_c` for real-valued class functions.
    pub fn inner(&self, f: &[BigRational], g: &[BigRational]) -> BigRational {
        f.iter()
            .zip(g)
            .zip(&self.centralizers)
            .map(|((a, b), z)| a * b / BigRational::from_integer(z.clone()))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// Multiplicities of the irreducibles in a class function; `NotACharacter`
    /// unless they are nonnegative integers.
    pub fn decompose(&self, f: &[BigRational]) -> Result<Vec<(L, u64)>, WeylError> {
        let mut out = Vec::new();
        for (l, row) in self.labels.iter().zip(&self.values) {
            let r: Vec<BigRational> = row.iter().map(|&v| BigRational::from_integer(v.into())).collect();
            let m = self.inner(f, &r);
            if !m.is_integer() || m.is_negative() {
                return Err(WeylError::NotACharacter);
            }
            if !m.is_zero() {
                let m: u64 = m.to_integer().try_into().map_err(|_| WeylError::NotACharacter)?;
                out.push((l.clone(), m));
            }
        }
        Ok(out)
    }

    pub fn tensor_decompose(&self, a: &L, b: &L) -> Result<Vec<(L, u64)>, WeylError> {
        let (ra, rb) = (self.row(a)?, self.row(b)?);
        let prod: Vec<BigRational> =
            ra.iter().zip(rb).map(|(&x, &y)| BigRational::from_integer((x * y).into())).collect();
        self.decompose(&prod)
    }

    pub fn is_orthonormal(&self) -> bool {
        let rows: Vec<Vec<BigRational>> = self
            .values
            .iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        for (i, a) in rows.iter().enumerate() {
            for (j, b) in rows.iter().enumerate() {
                let expected = if i == j { BigRational::one() } else { BigRational::zero() };
                if self.inner(a, b) != expected {
                    return false;
                }
            }
        }
        true
    }

    /// `Σ_χ χ(c) χ(c') = δ_{cc'} z_c`.
    pub fn columns_orthogonal(&self) -> bool {
        let k = self.classes.len();
        for c in 0..k {
            for d in 0..k {
                let s: i64 = self.values.iter().map(|r| r[c] * r[d]).sum();
                let expected = if c == d { self.centralizers[c].clone() } else { BigInt::zero() };
                if BigInt::from(s) != expected {
                    return false;
                }
            }
        }
        true
    }
}

type Slot = Arc<OnceLock<Arc<dyn Any + Send + Sync>>>;

fn slots() -> &'static Mutex<HashMap<(Family, usize), Slot>> {
    static SLOTS: OnceLock<Mutex<HashMap<(Family, usize), Slot>>> = OnceLock::new();
    SLOTS.get_or_init(Default::default)
}

pub fn max_rank(family: Family) -> usize {
    match family {
        Family::A => MAX_RANK_A,
        Family::BC => MAX_RANK_BC,
    }
}

/// Shared character table of rank `n`, built once per process (and read
/// from the disk cache when enabled).
pub fn char_table<L: IrrLabel>(n: usize) -> Result<Arc<CharTable<L>>, WeylError> {
    if n > max_rank(L::FAMILY) {
        return Err(WeylError::RankTooLarge(n));
    }
    let slot = {
        let mut map = slots().lock().unwrap();
        map.entry((L::FAMILY, n)).or_default().clone()
    };
    let any = slot.get_or_init(|| {
        let table: CharTable<L> = cache::load::<L>(n).unwrap_or_else(|| {
            let t = CharTable::<L>::compute(n);
            cache::store(&t);
            t
        });
        Arc::new(Arc::new(table))
    });
    Ok(any.downcast_ref::<Arc<CharTable<L>>>().expect("slot type is fixed by family").clone())
}

pub fn tensor_decompose<L: IrrLabel>(a: &L, b: &L) -> Result<Vec<(L, u64)>, WeylError> {
    if a.rank() != b.rank() {
        return Err(WeylError::RankMismatch);
    }
    char_table::<L>(a.rank())?.tensor_decompose(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::distance;

    fn bp(s: &str) -> BiPartition {
        s.parse().unwrap()
    }

    #[test]
    fn small_tables() {
        let a2 = CharTable::<Partition>::compute(2);
        let id = a2.identity_class();
        let sw = 1 - id;
        let rows: Vec<[i64; 2]> = a2.values.iter().map(|r| [r[id], r[sw]]).collect();
        assert_eq!(rows, vec![[1, 1], [1, -1]]);
        let b1 = CharTable::<BiPartition>::compute(1);
        assert_eq!(b1.labels, vec![bp("1|-"), bp("-|1")]);
        let triv = b1.row(&bp("-|1")).unwrap();
        assert!(triv.iter().all(|&v| v == 1));
    }

    #[test]
    fn orthogonality_all_ranks() {
        for n in 0..=MAX_RANK_A {
            let t = CharTable::<Partition>::compute(n);
            assert!(t.is_orthonormal() && t.columns_orthogonal(), "A{n}");
        }
        for n in 0..=MAX_RANK_BC {
            let t = CharTable::<BiPartition>::compute(n);
            assert!(t.is_orthonormal() && t.columns_orthogonal(), "BC{n}");
        }
    }

    #[test]
    fn b2_named_characters() {
        let t = CharTable::<BiPartition>::compute(2);
        let at = |l: &str| -> Vec<i64> {
            t.classes.iter().map(|c| t.row(&bp(l)).unwrap()[t.class_index_of(c).unwrap()]).collect()
        };
        let ones: Vec<i64> = t.classes.iter().map(|_| 1).collect();
        let perm: Vec<i64> = t.classes.iter().map(|c| c.perm_sign()).collect();
        let lsgn: Vec<i64> = t.classes.iter().map(|c| c.neg_sign()).collect();
        let sgn: Vec<i64> = perm.iter().zip(&lsgn).map(|(a, b)| a * b).collect();
        assert_eq!(at("-|2"), ones);
        assert_eq!(at("-|1,1"), perm);
        assert_eq!(at("2|-"), lsgn);
        assert_eq!(at("1,1|-"), sgn);
        let refl: Vec<i64> = t
            .classes
            .iter()
            .map(|c| c.pos.parts().iter().filter(|&&k| k == 1).count() as i64 - c.neg.parts().iter().filter(|&&k| k == 1).count() as i64)
            .collect();
        assert_eq!(at("1|1"), refl);
    }

    #[test]
    fn twists() {
        for n in 1..=4 {
            let t = char_table::<BiPartition>(n).unwrap();
            for l in &t.labels {
                let sgn = BiPartition::sgn(n);
                assert_eq!(t.tensor_decompose(l, &sgn).unwrap(), vec![(l.transpose(), 1)]);
                let lsgn = BiPartition::new(Partition::row(n), Partition::empty());
                assert_eq!(t.tensor_decompose(l, &lsgn).unwrap(), vec![(l.swap(), 1)]);
                let triv = BiPartition::triv(n);
                assert_eq!(t.tensor_decompose(&triv, l).unwrap(), vec![(l.clone(), 1)]);
            }
        }
    }

    #[test]
    fn pieri_b2_example() {
        let h = bp("1|1");
        let mut got: Vec<_> = tensor_decompose(&h, &bp("1|1")).unwrap();
        got.sort();
        let mut expected: Vec<_> = ["2|-", "1,1|-", "-|2", "-|1,1"].iter().map(|s| (bp(s), 1)).collect();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn pieri_matches_dot_neighbours() {
        for n in 1..=5 {
            let t = char_table::<BiPartition>(n).unwrap();
            let h = BiPartition::new(Partition::row(1), Partition::row(n - 1));
            for l in &t.labels {
                let mut got = t.tensor_decompose(&h, l).unwrap();
                got.sort();
                let expected: Vec<_> = l.dot_neighbours().into_iter().map(|m| (m, 1)).collect();
                assert_eq!(got, expected, "{l}");
                for (m, _) in &got {
                    assert_eq!(distance(l, m).unwrap(), 1);
                }
            }
        }
    }

    #[test]
    fn rank_bound() {
        assert!(matches!(char_table::<Partition>(MAX_RANK_A + 1), Err(WeylError::RankTooLarge(_))));
        assert!(matches!(char_table::<BiPartition>(MAX_RANK_BC + 1), Err(WeylError::RankTooLarge(_))));
    }
}
