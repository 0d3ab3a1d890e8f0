use std::collections::HashMap;
use std::hash::Hash;
use std::ops::Range;

use num_rational::BigRational;

use super::{build_canonical, AValue, SParam, SymbolError};
use crate::combinat::{bipartitions, BiPartition};

/// Ordered subdivision of the irreducible labels into blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phyla<L> {
    pub blocks: Vec<Vec<L>>,
    pub a_values: Vec<AValue>,
}

impl<L: Clone + Eq + Hash> Phyla<L> {
    pub fn labels(&self) -> Vec<L> {
        self.blocks.iter().flatten().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ranges(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        self.blocks
            .iter()
            .map(|b| {
                let r = start..start + b.len();
                start = r.end;
                r
            })
            .collect()
    }

    pub fn block_index(&self) -> HashMap<L, usize> {
        let mut out = HashMap::new();
        for (k, b) in self.blocks.iter().enumerate() {
            for l in b {
                out.insert(l.clone(), k);
            }
        }
        out
    }

    pub fn is_singleton(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Splits every block into singletons, keeping the given label order.
    pub fn refine(&self) -> Phyla<L> {
        let mut blocks = Vec::new();
        let mut a_values = Vec::new();
        for (b, a) in self.blocks.iter().zip(&self.a_values) {
            for l in b {
                blocks.push(vec![l.clone()]);
                a_values.push(a.clone());
            }
        }
        Phyla { blocks, a_values }
    }

    /// The same blocks with every run of equal `a`-values in reverse order.
    pub fn reverse_ties(&self) -> Phyla<L> {
        let mut blocks = Vec::new();
        let mut a_values = Vec::new();
        let mut i = 0;
        while i < self.blocks.len() {
            let mut j = i + 1;
            while j < self.blocks.len() && self.a_values[j] == self.a_values[i] {
                j += 1;
            }
            for k in (i..j).rev() {
                blocks.push(self.blocks[k].clone());
                a_values.push(self.a_values[k].clone());
            }
            i = j;
        }
        Phyla { blocks, a_values }
    }

    /// One block holding everything.
    pub fn coarsest(labels: Vec<L>) -> Phyla<L> {
        Phyla { blocks: vec![labels], a_values: vec![AValue::integer(0)] }
    }
}

/// Similarity classes of `Z^{r,s}_n` ordered by decreasing `a`.
///
/// Equal `a`-values between distinct classes are ordered by their least
/// member; members keep their `𝙿(n)` order.
pub fn build_phyla(n: usize, r: usize, s0: BigRational, eps: i8) -> Result<Phyla<BiPartition>, SymbolError> {
    let param = SParam::new(r, s0, eps)?;
    let mut classes: Vec<(AValue, Vec<BiPartition>)> = Vec::new();
    let mut by_key: HashMap<Vec<(BigRational, i8)>, usize> = HashMap::new();
    for bp in bipartitions(n) {
        let sym = build_canonical(&bp, &param);
        let key = sym.similarity_key();
        match by_key.get(&key) {
            Some(&k) => classes[k].1.push(bp),
            None => {
                by_key.insert(key, classes.len());
                classes.push((sym.a_value(), vec![bp]));
            }
        }
    }
    classes.sort_by(|x, y| {
        y.0.cmp(&x.0).then_with(|| x.1.iter().min().cmp(&y.1.iter().min()))
    });
    let (a_values, blocks) = classes.into_iter().unzip();
    Ok(Phyla { blocks, a_values })
}
