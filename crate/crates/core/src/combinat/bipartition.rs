use std::fmt;
use std::str::FromStr;

use super::{partitions, CombinatError, Partition};

/// Ordered pair `(λ⁽⁰⁾, λ⁽¹⁾)` of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BiPartition {
    pub first: Partition,
    pub second: Partition,
}

impl BiPartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        BiPartition { first, second }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    /// `ᵗ(λ⁽⁰⁾, λ⁽¹⁾) = (ᵗλ⁽¹⁾, ᵗλ⁽⁰⁾)`
    pub fn transpose(&self) -> Self {
        BiPartition::new(self.second.transpose(), self.first.transpose())
    }

    pub fn swap(&self) -> Self {
        BiPartition::new(self.second.clone(), self.first.clone())
    }

    /// `|λ⁽⁰⁾| + 2a(λ⁽⁰⁾) + 2a(λ⁽¹⁾)`
    pub fn b_value(&self) -> usize {
        self.first.size() + 2 * self.first.a_value() + 2 * self.second.a_value()
    }

    pub fn is_dot_adjacent(&self, other: &BiPartition) -> Result<bool, CombinatError> {
        if self.size() != other.size() {
            return Err(CombinatError::SizeMismatch);
        }
        let d0 = single_difference(&self.first, &other.first);
        let d1 = single_difference(&self.second, &other.second);
        Ok(matches!((d0, d1), (Some(a), Some(b)) if a == -b))
    }

    /// All `μ` with `self ≐ μ`: one box moves between the components.
    pub fn dot_neighbours(&self) -> Vec<BiPartition> {
        let mut out = Vec::new();
        for i in self.first.removable_rows() {
            let f = self.first.with_box_removed(i);
            for j in self.second.addable_rows() {
                out.push(BiPartition::new(f.clone(), self.second.with_box_added(j)));
            }
        }
        for j in self.second.removable_rows() {
            let s = self.second.with_box_removed(j);
            for i in self.first.addable_rows() {
                out.push(BiPartition::new(self.first.with_box_added(i), s.clone()));
            }
        }
        out.sort();
        out
    }
}

/// `Some(±1)` when the padded sequences differ in exactly one coordinate by one.
fn single_difference(a: &Partition, b: &Partition) -> Option<i64> {
    let mut found = None;
    for i in 0..a.len().max(b.len()) {
        let d = a.part(i) as i64 - b.part(i) as i64;
        if d == 0 {
            continue;
        }
        if found.is_some() || d.abs() != 1 {
            return None;
        }
        found = Some(d);
    }
    found
}

/// `𝙿(n)`: `|λ⁽⁰⁾|` from `n` down to 0, each component in decreasing lex order.
pub fn bipartitions(n: usize) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        let rest = partitions(n - k);
        for a in partitions(k) {
            for b in &rest {
                out.push(BiPartition::new(a.clone(), b.clone()));
            }
        }
    }
    out
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl fmt::Debug for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for BiPartition {
    type Err = CombinatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| CombinatError::Parse(s.to_string()))?;
        Ok(BiPartition::new(a.parse()?, b.parse()?))
    }
}
