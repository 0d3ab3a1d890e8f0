use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::CombinatError;

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatError::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Drops zero parts; the rest must already be weakly decreasing.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self, CombinatError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn transpose(&self) -> Self {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// `Σ C(ᵗλ_i, 2)`, equivalently `Σ (i-1) λ_i`.
    pub fn a_value(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn dominates(&self, other: &Partition) -> Result<Dominance, CombinatError> {
        if self.size() != other.size() {
            return Err(CombinatError::SizeMismatch);
        }
        let (mut ge, mut le) = (true, true);
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            ge &= a >= b;
            le &= a <= b;
        }
        Ok(match (ge, le) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Greater,
            (false, true) => Dominance::Less,
            (false, false) => Dominance::Incomparable,
        })
    }

    /// Removable corners as row indices.
    pub fn removable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.part(i) > self.part(i + 1))
    }

    /// Addable cells as row indices (`len()` means a new row).
    pub fn addable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.len()).filter(|&i| i == 0 || self.part(i - 1) > self.part(i))
    }

    pub fn with_box_removed(&self, row: usize) -> Self {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn with_box_added(&self, row: usize) -> Self {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition { parts }
    }

    /// Cycle-type multiplicities `m_k`, index `k` from 0.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }
}

/// Partitions of `n` in decreasing lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = CombinatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CombinatError::Parse(s.to_string()))?;
        Self::new(parts).map_err(|_| CombinatError::Parse(s.to_string()))
    }
}

impl Partition {
    /// Total order used for deterministic tie-breaking: size, then lex.
    pub fn label_cmp(&self, other: &Partition) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.parts.cmp(&other.parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[3]).transpose(), p(&[1, 1, 1]));
        assert_eq!(p(&[2, 1]).transpose(), p(&[2, 1]));
        assert_eq!(p(&[4, 2, 1]).transpose(), p(&[3, 2, 1, 1]));
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(p(&[3]).dominates(&p(&[1, 1, 1])).unwrap(), Dominance::Greater);
        assert_eq!(p(&[2, 1]).dominates(&p(&[2, 1])).unwrap(), Dominance::Equal);
        assert_eq!(p(&[3, 3]).dominates(&p(&[4, 1, 1])).unwrap(), Dominance::Incomparable);
        assert_eq!(p(&[3]).dominates(&p(&[1])), Err(CombinatError::SizeMismatch));
    }

    #[test]
    fn a_values() {
        assert_eq!(p(&[5]).a_value(), 0);
        assert_eq!(p(&[1, 1, 1]).a_value(), 3);
        assert_eq!(p(&[2, 1]).a_value(), 1);
        for n in 0..9 {
            for l in partitions(n) {
                let by_columns: usize = l.transpose().parts().iter().map(|&c| c * (c.max(1) - 1) / 2).sum();
                assert_eq!(l.a_value(), by_columns);
            }
        }
    }

    #[test]
    fn counts_match_partition_numbers() {
        let known = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &k) in known.iter().enumerate() {
            assert_eq!(partitions(n).len(), k);
        }
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn text_round_trip() {
        for l in partitions(6) {
            assert_eq!(l.to_string().parse::<Partition>().unwrap(), l);
        }
        assert!("1,2".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..8, 0..8).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn transpose_is_involution(l in arb_partition()) {
            prop_assert_eq!(l.transpose().transpose(), l.clone());
            prop_assert_eq!(l.transpose().size(), l.size());
        }
    }

    #[test]
    fn dominance_reverses_under_transpose() {
        for n in 0..9 {
            let ps = partitions(n);
            for a in &ps {
                for b in &ps {
                    let d = a.dominates(b).unwrap();
                    let dt = a.transpose().dominates(&b.transpose()).unwrap();
                    let expected = match d {
                        Dominance::Greater => Dominance::Less,
                        Dominance::Less => Dominance::Greater,
                        other => other,
                    };
                    assert_eq!(dt, expected, "{a} vs {b}");
                }
            }
        }
    }
}
