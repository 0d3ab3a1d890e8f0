use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::{build_canonical, reconstruct, SParam, SymbolError};
use crate::combinat::{bipartitions, BiPartition};

/// A strong similarity class with its distinguished entries `E(𝒮)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongClass {
    pub members: Vec<BiPartition>,
    pub e_set: Vec<i64>,
    pub run_lengths: BTreeMap<i64, usize>,
    /// `σ_Λ = E(𝒮) ∩ (second row of Λ)`, parallel to `members`.
    pub sigma: Vec<BTreeSet<i64>>,
}

impl StrongClass {
    pub fn index_of(&self, bp: &BiPartition) -> Option<usize> {
        self.members.iter().position(|m| m == bp)
    }

    pub fn sigma_of(&self, bp: &BiPartition) -> Option<&BTreeSet<i64>> {
        self.index_of(bp).map(|i| &self.sigma[i])
    }

    /// `Σ_{p ∈ σ} q_p`
    pub fn weight(&self, sigma: &BTreeSet<i64>) -> usize {
        sigma.iter().map(|p| self.run_lengths[p]).sum()
    }

    pub fn is_singleton(&self) -> bool {
        self.members.len() == 1
    }
}

/// Maximal runs of consecutive values, each as (min, length, all simple).
fn runs(values: &[i64]) -> Vec<(i64, usize, bool)> {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &v in values {
        *counts.entry(v).or_default() += 1;
    }
    let mut out: Vec<(i64, usize, bool)> = Vec::new();
    let mut prev: Option<i64> = None;
    for (&v, &c) in &counts {
        match (prev, out.last_mut()) {
            (Some(p), Some(run)) if p + 1 == v => {
                run.1 += 1;
                run.2 &= c == 1;
            }
            _ => out.push((v, 1, c == 1)),
        }
        prev = Some(v);
    }
    out
}

fn flip(row0: &[i64], row1: &[i64], lo: i64, len: usize) -> (Vec<i64>, Vec<i64>) {
    let inside = |v: i64| v >= lo && v < lo + len as i64;
    let mut a: Vec<i64> = row0.iter().copied().filter(|&v| !inside(v)).collect();
    let mut b: Vec<i64> = row1.iter().copied().filter(|&v| !inside(v)).collect();
    a.extend(row1.iter().copied().filter(|&v| inside(v)));
    b.extend(row0.iter().copied().filter(|&v| inside(v)));
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    (a, b)
}

/// Strong similarity classes of `Z^{r,s}_n` at a positive integer `s`,
/// in order of first appearance in `𝙿(n)`.
pub fn strong_classes(n: usize, r: usize, s: i64) -> Result<Vec<StrongClass>, SymbolError> {
    if r < 2 || s < 1 {
        return Err(SymbolError::BadParameter);
    }
    let param = SParam::integer(r, s, 0)?;
    let mut seen: HashMap<BiPartition, usize> = HashMap::new();
    let mut out = Vec::new();
    for bp in bipartitions(n) {
        if seen.contains_key(&bp) {
            continue;
        }
        let sym = build_canonical(&bp, &param);
        let (row0, row1) = sym.integer_rows().unwrap();
        let all: Vec<i64> = row0.iter().chain(&row1).copied().collect();
        let flippable: Vec<(i64, usize)> = runs(&all)
            .into_iter()
            .filter(|&(lo, len, simple)| {
                let hi = lo + len as i64;
                simple && len >= 2 && len % 2 == 0 && !(lo..hi).contains(&0) && !(lo..hi).contains(&s)
            })
            .map(|(lo, len, _)| (lo, len))
            .collect();
        let mut members = Vec::new();
        let mut sigma = Vec::new();
        for mask in 0u64..(1u64 << flippable.len()) {
            let (mut a, mut b) = (row0.clone(), row1.clone());
            for (k, &(lo, len)) in flippable.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    (a, b) = flip(&a, &b, lo, len);
                }
            }
            let member = reconstruct(&a, &b, r as i64, s).ok_or(SymbolError::InvalidFlip)?;
            let sig: BTreeSet<i64> =
                flippable.iter().map(|&(lo, _)| lo).filter(|lo| b.contains(lo)).collect();
            members.push(member);
            sigma.push(sig);
        }
        // enumeration order within the class
        let mut order: Vec<usize> = (0..members.len()).collect();
        order.sort_by(|&i, &j| rank(&members[i], n).cmp(&rank(&members[j], n)));
        let members: Vec<BiPartition> = order.iter().map(|&i| members[i].clone()).collect();
        let sigma: Vec<BTreeSet<i64>> = order.iter().map(|&i| sigma[i].clone()).collect();
        for m in &members {
            seen.insert(m.clone(), out.len());
        }
        out.push(StrongClass {
            e_set: flippable.iter().map(|&(lo, _)| lo).collect(),
            run_lengths: flippable.iter().copied().collect(),
            members,
            sigma,
        });
    }
    Ok(out)
}

fn rank(bp: &BiPartition, n: usize) -> usize {
    thread_local! {
        static ORDER: std::cell::RefCell<HashMap<usize, HashMap<BiPartition, usize>>> = Default::default();
    }
    ORDER.with(|o| {
        let mut o = o.borrow_mut();
        let table = o.entry(n).or_insert_with(|| {
            bipartitions(n).into_iter().enumerate().map(|(i, b)| (b, i)).collect()
        });
        table[bp]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::distance;
    use crate::symbols::build_symbol;

    fn bp(s: &str) -> BiPartition {
        s.parse().unwrap()
    }

    /// Closure of the pair-swap relation inside similarity classes.
    fn oracle(n: usize, r: usize, s: i64) -> Vec<BTreeSet<BiPartition>> {
        let param = SParam::integer(r, s, 0).unwrap();
        let labels = bipartitions(n);
        let m = param.canonical_m(n);
        let rows: Vec<(Vec<i64>, Vec<i64>)> = labels
            .iter()
            .map(|b| build_symbol(b, &param, m).unwrap().integer_rows().unwrap())
            .collect();
        let k = labels.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let root = find(p, p[x]);
                p[x] = root;
            }
            p[x]
        }
        for i in 0..k {
            for j in i + 1..k {
                if swap_related(&rows[i], &rows[j]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let mut groups: BTreeMap<usize, BTreeSet<BiPartition>> = BTreeMap::new();
        for i in 0..k {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().insert(labels[i].clone());
        }
        groups.into_values().collect()
    }

    fn multiset_minus(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut rest = b.to_vec();
        let mut out = Vec::new();
        for &x in a {
            if let Some(pos) = rest.iter().position(|&y| y == x) {
                rest.remove(pos);
            } else {
                out.push(x);
            }
        }
        out
    }

    fn perfect_matching(a: &[i64], b: &[i64]) -> bool {
        if a.len() != b.len() {
            return false;
        }
        let Some((&x, rest)) = a.split_first() else { return true };
        (0..b.len()).any(|j| {
            (x - b[j]).abs() == 1 && {
                let mut bb = b.to_vec();
                bb.remove(j);
                perfect_matching(rest, &bb)
            }
        })
    }

    fn swap_related(x: &(Vec<i64>, Vec<i64>), y: &(Vec<i64>, Vec<i64>)) -> bool {
        let mut ex: Vec<i64> = x.0.iter().chain(&x.1).copied().collect();
        let mut ey: Vec<i64> = y.0.iter().chain(&y.1).copied().collect();
        ex.sort_unstable();
        ey.sort_unstable();
        if ex != ey {
            return false;
        }
        let leaving = multiset_minus(&x.0, &y.0);
        let arriving = multiset_minus(&y.0, &x.0);
        perfect_matching(&leaving, &arriving)
    }

    #[test]
    fn matches_swap_closure_oracle() {
        for n in 0..=5 {
            for s in 1..=(2 * n as i64 + 2) {
                let mut fast: Vec<BTreeSet<BiPartition>> = strong_classes(n, 2, s)
                    .unwrap()
                    .into_iter()
                    .map(|c| c.members.into_iter().collect())
                    .collect();
                let mut slow = oracle(n, 2, s);
                fast.sort();
                slow.sort();
                assert_eq!(fast, slow, "n={n} s={s}");
            }
        }
    }

    #[test]
    fn b2_classes() {
        let at1 = strong_classes(2, 2, 1).unwrap();
        let c = at1.iter().find(|c| c.index_of(&bp("1|1")).is_some()).unwrap();
        assert_eq!(c.members.len(), 2);
        assert_eq!(c.e_set.len(), 1);
        assert!(c.index_of(&bp("2|-")).is_some());
        assert!(c.sigma_of(&bp("2|-")).unwrap().len() == 1);
        assert!(c.sigma_of(&bp("1|1")).unwrap().is_empty());

        let at2 = strong_classes(2, 2, 2).unwrap();
        let c = at2.iter().find(|c| c.index_of(&bp("1|1")).is_some()).unwrap();
        assert_eq!(c.members.len(), 2);
        assert!(c.index_of(&bp("-|1,1")).is_some());
        assert!(c.sigma_of(&bp("1|1")).unwrap().len() == 1);
        assert!(c.sigma_of(&bp("-|1,1")).unwrap().is_empty());

        for s in 3..8 {
            assert!(strong_classes(2, 2, s).unwrap().iter().all(StrongClass::is_singleton));
        }
    }

    #[test]
    fn sigma_is_a_bijection_onto_subsets() {
        for n in 0..=5 {
            for s in 1..=(2 * n as i64 + 2) {
                for c in strong_classes(n, 2, s).unwrap() {
                    assert_eq!(c.members.len(), 1 << c.e_set.len());
                    let distinct: BTreeSet<_> = c.sigma.iter().collect();
                    assert_eq!(distinct.len(), c.members.len());
                    if c.members.len() == 1 {
                        assert!(c.e_set.is_empty());
                    }
                }
            }
        }
    }

    #[test]
    fn classes_partition_labels() {
        for n in 0..=5 {
            for s in 1..=6 {
                let classes = strong_classes(n, 2, s).unwrap();
                let total: usize = classes.iter().map(|c| c.members.len()).sum();
                let all: BTreeSet<_> = classes.iter().flat_map(|c| c.members.clone()).collect();
                assert_eq!(total, bipartitions(n).len());
                assert_eq!(all.len(), total);
            }
        }
    }

    #[test]
    fn distance_matches_first_component_gap() {
        for n in 0..=5 {
            for s in 1..=(2 * n as i64 + 2) {
                for c in strong_classes(n, 2, s).unwrap() {
                    for x in &c.members {
                        for y in &c.members {
                            let gap = x.first.size().abs_diff(y.first.size()) as u32;
                            assert_eq!(distance(x, y).unwrap(), gap, "n={n} s={s} {x} {y}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(strong_classes(2, 1, 1), Err(SymbolError::BadParameter));
        assert_eq!(strong_classes(2, 2, 0), Err(SymbolError::BadParameter));
    }
}
