//! Murnaghan-Nakayama rule on beta-sets.

use std::collections::HashMap;

use crate::combinat::Partition;

/// Beta-set of `λ` with exactly `len` beads.
fn beta(p: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| p.part(i) + (len - 1 - i)).collect()
}

fn from_beta(mut b: Vec<usize>) -> Partition {
    b.sort_unstable_by(|x, y| y.cmp(x));
    let len = b.len();
    let parts = b.iter().enumerate().map(|(i, &x)| x - (len - 1 - i)).collect();
    Partition::from_padded(parts).unwrap()
}

/// All ways to strip a rim hook of length `k`: `(remaining shape, (-1)^{height})`.
pub fn remove_rim_hooks(p: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let len = p.len() + k;
    let b = beta(p, len);
    let mut out = Vec::new();
    for (i, &x) in b.iter().enumerate() {
        if x < k || b.contains(&(x - k)) {
            continue;
        }
        let between = b.iter().filter(|&&y| y > x - k && y < x).count();
        let mut nb = b.clone();
        nb[i] = x - k;
        out.push((from_beta(nb), if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

#[derive(Default)]
pub struct MnMemo {
    a: HashMap<(Partition, Vec<usize>), i64>,
    bc: HashMap<(Partition, Partition, Vec<(usize, bool)>), i64>,
}

impl MnMemo {
    /// `χ^λ` of the symmetric group at cycle lengths `mu`.
    pub fn type_a(&mut self, lambda: &Partition, mu: &[usize]) -> i64 {
        let Some((&k, rest)) = mu.split_first() else {
            return if lambda.is_empty() { 1 } else { 0 };
        };
        let key = (lambda.clone(), mu.to_vec());
        if let Some(&v) = self.a.get(&key) {
            return v;
        }
        let v = remove_rim_hooks(lambda, k)
            .into_iter()
            .map(|(p, sign)| sign * self.type_a(&p, rest))
            .sum();
        self.a.insert(key, v);
        v
    }

    /// `χ^{(λ⁰, λ¹)}` at signed cycles; hooks of negative cycles taken
    /// from `λ⁰` carry an extra sign.
    pub fn type_bc(&mut self, l0: &Partition, l1: &Partition, cycles: &[(usize, bool)]) -> i64 {
        let Some((&(k, negative), rest)) = cycles.split_first() else {
            return if l0.is_empty() && l1.is_empty() { 1 } else { 0 };
        };
        let key = (l0.clone(), l1.clone(), cycles.to_vec());
        if let Some(&v) = self.bc.get(&key) {
            return v;
        }
        let mut v = 0;
        for (p, sign) in remove_rim_hooks(l0, k) {
            let twist = if negative { -1 } else { 1 };
            v += twist * sign * self.type_bc(&p, l1, rest);
        }
        for (p, sign) in remove_rim_hooks(l1, k) {
            v += sign * self.type_bc(l0, &p, rest);
        }
        self.bc.insert(key, v);
        v
    }
}
