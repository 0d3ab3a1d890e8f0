use std::collections::BTreeMap;

use num_rational::BigRational;

use super::TransitionError;
use crate::combinat::{bipartitions, BiPartition, Partition};
use crate::exactalg::QPoly;
use crate::weylchar::{graded_char_m_lambda, induction_product, GradedCharacter};

/// `gch K^{ex}_{(λ,∅)} = Lsgn ⊗ (Σ_k t^k [L_{((k),(n−k))}] ⊗ Σ_μ K_{μλ}(t²) [L_{(∅,μ)}])`
pub fn kex(lambda: &Partition) -> Result<GradedCharacter<BiPartition>, TransitionError> {
    let n = lambda.size();
    let m = graded_char_m_lambda(lambda).inflate(2);
    let mut out = GradedCharacter::new();
    for k in 0..=n {
        let sq = BiPartition::new(Partition::row(k), Partition::row(n - k));
        for (mu, p) in &m.mult {
            let l = BiPartition::new(Partition::empty(), mu.clone());
            for (x, c) in crate::weylchar::tensor_decompose(&sq, &l)? {
                let coeff = (p * &QPoly::t_pow(k)).scale(&BigRational::from_integer(c.into()));
                out.add_term(x.swap(), coeff);
            }
        }
    }
    Ok(out)
}

/// Graded induction from `W_a × W_b` applied termwise.
pub fn induce_graded(
    a: &GradedCharacter<BiPartition>,
    b: &GradedCharacter<BiPartition>,
) -> Result<GradedCharacter<BiPartition>, TransitionError> {
    let mut out = GradedCharacter::new();
    for (x, p) in &a.mult {
        for (y, q) in &b.mult {
            let pq = p * q;
            for (z, c) in induction_product(x, y)? {
                out.add_term(z, pq.scale(&BigRational::from_integer(c.into())));
            }
        }
    }
    Ok(out)
}

/// Graded characters of the Kostka system for `s ≫ 0` (any `r > 0`):
/// `K_𝛌 = Ind_{W_{n0} × W_{n1}} (K^{ex}_{(λ0,∅)} ⊠ L_{(∅,λ1)})`.
pub fn asymptotic_system(n: usize, r: usize) -> Result<BTreeMap<BiPartition, GradedCharacter<BiPartition>>, TransitionError> {
    if r == 0 {
        return Err(TransitionError::BadTarget);
    }
    let mut kex_cache: BTreeMap<Partition, GradedCharacter<BiPartition>> = BTreeMap::new();
    let mut out = BTreeMap::new();
    for x in bipartitions(n) {
        let ex = match kex_cache.get(&x.first) {
            Some(g) => g.clone(),
            None => {
                let g = kex(&x.first)?;
                kex_cache.insert(x.first.clone(), g.clone());
                g
            }
        };
        let tail = GradedCharacter::singleton(BiPartition::new(Partition::empty(), x.second.clone()));
        out.insert(x, induce_graded(&ex, &tail)?);
    }
    Ok(out)
}
