//! Solving `ᵗK·Λ·K = Ω` by block LDU along a phyla.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinat::{partitions, BiPartition, Partition};
use crate::exactalg::{block_ldu, ExactAlgError, QRatFun, RatMatrix};
use crate::symbols::{build_phyla, AValue, Phyla, SymbolError};
use crate::weylchar::{omega_matrix, Family, GradedCharacter, IrrLabel, WeylError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShojiError {
    #[error("phyla is not admissible: leading block {0} of Ω is singular")]
    InadmissiblePhyla(usize),
    #[error("only the identity twist is supported for real reflection groups")]
    UnsupportedTwist,
    #[error("label order does not match")]
    LabelMismatch,
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error(transparent)]
    Exact(#[from] ExactAlgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    LusztigShoji,
    Transition,
    Asymptotic,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::LusztigShoji => "lusztig-shoji",
            Engine::Transition => "transition",
            Engine::Asymptotic => "asymptotic",
        })
    }
}

/// `(family, n, r, s0, eps_sign)`; `r` and `s0` are absent in type A.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SystemParams {
    pub family: Family,
    pub n: usize,
    pub r: Option<usize>,
    pub s0: Option<BigRational>,
    pub eps_sign: i8,
}

impl SystemParams {
    pub fn type_a(n: usize) -> Self {
        SystemParams { family: Family::A, n, r: None, s0: None, eps_sign: 0 }
    }

    pub fn bc(n: usize, r: usize, s0: BigRational, eps_sign: i8) -> Self {
        SystemParams { family: Family::BC, n, r: Some(r), s0: Some(s0), eps_sign }
    }

    pub fn bc_int(n: usize, s: i64, eps_sign: i8) -> Self {
        Self::bc(n, 2, BigRational::from_integer(s.into()), eps_sign)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KostkaSystem<L> {
    pub params: SystemParams,
    pub engine: Engine,
    pub phyla: Phyla<L>,
    pub k: RatMatrix,
    pub lambda: RatMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FindingKind {
    NotPolynomial,
    NegativeCoefficient,
    NonzeroConstantTerm,
    OddPower,
    DiagonalNotOne,
    Triangularity,
    LambdaOffBlock,
}

/// A violated invariant, reported rather than hidden.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub kind: FindingKind,
    pub row: String,
    pub col: String,
    pub entry: String,
}

impl<L: IrrLabel> KostkaSystem<L> {
    pub fn labels(&self) -> Vec<L> {
        self.phyla.labels()
    }

    pub fn index_of(&self, l: &L) -> Option<usize> {
        self.labels().iter().position(|x| x == l)
    }

    pub fn entry(&self, chi: &L, eta: &L) -> Option<&QRatFun> {
        Some(self.k.get(self.index_of(chi)?, self.index_of(eta)?))
    }

    /// Row `χ` of `K` as `gch K_χ = Σ_η K_{χ,η} [L_η]`; `None` if some entry
    /// is not a polynomial.
    pub fn graded_row(&self, i: usize) -> Option<GradedCharacter<L>> {
        let labels = self.labels();
        let mut g = GradedCharacter::new();
        for (j, l) in labels.iter().enumerate() {
            g.add_term(l.clone(), self.k.get(i, j).as_poly()?.clone());
        }
        Some(g)
    }

    pub fn graded(&self, chi: &L) -> Option<GradedCharacter<L>> {
        self.graded_row(self.index_of(chi)?)
    }

    pub fn as_graded_characters(&self) -> BTreeMap<L, GradedCharacter<L>> {
        self.labels()
            .into_iter()
            .enumerate()
            .filter_map(|(i, l)| self.graded_row(i).map(|g| (l, g)))
            .collect()
    }

    /// Triangularity, block structure and positivity of `K` and `Λ`.
    pub fn findings(&self) -> Vec<Finding> {
        let labels = self.labels();
        let block_of: Vec<usize> = self
            .phyla
            .ranges()
            .iter()
            .enumerate()
            .flat_map(|(b, r)| std::iter::repeat_n(b, r.len()))
            .collect();
        let mut out = Vec::new();
        let mut report = |kind, i: usize, j: usize, e: &QRatFun| {
            out.push(Finding { kind, row: labels[i].to_string(), col: labels[j].to_string(), entry: e.to_string() });
        };
        for i in 0..labels.len() {
            for j in 0..labels.len() {
                let e = self.k.get(i, j);
                if i == j {
                    if !e.is_one() {
                        report(FindingKind::DiagonalNotOne, i, j, e);
                    }
                    continue;
                }
                if block_of[j] <= block_of[i] {
                    if !e.is_zero() {
                        report(FindingKind::Triangularity, i, j, e);
                    }
                    continue;
                }
                match e.as_poly() {
                    None => report(FindingKind::NotPolynomial, i, j, e),
                    Some(p) => {
                        if !p.is_even() {
                            report(FindingKind::OddPower, i, j, e);
                        }
                        if !p.is_natural() {
                            report(FindingKind::NegativeCoefficient, i, j, e);
                        }
                        if !p.coeff(0).is_zero() {
                            report(FindingKind::NonzeroConstantTerm, i, j, e);
                        }
                    }
                }
                let lam = self.lambda.get(i, j);
                if block_of[i] != block_of[j] && !lam.is_zero() {
                    report(FindingKind::LambdaOffBlock, i, j, lam);
                }
            }
        }
        out
    }

    pub fn is_positive(&self) -> bool {
        self.findings().is_empty()
    }

    /// Entrywise equality of `K` after aligning label orders.
    pub fn same_k(&self, other: &KostkaSystem<L>) -> bool {
        let (a, b) = (self.labels(), other.labels());
        if a.len() != b.len() {
            return false;
        }
        let pos: Vec<Option<usize>> = a.iter().map(|l| b.iter().position(|m| m == l)).collect();
        if pos.iter().any(Option::is_none) {
            return false;
        }
        for i in 0..a.len() {
            for j in 0..a.len() {
                if self.k.get(i, j) != other.k.get(pos[i].unwrap(), pos[j].unwrap()) {
                    return false;
                }
            }
        }
        true
    }
}

/// Singletons ordered by decreasing `n(λ)`; ties keep the enumeration order.
pub fn type_a_phyla(n: usize) -> Phyla<Partition> {
    let mut labels = partitions(n);
    labels.sort_by_key(|p| std::cmp::Reverse(p.a_value()));
    let a_values = labels.iter().map(|p| AValue::integer(p.a_value() as i64)).collect();
    Phyla { blocks: labels.into_iter().map(|p| vec![p]).collect(), a_values }
}

/// Similarity classes of `Z^{r,s0+eps·ε}_n`.
pub fn bc_phyla(params: &SystemParams) -> Result<Phyla<BiPartition>, ShojiError> {
    let (Some(r), Some(s0)) = (params.r, params.s0.clone()) else {
        return Err(ShojiError::Symbol(SymbolError::BadParameter));
    };
    Ok(build_phyla(params.n, r, s0, params.eps_sign)?)
}

/// `Ω = L·D·U` with `ᵗK = L`, `Λ = D`, `K = U`.
pub fn solve<L: IrrLabel>(params: &SystemParams, phyla: &Phyla<L>) -> Result<KostkaSystem<L>, ShojiError> {
    if params.family != L::FAMILY {
        return Err(ShojiError::LabelMismatch);
    }
    let labels = phyla.labels();
    let mut all = L::all(params.n);
    let mut sorted = labels.clone();
    all.sort();
    sorted.sort();
    if all != sorted {
        return Err(ShojiError::LabelMismatch);
    }
    let omega = omega_matrix(params.n, &labels)?;
    let ldu = block_ldu(&omega, &phyla.ranges()).map_err(|e| match e {
        ExactAlgError::SingularBlock(k) => ShojiError::InadmissiblePhyla(k),
        e => ShojiError::Exact(e),
    })?;
    Ok(KostkaSystem { params: params.clone(), engine: Engine::LusztigShoji, phyla: phyla.clone(), k: ldu.u, lambda: ldu.d })
}

/// `solve` with the duality twist `σ` on labels (`ᵗK⁻·Λ·K⁺^σ = Ω`); for
/// real groups `σ` must be the identity.
pub fn solve_twisted<L: IrrLabel>(
    params: &SystemParams,
    phyla: &Phyla<L>,
    sigma: &[usize],
) -> Result<KostkaSystem<L>, ShojiError> {
    if sigma.iter().enumerate().any(|(i, &j)| i != j) || sigma.len() != phyla.len() {
        return Err(ShojiError::UnsupportedTwist);
    }
    solve(params, phyla)
}

pub fn solve_bc(params: &SystemParams) -> Result<KostkaSystem<BiPartition>, ShojiError> {
    solve(params, &bc_phyla(params)?)
}

pub fn solve_a(n: usize) -> Result<KostkaSystem<Partition>, ShojiError> {
    solve(&SystemParams::type_a(n), &type_a_phyla(n))
}

/// Nonzero entries of `ᵗK·Λ·K − Ω`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidualReport {
    pub nonzero: usize,
    /// Largest `q`-degree among residual numerators.
    pub max_degree: Option<usize>,
    pub positions: Vec<(usize, usize)>,
}

impl ResidualReport {
    pub fn is_zero(&self) -> bool {
        self.nonzero == 0
    }
}

impl fmt::Display for ResidualReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "residual zero")
        } else {
            write!(f, "{} nonzero residual entries, max degree {}", self.nonzero, self.max_degree.unwrap_or(0))
        }
    }
}

pub fn residual(k: &RatMatrix, lambda: &RatMatrix, omega: &RatMatrix) -> Result<ResidualReport, ShojiError> {
    let r = k.transpose().mul(lambda)?.mul(k)?.sub(omega)?;
    let positions: Vec<(usize, usize)> = r.entries().filter(|(_, _, e)| !e.is_zero()).map(|(i, j, _)| (i, j)).collect();
    let max_degree = r.entries().filter_map(|(_, _, e)| e.num().degree()).max();
    let max_degree = if positions.is_empty() { None } else { max_degree };
    Ok(ResidualReport { nonzero: positions.len(), max_degree, positions })
}

pub fn verify_orthogonality<L: IrrLabel>(ks: &KostkaSystem<L>, omega: &RatMatrix) -> Result<ResidualReport, ShojiError> {
    residual(&ks.k, &ks.lambda, omega)
}

/// Recompute Ω for the system's label order and check the identity.
pub fn check_against_omega<L: IrrLabel>(ks: &KostkaSystem<L>) -> Result<ResidualReport, ShojiError> {
    let omega = omega_matrix(ks.params.n, &ks.labels())?;
    verify_orthogonality(ks, &omega)
}

#[cfg(test)]
mod tests;
