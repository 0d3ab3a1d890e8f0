//! The inductive algorithm in type BC: seed at `s ≫ 0` from type A data and
//! move between adjacent integer parameters through the intermediate
//! system `K°` on `(s, s+1)`.

mod asymptotic;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

pub use asymptotic::{asymptotic_system, induce_graded, kex};

use crate::combinat::{distance, BiPartition, CombinatError};
use crate::exactalg::{QPoly, QRatFun, RatMatrix};
use crate::shoji::{bc_phyla, check_against_omega, solve_bc, Engine, KostkaSystem, ShojiError, SystemParams};
use crate::symbols::{build_phyla, strong_classes, StrongClass, SymbolError};
use crate::weylchar::{omega_matrix, GradedCharacter, WeylError};

pub type Family = BTreeMap<BiPartition, GradedCharacter<BiPartition>>;

pub const DEFAULT_SEARCH_FACTOR: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransitionError {
    #[error("graded characters do not cover the strong class of {0}")]
    ClassMismatch(String),
    #[error("inversion produced a coefficient outside N[t] for {0}")]
    NegativeCoefficient(String),
    #[error("no asymptotic threshold found up to s = {0}")]
    NotFound(usize),
    #[error("target parameter is out of range")]
    BadTarget,
    #[error(transparent)]
    Shoji(#[from] ShojiError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Combinat(#[from] CombinatError),
}

/// An integer parameter, or the open interval `(s, s+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    At(i64),
    Between(i64),
}

impl Target {
    /// `s0 + eps·ε` as a point or interval.
    pub fn from_param(s0: &BigRational, eps: i8) -> Result<Target, TransitionError> {
        let fl: i64 = s0.floor().to_integer().try_into().map_err(|_| TransitionError::BadTarget)?;
        let t = if !s0.is_integer() {
            Target::Between(fl)
        } else {
            match eps {
                0 => Target::At(fl),
                e if e > 0 => Target::Between(fl),
                _ => Target::Between(fl - 1),
            }
        };
        match t {
            Target::At(s) if s >= 1 => Ok(t),
            Target::Between(s) if s >= 0 => Ok(t),
            _ => Err(TransitionError::BadTarget),
        }
    }

    /// A representative `(s0, eps)` whose phyla is the one of this target.
    pub fn param(&self) -> (BigRational, i8) {
        match *self {
            Target::At(s) => (BigRational::from_integer(s.into()), 0),
            Target::Between(s) => (BigRational::new((2 * s + 1).into(), 2.into()), 0),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::At(s) => write!(f, "{s}"),
            Target::Between(s) => write!(f, "({s},{})", s + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassTrace {
    pub members: Vec<BiPartition>,
    pub sigma: Vec<Vec<i64>>,
    pub distances: Vec<Vec<u32>>,
}

/// One move of the walk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepTrace {
    pub s_from: String,
    pub s_to: String,
    pub classes: Vec<ClassTrace>,
    pub residual_check: bool,
}

fn nontrivial_classes(n: usize, s: i64) -> Result<Vec<StrongClass>, TransitionError> {
    Ok(strong_classes(n, 2, s)?.into_iter().filter(|c| !c.is_singleton()).collect())
}

fn class_trace(c: &StrongClass) -> Result<ClassTrace, TransitionError> {
    let mut distances = Vec::new();
    for x in &c.members {
        distances.push(c.members.iter().map(|y| distance(x, y)).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(ClassTrace {
        members: c.members.clone(),
        sigma: c.sigma.iter().map(|s| s.iter().copied().collect()).collect(),
        distances,
    })
}

fn lookup<'a>(base: &'a Family, x: &BiPartition) -> Result<&'a GradedCharacter<BiPartition>, TransitionError> {
    base.get(x).ok_or_else(|| TransitionError::ClassMismatch(x.to_string()))
}

/// `Σ_{μ ∈ 𝒮, σ_μ ⊆ σ_λ} t^{d(λ,μ)} base[μ]` (or supersets when `superset`).
fn lattice_sum(base: &Family, classes: &[StrongClass], superset: bool) -> Result<Family, TransitionError> {
    let mut out = base.clone();
    for c in classes {
        for (i, x) in c.members.iter().enumerate() {
            let mut acc = lookup(base, x)?.clone();
            for (j, y) in c.members.iter().enumerate() {
                let related = if superset { c.sigma[j].is_superset(&c.sigma[i]) } else { c.sigma[j].is_subset(&c.sigma[i]) };
                if i == j || !related {
                    continue;
                }
                let d = distance(x, y)? as usize;
                acc.add(&lookup(base, y)?.scale(&QPoly::t_pow(d)));
            }
            out.insert(x.clone(), acc);
        }
    }
    Ok(out)
}

/// Inverse of [`lattice_sum`]: members are solved from the lattice end
/// that has no further terms.
fn lattice_invert(mid: &Family, classes: &[StrongClass], superset: bool) -> Result<Family, TransitionError> {
    let mut out = mid.clone();
    for c in classes {
        let mut order: Vec<usize> = (0..c.members.len()).collect();
        order.sort_by_key(|&i| c.sigma[i].len());
        if superset {
            order.reverse();
        }
        let mut solved: BTreeMap<usize, GradedCharacter<BiPartition>> = BTreeMap::new();
        for &i in &order {
            let x = &c.members[i];
            let mut acc = lookup(mid, x)?.clone();
            for (&j, g) in &solved {
                let related = if superset { c.sigma[j].is_superset(&c.sigma[i]) } else { c.sigma[j].is_subset(&c.sigma[i]) };
                if related {
                    let d = distance(x, &c.members[j])? as usize;
                    acc.add(&g.scale(&-QPoly::t_pow(d)));
                }
            }
            if !acc.is_natural() {
                return Err(TransitionError::NegativeCoefficient(x.to_string()));
            }
            solved.insert(i, acc.clone());
            out.insert(x.clone(), acc);
        }
    }
    Ok(out)
}

/// `K°` on `(s, s+1)` from `K^s`: sums over subsets of `σ^s`.
pub fn midpoint_up(n: usize, s: i64, base: &Family) -> Result<Family, TransitionError> {
    lattice_sum(base, &nontrivial_classes(n, s)?, false)
}

/// `K°` on `(s, s+1)` from `K^{s+1}`: sums over supersets of `σ^{s+1}`.
pub fn midpoint_down(n: usize, s: i64, base: &Family) -> Result<Family, TransitionError> {
    lattice_sum(base, &nontrivial_classes(n, s + 1)?, true)
}

/// `K^{s+1}` from `K°` on `(s, s+1)`.
pub fn step_to_next(n: usize, s: i64, mid: &Family) -> Result<Family, TransitionError> {
    lattice_invert(mid, &nontrivial_classes(n, s + 1)?, true)
}

/// `K^s` from `K°` on `(s, s+1)`.
pub fn step_to_prev(n: usize, s: i64, mid: &Family) -> Result<Family, TransitionError> {
    lattice_invert(mid, &nontrivial_classes(n, s)?, false)
}

fn singleton_order(n: usize, s: i64, eps: i8) -> Result<Option<Vec<BiPartition>>, TransitionError> {
    let p = build_phyla(n, 2, BigRational::from_integer(s.into()), eps)?;
    Ok(p.is_singleton().then(|| p.labels()))
}

fn stable_at(n: usize, s: i64) -> Result<bool, TransitionError> {
    Ok(match (singleton_order(n, s, 0)?, singleton_order(n, s, 1)?, singleton_order(n, s + 1, 0)?) {
        (Some(a), Some(b), Some(c)) => a == b && b == c,
        _ => false,
    })
}

/// Smallest `s ≤ bound` from which the phyla at `s`, `s + ε` and `s + 1`
/// are singletons in one common order.
pub fn detect_s_asym_phyla(n: usize, bound: usize) -> Result<i64, TransitionError> {
    for s in 1..=bound as i64 {
        if stable_at(n, s)? {
            return Ok(s);
        }
    }
    Err(TransitionError::NotFound(bound))
}

/// Smallest `s` passing [`detect_s_asym_phyla`] at which the Lusztig-Shoji
/// solutions at `s` and `s + 1` both equal the asymptotic system.
pub fn detect_s_asym(n: usize, r: usize) -> Result<i64, TransitionError> {
    if r != 2 {
        return Err(TransitionError::BadTarget);
    }
    let bound = search_bound(n);
    let asym = asymptotic_system(n, r)?;
    for s in 1..=bound as i64 {
        if !stable_at(n, s)? {
            continue;
        }
        let mut ok = true;
        for x in [s, s + 1] {
            ok &= solve_bc(&SystemParams::bc_int(n, x, 0))?.as_graded_characters() == asym;
        }
        if ok {
            return Ok(s);
        }
    }
    Err(TransitionError::NotFound(bound))
}

pub fn search_bound(n: usize) -> usize {
    DEFAULT_SEARCH_FACTOR * n + 4
}

fn residual_ok(n: usize, at: Target, fam: &Family) -> Result<bool, TransitionError> {
    let (s0, eps) = at.param();
    let ks = package(&SystemParams::bc(n, 2, s0, eps), fam, Engine::Transition)?;
    Ok(check_against_omega(&ks)?.is_zero())
}

fn record(n: usize, from: String, to: Target, class_s: i64, fam: &Family) -> Result<StepTrace, TransitionError> {
    let classes = nontrivial_classes(n, class_s)?.iter().map(class_trace).collect::<Result<_, _>>()?;
    Ok(StepTrace { s_from: from, s_to: to.to_string(), classes, residual_check: residual_ok(n, to, fam)? })
}

/// Graded characters at `target`, walking down from the asymptotic region.
pub fn walk_family(n: usize, target: Target) -> Result<Family, TransitionError> {
    walk_inner(n, target, None)
}

/// [`walk_family`] with one record per move; each record carries the
/// orthogonality check of the system it produced.
pub fn walk_family_traced(n: usize, target: Target) -> Result<(Family, Vec<StepTrace>), TransitionError> {
    let mut trace = Vec::new();
    let fam = walk_inner(n, target, Some(&mut trace))?;
    Ok((fam, trace))
}

fn walk_inner(n: usize, target: Target, mut trace: Option<&mut Vec<StepTrace>>) -> Result<Family, TransitionError> {
    let s_asym = detect_s_asym_phyla(n, search_bound(n))?;
    let mut current = asymptotic_system(n, 2)?;
    let mut log = |from: String, to: Target, class_s: i64, fam: &Family| -> Result<(), TransitionError> {
        if let Some(t) = trace.as_deref_mut() {
            t.push(record(n, from, to, class_s, fam)?);
        }
        Ok(())
    };
    let floor = match target {
        Target::At(s) => s,
        Target::Between(s) => s + 1,
    };
    let mut s = s_asym;
    while s > floor {
        let mid = midpoint_down(n, s - 1, &current)?;
        log(s.to_string(), Target::Between(s - 1), s, &mid)?;
        current = step_to_prev(n, s - 1, &mid)?;
        log(Target::Between(s - 1).to_string(), Target::At(s - 1), s - 1, &current)?;
        s -= 1;
    }
    if let Target::Between(t) = target {
        if t < s_asym {
            current = midpoint_down(n, t, &current)?;
            log((t + 1).to_string(), target, t + 1, &current)?;
        }
    }
    Ok(current)
}

/// Package graded characters as a system over the phyla of `params`, with
/// `Λ` the block-diagonal part of `ᵗK⁻¹·Ω·K⁻¹`.
pub fn package(params: &SystemParams, family: &Family, engine: Engine) -> Result<KostkaSystem<BiPartition>, TransitionError> {
    let phyla = bc_phyla(params)?;
    let labels = phyla.labels();
    let k = RatMatrix::from_fn(labels.len(), labels.len(), |i, j| match family.get(&labels[i]) {
        Some(g) => QRatFun::from_poly(g.get(&labels[j])),
        None => QRatFun::zero(),
    });
    for l in &labels {
        lookup(family, l)?;
    }
    let omega = omega_matrix(params.n, &labels)?;
    let kinv = k.inverse().ok_or(TransitionError::Shoji(ShojiError::InadmissiblePhyla(0)))?;
    let full = kinv.transpose().mul(&omega).and_then(|m| m.mul(&kinv)).map_err(ShojiError::from)?;
    let mut lambda = RatMatrix::zeros(labels.len(), labels.len());
    for r in phyla.ranges() {
        for i in r.clone() {
            for j in r.clone() {
                lambda.set(i, j, full.get(i, j).clone());
            }
        }
    }
    Ok(KostkaSystem { params: params.clone(), engine, phyla, k, lambda })
}

/// The Kostka system at `target` computed by the transition engine, with
/// its step trace.
pub fn walk_traced(n: usize, target: Target) -> Result<(KostkaSystem<BiPartition>, Vec<StepTrace>), TransitionError> {
    let (fam, trace) = walk_family_traced(n, target)?;
    let (s0, eps) = target.param();
    Ok((package(&SystemParams::bc(n, 2, s0, eps), &fam, Engine::Transition)?, trace))
}

pub fn walk(n: usize, target: Target) -> Result<KostkaSystem<BiPartition>, TransitionError> {
    Ok(walk_traced(n, target)?.0)
}

/// [`walk`] for an arbitrary `s0 + eps·ε`, keeping the caller's parameters.
pub fn walk_params(params: &SystemParams) -> Result<KostkaSystem<BiPartition>, TransitionError> {
    let s0 = params.s0.clone().ok_or(TransitionError::BadTarget)?;
    if params.r != Some(2) {
        return Err(TransitionError::BadTarget);
    }
    let fam = walk_family(params.n, Target::from_param(&s0, params.eps_sign)?)?;
    package(params, &fam, Engine::Transition)
}

/// The asymptotic system packaged over the phyla of `params`.
pub fn asymptotic_kostka(params: &SystemParams) -> Result<KostkaSystem<BiPartition>, TransitionError> {
    let r = params.r.ok_or(TransitionError::BadTarget)?;
    package(params, &asymptotic_system(params.n, r)?, Engine::Asymptotic)
}
