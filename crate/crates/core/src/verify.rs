//! Invariant suites over grids of `(n, s)`, one outcome per instance.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::combinat::{BiPartition, Partition};
use crate::exactalg::{QPoly, QRatFun};
use crate::export::{system_doc, SystemDoc};
use crate::shoji::{bc_phyla, check_against_omega, solve, solve_a, solve_bc, KostkaSystem, SystemParams};
use crate::transition::{midpoint_down, midpoint_up, walk, walk_params, Target};
use crate::weylchar::{
    char_table, coinvariant_multiplicity, graded_char_m_lambda, max_rank, Family, GroupSpec, IrrLabel,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Orthogonality,
    Positivity,
    Pieri,
    Refinement,
    Engines,
    Midpoint,
    Charge,
    Coinvariant,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Orthogonality,
        Suite::Positivity,
        Suite::Pieri,
        Suite::Refinement,
        Suite::Engines,
        Suite::Midpoint,
        Suite::Charge,
        Suite::Coinvariant,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::Positivity => "positivity",
            Suite::Pieri => "pieri",
            Suite::Refinement => "refinement",
            Suite::Engines => "engines",
            Suite::Midpoint => "midpoint",
            Suite::Charge => "charge",
            Suite::Coinvariant => "coinvariant",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// Deliberate corruption of computed `K` matrices, for exercising failure
/// reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    BumpK,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub suite: Suite,
    pub params: SystemParams,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Outcome {
    pub suite: Suite,
    pub family: Family,
    pub n: usize,
    pub s0: Option<String>,
    pub eps_sign: i8,
    pub pass: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub system: Option<SystemDoc>,
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// Integers `1..=s_max` at `s` and `s ± ε`, and `k + 1/4, k + 1/2, k + 3/4`
/// for `0 ≤ k < s_max`.
pub fn parameter_grid(s_max: i64) -> Vec<(BigRational, i8)> {
    let mut out = Vec::new();
    for k in 0..s_max {
        for a in 1..=3 {
            out.push((rat(4 * k + a, 4), 0));
        }
        let s = k + 1;
        for eps in [-1, 0, 1] {
            out.push((rat(s, 1), eps));
        }
    }
    out
}

/// Every instance of `suites` up to rank `n_max` and parameter `s_max`.
pub fn cases(suites: &[Suite], n_max: usize, s_max: i64) -> Vec<Case> {
    let grid = parameter_grid(s_max);
    let mut out = Vec::new();
    let bc_max = n_max.min(max_rank(Family::BC));
    let a_max = n_max.min(max_rank(Family::A));
    for &suite in suites {
        let mut push = |params| out.push(Case { suite, params });
        match suite {
            Suite::Orthogonality | Suite::Positivity => {
                for n in 1..=a_max {
                    push(SystemParams::type_a(n));
                }
                for n in 1..=bc_max {
                    for (s0, eps) in &grid {
                        push(SystemParams::bc(n, 2, s0.clone(), *eps));
                    }
                }
            }
            Suite::Engines => {
                for n in 1..=bc_max {
                    for (s0, eps) in &grid {
                        push(SystemParams::bc(n, 2, s0.clone(), *eps));
                    }
                }
            }
            Suite::Refinement | Suite::Midpoint => {
                for n in 1..=bc_max {
                    for s in 1..=s_max {
                        push(SystemParams::bc_int(n, s, 0));
                    }
                }
            }
            Suite::Pieri => {
                for n in 1..=bc_max {
                    push(SystemParams::bc_int(n, 1, 0));
                }
            }
            Suite::Charge => {
                for n in 1..=a_max {
                    push(SystemParams::type_a(n));
                }
            }
            Suite::Coinvariant => {
                for n in 1..=a_max {
                    push(SystemParams::type_a(n));
                }
                for n in 1..=bc_max {
                    push(SystemParams::bc_int(n, 1, 0));
                }
            }
        }
    }
    out
}

fn bump<L: IrrLabel>(ks: &mut KostkaSystem<L>, fault: Fault) {
    if fault == Fault::BumpK {
        let last = ks.k.cols() - 1;
        let e = ks.k.get(0, last) + &QRatFun::from_poly(QPoly::t_pow(1));
        ks.k.set(0, last, e);
    }
}

struct Verdict {
    pass: bool,
    detail: String,
    system: Option<SystemDoc>,
}

impl Verdict {
    fn ok(detail: impl Into<String>) -> Self {
        Verdict { pass: true, detail: detail.into(), system: None }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Verdict { pass: false, detail: detail.into(), system: None }
    }

    fn with<L: IrrLabel>(mut self, ks: &KostkaSystem<L>) -> Self {
        if !self.pass {
            self.system = Some(system_doc(ks));
        }
        self
    }
}

fn orthogonality<L: IrrLabel>(mut ks: KostkaSystem<L>, fault: Fault) -> Verdict {
    bump(&mut ks, fault);
    match check_against_omega(&ks) {
        Ok(rep) if rep.is_zero() => Verdict::ok(rep.to_string()),
        Ok(rep) => Verdict::fail(rep.to_string()).with(&ks),
        Err(e) => Verdict::fail(e.to_string()).with(&ks),
    }
}

fn positivity<L: IrrLabel>(mut ks: KostkaSystem<L>, fault: Fault) -> Verdict {
    bump(&mut ks, fault);
    let f = ks.findings();
    if f.is_empty() {
        Verdict::ok("all entries in N[t]")
    } else {
        let first = &f[0];
        Verdict::fail(format!("{} findings, first {:?} at ({}, {}): {}", f.len(), first.kind, first.row, first.col, first.entry)).with(&ks)
    }
}

fn pieri(n: usize) -> Result<Verdict, String> {
    let t = char_table::<BiPartition>(n).map_err(|e| e.to_string())?;
    let h = BiPartition::new(Partition::row(1), Partition::row(n - 1));
    for l in &t.labels {
        let mut got = t.tensor_decompose(&h, l).map_err(|e| e.to_string())?;
        got.sort();
        let mut expected: Vec<_> = l.dot_neighbours().into_iter().map(|m| (m, 1)).collect();
        expected.sort();
        if got != expected {
            return Ok(Verdict::fail(format!("h ⊗ {l} does not match the dot neighbours")));
        }
    }
    Ok(Verdict::ok(format!("{} labels", t.labels.len())))
}

fn refinement(params: &SystemParams, fault: Fault) -> Result<Verdict, String> {
    let p = bc_phyla(params).map_err(|e| e.to_string())?;
    let q = p.reverse_ties();
    let mut a = solve(params, &p).map_err(|e| e.to_string())?;
    let b = solve(params, &q).map_err(|e| e.to_string())?;
    bump(&mut a, fault);
    let note = if p == q { "no ties" } else { "ties reversed" };
    Ok(if a.same_k(&b) { Verdict::ok(note) } else { Verdict::fail(format!("K differs ({note})")).with(&a) })
}

fn engines(params: &SystemParams, fault: Fault) -> Result<Verdict, String> {
    let mut a = solve_bc(params).map_err(|e| e.to_string())?;
    let b = walk_params(params).map_err(|e| e.to_string())?;
    bump(&mut a, fault);
    Ok(if a.same_k(&b) && a.lambda == b.lambda {
        Verdict::ok("transition = lusztig-shoji")
    } else {
        Verdict::fail("transition and lusztig-shoji disagree").with(&b)
    })
}

fn midpoint(n: usize, s: i64, fault: Fault) -> Result<Verdict, String> {
    let mut lo = solve_bc(&SystemParams::bc_int(n, s, 0)).map_err(|e| e.to_string())?;
    bump(&mut lo, fault);
    let hi = walk(n, Target::At(s + 1)).map_err(|e| e.to_string())?;
    let up = midpoint_up(n, s, &lo.as_graded_characters()).map_err(|e| e.to_string())?;
    let down = midpoint_down(n, s, &hi.as_graded_characters()).map_err(|e| e.to_string())?;
    Ok(if up == down { Verdict::ok("both sides agree") } else { Verdict::fail("upward and downward midpoints differ").with(&lo) })
}

fn charge(n: usize, fault: Fault) -> Result<Verdict, String> {
    let mut ks = solve_a(n).map_err(|e| e.to_string())?;
    bump(&mut ks, fault);
    for l in ks.labels() {
        if ks.graded(&l) != Some(graded_char_m_lambda(&l)) {
            return Ok(Verdict::fail(format!("row {l} differs from the charge formula")).with(&ks));
        }
    }
    Ok(Verdict::ok(format!("{} rows", ks.labels().len())))
}

fn coinvariant_check<L: IrrLabel>(n: usize) -> Result<Verdict, String> {
    let g = GroupSpec::new(L::FAMILY, n);
    let err = |e: crate::weylchar::WeylError| e.to_string();
    if !coinvariant_multiplicity(&L::triv(n)).map_err(err)?.is_one() {
        return Ok(Verdict::fail("triv does not occur once in degree 0"));
    }
    if coinvariant_multiplicity(&L::sgn(n)).map_err(err)? != QPoly::t_pow(g.n_star()) {
        return Ok(Verdict::fail("sgn is not t^N*"));
    }
    let t = char_table::<L>(n).map_err(err)?;
    let mut total = BigRational::zero();
    for l in &t.labels {
        let d = BigRational::from_integer(t.dim(l).map_err(err)?.into());
        total += d * coinvariant_multiplicity(l).map_err(err)?.at_one();
    }
    Ok(if total == BigRational::from_integer(g.order()) {
        Verdict::ok(format!("|W| = {}", g.order()))
    } else {
        Verdict::fail(format!("sum of dim times fake degree is {total}, not {}", g.order()))
    })
}

pub fn run_case(case: &Case, fault: Fault) -> Outcome {
    let p = &case.params;
    let verdict = match case.suite {
        Suite::Orthogonality => match p.family {
            Family::A => solve_a(p.n).map(|ks| orthogonality(ks, fault)),
            Family::BC => solve_bc(p).map(|ks| orthogonality(ks, fault)),
        }
        .map_err(|e| e.to_string()),
        Suite::Positivity => match p.family {
            Family::A => solve_a(p.n).map(|ks| positivity(ks, fault)),
            Family::BC => solve_bc(p).map(|ks| positivity(ks, fault)),
        }
        .map_err(|e| e.to_string()),
        Suite::Pieri => pieri(p.n),
        Suite::Refinement => refinement(p, fault),
        Suite::Engines => engines(p, fault),
        Suite::Midpoint => midpoint(p.n, integer_s(p), fault),
        Suite::Charge => charge(p.n, fault),
        Suite::Coinvariant => match p.family {
            Family::A => coinvariant_check::<Partition>(p.n),
            Family::BC => coinvariant_check::<BiPartition>(p.n),
        },
    };
    let v = verdict.unwrap_or_else(|e| Verdict::fail(format!("error: {e}")));
    Outcome {
        suite: case.suite,
        family: p.family,
        n: p.n,
        s0: match case.suite {
            Suite::Pieri | Suite::Charge | Suite::Coinvariant => None,
            _ => p.s0.as_ref().map(BigRational::to_string),
        },
        eps_sign: p.eps_sign,
        pass: v.pass,
        detail: v.detail,
        system: v.system,
    }
}

fn integer_s(p: &SystemParams) -> i64 {
    p.s0.as_ref().map(|s| s.to_integer().try_into().unwrap_or(1)).unwrap_or(1)
}
