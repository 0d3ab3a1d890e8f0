use kostka::combinat::{BiPartition, Partition};
use kostka::export::{parse_rational, render_csv, render_pretty, system_doc, Var};
use kostka::shoji::{solve_a, solve_bc, KostkaSystem, SystemParams};
use kostka::transition::{walk_params, walk_traced, Target};
use kostka::weylchar::{Family, IrrLabel};
use num_traits::Signed;
use serde_json::json;

use crate::{emit, ComputeArgs, EngineArg, Failure, Format, VarArg};

fn params(a: &ComputeArgs) -> Result<SystemParams, Failure> {
    let family: Family = a.family.parse().map_err(|_| Failure::usage(format!("unknown family `{}`", a.family)))?;
    let eps = match a.eps.as_str() {
        "-" | "-1" => -1,
        "0" => 0,
        "+" | "1" | "+1" => 1,
        e => return Err(Failure::usage(format!("--eps must be -, 0 or +, not `{e}`"))),
    };
    if a.n == 0 {
        return Err(Failure::usage("--n must be positive"));
    }
    match family {
        Family::A => {
            if a.s.is_some() || eps != 0 {
                return Err(Failure::usage("--s and --eps apply to type BC only"));
            }
            if a.engine != EngineArg::Shoji {
                return Err(Failure::usage("the transition engine is defined for type BC only"));
            }
            Ok(SystemParams::type_a(a.n))
        }
        Family::BC => {
            let s = a.s.as_deref().ok_or_else(|| Failure::usage("--s is required for type BC"))?;
            let s0 = parse_rational(s).map_err(|_| Failure::usage(format!("--s must be an integer or p/q, not `{s}`")))?;
            if !s0.is_positive() {
                return Err(Failure::usage("--s must be positive"));
            }
            if a.r == 0 {
                return Err(Failure::usage("--r must be positive"));
            }
            if a.r != 2 && a.engine != EngineArg::Shoji {
                return Err(Failure::usage("the transition engine needs --r 2"));
            }
            Ok(SystemParams::bc(a.n, a.r, s0, eps))
        }
    }
}

fn render<L: IrrLabel>(ks: &KostkaSystem<L>, a: &ComputeArgs) -> String {
    let var = if a.var == VarArg::Q { Var::Q } else { Var::T };
    match a.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&system_doc(ks)).expect("serializable")),
        Format::Csv => render_csv(ks, var),
        Format::Pretty => render_pretty(ks, var),
    }
}

/// Entries where the two systems differ, after aligning labels.
fn diff(a: &KostkaSystem<BiPartition>, b: &KostkaSystem<BiPartition>) -> Vec<(String, String, String, String)> {
    let labels = a.labels();
    let mut out = Vec::new();
    for x in &labels {
        for y in &labels {
            let (p, q) = (a.entry(x, y), b.entry(x, y));
            if p != q {
                let show = |e: Option<&kostka::exactalg::QRatFun>| e.map(|e| e.to_string()).unwrap_or_else(|| "missing".into());
                out.push((x.to_string(), y.to_string(), show(p), show(q)));
            }
        }
    }
    if a.lambda != b.lambda && out.is_empty() {
        out.push(("Lambda".into(), String::new(), String::new(), String::new()));
    }
    out
}

pub fn run(a: &ComputeArgs) -> Result<(), Failure> {
    let p = params(a)?;
    if p.family == Family::A {
        let ks: KostkaSystem<Partition> = solve_a(p.n).map_err(Failure::engine)?;
        return emit(a.out.as_ref(), &render(&ks, a));
    }
    let transition = || -> Result<KostkaSystem<BiPartition>, Failure> {
        if let Some(path) = &a.trace {
            let target = Target::from_param(p.s0.as_ref().expect("bc params"), p.eps_sign).map_err(Failure::engine)?;
            let (_, trace) = walk_traced(p.n, target).map_err(Failure::engine)?;
            let text = serde_json::to_string_pretty(&trace).expect("serializable");
            emit(Some(path), &format!("{text}\n"))?;
        }
        walk_params(&p).map_err(Failure::engine)
    };
    match a.engine {
        EngineArg::Shoji => emit(a.out.as_ref(), &render(&solve_bc(&p).map_err(Failure::engine)?, a)),
        EngineArg::Transition => emit(a.out.as_ref(), &render(&transition()?, a)),
        EngineArg::Both => {
            let ls = solve_bc(&p).map_err(Failure::engine)?;
            let tr = transition()?;
            let d = diff(&ls, &tr);
            let text = match a.format {
                Format::Json => {
                    let mismatches: Vec<_> = d.iter().map(|(r, c, x, y)| json!({"row": r, "col": c, "lusztig-shoji": x, "transition": y})).collect();
                    let v = json!({
                        "lusztig-shoji": system_doc(&ls),
                        "transition": system_doc(&tr),
                        "diff": {"identical": d.is_empty(), "mismatches": mismatches},
                    });
                    format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
                }
                _ => {
                    let mut s = render(&ls, a);
                    s.push('\n');
                    s.push_str(&render(&tr, a));
                    s.push('\n');
                    if d.is_empty() {
                        s.push_str("diff: identical\n");
                    } else {
                        s.push_str(&format!("diff: {} entries differ\n", d.len()));
                        for (r, c, x, y) in &d {
                            s.push_str(&format!("  K[{r}, {c}]: {x} vs {y}\n"));
                        }
                    }
                    s
                }
            };
            emit(a.out.as_ref(), &text)?;
            if d.is_empty() {
                Ok(())
            } else {
                Err(Failure { code: 4, message: format!("engines disagree in {} entries", d.len()) })
            }
        }
    }
}
