use std::collections::BTreeSet;

use kostka::verify::{cases, run_case, Fault, Outcome, Suite};
use rayon::prelude::*;
use serde_json::json;

use crate::{emit, Failure, VerifyArgs};

fn suites(names: &[String]) -> Result<Vec<Suite>, Failure> {
    let mut out = BTreeSet::new();
    for n in names {
        if n == "all" {
            out.extend(Suite::ALL);
        } else {
            out.insert(n.parse::<Suite>().map_err(Failure::usage)?);
        }
    }
    Ok(out.into_iter().collect())
}

pub fn run(a: &VerifyArgs) -> Result<(), Failure> {
    let suites = suites(&a.suite)?;
    if a.n_max == 0 || a.s_max < 1 {
        return Err(Failure::usage("--n-max and --s-max must be positive"));
    }
    let fault = if a.inject_fault { Fault::BumpK } else { Fault::None };
    let all = cases(&suites, a.n_max, a.s_max);
    let outcomes: Vec<Outcome> = all.par_iter().map(|c| run_case(c, fault)).collect();
    let failed: Vec<&Outcome> = outcomes.iter().filter(|o| !o.pass).collect();
    let summary: Vec<_> = suites
        .iter()
        .map(|s| {
            let mine: Vec<&Outcome> = outcomes.iter().filter(|o| o.suite == *s).collect();
            json!({
                "suite": s.name(),
                "instances": mine.len(),
                "failed": mine.iter().filter(|o| !o.pass).count(),
                "pass": mine.iter().all(|o| o.pass),
            })
        })
        .collect();
    let report = json!({
        "n_max": a.n_max,
        "s_max": a.s_max,
        "pass": failed.is_empty(),
        "suites": summary,
        "failures": failed,
        "outcomes": outcomes.iter().map(|o| json!({
            "suite": o.suite, "family": o.family, "n": o.n, "s0": o.s0,
            "eps_sign": o.eps_sign, "pass": o.pass, "detail": o.detail,
        })).collect::<Vec<_>>(),
    });
    emit(a.out.as_ref(), &format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable")))?;
    for s in &suites {
        let mine: Vec<&Outcome> = outcomes.iter().filter(|o| o.suite == *s).collect();
        let bad = mine.iter().filter(|o| !o.pass).count();
        eprintln!("{} {s}: {} instances, {bad} failed", if bad == 0 { "PASS" } else { "FAIL" }, mine.len());
    }
    match failed.first() {
        None => Ok(()),
        Some(o) => Err(Failure {
            code: 1,
            message: format!(
                "{} failures; first: {} {} n={} s0={} eps={}: {}",
                failed.len(),
                o.suite,
                o.family,
                o.n,
                o.s0.as_deref().unwrap_or("-"),
                o.eps_sign,
                o.detail
            ),
        }),
    }
}
