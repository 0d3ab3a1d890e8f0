//! Browser bindings: Kostka tables, engine comparison and phyla for small
//! ranks.

use kostka::combinat::BiPartition;
use kostka::export::{parse_rational, phyla_doc, render_pretty, Var};
use kostka::shoji::{bc_phyla, solve_a, solve_bc, KostkaSystem, SystemParams};
use kostka::transition::walk_params;
use kostka::weylchar::Family;
use num_traits::Signed;
use wasm_bindgen::prelude::*;

const MAX_N: usize = 4;

fn eps_of(eps: &str) -> Result<i8, String> {
    match eps {
        "-" => Ok(-1),
        "0" | "" => Ok(0),
        "+" => Ok(1),
        e => Err(format!("eps must be -, 0 or +, not `{e}`")),
    }
}

fn bc_params(n: usize, s: &str, eps: &str) -> Result<SystemParams, String> {
    if n == 0 || n > MAX_N {
        return Err(format!("n must be between 1 and {MAX_N}"));
    }
    let s0 = parse_rational(s).map_err(|_| format!("s must be an integer or p/q, not `{s}`"))?;
    if !s0.is_positive() {
        return Err("s must be positive".into());
    }
    Ok(SystemParams::bc(n, 2, s0, eps_of(eps)?))
}

pub fn table_text(family: &str, n: usize, s: &str, eps: &str, var: &str) -> Result<String, String> {
    let var = if var == "q" { Var::Q } else { Var::T };
    let family: Family = family.parse().map_err(|_| format!("unknown family `{family}`"))?;
    match family {
        Family::A => {
            if n == 0 || n > 6 {
                return Err("n must be between 1 and 6".into());
            }
            Ok(render_pretty(&solve_a(n).map_err(|e| e.to_string())?, var))
        }
        Family::BC => Ok(render_pretty(&solve_bc(&bc_params(n, s, eps)?).map_err(|e| e.to_string())?, var)),
    }
}

fn mismatches(a: &KostkaSystem<BiPartition>, b: &KostkaSystem<BiPartition>) -> usize {
    let labels = a.labels();
    labels.iter().flat_map(|x| labels.iter().map(move |y| (x, y))).filter(|(x, y)| a.entry(x, y) != b.entry(x, y)).count()
}

pub fn compare_text(n: usize, s: &str, eps: &str) -> Result<String, String> {
    let p = bc_params(n, s, eps)?;
    let ls = solve_bc(&p).map_err(|e| e.to_string())?;
    let tr = walk_params(&p).map_err(|e| e.to_string())?;
    let bad = mismatches(&ls, &tr);
    let v = serde_json::json!({
        "labels": ls.labels().iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        "identical": bad == 0 && ls.lambda == tr.lambda,
        "mismatched_entries": bad,
        "transition_positive": tr.is_positive(),
    });
    Ok(serde_json::to_string_pretty(&v).expect("serializable"))
}

pub fn phyla_text(n: usize, s: &str, eps: &str) -> Result<String, String> {
    let p = bc_params(n, s, eps)?;
    let phyla = bc_phyla(&p).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string_pretty(&phyla_doc(&p, &phyla)).expect("serializable"))
}

/// Pretty table of `K` and the graded characters of its rows.
#[wasm_bindgen]
pub fn kostka_table(family: &str, n: usize, s: &str, eps: &str, var: &str) -> Result<String, JsError> {
    table_text(family, n, s, eps, var).map_err(|e| JsError::new(&e))
}

/// Lusztig-Shoji against the transition engine, as JSON.
#[wasm_bindgen]
pub fn compare_engines(n: usize, s: &str, eps: &str) -> Result<String, JsError> {
    compare_text(n, s, eps).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn phyla(n: usize, s: &str, eps: &str) -> Result<String, JsError> {
    phyla_text(n, s, eps).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b2_table() {
        let t = table_text("BC", 2, "3", "0", "t").unwrap();
        assert!(t.contains("gch K_1|1 = [1|1] + t[-|1,1] + t[-|2]"), "{t}");
        assert!(table_text("A", 3, "", "", "q").unwrap().contains("q^2[3]"));
    }

    #[test]
    fn engines_match() {
        let v: serde_json::Value = serde_json::from_str(&compare_text(3, "3/2", "0").unwrap()).unwrap();
        assert_eq!(v["identical"], true);
        assert_eq!(v["mismatched_entries"], 0);
    }

    #[test]
    fn phyla_blocks() {
        let v: serde_json::Value = serde_json::from_str(&phyla_text(2, "1", "0").unwrap()).unwrap();
        assert_eq!(v["blocks"].as_array().unwrap().len(), 4);
        assert_eq!(v["s0"], "1");
    }

    #[test]
    fn bad_input() {
        assert!(table_text("BC", 2, "1.5", "0", "t").is_err());
        assert!(table_text("BC", 9, "1", "0", "t").is_err());
        assert!(compare_text(2, "1", "x").is_err());
        assert!(phyla_text(2, "-1", "0").is_err());
    }
}
