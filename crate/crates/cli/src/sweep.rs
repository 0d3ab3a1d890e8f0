use kostka::export::{phyla_doc, system_doc};
use kostka::shoji::{solve_bc, SystemParams};
use kostka::symbols::{group_dictionary, strong_classes};
use kostka::weylchar::write_atomic;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{Failure, SweepArgs};

fn cell(n: usize, s: i64) -> Result<Value, String> {
    let params = SystemParams::bc_int(n, s, 0);
    let ks = solve_bc(&params).map_err(|e| e.to_string())?;
    let group = group_dictionary(s as u64).map_err(|e| e.to_string())?;
    let classes = strong_classes(n, 2, s).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": n,
        "r": 2,
        "s": s,
        "group": group.as_str(),
        "phyla": phyla_doc(&params, &ks.phyla),
        "strong_classes": classes,
        "system": system_doc(&ks),
    }))
}

fn file_name(n: usize, s: i64) -> String {
    format!("bc-n{n}-s{s}.json")
}

pub fn run(a: &SweepArgs) -> Result<(), Failure> {
    if a.n_max == 0 || a.s_max < 1 {
        return Err(Failure::usage("--n-max and --s-max must be positive"));
    }
    let grid: Vec<(usize, i64)> = (1..=a.n_max).flat_map(|n| (1..=a.s_max).map(move |s| (n, s))).collect();
    let written: Vec<Result<Value, Failure>> = grid
        .par_iter()
        .map(|&(n, s)| {
            let v = cell(n, s).map_err(|e| Failure::engine(format!("n={n} s={s}: {e}")))?;
            let path = a.out_dir.join(file_name(n, s));
            let text = format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"));
            write_atomic(&path, text.as_bytes()).map_err(|e| Failure::engine(format!("{}: {e}", path.display())))?;
            Ok(json!({"n": n, "s": s, "group": v["group"], "file": file_name(n, s)}))
        })
        .collect();
    let cells = written.into_iter().collect::<Result<Vec<_>, _>>()?;
    let index = json!({"family": "BC", "r": 2, "n_max": a.n_max, "s_max": a.s_max, "cells": cells});
    let path = a.out_dir.join("index.json");
    let text = format!("{}\n", serde_json::to_string_pretty(&index).expect("serializable"));
    write_atomic(&path, text.as_bytes()).map_err(|e| Failure::engine(format!("{}: {e}", path.display())))?;
    eprintln!("wrote {} cells to {}", cells.len(), a.out_dir.display());
    Ok(())
}
