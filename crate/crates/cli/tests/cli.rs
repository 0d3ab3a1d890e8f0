use std::path::Path;
use std::process::{Command, Output};

fn kostka(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kostka"))
        .args(args)
        .env("KOSTKA_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn type_a_pretty_table() {
    let dir = tempfile::tempdir().unwrap();
    let o = kostka(&["compute", "--family", "A", "--n", "3", "--engine", "shoji", "--format", "pretty"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("gch K_1,1,1 = [1,1,1] + (t + t^2)[2,1] + t^3[3]"), "{s}");
    assert!(s.contains("gch K_2,1 = [2,1] + t[3]"));
}

#[test]
fn b2_open_interval_row() {
    let dir = tempfile::tempdir().unwrap();
    let o = kostka(&["compute", "--family", "BC", "--n", "2", "--s", "3/2", "--format", "pretty"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("gch K_2|- = [2|-] + t[1|1] + t^2[-|2]"), "{s}");
    assert!(s.contains("gch K_-|1,1 = [-|1,1] + t[1|1] + t^2[-|2]"));
    assert!(s.contains("gch K_1|1 = [1|1] + t[-|2]"));
    let q = stdout(&kostka(&["compute", "--family", "BC", "--n", "2", "--s", "3/2", "--format", "pretty", "--var", "q"], dir.path()));
    assert!(q.contains("gch K_1|1 = [1|1] + q^2[-|2]"), "{q}");
}

#[test]
fn both_engines_agree() {
    let dir = tempfile::tempdir().unwrap();
    let o = kostka(&["compute", "--family", "BC", "--n", "2", "--s", "1", "--engine", "both"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["diff"]["identical"], true);
    assert_eq!(v["lusztig-shoji"]["K"], v["transition"]["K"]);
    assert_eq!(v["transition"]["engine"], "transition");
}

#[test]
fn json_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b3.json");
    let o = kostka(
        &["compute", "--family", "BC", "--n", "3", "--s", "2", "--eps", "+", "--engine", "transition", "--out", out.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let ks: kostka::shoji::KostkaSystem<kostka::combinat::BiPartition> = kostka::export::system_from_json(&text).unwrap();
    assert!(ks.is_positive());
    assert_eq!(kostka::export::system_to_json(&ks).trim_end(), text.trim_end());
}

#[test]
fn trace_records() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.json");
    let o = kostka(
        &["compute", "--family", "BC", "--n", "2", "--s", "1", "--engine", "transition", "--trace", trace.to_str().unwrap()],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    let steps = v.as_array().unwrap();
    assert!(!steps.is_empty());
    for s in steps {
        for k in ["s_from", "s_to", "classes", "residual_check"] {
            assert!(s.get(k).is_some(), "{k}");
        }
        assert_eq!(s["residual_check"], true);
    }
    assert_eq!(steps.last().unwrap()["s_to"], "1");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| kostka(args, dir.path()).status.code();
    assert_eq!(code(&["compute", "--family", "BC", "--n", "2", "--s", "0.5"]), Some(2));
    assert_eq!(code(&["compute", "--family", "BC", "--n", "2"]), Some(2));
    assert_eq!(code(&["compute", "--family", "D", "--n", "2"]), Some(2));
    assert_eq!(code(&["compute", "--family", "A", "--n", "2", "--engine", "transition"]), Some(2));
    assert_eq!(code(&["compute", "--family", "BC", "--n", "2", "--s", "1", "--eps", "x"]), Some(2));
    assert_eq!(code(&["compute", "--family", "BC", "--n", "2", "--s", "1", "--r", "3", "--engine", "both"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["compute", "--family", "BC", "--n", "9", "--s", "1"]), Some(3));
    assert_eq!(code(&["verify", "--suite", "bogus"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn verify_suites() {
    let dir = tempfile::tempdir().unwrap();
    let o = kostka(&["verify", "--suite", "pieri", "--n-max", "4"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["suites"][0]["instances"], 4);
    let o = kostka(&["verify", "--suite", "orthogonality", "--n-max", "3", "--s-max", "8"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["outcomes"].as_array().unwrap().iter().all(|o| o["detail"] == "residual zero"));
}

#[test]
fn seeded_fault_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let o = kostka(&["verify", "--suite", "all", "--n-max", "2", "--s-max", "2", "--inject-fault"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], false);
    let f = &v["failures"][0];
    assert!(f["system"]["K"].is_array());
    assert!(f["n"].is_number());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("first:"), "{err}");
}

#[test]
fn sweep_is_deterministic() {
    let cache = tempfile::tempdir().unwrap();
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let o = kostka(&["sweep", "--n-max", "2", "--s-max", "3", "--out-dir", d.path().to_str().unwrap()], cache.path());
        assert_eq!(o.status.code(), Some(0));
    }
    let mut names: Vec<String> = std::fs::read_dir(a.path()).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(names.len(), 7);
    assert!(names.contains(&"index.json".to_string()));
    for n in &names {
        assert_eq!(std::fs::read(a.path().join(n)).unwrap(), std::fs::read(b.path().join(n)).unwrap(), "{n}");
    }
    let index: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(a.path().join("index.json")).unwrap()).unwrap();
    let groups: Vec<&str> = index["cells"].as_array().unwrap().iter().filter(|c| c["n"] == 1).map(|c| c["group"].as_str().unwrap()).collect();
    assert_eq!(groups, ["symplectic", "odd-orthogonal", "symplectic"]);
}

#[test]
fn sweep_reports_io_failure() {
    let cache = tempfile::tempdir().unwrap();
    let blocker = cache.path().join("file");
    std::fs::write(&blocker, b"x").unwrap();
    let o = kostka(&["sweep", "--n-max", "1", "--s-max", "1", "--out-dir", blocker.to_str().unwrap()], cache.path());
    assert_eq!(o.status.code(), Some(3));
}
