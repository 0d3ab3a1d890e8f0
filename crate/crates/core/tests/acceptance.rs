//! One PASS/FAIL line per acceptance criterion.

use std::io::Write;
use std::time::{Duration, Instant};

use kostka::combinat::{BiPartition, Partition};
use kostka::exactalg::QPoly;
use kostka::shoji::{check_against_omega, solve_a, solve_bc, KostkaSystem, SystemParams};
use kostka::transition::{detect_s_asym, midpoint_down, midpoint_up, walk_params};
use kostka::verify::{cases, run_case, Fault, Suite};
use kostka::weylchar::{
    char_table, coinvariant_multiplicity, graded_char_m_lambda, max_rank, Family, GradedCharacter, GroupSpec, IrrLabel,
};
use num_rational::BigRational;
use num_traits::Zero;

type Check = Result<String, String>;

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn bp(s: &str) -> BiPartition {
    s.parse().unwrap()
}

fn gch(terms: &[(&str, &[i64])]) -> GradedCharacter<BiPartition> {
    let mut g = GradedCharacter::new();
    for (l, c) in terms {
        g.add_term(bp(l), QPoly::from_t_coeffs(c));
    }
    g
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Integer `s` in `1..=hi` with `s ± ε`, and three interior points of each
/// interval `(k, k+1)` for `0 ≤ k < hi`.
fn grid(hi: i64) -> Vec<(BigRational, i8)> {
    let mut out = Vec::new();
    for k in 0..hi {
        for a in 1..=3 {
            out.push((rat(4 * k + a, 4), 0));
        }
        for eps in [-1, 0, 1] {
            out.push((rat(k + 1, 1), eps));
        }
    }
    out
}

fn b2_rows(engine: &dyn Fn(&SystemParams) -> Result<KostkaSystem<BiPartition>, String>) -> Check {
    let lsgn_low = gch(&[("2|-", &[1])]);
    let lsgn_up = gch(&[("2|-", &[1]), ("1|1", &[0, 1]), ("-|2", &[0, 0, 1])]);
    let ssgn_up = gch(&[("-|1,1", &[1])]);
    let ssgn_low = gch(&[("-|1,1", &[1]), ("1|1", &[0, 1]), ("-|2", &[0, 0, 1])]);
    let ref_low = gch(&[("1|1", &[1]), ("-|2", &[0, 1]), ("2|-", &[0, 1])]);
    let ref_mid = gch(&[("1|1", &[1]), ("-|2", &[0, 1])]);
    let ref_high = gch(&[("1|1", &[1]), ("-|2", &[0, 1]), ("-|1,1", &[0, 1])]);
    let rows = [
        ("(0,1)", rat(1, 2), &lsgn_low, &ssgn_low, &ref_low),
        ("1", rat(1, 1), &lsgn_low, &ssgn_low, &ref_mid),
        ("(1,2)", rat(3, 2), &lsgn_up, &ssgn_low, &ref_mid),
        ("2", rat(2, 1), &lsgn_up, &ssgn_up, &ref_mid),
        ("s>2", rat(7, 2), &lsgn_up, &ssgn_up, &ref_high),
    ];
    let mut constant = Vec::new();
    for (name, s0, l, s, r) in rows {
        let ks = engine(&SystemParams::bc(2, 2, s0, 0))?;
        for (chi, want) in [("2|-", l), ("-|1,1", s), ("1|1", r)] {
            let got = ks.graded(&bp(chi)).ok_or_else(|| format!("row {chi} not polynomial at {name}"))?;
            ensure(&got == want, || format!("s {name}: gch K_{chi} = {got}, expected {want}"))?;
        }
        constant.push((ks.graded(&bp("1,1|-")), ks.graded(&bp("-|2"))));
    }
    ensure(constant.windows(2).all(|w| w[0] == w[1]), || "K_sgn or K_triv varies".into())?;
    ensure(constant[0].1 == Some(gch(&[("-|2", &[1])])), || "K_triv is not [triv]".into())?;
    Ok("five rows match".into())
}

fn criterion_1() -> Check {
    let start = Instant::now();
    b2_rows(&|p| solve_bc(p).map_err(|e| e.to_string()))?;
    let ls = start.elapsed();
    b2_rows(&|p| walk_params(p).map_err(|e| e.to_string()))?;
    ensure(ls < Duration::from_secs(1), || format!("took {ls:?}"))?;
    Ok(format!("both engines, lusztig-shoji in {ls:.0?}"))
}

fn type_a_charge(n_max: usize) -> Check {
    for n in 1..=n_max {
        let ks = solve_a(n).map_err(|e| e.to_string())?;
        for l in ks.labels() {
            ensure(ks.graded(&l) == Some(graded_char_m_lambda(&l)), || format!("n={n} row {l}"))?;
        }
    }
    Ok(format!("n <= {n_max}"))
}

fn criterion_2() -> Check {
    type_a_charge(6)
}

fn bc_systems(n: usize) -> Result<Vec<KostkaSystem<BiPartition>>, String> {
    let hi = detect_s_asym(n, 2).map_err(|e| e.to_string())?;
    grid(hi).into_iter().map(|(s0, eps)| solve_bc(&SystemParams::bc(n, 2, s0, eps)).map_err(|e| e.to_string())).collect()
}

fn all_systems() -> Result<(Vec<KostkaSystem<Partition>>, Vec<KostkaSystem<BiPartition>>), String> {
    let a = (1..=6).map(|n| solve_a(n).map_err(|e| e.to_string())).collect::<Result<Vec<_>, _>>()?;
    let mut b = Vec::new();
    for n in 1..=4 {
        b.extend(bc_systems(n)?);
    }
    Ok((a, b))
}

fn describe(p: &SystemParams) -> String {
    format!("{} n={} s0={:?} eps={}", p.family, p.n, p.s0.as_ref().map(|s| s.to_string()), p.eps_sign)
}

fn criterion_3(a: &[KostkaSystem<Partition>], b: &[KostkaSystem<BiPartition>]) -> Check {
    for ks in a {
        ensure(check_against_omega(ks).map_err(|e| e.to_string())?.is_zero(), || describe(&ks.params))?;
    }
    for ks in b {
        ensure(check_against_omega(ks).map_err(|e| e.to_string())?.is_zero(), || describe(&ks.params))?;
    }
    Ok(format!("{} systems, zero residual", a.len() + b.len()))
}

fn engines(n: usize) -> Check {
    let hi = detect_s_asym(n, 2).map_err(|e| e.to_string())?;
    let g = grid(hi);
    for (s0, eps) in &g {
        let p = SystemParams::bc(n, 2, s0.clone(), *eps);
        let x = solve_bc(&p).map_err(|e| e.to_string())?;
        let y = walk_params(&p).map_err(|e| e.to_string())?;
        ensure(x.same_k(&y), || describe(&p))?;
    }
    Ok(format!("n={n}: {} parameters up to s_asym = {hi}", g.len()))
}

fn criterion_4() -> Check {
    let mut notes = Vec::new();
    for n in 1..=3 {
        notes.push(engines(n)?);
    }
    Ok(notes.join("; "))
}

fn criterion_5() -> Check {
    for n in 1..=3 {
        for s in 1..=2 {
            let lo = solve_bc(&SystemParams::bc_int(n, s, 0)).map_err(|e| e.to_string())?.as_graded_characters();
            let hi = solve_bc(&SystemParams::bc_int(n, s + 1, 0)).map_err(|e| e.to_string())?.as_graded_characters();
            let mid = solve_bc(&SystemParams::bc(n, 2, rat(2 * s + 1, 2), 0)).map_err(|e| e.to_string())?.as_graded_characters();
            let up = midpoint_up(n, s, &lo).map_err(|e| e.to_string())?;
            let down = midpoint_down(n, s, &hi).map_err(|e| e.to_string())?;
            ensure(up == down, || format!("n={n} s={s}: sides differ"))?;
            ensure(up == mid, || format!("n={n} s={s}: differs from the open-interval solution"))?;
        }
    }
    Ok("n <= 3, s in {1,2}".into())
}

fn criterion_6() -> Check {
    let mut count = 0;
    for n in 1..=5 {
        let t = char_table::<BiPartition>(n).map_err(|e| e.to_string())?;
        let h = BiPartition::new(Partition::row(1), Partition::row(n - 1));
        for l in &t.labels {
            let mut got = t.tensor_decompose(&h, l).map_err(|e| e.to_string())?;
            got.sort();
            let mut want: Vec<_> = l.dot_neighbours().into_iter().map(|m| (m, 1u64)).collect();
            want.sort();
            ensure(got == want, || format!("h ⊗ {l}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} bipartitions"))
}

fn normalizations<L: IrrLabel>(n: usize) -> Result<(), String> {
    let g = GroupSpec::new(L::FAMILY, n);
    let e = |e: kostka::weylchar::WeylError| format!("{} n={n}: {e}", L::FAMILY);
    ensure(coinvariant_multiplicity(&L::triv(n)).map_err(e)?.is_one(), || format!("{} n={n}: triv", L::FAMILY))?;
    ensure(coinvariant_multiplicity(&L::sgn(n)).map_err(e)? == QPoly::t_pow(g.n_star()), || format!("{} n={n}: sgn", L::FAMILY))?;
    let t = char_table::<L>(n).map_err(e)?;
    let mut total = BigRational::zero();
    for l in &t.labels {
        total += BigRational::from_integer(t.dim(l).map_err(e)?.into()) * coinvariant_multiplicity(l).map_err(e)?.at_one();
    }
    ensure(total == BigRational::from_integer(g.order()), || format!("{} n={n}: sum {total}", L::FAMILY))
}

fn criterion_7() -> Check {
    for n in 1..=max_rank(Family::A) {
        normalizations::<Partition>(n)?;
    }
    for n in 1..=max_rank(Family::BC) {
        normalizations::<BiPartition>(n)?;
    }
    Ok(format!("A up to {}, BC up to {}", max_rank(Family::A), max_rank(Family::BC)))
}

fn criterion_8(a: &[KostkaSystem<Partition>], b: &[KostkaSystem<BiPartition>]) -> Check {
    for ks in a {
        ensure(ks.findings().is_empty(), || format!("{}: {:?}", describe(&ks.params), ks.findings()))?;
    }
    for ks in b {
        ensure(ks.findings().is_empty(), || format!("{}: {:?}", describe(&ks.params), ks.findings()))?;
    }
    Ok(format!("{} systems, all entries in N[t]", a.len() + b.len()))
}

fn criterion_9() -> Check {
    let start = Instant::now();
    let all = cases(&Suite::ALL, 3, 8);
    let failed: Vec<_> = all.iter().map(|c| run_case(c, Fault::None)).filter(|o| !o.pass).collect();
    let took = start.elapsed();
    ensure(failed.is_empty(), || format!("{} failures, first {:?}", failed.len(), failed[0]))?;
    ensure(took < Duration::from_secs(300), || format!("took {took:?}"))?;
    Ok(format!("{} instances in {took:.1?}", all.len()))
}

/// Written to the process stdout so the lines survive output capture.
fn report(n: usize, r: &Check) -> bool {
    let line = match r {
        Ok(note) => format!("PASS criterion {n}: {note}\n"),
        Err(why) => format!("FAIL criterion {n}: {why}\n"),
    };
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(line.as_bytes());
    let _ = out.flush();
    r.is_ok()
}

#[test]
fn acceptance() {
    let systems = all_systems();
    let (c3, c8) = match &systems {
        Ok((a, b)) => (criterion_3(a, b), criterion_8(a, b)),
        Err(e) => (Err(e.clone()), Err(e.clone())),
    };
    let results = [
        criterion_1(),
        criterion_2(),
        c3,
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        c8,
        criterion_9(),
    ];
    let mut ok = true;
    for (i, r) in results.iter().enumerate() {
        ok &= report(i + 1, r);
    }
    assert!(ok, "some acceptance criteria failed");
}

#[test]
#[ignore = "slow tier"]
fn type_a_charge_large() {
    let r = type_a_charge(8);
    assert!(report(2, &r));
}

#[test]
#[ignore = "slow tier"]
fn engines_rank_four() {
    let r = engines(4);
    assert!(report(4, &r));
}
