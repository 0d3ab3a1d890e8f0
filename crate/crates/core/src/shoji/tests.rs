use super::*;
use crate::exactalg::QPoly;
use crate::weylchar::graded_char_m_lambda;

fn bp(s: &str) -> BiPartition {
    s.parse().unwrap()
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

const SGN: &str = "1,1|-";
const SSGN: &str = "-|1,1";
const LSGN: &str = "2|-";
const REF: &str = "1|1";
const TRIV: &str = "-|2";

fn gch(terms: &[(&str, &[i64])]) -> GradedCharacter<BiPartition> {
    let mut g = GradedCharacter::new();
    for (l, c) in terms {
        g.add_term(bp(l), QPoly::from_t_coeffs(c));
    }
    g
}

fn b2(s0: BigRational, eps: i8) -> KostkaSystem<BiPartition> {
    solve_bc(&SystemParams::bc(2, 2, s0, eps)).unwrap()
}

#[test]
fn a2_dominance() {
    let ks = solve_a(2).unwrap();
    let (two, one_one): (Partition, Partition) = ("2".parse().unwrap(), "1,1".parse().unwrap());
    assert_eq!(ks.entry(&one_one, &two).unwrap().as_poly().unwrap(), &QPoly::t_pow(1));
    assert!(ks.entry(&two, &two).unwrap().is_one());
    assert!(ks.entry(&two, &one_one).unwrap().is_zero());
}

#[test]
fn single_block_gives_identity() {
    let params = SystemParams::bc_int(2, 1, 0);
    let phyla = Phyla::coarsest(BiPartition::all(2));
    let ks = solve(&params, &phyla).unwrap();
    assert_eq!(ks.k, RatMatrix::identity(5));
    assert_eq!(ks.lambda, omega_matrix(2, &phyla.labels()).unwrap());
}

fn check_row(ks: &KostkaSystem<BiPartition>, chi: &str, expected: GradedCharacter<BiPartition>) {
    assert_eq!(ks.graded(&bp(chi)).unwrap(), expected, "K_{chi} at {:?}", ks.params.s0);
}

fn ls(upper: bool) -> GradedCharacter<BiPartition> {
    if upper {
        gch(&[(LSGN, &[1]), (REF, &[0, 1]), (TRIV, &[0, 0, 1])])
    } else {
        gch(&[(LSGN, &[1])])
    }
}

fn ss(upper: bool) -> GradedCharacter<BiPartition> {
    if upper {
        gch(&[(SSGN, &[1])])
    } else {
        gch(&[(SSGN, &[1]), (REF, &[0, 1]), (TRIV, &[0, 0, 1])])
    }
}

#[test]
fn b2_table() {
    let base_ref = || gch(&[(REF, &[1]), (TRIV, &[0, 1])]);
    let rows: Vec<(BigRational, i8, GradedCharacter<BiPartition>, GradedCharacter<BiPartition>, GradedCharacter<BiPartition>)> = vec![
        (rat(1, 2), 0, ls(false), ss(false), gch(&[(REF, &[1]), (TRIV, &[0, 1]), (LSGN, &[0, 1])])),
        (rat(1, 1), -1, ls(false), ss(false), gch(&[(REF, &[1]), (TRIV, &[0, 1]), (LSGN, &[0, 1])])),
        (rat(1, 1), 0, ls(false), ss(false), base_ref()),
        (rat(3, 2), 0, ls(true), ss(false), base_ref()),
        (rat(1, 1), 1, ls(true), ss(false), base_ref()),
        (rat(2, 1), -1, ls(true), ss(false), base_ref()),
        (rat(2, 1), 0, ls(true), ss(true), base_ref()),
        (rat(5, 2), 0, ls(true), ss(true), gch(&[(REF, &[1]), (TRIV, &[0, 1]), (SSGN, &[0, 1])])),
        (rat(2, 1), 1, ls(true), ss(true), gch(&[(REF, &[1]), (TRIV, &[0, 1]), (SSGN, &[0, 1])])),
        (rat(7, 1), 0, ls(true), ss(true), gch(&[(REF, &[1]), (TRIV, &[0, 1]), (SSGN, &[0, 1])])),
    ];
    let mut sgn_rows = Vec::new();
    for (s0, eps, l, s, r) in rows {
        let ks = b2(s0, eps);
        assert!(ks.findings().is_empty(), "{:?}", ks.findings());
        check_row(&ks, LSGN, l);
        check_row(&ks, SSGN, s);
        check_row(&ks, REF, r);
        check_row(&ks, TRIV, gch(&[(TRIV, &[1])]));
        sgn_rows.push(ks.graded(&bp(SGN)).unwrap());
    }
    assert!(sgn_rows.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn type_a_matches_charge() {
    for n in 1..=6 {
        let ks = solve_a(n).unwrap();
        assert!(ks.findings().is_empty());
        for lambda in ks.labels() {
            assert_eq!(ks.graded(&lambda).unwrap(), graded_char_m_lambda(&lambda), "{lambda}");
        }
    }
}

#[test]
fn positivity_and_zero_residual() {
    let samples = [rat(1, 2), rat(1, 1), rat(3, 2), rat(2, 1), rat(5, 2), rat(3, 1), rat(4, 1), rat(9, 1)];
    for n in 1..=3 {
        for s in &samples {
            for eps in -1..=1 {
                let ks = solve_bc(&SystemParams::bc(n, 2, s.clone(), eps)).unwrap();
                assert!(ks.findings().is_empty(), "n={n} s={s} eps={eps}: {:?}", ks.findings());
                assert!(check_against_omega(&ks).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn residual_detects_mutation() {
    let mut ks = solve_bc(&SystemParams::bc_int(2, 1, 0)).unwrap();
    let omega = omega_matrix(2, &ks.labels()).unwrap();
    assert!(verify_orthogonality(&ks, &omega).unwrap().is_zero());
    let (i, j) = (0, 4);
    let bumped = ks.k.get(i, j) + &QRatFun::from_poly(QPoly::t_pow(1));
    ks.k.set(i, j, bumped);
    let rep = verify_orthogonality(&ks, &omega).unwrap();
    assert!(!rep.is_zero());
    assert!(rep.positions.iter().all(|&(a, b)| a == j || b == j));
    assert!(rep.max_degree.is_some());
}

#[test]
fn refinement_invariance() {
    let mut exercised = 0;
    for n in 1..=3 {
        for s in 1..=3 {
            let params = SystemParams::bc_int(n, s, 0);
            let p = bc_phyla(&params).unwrap();
            let q = p.reverse_ties();
            if p != q {
                exercised += 1;
            }
            let a = solve(&params, &p).unwrap();
            let b = solve(&params, &q).unwrap();
            assert!(a.same_k(&b), "n={n} s={s}");
        }
    }
    assert!(exercised > 0);
}

#[test]
fn twist_must_be_identity() {
    let params = SystemParams::bc_int(1, 1, 0);
    let p = bc_phyla(&params).unwrap();
    assert!(solve_twisted(&params, &p, &[0, 1]).is_ok());
    assert_eq!(solve_twisted(&params, &p, &[1, 0]), Err(ShojiError::UnsupportedTwist));
}

#[test]
fn mismatched_labels_rejected() {
    let params = SystemParams::bc_int(2, 1, 0);
    let p = Phyla::coarsest(vec![bp(TRIV)]);
    assert_eq!(solve(&params, &p).unwrap_err(), ShojiError::LabelMismatch);
}
