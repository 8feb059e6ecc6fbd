//! Acceptance gate: one line per criterion, exact comparisons only.

use std::process::ExitCode;
use std::time::Instant;

use crystal_core::abacus::{self, base_incremental, cores_of, to_beta};
use crystal_core::crystal::{
    core_to_coset, coset_to_core, crystal_closure, level_pairing, ChargedPartition, CrystalElement,
};
use crystal_core::kleshchev::{
    fayers_e3_check, is_kleshchev_bipartition, is_kleshchev_multi, mathas_e2_check,
};
use crystal_core::partition::{restricted_partitions_up_to, restricted_tuples_up_to};
use crystal_core::path_model::{ceil, floor, ls_path, StretchedElement};
use crystal_core::verify::{run_suite, Suite};
use crystal_core::{Modulus, Multipartition, Node, Partition, Residue};
use num_rational::BigRational;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn md(v: u32) -> Modulus {
    Modulus::new(v).unwrap()
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn restricted(e: Modulus, n: usize) -> Vec<Partition> {
    restricted_partitions_up_to(n, e)
        .into_iter()
        .flatten()
        .collect()
}

/// Counts checks and keeps the first failure.
struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self, summary: &str) -> Outcome {
        match self.failure {
            None => Ok(format!("{} checks, {summary}", self.checks)),
            Some(f) => Err(f),
        }
    }
}

fn suite(suite: Suite, moduli: &[u32], max_n: usize) -> Outcome {
    let mut cases = 0;
    for &ev in moduli {
        let report = run_suite(suite, md(ev), max_n, 2024).map_err(|e| e.to_string())?;
        if let Some(c) = report.counterexample {
            return Err(format!("e={ev}: {c}"));
        }
        cases += report.cases;
    }
    Ok(format!("{cases} cases, 0 mismatches"))
}

fn criterion_1() -> Outcome {
    suite(Suite::Main, &[2, 3, 4], 10)
}

fn criterion_2() -> Outcome {
    let mut t = Tally::new();
    for (ev, n) in [(2, 12), (3, 12), (4, 10)] {
        let e = md(ev);
        for lam in restricted(e, n) {
            for m in e.residues() {
                let path = ls_path(&lam, m).map_err(|e| e.to_string())?;
                t.check(abacus::roof(&lam, m).unwrap() == *path.ceil(), || {
                    format!("roof≠ceil for {lam} e={ev} m={m}")
                });
                t.check(abacus::base(&lam, m).unwrap() == *path.floor(), || {
                    format!("base≠floor for {lam} e={ev} m={m}")
                });
            }
        }
    }
    t.finish("0 mismatches")
}

fn criterion_3() -> Outcome {
    let e3 = md(3);
    let z = e3.residue(0);
    let mut t = Tally::new();

    let j = to_beta(&p(&[4, 2, 1]), z);
    let top: Vec<i64> = j.elements_from(-6).collect();
    t.check(top == [4, 1, -1, -3, -4, -5, -6], || {
        format!("beta set of (4,2,1): {top:?}")
    });

    let up = to_beta(&p(&[3, 2, 1]), e3.residue(2))
        .up_step()
        .to_partition();
    t.check(up == p(&[4, 2, 1]), || format!("up((3,2,1)) = {up}"));

    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let shape = |s: &StretchedElement| -> Vec<(Partition, BigRational)> {
        s.segments()
            .iter()
            .map(|seg| (seg.core.clone(), seg.mass.clone()))
            .collect()
    };
    let s = ls_path(&p(&[3, 1, 1, 1]), z).unwrap();
    t.check(
        shape(&s) == [(p(&[4, 2, 1, 1]), q(1, 3)), (p(&[3, 1, 1]), q(2, 3))],
        || format!("S((3,1,1,1)) = {}", s.to_json()),
    );
    let s = ls_path(&p(&[2, 2, 1]), z).unwrap();
    t.check(
        shape(&s)
            == [
                (p(&[5, 3, 1]), q(1, 3)),
                (p(&[4, 2]), q(1, 6)),
                (p(&[2]), q(1, 2)),
            ],
        || format!("S((2,2,1)) = {}", s.to_json()),
    );

    let e6 = md(6);
    let n = p(&[4, 2]).residue_counts(e6.residue(0));
    t.check(n == [2, 1, 1, 1, 0, 1], || format!("N-vector {n:?}"));
    let l: Vec<i64> = (1..=6)
        .map(|i| (n[i - 1] as i64 - n[i % 6] as i64) * 6 + i as i64)
        .collect();
    t.check(l == [7, 2, 3, 10, -1, 0], || format!("L-vector {l:?}"));
    let maxima = to_beta(&p(&[4, 2]), e6.residue(0)).runner_maxima();
    let shifted: Vec<i64> = (1..=6).map(|i| maxima.get(e6.residue(i)) + 6).collect();
    t.check(shifted == l, || format!("M_i + e = {shifted:?}"));
    t.finish("all examples exact")
}

fn criterion_4() -> Outcome {
    let e2 = md(2);
    let stair = |k: usize| Partition::new((1..=k).rev().collect()).unwrap();
    let mut t = Tally::new();
    for lam in restricted(e2, 14) {
        for m in e2.residues() {
            let c = ceil(&lam, m).unwrap();
            let f = floor(&lam, m).unwrap();
            t.check(c == stair(lam.len()), || {
                format!("ceil({lam}) = {c}, m={m}")
            });
            t.check(f == stair(lam.first_part()), || {
                format!("floor({lam}) = {f}, m={m}")
            });
        }
    }
    t.finish("0 mismatches")
}

fn criterion_5() -> Outcome {
    let e2 = md(2);
    let n = 8;
    let mut t = Tally::new();
    for r in 1..=3usize {
        let tuples = restricted_tuples_up_to(n, e2, r);
        for d in 0..=r {
            let charges: Vec<Residue> = (0..r).map(|k| e2.residue(i64::from(k >= d))).collect();
            let graph = crystal_closure(&charges, n).map_err(|e| e.to_string())?;
            for comps in &tuples {
                let x = Multipartition::new(comps.clone(), charges.clone()).unwrap();
                let mathas = mathas_e2_check(&x).unwrap();
                let criterion = is_kleshchev_multi(&x).unwrap().accepted;
                let reached = graph.contains(&x);
                t.check(mathas == criterion && criterion == reached, || {
                    format!(
                        "{} mathas={mathas} criterion={criterion} closure={reached}",
                        x.to_json()
                    )
                });
            }
        }
    }
    t.finish("0 mismatches")
}

fn criterion_6() -> Outcome {
    let e3 = md(3);
    let mut t = Tally::new();
    for pair in restricted_tuples_up_to(10, e3, 2) {
        for m in e3.residues() {
            let fayers = fayers_e3_check(&pair[0], &pair[1], m).unwrap();
            let criterion = is_kleshchev_bipartition(&pair[0], &pair[1], m)
                .unwrap()
                .accepted;
            t.check(fayers == criterion, || {
                format!("{} ⊗ {} m={m}: fayers={fayers}", pair[0], pair[1])
            });
        }
    }
    t.finish("0 mismatches")
}

fn criterion_7() -> Outcome {
    suite(Suite::Mullineux, &[2, 3, 4], 10)
}

fn criterion_8() -> Outcome {
    let mut t = Tally::new();
    for ev in 2..=4 {
        let e = md(ev);
        for lam in restricted(e, 10) {
            for m in e.residues() {
                let beads = to_beta(&lam, m);
                let up = beads.up_step().to_partition();
                let down = beads.down_step().to_partition();
                t.check(
                    up.contains(&lam) && up.is_restricted(e) && up.len() == lam.len(),
                    || format!("up({lam}) = {up}, e={ev} m={m}"),
                );
                t.check(
                    lam.contains(&down)
                        && down.is_restricted(e)
                        && down.first_part() == lam.first_part(),
                    || format!("down({lam}) = {down}, e={ev} m={m}"),
                );

                let base = abacus::base(&lam, m).unwrap();
                let incremental = base_incremental(&lam, m).unwrap();
                t.check(incremental == base, || {
                    format!("incremental base of {lam}: {incremental} vs {base}")
                });

                let x = ChargedPartition::new(lam.clone(), m);
                let base_core = ChargedPartition::new(base.clone(), m);
                for i in e.residues() {
                    let expected = if base_core.phi(i) > 0 {
                        base_core.weyl_s(i).shape
                    } else {
                        base.clone()
                    };
                    let got = abacus::base(&x.f_max(i).shape, m).unwrap();
                    t.check(got == expected, || {
                        format!("base(f_{i}^max {lam}) = {got}, e={ev} m={m}")
                    });
                    for k in 0..x.phi(i) {
                        let y = x.f_pow(i, k).unwrap();
                        t.check(abacus::base(&y.shape, m).unwrap() == base, || {
                            format!("base(f_{i}^{k} {lam})")
                        });
                    }

                    let pairing = level_pairing(&x.weight(), i);
                    let strings = x.phi(i) as i64 - x.eps(i) as i64;
                    t.check(pairing == x.pairing(i) && pairing == strings, || {
                        format!(
                            "pairing of {lam} at {i}: {pairing}, |A|-|R| = {}, φ-ε = {strings}",
                            x.pairing(i)
                        )
                    });

                    let y = x.weyl_s(i);
                    t.check(y.weyl_s(i) == x, || {
                        format!("s_{i} not an involution on {lam}")
                    });
                    if lam.size() <= 7 && ev >= 3 {
                        let j = i.succ();
                        t.check(
                            x.weyl_s(i).weyl_s(j).weyl_s(i) == x.weyl_s(j).weyl_s(i).weyl_s(j),
                            || format!("braid relation fails at {lam}, i={i}"),
                        );
                    }
                }
                if !lam.is_empty() {
                    let row = lam.len() - 1;
                    let i = Node {
                        row,
                        col: lam.part(row) - 1,
                    }
                    .residue(m);
                    let roof = ChargedPartition::new(abacus::roof(&lam, m).unwrap(), m);
                    let got = abacus::roof(&x.e_max(i).shape, m).unwrap();
                    t.check(got == roof.weyl_s(i).shape, || {
                        format!("roof(e_{i}^max {lam}) = {got}")
                    });
                }
            }
        }
        for n in 0..=20 {
            for core in cores_of(n, e) {
                for m in e.residues() {
                    let w = core_to_coset(&core, m).unwrap();
                    t.check(coset_to_core(&w, m) == core, || {
                        format!("core {core} not reached, e={ev} m={m}")
                    });
                }
            }
        }
    }
    t.finish("0 failures")
}

fn criterion_9() -> Outcome {
    suite(Suite::Demazure, &[2, 3, 4], 12)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "Kleshchev criterion agrees with the crystal closure",
            criterion_1,
        ),
        ("roof = ceil and base = floor", criterion_2),
        ("worked examples reproduced exactly", criterion_3),
        ("staircase ceil/floor at e=2", criterion_4),
        ("e=2 closed criterion equivalence", criterion_5),
        ("e=3 closed criterion equivalence", criterion_6),
        ("Mullineux symmetries", criterion_7),
        ("structural properties", criterion_8),
        ("Demazure consistency", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.1}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail} ({secs:.1}s)", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
