//! Acceptance suite: one PASS/FAIL line per criterion, with the time limit
//! of each criterion enforced on its wall-clock duration.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use blockgraph::arith::{self, multiplicative_order};
use blockgraph::blocks::{block_partition, partitions_over_all_ideals, principal_block_rows};
use blockgraph::chartab::find_match;
use blockgraph::corpus;
use blockgraph::graph::{build_block_graph, solvability_criterion};
use blockgraph::lietype::{
    steinberg_verdict, table2_row, zsigmondy, zsigmondy_prime_of_te, Family, GenericLieGroup,
};
use blockgraph::tablegen::dixon_table;
use num_traits::{ToPrimitive, Zero};

use common::{dixon_groups, load};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn completeness() -> Outcome {
    let mut slowest = Duration::ZERO;
    for name in ["A5", "A6", "L2_7", "L2_11", "Sz8"] {
        let start = Instant::now();
        let g = build_block_graph(&load(name)).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        check(g.is_complete(), || {
            format!("{name} misses {:?}", g.missing_edges())
        })?;
        check(elapsed < Duration::from_secs(1), || {
            format!("{name} took {elapsed:.2?} (limit 1s)")
        })?;
        slowest = slowest.max(elapsed);
    }
    Ok(format!(
        "A5, A6, L2(7), L2(11), Sz(8) complete; slowest {slowest:.2?} (limit 1s each)"
    ))
}

fn j1_exception() -> Outcome {
    let start = Instant::now();
    let t = load("J1");
    let g = build_block_graph(&t).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    check(t.class_count() == 15, || {
        format!("J1 has {} classes", t.class_count())
    })?;
    check(g.vertices() == [2, 3, 5, 7, 11, 19], || {
        format!("vertices {:?}", g.vertices())
    })?;
    check(
        g.edge_count() == 14 && g.missing_edges() == [(3, 5)],
        || format!("{} edges, missing {:?}", g.edge_count(), g.missing_edges()),
    )?;
    check(elapsed < Duration::from_secs(5), || {
        format!("took {elapsed:.2?} (limit 5s)")
    })?;
    Ok(format!(
        "J1: 14 edges, only {{3,5}} missing; {elapsed:.2?} (limit 5s)"
    ))
}

fn nilpotency() -> Outcome {
    for name in ["C6", "C12", "D8", "Q8"] {
        let g = build_block_graph(&load(name)).map_err(|e| e.to_string())?;
        check(g.edge_count() == 0, || {
            format!("{name} has {} edges", g.edge_count())
        })?;
    }
    for name in ["S3", "S4", "A4", "SL2_3"] {
        let g = build_block_graph(&load(name)).map_err(|e| e.to_string())?;
        check(g.edge_count() >= 1, || format!("{name} is edgeless"))?;
    }
    Ok("C6, C12, D8, Q8 edgeless; S3, S4, A4, SL(2,3) have edges".into())
}

fn alternating_symmetric() -> Outcome {
    for name in ["S5", "A6"] {
        let g = build_block_graph(&load(name)).map_err(|e| e.to_string())?;
        check(g.is_complete(), || {
            format!("{name} misses {:?}", g.missing_edges())
        })?;
    }
    Ok("S5 and A6 complete".into())
}

fn steinberg_oracle() -> Outcome {
    let start = Instant::now();
    let g = |f, n, q| GenericLieGroup::new(f, n, q).map_err(|e| e.to_string());
    let cases = [
        ("L2_7", g(Family::A, 1, 7)?, vec![2, 3]),
        ("L2_11", g(Family::A, 1, 11)?, vec![2, 3, 5]),
        ("Sz8", g(Family::Suzuki, 2, 8)?, vec![5, 7, 13]),
        ("L5_2", g(Family::A, 4, 2)?, vec![3, 5, 7, 31]),
    ];
    let mut negatives = Vec::new();
    for (name, s, ells) in cases {
        let t = load(name);
        let degree = s.steinberg_degree().to_u64().unwrap();
        let st: Vec<usize> = (0..t.class_count())
            .filter(|&i| t.degree(i) == degree)
            .collect();
        check(st.len() == 1, || {
            format!("{name}: {} rows of degree {degree}", st.len())
        })?;
        for ell in ells {
            let verdict = steinberg_verdict(&s, ell).map_err(|e| format!("{s}, ℓ = {ell}: {e}"))?;
            let actual = principal_block_rows(&t, ell)
                .map_err(|e| e.to_string())?
                .contains(&st[0]);
            check(verdict.regular == actual, || {
                format!(
                    "{s}, ℓ = {ell}: predicate {} but blocks say {actual}",
                    verdict.regular
                )
            })?;
            if !actual {
                negatives.push(format!("{s} ℓ={ell} e={}", verdict.e));
            }
        }
    }
    let elapsed = start.elapsed();
    check(negatives == ["A4(2) ℓ=7 e=3"], || {
        format!("negative cases {negatives:?}")
    })?;
    check(elapsed < Duration::from_secs(30), || {
        format!("took {elapsed:.2?} (limit 30s)")
    })?;
    Ok(format!(
        "12 (group, ℓ) pairs agree, negative case {}; {elapsed:.2?} (limit 30s)",
        negatives[0]
    ))
}

fn zsigmondy_scan() -> Outcome {
    let mut absent = Vec::new();
    for t in 2..=12u64 {
        for n in 2..=12u64 {
            let value = t.pow(n as u32) - 1;
            let brute = arith::prime_divisors(value)
                .into_iter()
                .find(|&r| (1..n).all(|m| (t.pow(m as u32) - 1) % r != 0));
            let got = zsigmondy(t, n).map(|r| r.to_u64().unwrap());
            check(got == brute, || {
                format!("t={t} n={n}: {got:?} vs brute force {brute:?}")
            })?;
            if got.is_none() {
                absent.push((t, n));
            }
        }
    }
    let exceptions: Vec<(u64, u64)> = (2..=12u64)
        .flat_map(|t| (2..=12u64).map(move |n| (t, n)))
        .filter(|&(t, n)| (t, n) == (2, 6) || (n == 2 && (t + 1).is_power_of_two()))
        .collect();
    check(absent == exceptions, || {
        format!("absent at {absent:?}, expected {exceptions:?}")
    })?;
    Ok(format!(
        "121 pairs agree with brute force; absent exactly at {absent:?}"
    ))
}

fn table2_integrity() -> Outcome {
    let start = Instant::now();
    let mut rows = 0;
    for family in Family::ALL {
        let ranks: Vec<u32> = match family.fixed_rank() {
            Some(r) => vec![r],
            None => (family.min_rank()..=12).collect(),
        };
        for n in ranks {
            let groups: Vec<GenericLieGroup> = (2u64..)
                .filter(|&q| arith::prime_power(q).is_some())
                .filter_map(|q| GenericLieGroup::new(family, n, q).ok())
                .filter(|s| table2_row(s).is_ok())
                .take(2)
                .collect();
            for s in groups {
                let row = table2_row(&s).map_err(|e| e.to_string())?;
                check((&row.t_order % &row.te_order).is_zero(), || {
                    format!("{s}: |T_e| ∤ |T|")
                })?;
                check((s.order() % &row.t_order).is_zero(), || {
                    format!("{s}: |T| ∤ |S|")
                })?;
                if let Some(r) = zsigmondy_prime_of_te(&s) {
                    let r = r.to_u64().ok_or("huge prime")?;
                    let ord = multiplicative_order(s.p(), r);
                    check(ord == Some(row.ord_r_p as u64), || {
                        format!(
                            "{s}: ord_{r}({}) = {ord:?}, column says {}",
                            s.p(),
                            row.ord_r_p
                        )
                    })?;
                }
                rows += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:.2?} (limit 10s)")
    })?;
    Ok(format!(
        "{rows} evaluated rows consistent; {elapsed:.2?} (limit 10s)"
    ))
}

fn ideal_independence() -> Outcome {
    let mut checked = 0;
    for name in corpus::names() {
        let t = load(name);
        for p in t.prime_divisors() {
            let all = partitions_over_all_ideals(&t, p).map_err(|e| e.to_string())?;
            check(all.iter().all(|b| *b == all[0]), || {
                format!("{name}, p = {p} differs")
            })?;
            checked += all.len();
        }
    }
    Ok(format!(
        "{} tables, {checked} (table, p, ideal) partitions identical",
        corpus::names().count()
    ))
}

fn dixon_round_trip() -> Outcome {
    let start = Instant::now();
    for (name, group) in dixon_groups() {
        let generated = dixon_table(name, &group.group).map_err(|e| format!("{name}: {e}"))?;
        let bundled = load(name);
        let m = find_match(&generated, &bundled).ok_or_else(|| format!("{name}: tables differ"))?;
        for p in generated.prime_divisors() {
            let blocks =
                |t, map: &dyn Fn(usize) -> usize| -> Result<BTreeSet<BTreeSet<usize>>, String> {
                    Ok(block_partition(t, p)
                        .map_err(|e| e.to_string())?
                        .blocks
                        .iter()
                        .map(|b| b.rows.iter().map(|&r| map(r)).collect())
                        .collect())
                };
            let ours = blocks(&generated, &|r| m.rows[r])?;
            let theirs = blocks(&bundled, &|r| r)?;
            check(ours == theirs, || {
                format!("{name}, p = {p}: block partitions differ")
            })?;
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:.2?} (limit 60s)")
    })?;
    Ok(format!(
        "S3, A4, S4, A5, SL(2,3) tables and blocks match; {elapsed:.2?} (limit 60s)"
    ))
}

fn solvability() -> Outcome {
    let a5 = solvability_criterion(&load("A5")).map_err(|e| e.to_string())?;
    let s4 = solvability_criterion(&load("S4")).map_err(|e| e.to_string())?;
    check(!a5.solvable, || "A5 certified solvable".into())?;
    check(s4.solvable, || {
        format!("S4 not certified; triangles {:?}", s4.triangles)
    })?;
    Ok(format!(
        "A5 not certified (triangles {:?}); S4 solvable",
        a5.triangles
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("completeness", completeness),
        ("J1 exception", j1_exception),
        ("nilpotency", nilpotency),
        ("alternating/symmetric completeness", alternating_symmetric),
        ("Steinberg predicate vs blocks", steinberg_oracle),
        ("Zsigmondy primes", zsigmondy_scan),
        ("Sylow torus data", table2_integrity),
        ("ideal independence", ideal_independence),
        ("Dixon round trip", dixon_round_trip),
        ("solvability criterion", solvability),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
