//! Randomized stress harness beyond the acceptance ranges.
//!
//! Hammers the three components whose guarantees come from theorems
//! rather than from construction: the odd-cycle procedure, the pair
//! search under validated conditions (a single failure there would
//! falsify the existence theorems or the implementation), and the
//! end-to-end solver on larger shapes.
//!
//! Usage: cargo run --release --example stress [seed]

use rand::Rng;

use thetacolor::cycle::{color_odd_cycle, CycleInstance};
use thetacolor::lists::{verify_coloring, ColorSet, ListAssignment};
use thetacolor::oracle::random_subset;
use thetacolor::pairs;
use thetacolor::sample;
use thetacolor::solver::{self, Certificate};
use thetacolor::theta::{build_theta, ThetaGraph};

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(777);
    let mut failures = 0u64;
    failures += cycle_sweep(seed);
    failures += pair_search_hunt(seed + 1);
    failures += solver_sweep(seed + 2);
    println!("total failures: {failures}");
    std::process::exit(if failures == 0 { 0 } else { 1 });
}

/// Wide (k, b, a, palette) ranges; small palettes force heavily shared
/// lists, the hardest case for the common-colour phase.
fn cycle_sweep(seed: u64) -> u64 {
    let mut r = sample::rng(seed);
    let mut failures = 0u64;
    let mut runs = 0u64;
    for k in 1..=4usize {
        for b in 1..=4usize {
            let a_min = ((2 * k + 1) * b + k - 1) / k;
            for a in a_min..=a_min + 2 {
                for palette_extra in 0..=3usize {
                    let palette: Vec<u32> = (0..(a + palette_extra) as u32).collect();
                    for _ in 0..2000 {
                        runs += 1;
                        let lists: Vec<ColorSet> = (0..2 * k + 1)
                            .map(|_| random_subset(&mut r, &palette, a))
                            .collect();
                        let inst = CycleInstance::new(k, a, b, lists).unwrap();
                        match color_odd_cycle(&inst) {
                            Ok(phi) => {
                                let ok = verify_coloring(
                                    &inst.graph(),
                                    &inst.list_assignment(),
                                    b,
                                    &phi,
                                )
                                .is_valid();
                                if !ok {
                                    failures += 1;
                                    println!("cycle: invalid colouring at k={k} b={b} a={a}");
                                }
                            }
                            Err(e) => {
                                failures += 1;
                                println!("cycle: k={k} b={b} a={a}: {e}");
                            }
                        }
                    }
                }
            }
        }
    }
    println!("cycle sweep: {runs} instances");
    failures
}

#[allow(clippy::type_complexity)]
fn random_condition_instance(
    r: &mut impl Rng,
) -> Option<(ThetaGraph, ListAssignment, usize, usize, usize, bool)> {
    let use_t = r.gen_bool(0.5);
    let m = r.gen_range(1..=5usize);
    let (theta, ell, tau) = if use_t {
        let p = r.gen_range(1..=4usize);
        let tau = r.gen_range(0..=m);
        let ell = r.gen_range(m.saturating_sub(tau)..=2 * m + 1);
        (build_theta(vec![2, 2, 2, 2 * p]).unwrap(), ell, tau)
    } else {
        let mut lens: Vec<usize> = (0..3).map(|_| 2 * r.gen_range(2..=4usize)).collect();
        lens.sort_unstable();
        let tau = 2 * r.gen_range(0..=m / 2);
        let lo = (2 * m.div_ceil(2)).saturating_sub(tau);
        let mut ell = r.gen_range(lo..=2 * m);
        if ell % 2 == 1 {
            ell += 1;
        }
        (build_theta(lens).unwrap(), ell, tau)
    };
    let palette_size = r.gen_range(2 * m + 2..=3 * m + 6);
    let pool: Vec<u32> = (0..palette_size as u32).collect();
    if ell > pool.len() {
        return None;
    }
    let mut lists = ListAssignment::default();
    lists.set("u", random_subset(r, &pool, ell));
    lists.set("v", random_subset(r, &pool, ell));
    for i in 0..theta.path_count() {
        let names = theta.internal_path(i);
        let n = names.len();
        for (j, v) in names.iter().enumerate() {
            let size = if n == 1 {
                2 * m + 1 - tau
            } else if j == 0 {
                if use_t {
                    2 * m + 1 - tau
                } else {
                    2 * m - tau
                }
            } else if j == n - 1 {
                2 * m + 1 - tau
            } else {
                2 * m + 1
            };
            if size > pool.len() {
                return None;
            }
            lists.set(v, random_subset(r, &pool, size));
        }
    }
    Some((theta, lists, ell, tau, m, use_t))
}

/// Draw random instances, keep the ones where the conditions validate,
/// and demand that the pair search succeeds on every single one.
fn pair_search_hunt(seed: u64) -> u64 {
    let mut r = sample::rng(seed);
    let mut failures = 0u64;
    let mut hits = 0u64;
    let mut attempts = 0u64;
    while hits < 20_000 && attempts < 400_000 {
        attempts += 1;
        let Some((theta, lists, ell, tau, m, use_t)) = random_condition_instance(&mut r) else {
            continue;
        };
        let report = if use_t {
            pairs::check_conditions_t(&theta, &lists, ell, tau, m)
        } else {
            pairs::check_conditions_c(&theta, &lists, ell, tau, m)
        };
        let Ok(report) = report else { continue };
        if !report.all_hold() {
            continue;
        }
        hits += 1;
        let ctx = pairs::ThetaContext::build(&theta, &lists).unwrap();
        let index = pairs::consistent_indexing(&ctx.lu, &ctx.lv).unwrap();
        let budgets = ctx.budgets(m);
        match pairs::find_pair(&ctx, &index, m - tau, &budgets, true) {
            Ok(Some(_)) => {}
            other => {
                failures += 1;
                println!(
                    "pair search: {other:?} on theta={:?} m={m} ell={ell} tau={tau}\nlists: {lists:?}",
                    theta.lengths()
                );
            }
        }
    }
    println!("pair search hunt: {hits} condition-satisfying instances of {attempts} drawn");
    failures
}

fn solver_sweep(seed: u64) -> u64 {
    let mut r = sample::rng(seed);
    let mut failures = 0u64;
    let mut runs = 0u64;
    let shapes: Vec<Vec<usize>> = vec![
        vec![6, 6, 6],
        vec![8, 4, 6],
        vec![4, 6, 8],
        vec![5, 5, 7],
        vec![7, 3, 5],
        vec![3, 3, 9],
        vec![2, 2, 2, 6],
        vec![2, 2, 2, 8],
    ];
    for shape in &shapes {
        let theta = build_theta(shape.clone()).unwrap();
        let graph = theta.to_graph();
        for m in 1..=3usize {
            for _ in 0..300 {
                runs += 1;
                let lists = sample::random_lists(&mut r, &graph, 2 * m + 1, 3 * m + 3);
                match solver::solve(&theta, &lists, m) {
                    Ok(out)
                        if out.certificate == Certificate::TheoremGuided
                            && verify_coloring(&graph, &lists, m, &out.coloring).is_valid() => {}
                    other => {
                        failures += 1;
                        println!("solver: shape={shape:?} m={m}: {other:?}");
                    }
                }
            }
            for kind in [
                sample::AdversarialKind::AllEqual,
                sample::AdversarialKind::PairwiseDisjoint,
                sample::AdversarialKind::HubFocused,
            ] {
                runs += 1;
                let lists = sample::adversarial_lists(&theta, 2 * m + 1, kind);
                match solver::solve(&theta, &lists, m) {
                    Ok(out) if verify_coloring(&graph, &lists, m, &out.coloring).is_valid() => {}
                    other => {
                        failures += 1;
                        println!("solver adversarial: shape={shape:?} m={m}: {other:?}");
                    }
                }
            }
        }
    }
    println!("solver sweep: {runs} instances");
    failures
}
