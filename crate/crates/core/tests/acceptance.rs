//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic.

use std::time::Instant;

use idealarr::derivations::{
    b_polynomial, build_basis_for_ideal, is_logarithmic, mat_basis_step, saito_check, BasisBuild,
    BuildOptions, NuPolicy,
};
use idealarr::lattice::{
    characteristic_polynomial, default_primes, point_count_charpoly, poincare_polynomial, IntPoly,
};
use idealarr::localheight::{coxeter_deficit, decomposition_pair_count, verify_local_global};
use idealarr::matengine::{restriction_deficit, run_induction};
use idealarr::partition::{height_distribution, ideal_exponents};
use idealarr::rootposet::{enumerate_ideals, height_layer, Ideal};
use idealarr::rootsys::RootSystem;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const MAIN_LIST: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4",
];

fn rs(s: &str) -> RootSystem {
    RootSystem::new(s.parse().expect("valid type"))
}

fn ideals(r: &RootSystem) -> Vec<Ideal> {
    enumerate_ideals(r).collect()
}

fn full(r: &RootSystem) -> Ideal {
    Ideal::from_members(r, r.all_roots()).expect("positive roots form an ideal")
}

fn from_exponents(e: &[u32]) -> IntPoly {
    IntPoly::from_roots(e.iter().map(|&d| d as i64))
}

struct Outcome {
    pass: bool,
    summary: String,
    failures: Vec<String>,
}

impl Outcome {
    fn new(summary: String, failures: Vec<String>) -> Self {
        Outcome {
            pass: failures.is_empty(),
            summary,
            failures,
        }
    }
}

fn per_ideal<F>(systems: &[&str], check: F) -> (usize, Vec<String>)
where
    F: Fn(&RootSystem, &Ideal) -> Option<String> + Sync,
{
    let mut count = 0;
    let mut failures = Vec::new();
    for name in systems {
        let r = rs(name);
        let list = ideals(&r);
        count += list.len();
        let mut f: Vec<String> = list
            .par_iter()
            .filter_map(|i| check(&r, i).map(|m| format!("{name} {:?}: {m}", i.members().to_vec())))
            .collect();
        failures.append(&mut f);
    }
    (count, failures)
}

fn triangulation() -> Outcome {
    let (n, failures) = per_ideal(MAIN_LIST, |r, i| {
        let dp = ideal_exponents(r, i).ok()?;
        let cert = match run_induction(r, i) {
            Ok(c) => c,
            Err(e) => return Some(e.to_string()),
        };
        if !cert.passed {
            return Some(format!("induction failed at layer {:?}", cert.failed_layer));
        }
        if cert.exponents != dp {
            return Some(format!("induction gives {} but DP is {dp}", cert.exponents));
        }
        let chi = characteristic_polynomial(r, i);
        (chi != from_exponents(dp.exponents())).then(|| format!("chi = {chi} but DP is {dp}"))
    });
    Outcome::new(format!("{n} ideals over {} systems", MAIN_LIST.len()), failures)
}

fn weyl_exponents() -> Outcome {
    let mut cases: Vec<(String, Vec<u32>)> = Vec::new();
    for l in 1..=5 {
        cases.push((format!("A{l}"), (1..=l).collect()));
    }
    for l in 2..=4 {
        cases.push((format!("B{l}"), (1..=l).map(|i| 2 * i - 1).collect()));
    }
    for l in 3..=4 {
        cases.push((format!("C{l}"), (1..=l).map(|i| 2 * i - 1).collect()));
    }
    cases.push(("D4".into(), vec![1, 3, 3, 5]));
    cases.push(("G2".into(), vec![1, 5]));
    cases.push(("F4".into(), vec![1, 5, 7, 11]));
    cases.push(("E6".into(), vec![1, 4, 5, 7, 8, 11]));
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|(name, expected)| {
            let r = rs(name);
            let f = full(&r);
            let dp = ideal_exponents(&r, &f).ok()?;
            if dp.exponents() != expected.as_slice() {
                return Some(format!("{name}: DP {dp} != {expected:?}"));
            }
            let chi = characteristic_polynomial(&r, &f);
            (chi != from_exponents(expected)).then(|| format!("{name}: chi = {chi}"))
        })
        .collect();
    Outcome::new(format!("{} systems incl. E6, lattice oracle on each", cases.len()), failures)
}

fn local_global() -> Outcome {
    let mut systems: Vec<&str> = MAIN_LIST.to_vec();
    systems.push("E6");
    let mut roots = 0;
    let mut failures = Vec::new();
    for name in systems {
        let r = rs(name);
        roots += r.num_positive_roots();
        let mut f: Vec<String> = (0..r.num_positive_roots())
            .into_par_iter()
            .filter_map(|a| {
                let rep = match verify_local_global(&r, a) {
                    Ok(rep) => rep,
                    Err(e) => return Some(format!("{name} root {a}: {e}")),
                };
                let pairs = decomposition_pair_count(&r, a) as i64;
                (!rep.pass || pairs != rep.lhs).then(|| {
                    format!(
                        "{name} {}: Ht-1={} local={} pairs={pairs}",
                        r.root(a),
                        rep.lhs,
                        rep.rhs
                    )
                })
            })
            .collect();
        failures.append(&mut f);
    }
    Outcome::new(format!("{roots} positive roots over 14 systems"), failures)
}

fn restriction_identity() -> Outcome {
    let (n, mut failures) = per_ideal(MAIN_LIST, |r, i| {
        i.members().iter().find_map(|a| {
            let c = restriction_deficit(r, i, a).ok()?;
            (!c.ok).then(|| format!("root {}: |B'|-|B''| = {} != {}", r.root(a), c.lhs, c.k))
        })
    });
    for name in MAIN_LIST {
        let r = rs(name);
        match coxeter_deficit(&r) {
            Ok(d) if d == r.coxeter_number() - 1 => {}
            other => failures.push(format!("{name}: |A|-|A^theta| = {other:?}, h = {}", r.coxeter_number())),
        }
    }
    Outcome::new(format!("{n} ideals, Coxeter remark on {} systems", MAIN_LIST.len()), failures)
}

fn structural_bounds() -> Outcome {
    let layers = std::sync::atomic::AtomicUsize::new(0);
    let (n, failures) = per_ideal(MAIN_LIST, |r, i| {
        if !height_distribution(r, i).is_weakly_decreasing() {
            return Some("height distribution increases".into());
        }
        let cert = run_induction(r, i).ok()?;
        layers.fetch_add(cert.layers.len(), std::sync::atomic::Ordering::Relaxed);
        cert.layers
            .iter()
            .find(|l| !l.q_le_p)
            .map(|l| format!("layer {}: q = {} > p = {}", l.layer, l.q, l.p))
    });
    Outcome::new(
        format!("{n} ideals, {} layers", layers.into_inner()),
        failures,
    )
}

fn oracle_independence() -> Outcome {
    let check = |r: &RootSystem, i: &Ideal| -> Option<String> {
        let chi = characteristic_polynomial(r, i);
        match point_count_charpoly(r, i, &default_primes(r, i)) {
            Ok(pc) if pc == chi => None,
            Ok(pc) => Some(format!("lattice {chi} vs point count {pc}")),
            Err(e) => Some(e.to_string()),
        }
    };
    let (mut n, mut failures) = per_ideal(&["A1", "A2", "A3", "B2", "B3", "C3", "G2"], check);
    let mut rng = ChaCha8Rng::seed_from_u64(0x1dea1);
    for name in ["A4", "B4", "C4", "D4", "F4"] {
        let r = rs(name);
        let list = ideals(&r);
        let sample: Vec<&Ideal> = list.choose_multiple(&mut rng, 200.min(list.len())).collect();
        n += sample.len();
        let mut f: Vec<String> = sample
            .par_iter()
            .filter_map(|i| check(&r, i).map(|m| format!("{name} {:?}: {m}", i.members().to_vec())))
            .collect();
        failures.append(&mut f);
    }
    Outcome::new(format!("{n} ideals (all of rank <= 3, up to 200 per rank-4 system)"), failures)
}

fn symbolic_freeness() -> Outcome {
    let opts = BuildOptions::default();
    let (n, failures) = per_ideal(&["A2", "A3", "B2", "B3", "C3", "G2", "A4"], |r, i| {
        let b = match build_basis_for_ideal(r, i, &opts) {
            Ok(b) => b,
            Err(e) => return Some(e.to_string()),
        };
        if !saito_check(r, &b.basis, i) {
            return Some("Saito criterion fails".into());
        }
        if !b.basis.iter().all(|t| is_logarithmic(r, t, i)) {
            return Some("a basis member is not logarithmic".into());
        }
        let dp = ideal_exponents(r, i).ok()?;
        (b.degrees() != dp.exponents()).then(|| format!("degrees {:?} vs DP {dp}", b.degrees()))
    });
    Outcome::new(format!("{n} ideals"), failures)
}

fn nu_independence() -> Outcome {
    let systems = ["A2", "A3", "B2", "B3", "C3", "G2", "A4"];
    let pools: Vec<(RootSystem, Vec<Ideal>)> = systems
        .iter()
        .map(|s| {
            let r = rs(s);
            let deep: Vec<Ideal> = enumerate_ideals(&r).filter(|i| i.height(&r) >= 2).collect();
            (r, deep)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0a0b);
    let mut triples = Vec::new();
    while triples.len() < 50 {
        let s = rng.gen_range(0..pools.len());
        let (r, pool) = &pools[s];
        let i = *pool.choose(&mut rng).expect("nonempty pool");
        let layer = rng.gen_range(2..=i.height(r));
        triples.push((s, i, layer));
    }
    let distinct = std::sync::atomic::AtomicUsize::new(0);
    let failures: Vec<String> = triples
        .par_iter()
        .filter_map(|&(s, i, layer)| {
            let r = &pools[s].0;
            let tag = format!("{} {:?} layer {layer}", systems[s], i.members().to_vec());
            let run = || -> Result<Option<String>, idealarr::error::Error> {
                let mut base = BasisBuild::new(r, &i)?;
                while base.next_layer(r) != Some(layer) {
                    base.advance(r, NuPolicy::SmallestIndex)?;
                }
                let mut a = mat_basis_step(r, &base, NuPolicy::SmallestIndex)?;
                let mut b = mat_basis_step(r, &base, NuPolicy::LargestIndex)?;
                let (la, lb) = (a.layers.last().unwrap(), b.layers.last().unwrap());
                if la.nu != lb.nu {
                    distinct.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                }
                let lower = height_layer(r, &i, layer - 1);
                for &beta in &la.betas {
                    let form = r.root(beta).coeffs();
                    let ba = b_polynomial(r, &lower, beta, NuPolicy::SmallestIndex)?.reduce_mod_linear(form);
                    let bb = b_polynomial(r, &lower, beta, NuPolicy::LargestIndex)?.reduce_mod_linear(form);
                    if !matches!(ba.ratio_to(&bb), Some(c) if !c.is_zero()) {
                        return Ok(Some(format!("b for {} differs beyond a scalar", r.root(beta))));
                    }
                }
                while a.advance(r, NuPolicy::SmallestIndex)? {}
                while b.advance(r, NuPolicy::SmallestIndex)? {}
                if !saito_check(r, &a.basis, &i) || !saito_check(r, &b.basis, &i) {
                    return Ok(Some("Saito criterion fails".into()));
                }
                Ok(None)
            };
            match run() {
                Ok(None) => None,
                Ok(Some(m)) => Some(format!("{tag}: {m}")),
                Err(e) => Some(format!("{tag}: {e}")),
            }
        })
        .collect();
    Outcome::new(
        format!("50 triples, {} with differing nu choices", distinct.into_inner()),
        failures,
    )
}

fn poincare() -> Outcome {
    let (n, failures) = per_ideal(MAIN_LIST, |r, i| {
        let dp = ideal_exponents(r, i).ok()?;
        let lhs = poincare_polynomial(&dp);
        let rhs = characteristic_polynomial(r, i).reciprocal_dual(r.rank());
        (lhs != rhs).then(|| format!("prod(1 + d t) = {lhs}, (-t)^l chi(-1/t) = {rhs}"))
    });
    Outcome::new(format!("{n} ideals"), failures)
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("exponent triangulation", triangulation),
        ("Weyl exponents", weyl_exponents),
        ("local-global formula and pair count", local_global),
        ("restriction count and Coxeter remark", restriction_identity),
        ("q <= p and decreasing height distributions", structural_bounds),
        ("lattice vs point-count oracle", oracle_independence),
        ("symbolic freeness", symbolic_freeness),
        ("nu-independence", nu_independence),
        ("Poincare consistency", poincare),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let secs = start.elapsed().as_secs_f64();
        println!(
            "{} [{}] {name}: {} ({secs:.1}s)",
            if o.pass { "PASS" } else { "FAIL" },
            k + 1,
            o.summary
        );
        for m in o.failures.iter().take(10) {
            println!("    {m}");
        }
        if !o.pass {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
