//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

mod common;

use std::time::{Duration, Instant};

use equicm::algebra::{sum_image_report, surjectivity_report, SumImageReport, SurjectivityReport};
use equicm::diagrams::{
    cm_decide, euler_characteristic, fiber_type, homogeneous_euler, noncm_join_generator, predicted_euler_sign,
    suspension_diagram, Catalog, FiberType, JoinOutcome,
};
use equicm::invariants::{
    depth_report, hilbert_growth_dimension, is_regular_sequence, is_regular_sequence_in_even_part,
    krull_dimension, Decision, VerdictBasis, DEFAULT_SEED,
};
use equicm::models::{borel_model, cohomology_betti, homogeneous_model_auto, ring_truncation, Class};

use common::{catalog_diagrams, mayer_vietoris_betti, monomial_count};

const SUSPENSION_BUDGET: Duration = Duration::from_secs(5);
const HOMOGENEOUS_BUDGET: Duration = Duration::from_secs(1);

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let d = Catalog::example("susp_w711").unwrap();
    let v = cm_decide(&d, Some(20), DEFAULT_SEED).map_err(|e| e.to_string())?;
    check(v.decision == Decision::NotCohenMacaulay, format!("verdict {}", v.decision))?;
    let cyl = borel_model(&d, 20).map_err(|e| e.to_string())?;
    let ring = ring_truncation(&cyl, 20);
    let kdim = krull_dimension(&d);
    check(kdim == 2, format!("Krull dimension {kdim}"))?;
    let depth = depth_report(&ring, kdim, DEFAULT_SEED);
    let socle = depth.socle.as_ref().ok_or("no socle certificate")?;
    check(depth.lower_bound == 0, format!("depth lower bound {}", depth.lower_bound))?;
    let growth = hilbert_growth_dimension(&ring);
    check(growth.lower() >= 1, format!("growth window {:?}", growth.window))?;
    let elapsed = start.elapsed();
    check(elapsed < SUSPENSION_BUDGET, format!("took {elapsed:?}"))?;
    // a longer truncation lets the Hilbert numerator settle
    let deep = ring_truncation(&borel_model(&d, 50).map_err(|e| e.to_string())?, 50);
    let settled = hilbert_growth_dimension(&deep);
    check(settled.estimate == Some(kdim), format!("growth through 50: {:?}", settled.estimate))?;
    Ok(format!(
        "{v}; socle {} in degree {}; Kdim {kdim}, growth window {:?} at 20, estimate {} at 50; {:.2?}",
        socle.class.representative,
        socle.class.degree,
        growth.window,
        kdim,
        elapsed
    ))
}

fn criterion_2() -> Outcome {
    let d = Catalog::example("corank").unwrap();
    let bound = 20;
    let cyl = borel_model(&d, bound).map_err(|e| e.to_string())?;
    let ring = ring_truncation(&cyl, bound);
    for n in 0..=bound {
        // ℚ[x, y1, y2]/(x y1, x y2), all generators in degree 2
        let expected = match n {
            0 => 1,
            n if n % 2 == 1 => 0,
            n => monomial_count(&[2, 2], n) + 1,
        };
        check(ring.dim(n) == expected, format!("degree {n}: {} vs {expected}", ring.dim(n)))?;
    }
    let kdim = krull_dimension(&d);
    check(kdim == 2, format!("Krull dimension {kdim}"))?;
    let depth = depth_report(&ring, kdim, DEFAULT_SEED);
    check(depth.lower_bound == 1, format!("depth lower bound {}", depth.lower_bound))?;
    let first = depth.sequence[0].to_class();
    let mut attempts = 0;
    for e in (2..=bound / 2).step_by(2) {
        for i in 0..ring.dim(e) {
            let cert = is_regular_sequence(&ring, &[first.clone(), Class::basis(e, i)]).map_err(|e| e.to_string())?;
            check(!cert.is_regular(), format!("extension by h{e}_{} is regular", i + 1))?;
            attempts += 1;
        }
    }
    let v = cm_decide(&d, Some(bound), DEFAULT_SEED).map_err(|e| e.to_string())?;
    check(v.decision == Decision::NotCohenMacaulay, format!("verdict {}", v.decision))?;
    Ok(format!("ring matches through {bound}; {attempts} basis extensions fail; {v}"))
}

fn criterion_3() -> Outcome {
    let d = Catalog::example("sp1cubed").unwrap();
    for (side, m) in [("minus", d.iota_minus()), ("plus", d.iota_plus())] {
        match surjectivity_report(m, 12) {
            SurjectivityReport::FailsAt { degree: 2, .. } => {}
            other => return Err(format!("{side} side: {other:?}")),
        }
    }
    let sum = sum_image_report(d.iota_minus(), d.iota_plus(), 12).map_err(|e| e.to_string())?;
    check(sum == SumImageReport::SumSurjectiveUpTo(12), format!("{sum:?}"))?;
    let v = cm_decide(&d, Some(12), DEFAULT_SEED).map_err(|e| e.to_string())?;
    check(v.decision == Decision::CohenMacaulay, format!("verdict {}", v.decision))?;
    Ok(format!("both sides fail at 2; {v}"))
}

fn criterion_4() -> Outcome {
    let d = Catalog::example("rp2_join_w7").unwrap();
    let cyl = borel_model(&d, 16).map_err(|e| e.to_string())?;
    let betti = cohomology_betti(&cyl, 16);
    let expected: Vec<usize> = (0..=16).map(|n| monomial_count(&[4, 4, 6], n)).collect();
    check(betti == expected, format!("betti {betti:?} vs {expected:?}"))?;
    let v = cm_decide(&d, Some(16), DEFAULT_SEED).map_err(|e| e.to_string())?;
    check(v.decision == Decision::CohenMacaulay, format!("verdict {}", v.decision))?;
    match &v.basis {
        VerdictBasis::DirectComputation { krull_dimension: 3, depth } if depth.lower_bound == 3 => {}
        other => return Err(format!("basis {other:?}")),
    }
    Ok(format!("betti = free ring on 4,4,6 through 16; {v}"))
}

fn criterion_5() -> Outcome {
    let c = Catalog::builtin();
    let mut parts = Vec::new();
    for (name, dim, expected) in [
        ("W7", 7, Some(vec![1, 0, 1, 0, 0, 1, 0, 1])),
        ("W6", 6, None),
        ("S5", 5, Some(vec![1, 0, 0, 0, 0, 1])),
    ] {
        let start = Instant::now();
        let p = c.pair(name).map_err(|e| e.to_string())?;
        let model = homogeneous_model_auto(&p.iota).map_err(|e| e.to_string())?;
        let betti = cohomology_betti(&model, dim);
        let elapsed = start.elapsed();
        check(elapsed < HOMOGENEOUS_BUDGET, format!("{name} took {elapsed:?}"))?;
        match expected {
            Some(e) => check(betti == e, format!("{name}: {betti:?}"))?,
            None => {
                let odd_free = betti.iter().skip(1).step_by(2).all(|&b| b == 0);
                let total: usize = betti.iter().sum();
                check(odd_free && total == 6, format!("{name}: {betti:?}"))?;
            }
        }
        parts.push(format!("{}/{} {betti:?} {elapsed:.2?}", p.k.name, p.h.name));
    }
    Ok(parts.join("; "))
}

fn criterion_6() -> Outcome {
    let c = Catalog::builtin();
    let mut counts = [0usize; 4];
    for p in c.pairs() {
        let t = fiber_type(&p.k, &p.h, &p.iota);
        let surjective = surjectivity_report(&p.iota, 20).is_surjective();
        check(
            surjective == matches!(t, FiberType::RationalOddSphere(_)),
            format!("(a) {}: type {t}, surjective {surjective}", p.name),
        )?;
        counts[0] += 1;
        if p.k.rank == p.h.rank {
            let inj = equicm::algebra::injectivity_report(&p.iota, 20);
            check(inj.is_injective(), format!("(b) {}: {inj:?}", p.name))?;
            counts[1] += 1;
        }
    }
    for name in ["corank", "rp2_join_w7", "susp_w711", "sp1cubed"] {
        let d = Catalog::example(name).unwrap();
        let bound = 14;
        let ring = ring_truncation(&borel_model(&d, bound).map_err(|e| e.to_string())?, bound);
        let depth = depth_report(&ring, krull_dimension(&d), DEFAULT_SEED);
        let seq: Vec<Class> = depth.sequence.iter().map(|c| c.to_class()).collect();
        let full = is_regular_sequence(&ring, &seq).map_err(|e| e.to_string())?;
        let even = is_regular_sequence_in_even_part(&ring, &seq).map_err(|e| e.to_string())?;
        check(full.is_regular() && even.is_regular(), format!("(c) {name}: {even:?}"))?;
        counts[2] += 1;
    }
    for (name, d) in catalog_diagrams() {
        let cyl = borel_model(&d, 12).map_err(|e| e.to_string())?;
        let ours = cohomology_betti(&cyl, 12);
        let oracle = mayer_vietoris_betti(d.iota_minus(), d.iota_plus(), 12);
        check(ours == oracle, format!("(d) {name}: {ours:?} vs {oracle:?}"))?;
        counts[3] += 1;
    }
    Ok(format!(
        "(a) {} fibers, (b) {} equal-rank fibers, (c) {} sequences, (d) {} diagrams; no counterexamples",
        counts[0], counts[1], counts[2], counts[3]
    ))
}

fn criterion_7() -> Outcome {
    let c = Catalog::builtin();
    let mut accepted = 0;
    let mut refused = 0;
    let mut even_pairs = 0;
    for l in c.pairs() {
        for r in c.pairs() {
            let outcome = noncm_join_generator(c, &l.name, &r.name).map_err(|e| e.to_string())?;
            let both_b = l.annotated.is_join_obstruction() && r.annotated.is_join_obstruction();
            let both_even = l.annotated == FiberType::EvenType && r.annotated == FiberType::EvenType;
            match outcome {
                JoinOutcome::Diagram(d) => {
                    check(both_b && !both_even, format!("{} * {} accepted", l.name, r.name))?;
                    let v = cm_decide(&d, None, DEFAULT_SEED).map_err(|e| e.to_string())?;
                    check(
                        v.decision == Decision::NotCohenMacaulay,
                        format!("{} * {}: {}", l.name, r.name, v.decision),
                    )?;
                    accepted += 1;
                }
                JoinOutcome::Refused { .. } => {
                    check(!both_b || both_even, format!("{} * {} refused", l.name, r.name))?;
                    if both_even {
                        // both sides equal rank: the join is rank-equal, hence Cohen–Macaulay
                        let d = equicm::diagrams::join_diagram((&l.k, &l.h, &l.iota), (&r.k, &r.h, &r.iota))
                            .map_err(|e| e.to_string())?;
                        let v = cm_decide(&d, None, DEFAULT_SEED).map_err(|e| e.to_string())?;
                        check(v.decision == Decision::CohenMacaulay, format!("{} * {}", l.name, r.name))?;
                        even_pairs += 1;
                    }
                    refused += 1;
                }
            }
        }
    }
    Ok(format!(
        "{accepted} joins generated, all NotCohenMacaulay; {refused} refused, \
         of which {even_pairs} EvenType pairs are rank-equal and CohenMacaulay"
    ))
}

fn criterion_8() -> Outcome {
    let c = Catalog::builtin();
    let w6 = c.pair("W6").map_err(|e| e.to_string())?;
    let chi_flag = homogeneous_euler(&w6.k, &w6.h).map_err(|e| e.to_string())?;
    check(chi_flag == 6, format!("χ(SU(3)/T²) = {chi_flag}"))?;
    let w7 = c.pair("W7").map_err(|e| e.to_string())?;
    let susp = suspension_diagram(&w7.k, &w7.h, &w7.iota).map_err(|e| e.to_string())?;
    let chi = euler_characteristic(&susp).map_err(|e| e.to_string())?;
    check(chi == 2, format!("χ(Susp W7) = {chi}"))?;
    // independent check: K± = G, so χ(G/K±) = 1, and χ(G/H) from the homogeneous model of W7
    let model = homogeneous_model_auto(&w7.iota).map_err(|e| e.to_string())?;
    let chi_fiber: i64 = cohomology_betti(&model, 7)
        .iter()
        .enumerate()
        .map(|(n, &b)| if n % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    check(1 + 1 - chi_fiber == chi, format!("Mayer–Vietoris gives {}", 2 - chi_fiber))?;
    let mut checked = 0;
    for (name, d) in catalog_diagrams() {
        if !d.options.positively_curved {
            continue;
        }
        let chi = euler_characteristic(&d).map_err(|e| e.to_string())?;
        if let Some(sign) = predicted_euler_sign(&d).map_err(|e| e.to_string())? {
            check(chi.cmp(&0) == sign, format!("{name}: χ = {chi}, predicted {sign:?}"))?;
            checked += 1;
        }
        if d.dimension().is_some_and(|n| n % 2 == 0) {
            check(chi > 0, format!("{name}: even-dimensional with χ = {chi}"))?;
        }
    }
    Ok(format!("χ(SU(3)/T²) = 6, χ(Susp W7) = 2; sign rule holds on {checked} diagrams"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("suspension of W7: not Cohen–Macaulay, socle, dimension", criterion_1),
        ("corank sharpness", criterion_2),
        ("Sp(1)^3 sum surjectivity", criterion_3),
        ("RP2 * W7 Cohen–Macaulay", criterion_4),
        ("homogeneous models", criterion_5),
        ("property suites", criterion_6),
        ("non-Cohen–Macaulay join generator", criterion_7),
        ("Euler characteristics", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {} ({name}): PASS  {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL  {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
