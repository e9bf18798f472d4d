//! Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
//! any fails. All comparisons are exact.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use lkrep::coxeter::CoxeterGraph;
use lkrep::faithcheck::{faithfulness_experiment, twisted_faithfulness_experiment, ExperimentConfig, FaithReport};
use lkrep::families::{
    affine_family, antilde_closed_form, mu_affine, mu_spherical, paris_family, paris_seed, spherical_family, AffineSeed,
};
use lkrep::laurent::{make_params, LaurentPoly, LkParams};
use lkrep::lkcore::{braid_check, check_table1, det, psi, LkFamily};
use lkrep::rootsys::RootTable;
use lkrep::twisted::{
    automorphisms, closed_form_delta, collision_scan, nonequivalence_condition, orbit_basis, subgroup,
    twisted_generators, typeb_det_formula, typeb_suite,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn g(label: &str) -> CoxeterGraph {
    CoxeterGraph::from_label(label).unwrap()
}

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_poly(rng: &mut StdRng) -> LaurentPoly {
    loop {
        let terms = rng.gen_range(1..=3);
        let f = (0..terms).fold(LaurentPoly::zero(), |acc, _| {
            let c = rng.gen_range(-4i64..=4);
            acc + LaurentPoly::monomial(c, rng.gen_range(0..=2), rng.gen_range(-3..=3))
        });
        if !f.is_zero() {
            return f;
        }
    }
}

const PQR: [(i64, i64, i64); 3] = [(1, 0, 0), (0, 1, 0), (1, 1, 0)];

fn braid_suite() -> Outcome {
    let f = p("x*y^2");
    let mut compared = 0;
    for (p_, q, r) in PQR {
        let par = make_params(p_, q, r);
        for (label, depth) in [("A2", None), ("A3", None), ("D4", None), ("Atilde2", Some(10)), ("Atilde3", Some(8))] {
            let fam = match depth {
                None => spherical_family(&g(label), &par, &f).map_err(|e| e.to_string())?,
                Some(d) => paris_family(&g(label), &par, &f, d).map_err(|e| e.to_string())?.0,
            };
            for b in braid_check(&fam) {
                ensure(b.differences.is_empty() && b.compared_columns > 0, || {
                    format!("{label} pqr=({p_},{q},{r}): ({}, {}) differs on {} columns", b.i, b.j, b.differences.len())
                })?;
                compared += b.compared_columns;
            }
        }
    }
    Ok(format!("15 graph/parameter cases, {compared} exact columns compared"))
}

fn table1() -> Outcome {
    let par = make_params(1, 0, 0);
    let f = p("x*y^2");
    let seed = AffineSeed {
        seq: ["x", "y + 1", "x^2 - y", "3", "x*y^-1", "2*y^3", "1 - x", "y", "x^-1", "-2"].iter().map(|s| p(s)).collect(),
        graph: g("Atilde2"),
        depth_bound: 5,
    };
    let families: Vec<(&str, LkFamily)> = vec![
        ("A3", spherical_family(&g("A3"), &par, &f).unwrap()),
        ("A4", spherical_family(&g("A4"), &par, &f).unwrap()),
        ("D4", spherical_family(&g("D4"), &par, &f).unwrap()),
        ("paris D5", paris_family(&g("D5"), &par, &f, 0).unwrap().0),
        ("paris Atilde3", paris_family(&g("Atilde3"), &par, &f, 7).unwrap().0),
        ("affine Atilde2", affine_family(&seed, &par).unwrap()),
    ];
    let mut checked = 0;
    let mut hit = BTreeSet::new();
    for (name, fam) in &families {
        let rep = check_table1(fam);
        ensure(rep.is_ok(), || format!("{name}: {} violations", rep.violations.len()))?;
        checked += rep.checked;
        // Mutation fixtures: every single-value perturbation f_{i,α} += 1.
        let t = fam.table();
        for k in 0..t.len() {
            for i in 0..t.rank() {
                let m = fam.with_value(i, k, fam.f(i, k) + &LaurentPoly::one());
                hit.extend(check_table1(&m).failed_codes());
            }
        }
    }
    let all: BTreeSet<u8> = (1..=10).collect();
    ensure(hit == all, || format!("relations never flagged: {:?}", all.difference(&hit).collect::<Vec<_>>()))?;
    Ok(format!("{checked} identities, 0 violations; mutations flag all of (1)..(10)"))
}

fn spherical_parametrization() -> Outcome {
    let mut rng = StdRng::seed_from_u64(3);
    let par = make_params(1, 1, 0);
    for label in ["A3", "D4"] {
        let mut fs = BTreeSet::new();
        let mut dets = BTreeSet::new();
        for _ in 0..20 {
            let f = random_poly(&mut rng);
            let fam = spherical_family(&g(label), &par, &f).map_err(|e| e.to_string())?;
            let back = mu_spherical(&fam).map_err(|e| e.to_string())?;
            ensure(back == f, || format!("{label}: μ({f}) = {back}"))?;
            for i in 0..fam.rank() {
                let d = det(&psi(i, &fam)).map_err(|e| e.to_string())?;
                let u = d.exact_div(fam.f(i, fam.table().simple(i)));
                ensure(u.as_ref().is_some_and(|u| u.is_unit()), || format!("{label}: det ψ_{i} = {d} for f = {f}"))?;
                if i == 0 {
                    dets.insert(d.to_string());
                }
            }
            fs.insert(f.to_string());
        }
        ensure(fs.len() == dets.len(), || format!("{label}: {} distinct f, {} distinct dets", fs.len(), dets.len()))?;
    }
    Ok("A3, D4: 20 random f each".into())
}

fn affine_parametrization() -> Outcome {
    let mut rng = StdRng::seed_from_u64(4);
    let par = make_params(1, 0, 0);
    let mut pairs = 0;
    for label in ["Atilde2", "Atilde3"] {
        for _ in 0..3 {
            let seq: Vec<LaurentPoly> = (0..40).map(|_| random_poly(&mut rng)).collect();
            let seed = AffineSeed { seq: seq.clone(), graph: g(label), depth_bound: 12 };
            let fam = affine_family(&seed, &par).map_err(|e| e.to_string())?;
            let mu = mu_affine(&fam).map_err(|e| e.to_string())?;
            ensure(mu.len() >= 8 && mu[..] == seq[..mu.len()], || format!("{label}: μ prefix mismatch"))?;
            let t = fam.table();
            for k in 0..t.len() {
                for i in 0..t.rank() {
                    let cf = antilde_closed_form(&g(label), &par, i, t.root(k), &seq).map_err(|e| e.to_string())?;
                    ensure(&cf == fam.f(i, k), || format!("{label}: f_{i}({}) = {} vs {cf}", t.root(k), fam.f(i, k)))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("Ã2, Ã3 at depth 12: 3 seeds each, {pairs} closed-form values"))
}

fn paris_consistency() -> Outcome {
    let mut roots = 0;
    for (p_, q, r) in PQR {
        let par = make_params(p_, q, r);
        let f = p("x*y^2");
        let graph = g("Atilde2");
        let (paris, _) = paris_family(&graph, &par, &f, 10).map_err(|e| e.to_string())?;
        let seed = paris_seed(&graph, &par, &f, 10).map_err(|e| e.to_string())?;
        let aff = affine_family(&seed, &par).map_err(|e| e.to_string())?;
        let t = paris.table();
        for k in 0..t.len() {
            let kk = aff.table().find(t.root(k)).ok_or("root missing from affine table")?;
            for i in 0..t.rank() {
                ensure(paris.f(i, k) == aff.f(i, kk), || format!("f_{i}({}) differs", t.root(k)))?;
            }
        }
        roots += t.len();
    }
    Ok(format!("Ã2 depth 10, {roots} roots over 3 parameter choices"))
}

fn twisted_closed_forms() -> Outcome {
    let par = make_params(1, 0, 0);
    let f = p("x*y^2");
    let mut orbits = 0;
    for (label, n) in [("A3", 2), ("A5", 3)] {
        let fam = spherical_family(&g(label), &par, &f).unwrap();
        let basis = orbit_basis(fam.table_arc().clone(), &automorphisms(&g(label))).map_err(|e| e.to_string())?;
        ensure(basis.len() == n * n, || format!("{label}: degree {}", basis.len()))?;
        for gen in twisted_generators(&fam, &basis).map_err(|e| e.to_string())? {
            let closed = closed_form_delta(&gen.orbit, &fam, &basis).map_err(|e| e.to_string())?;
            ensure(gen.endo.as_ref() == Some(&closed), || format!("{label}: orbit {:?}", gen.orbit))?;
            orbits += 1;
        }
    }
    for (label, n) in [("A4", 2), ("A6", 3)] {
        let t = Arc::new(RootTable::complete(&g(label)).unwrap());
        let basis = orbit_basis(t, &automorphisms(&g(label))).map_err(|e| e.to_string())?;
        ensure(basis.len() == n * (n + 1), || format!("{label}: degree {}", basis.len()))?;
    }
    Ok(format!("{orbits} vertex orbits; degrees 4, 9 (n²) and 6, 12 (n(n+1))"))
}

fn typeb_table() -> Outcome {
    let mut dets = 0;
    for (p_, q, r) in PQR {
        let par = make_params(p_, q, r);
        let f = p("x*y^2");
        for n in [3, 4] {
            for k in 1..=3 {
                let s = typeb_suite(n, k, &par, &f).map_err(|e| e.to_string())?;
                ensure(s.dets == s.expected_dets, || format!("n={n} k={k} pqr=({p_},{q},{r})"))?;
                // Spelled out for k = 1, i < n.
                if k == 1 {
                    let nn = n as u32;
                    let want = -&(&(&(par.b() * par.c()).pow(2 * nn - 1) * &par.d().pow(2 * nn * (nn - 2))) * &f);
                    ensure(s.dets[..n - 1].iter().all(|d| *d == want), || format!("n={n}: k=1 example"))?;
                }
                dets += s.dets.len();
            }
        }
    }
    Ok(format!("{dets} determinants over n ∈ {{3, 4}}, k ∈ {{1, 2, 3}}, 3 parameter choices"))
}

/// Whether the `k = 1` and `k = 3` determinants can agree for some choice of
/// `f_3`: match the `i < n` determinants, then compare at `i = n`.
fn dets_can_match(n: usize, par: &LkParams) -> bool {
    let f1 = LaurentPoly::x();
    let one = LaurentPoly::one();
    let d1 = typeb_det_formula(n, 1, 1, par, &f1).unwrap();
    let f3 = d1.exact_div(&typeb_det_formula(n, 3, 1, par, &one).unwrap()).expect("monomial quotient");
    typeb_det_formula(n, 1, n, par, &f1).unwrap() == typeb_det_formula(n, 3, n, par, &f3).unwrap()
}

fn nonequivalence() -> Outcome {
    let mut inconclusive = 0;
    let mut points = 0;
    for n in 3..=10usize {
        for p_ in -3..=3 {
            for q in -3..=3 {
                for r in -3..=3 {
                    let matchable = dets_can_match(n, &make_params(p_, q, r));
                    let cond = nonequivalence_condition(n as i64, p_, q, r);
                    ensure(cond != matchable, || format!("n={n} pqr=({p_},{q},{r}): condition {cond}"))?;
                    inconclusive += usize::from(matchable);
                    points += 1;
                }
            }
        }
    }
    Ok(format!("{points} points, {inconclusive} on the inconclusive locus"))
}

fn faith_summary(name: &str, rep: &FaithReport) -> Result<String, String> {
    ensure(rep.passed(), || format!("{name}: failed {:?}", rep.failed_checks()))?;
    let recovery = rep.check("initial_set_recovery").ok_or("no recovery check")?;
    ensure(recovery.passed, || format!("{name}: initial sets"))?;
    Ok(format!("{name}: {} elements", rep.elements))
}

fn faithfulness() -> Outcome {
    let par = make_params(1, 0, 0);
    let f = p("x*y^2");
    let mut lines = Vec::new();
    let mut caveat = String::new();
    for (label, len) in [("A2", 7), ("A3", 5)] {
        let fam = spherical_family(&g(label), &par, &f).unwrap();
        let rep = faithfulness_experiment(&fam, &ExperimentConfig::new(len)).map_err(|e| e.to_string())?;
        lines.push(faith_summary(&format!("{label} L={len}"), &rep)?);
        caveat = rep.caveat.clone();
    }
    for (label, len, name) in [("A3", 6, "B2"), ("A5", 4, "B3")] {
        let fam = spherical_family(&g(label), &par, &f).unwrap();
        let basis = orbit_basis(fam.table_arc().clone(), &automorphisms(&g(label))).map_err(|e| e.to_string())?;
        let rep = twisted_faithfulness_experiment(&fam, &basis, &ExperimentConfig::new(len)).map_err(|e| e.to_string())?;
        lines.push(faith_summary(&format!("{name} ⊂ {label} L={len}"), &rep)?);
    }
    println!("  note: {caveat}");
    Ok(lines.join("; "))
}

fn alpha_theta_collisions() -> Outcome {
    let at3 = g("Atilde3");
    let t = Arc::new(RootTable::enumerate(&at3, 8).unwrap());
    let half_turn = subgroup(&at3, &[vec![2, 3, 0, 1]]).map_err(|e| e.to_string())?;
    let hits = collision_scan(&orbit_basis(t, &half_turn).map_err(|e| e.to_string())?);
    ensure(!hits.is_empty(), || "no collision on Ã3".into())?;
    let a5 = Arc::new(RootTable::complete(&g("A5")).unwrap());
    let none = collision_scan(&orbit_basis(a5, &automorphisms(&g("A5"))).map_err(|e| e.to_string())?);
    ensure(none.is_empty(), || format!("{} collisions on A5", none.len()))?;
    Ok(format!("Ã3 half-turn: {} colliding pairs; A5 flip: none", hits.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("braid relations", braid_suite),
        ("table 1 completeness", table1),
        ("spherical parametrization", spherical_parametrization),
        ("affine parametrization", affine_parametrization),
        ("paris consistency", paris_consistency),
        ("twisted closed forms", twisted_closed_forms),
        ("type B determinants", typeb_table),
        ("non-equivalence gate", nonequivalence),
        ("bounded faithfulness", faithfulness),
        ("α_Θ collisions", alpha_theta_collisions),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or(e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(msg) => println!("PASS {:>2} {name} ({secs:.1}s): {msg}", n + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.1}s): {msg}", n + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
