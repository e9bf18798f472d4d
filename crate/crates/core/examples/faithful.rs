//! Bounded faithfulness experiments: every element up to a given length gets
//! its own matrix, and the initial set is visible from the root relation.

use lkrep::coxeter::CoxeterGraph;
use lkrep::faithcheck::{criterion_report, faithfulness_experiment, twisted_faithfulness_experiment, ExperimentConfig};
use lkrep::families::spherical_family;
use lkrep::laurent::{make_params, Regime};
use lkrep::twisted::{automorphisms, orbit_basis};

fn main() {
    let par = make_params(1, 0, 0);
    let f = "x*y^2".parse().unwrap();

    for (label, len) in [("A2", 6), ("A3", 4), ("D4", 3)] {
        let g = CoxeterGraph::from_label(label).unwrap();
        let fam = spherical_family(&g, &par, &f).unwrap();
        let rep = faithfulness_experiment(&fam, &ExperimentConfig::new(len)).unwrap();
        println!("{label}, length ≤ {len}: {} elements {:?}, passed {}", rep.elements, rep.per_length, rep.passed());
    }

    let g = CoxeterGraph::from_label("A5").unwrap();
    let fam = spherical_family(&g, &par, &f).unwrap();
    let basis = orbit_basis(fam.table_arc().clone(), &automorphisms(&g)).unwrap();
    let rep = twisted_faithfulness_experiment(&fam, &basis, &ExperimentConfig::new(4)).unwrap();
    println!("A5 fixed elements, length ≤ 4: {} elements, passed {}", rep.elements, rep.passed());
    for c in &rep.checks {
        println!("  {}: {}", c.name, if c.passed { "ok" } else { "FAILED" });
    }

    // The same parameters are outside the large-y regime.
    let crit = criterion_report(&fam, Regime::LargeY);
    println!("y > 1: failed {:?}", crit.failed_checks());
}
