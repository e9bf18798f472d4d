//! Restriction to the fixed vectors of a graph automorphism group.

use std::sync::Arc;

use lkrep::coxeter::CoxeterGraph;
use lkrep::families::spherical_family;
use lkrep::laurent::make_params;
use lkrep::lkcore::det;
use lkrep::rootsys::RootTable;
use lkrep::twisted::{automorphisms, closed_form_delta, collision_scan, orbit_basis, twisted_generators};

fn main() {
    let g = CoxeterGraph::from_label("A5").unwrap();
    let fam = spherical_family(&g, &make_params(1, 0, 0), &"x*y^2".parse().unwrap()).unwrap();
    let group = automorphisms(&g);
    let basis = orbit_basis(fam.table_arc().clone(), &group).unwrap();
    println!("|Aut(A5)| = {}, vertex orbits {:?}, {} root orbits", group.order(), basis.vertex_orbits(), basis.len());
    for (t, label) in basis.labels().iter().enumerate() {
        println!("  Θ_{t} = {label}");
    }

    for gen in twisted_generators(&fam, &basis).unwrap() {
        let endo = gen.endo.unwrap();
        let closed = closed_form_delta(&gen.orbit, &fam, &basis).unwrap();
        println!(
            "J = {:?}: Δ_J = {}, det {}, closed form agrees: {}",
            gen.orbit,
            gen.word.unwrap(),
            det(&endo).unwrap(),
            endo == closed
        );
    }
    println!("orbits of A5 with equal average root: {:?}", collision_scan(&basis));

    // The half-turn of Ã3 identifies roots that differ by a multiple of δ.
    let g = CoxeterGraph::from_label("Atilde3").unwrap();
    let t = Arc::new(RootTable::enumerate(&g, 8).unwrap());
    let half_turn = lkrep::twisted::subgroup(&g, &[vec![2, 3, 0, 1]]).unwrap();
    let basis = orbit_basis(t, &half_turn).unwrap();
    let hits = collision_scan(&basis);
    println!("Ã3 half-turn: {} orbit pairs share an average root", hits.len());
    if let Some(&(s, u)) = hits.first() {
        println!("  e.g. {} and {}", basis.labels()[s], basis.labels()[u]);
    }
}
