//! The unique family on a spherical graph, its consistency checks, and the
//! inverse map back to the value at the simple root.

use lkrep::coxeter::CoxeterGraph;
use lkrep::families::{mu_spherical, spherical_family};
use lkrep::laurent::{make_params, LaurentPoly};
use lkrep::lkcore::{braid_check, check_family_conditions, check_table1};

fn main() {
    let g = CoxeterGraph::from_label("A3").unwrap();
    let par = make_params(1, 0, 0);
    println!("a = {}, b = {}, c = {}, d = {}", par.a(), par.b(), par.c(), par.d());

    let f: LaurentPoly = "x*y^2".parse().unwrap();
    let fam = spherical_family(&g, &par, &f).unwrap();
    let t = fam.table();
    for i in 0..fam.rank() {
        for k in 0..t.len() {
            let v = fam.f(i, k);
            if !v.is_zero() {
                println!("f_{i}({}) = {v}", t.root(k));
            }
        }
    }

    let conds = check_family_conditions(&fam);
    let table1 = check_table1(&fam);
    println!("conditions: {} checked, {} violations", conds.checked, conds.violations.len());
    println!("table 1: {} checked, {} violations", table1.checked, table1.violations.len());
    for b in braid_check(&fam) {
        println!("braid ({}, {}) m = {}: {} differing columns", b.i, b.j, b.m, b.differences.len());
    }
    println!("μ recovers f = {}", mu_spherical(&fam).unwrap());

    // A single corrupted value is caught.
    let broken = fam.with_value(1, t.len() - 1, "x".parse().unwrap());
    let codes = check_table1(&broken).failed_codes();
    println!("after corrupting one value, relations {codes:?} fail");
}
