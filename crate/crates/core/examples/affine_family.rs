//! Families on Ã_n from a seed sequence, checked against the closed form.

use lkrep::coxeter::CoxeterGraph;
use lkrep::families::{affine_family, antilde_closed_form, mu_affine, AffineSeed};
use lkrep::laurent::{make_params, LaurentPoly};
use lkrep::lkcore::{braid_check, check_table1};

fn main() {
    let g = CoxeterGraph::from_label("Atilde2").unwrap();
    let par = make_params(1, 0, 0);
    let seq: Vec<LaurentPoly> = ["x*y^2", "x", "x*y", "2*x", "x^2", "x*y^-1", "x", "3*x*y", "x", "x*y"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let seed = AffineSeed { seq: seq.clone(), graph: g.clone(), depth_bound: 8 };
    let fam = affine_family(&seed, &par).unwrap();
    let t = fam.table();
    println!("Ã2 to depth 8: {} roots", t.len());

    let recovered = mu_affine(&fam).unwrap();
    println!("μ recovers {} seed terms, all equal: {}", recovered.len(), recovered[..] == seq[..recovered.len()]);

    let mut mismatches = 0;
    for i in 0..fam.rank() {
        for k in 0..t.len() {
            let cf = antilde_closed_form(&g, &par, i, t.root(k), &seq).unwrap();
            mismatches += usize::from(&cf != fam.f(i, k));
        }
    }
    println!("closed form mismatches: {mismatches}");
    println!("table 1 violations: {}", check_table1(&fam).violations.len());
    let mut compared = 0;
    for b in braid_check(&fam) {
        assert!(b.differences.is_empty());
        compared += b.compared_columns;
    }
    println!("braid relations hold on {compared} exact columns");
}
