//! Matrices of positive words, their inverses, and determinants.

use lkrep::coxeter::{CoxeterGraph, PositiveWord};
use lkrep::families::spherical_family;
use lkrep::laurent::{make_params, Frac};
use lkrep::lkcore::{apply_word, apply_word_inverse, det, psi, WordEvaluator};

fn main() {
    let g = CoxeterGraph::from_label("A2").unwrap();
    let fam = spherical_family(&g, &make_params(1, 1, 0), &"x*y^2".parse().unwrap()).unwrap();
    let labels: Vec<String> = fam.table().roots().iter().map(|r| r.to_string()).collect();

    let s0 = psi(0, &fam);
    println!("ψ_0 =\n{}", s0.to_csv(&labels));
    println!("det ψ_0 = {}", det(&s0).unwrap());

    let lhs: PositiveWord = "010".parse().unwrap();
    let rhs: PositiveWord = "101".parse().unwrap();
    let (l, r) = (apply_word(&lhs, &fam), apply_word(&rhs, &fam));
    println!("ψ_010 == ψ_101: {}", l == r);

    let inv = apply_word_inverse(&lhs, &fam).unwrap();
    let prod = inv.compose(&l.map(|p| Frac::from_poly(p.clone())));
    println!("ψ_010^-1 ψ_010 is the identity: {}", prod.is_identity_on_exact());

    // Memoised evaluation of many words sharing prefixes.
    let mut ev = WordEvaluator::new(&fam);
    for w in ["0", "01", "010", "0101", "01010"] {
        let m = ev.eval(&w.parse().unwrap());
        println!("{w:>6}: {} nonzero entries, det {}", m.nnz(), det(&m).unwrap());
    }
}
