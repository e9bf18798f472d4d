//! Type B Artin monoids inside A_{2n-1}, A_{2n} and D_{n+1}.

use lkrep::laurent::make_params;
use lkrep::twisted::{nonequivalence_value, typeb_suite};

fn main() {
    let par = make_params(1, 0, 0);
    let f = "x*y^2".parse().unwrap();
    for n in [3, 4] {
        for k in 1..=3 {
            let s = typeb_suite(n, k, &par, &f).unwrap();
            println!("n = {n}, k = {k}: ambient {}, dimension {}", s.ambient.label().unwrap_or("?"), s.basis.len());
            for (i, (got, want)) in s.dets.iter().zip(&s.expected_dets).enumerate() {
                println!("  det ψ(Δ_{}) = {got}{}", i + 1, if got == want { "" } else { "  (formula disagrees)" });
            }
        }
    }

    // k = 1 and k = 3 give inequivalent representations unless this vanishes.
    for (p, q, r) in [(1, 0, 0), (0, 1, 0), (1, 0, -3)] {
        println!("(p, q, r) = ({p}, {q}, {r}), n = 3: {}", nonequivalence_value(3, p, q, r));
    }
}
