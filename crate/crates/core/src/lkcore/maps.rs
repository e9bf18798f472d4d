use std::collections::HashMap;

use serde::Serialize;

use super::{LkError, LkFamily, SparseEndo};
use crate::coxeter::PositiveWord;
use crate::laurent::{Frac, LaurentPoly, LkParams};
use crate::rootsys::{Reflection, RootTable};

/// `φ_i`: zero on `e_{α_i}`, `d` on roots fixed by `s_i`, and the block
/// `[[a, b], [c, 0]]` on each pair `α`, `β = s_i(α)` with `β` deeper.
///
/// On a truncated table the lower member of a pair whose partner is missing
/// gets an inexact column.
pub fn phi(i: usize, table: &RootTable, params: &LkParams) -> SparseEndo<LaurentPoly> {
    let mut e = SparseEndo::zero(table.len(), table.is_complete());
    for k in 0..table.len() {
        if k == table.simple(i) {
            continue;
        }
        let pk = table.pairing(k, i);
        match (pk.signum(), table.reflect(i, k)) {
            (0, _) => e.set_column(k, [(k, params.d().clone())], true),
            (-1, Reflection::Root(t)) => e.set_column(k, [(k, params.a().clone()), (t, params.c().clone())], true),
            (-1, _) => e.set_column(k, [(k, params.a().clone())], false),
            (_, Reflection::Root(t)) => e.set_column(k, [(t, params.b().clone())], true),
            (_, r) => unreachable!("s_{i} of a root with positive pairing gave {r:?}"),
        }
    }
    e
}

/// `ψ_i = φ_i + f_i ⊠ e_{α_i}`: `φ_i` with the `α_i` row set to `(f_{i,α})_α`.
pub fn psi(i: usize, family: &LkFamily) -> SparseEndo<LaurentPoly> {
    let table = family.table();
    let ph = phi(i, table, family.params());
    let mut e = SparseEndo::zero(table.len(), table.is_complete());
    let ai = table.simple(i);
    for k in 0..table.len() {
        let entries = ph.column(k).iter().cloned().chain([(ai, family.f(i, k).clone())]);
        e.set_column(k, entries, ph.is_exact(k));
    }
    e
}

/// The inverse of `ψ_i` over the fraction ring.
pub fn psi_inverse(i: usize, family: &LkFamily) -> Result<SparseEndo<Frac>, LkError> {
    let table = family.table();
    let par = family.params();
    let ai = table.simple(i);
    let fii = family.f(i, ai).clone();
    if fii.is_zero() {
        return Err(LkError::NonUnitPivot { i });
    }
    let q = |n: &LaurentPoly, d: &LaurentPoly| Frac::new(n.clone(), d.clone()).expect("nonzero denominator");
    let f = |k: usize| family.f(i, k);
    let (a, b, c, d) = (par.a(), par.b(), par.c(), par.d());
    let mut e = SparseEndo::zero(table.len(), table.is_complete());
    for k in 0..table.len() {
        if k == ai {
            e.set_column(k, [(ai, q(&LaurentPoly::one(), &fii))], true);
            continue;
        }
        match (table.pairing(k, i).signum(), table.reflect(i, k)) {
            (0, _) => {
                // (1/d)(e_α − (f_α/f_ii) e_{α_i})
                e.set_column(k, [(k, q(&LaurentPoly::one(), d)), (ai, q(&-f(k), &(d * &fii)))], true);
            }
            (-1, refl) => {
                // α lower: (1/b)(e_β − (f_β/f_ii) e_{α_i})
                match refl {
                    Reflection::Root(t) => {
                        e.set_column(k, [(t, q(&LaurentPoly::one(), b)), (ai, q(&-f(t), &(b * &fii)))], true)
                    }
                    _ => e.set_column(k, std::iter::empty(), false),
                }
            }
            (_, Reflection::Root(t)) => {
                // β upper, α = s_i(β): (1/c)(e_α − (a/b) e_β + ((a f_β − b f_α)/(b f_ii)) e_{α_i})
                let num = &(a * f(k)) - &(b * f(t));
                e.set_column(
                    k,
                    [
                        (t, q(&LaurentPoly::one(), c)),
                        (k, q(&-a, &(b * c))),
                        (ai, q(&num, &(&(b * c) * &fii))),
                    ],
                    true,
                );
            }
            (_, r) => unreachable!("s_{i} of a root with positive pairing gave {r:?}"),
        }
    }
    Ok(e)
}

/// `ψ_w = ψ_{w_1} ∘ ψ_{w_2} ∘ …`, so that `w ↦ ψ_w` is a monoid homomorphism.
pub fn apply_word(w: &PositiveWord, family: &LkFamily) -> SparseEndo<LaurentPoly> {
    WordEvaluator::new(family).eval(w)
}

/// `ψ_w^{-1} = … ∘ ψ_{w_2}^{-1} ∘ ψ_{w_1}^{-1}` over the fraction ring.
pub fn apply_word_inverse(w: &PositiveWord, family: &LkFamily) -> Result<SparseEndo<Frac>, LkError> {
    let t = family.table();
    let mut acc = SparseEndo::identity(t.len(), t.is_complete());
    for &l in w.letters() {
        acc = psi_inverse(l, family)?.compose(&acc);
    }
    Ok(acc)
}

/// Caches the generators `ψ_i` for repeated word evaluation.
pub struct WordEvaluator<'a> {
    family: &'a LkFamily,
    gens: HashMap<usize, SparseEndo<LaurentPoly>>,
}

impl<'a> WordEvaluator<'a> {
    pub fn new(family: &'a LkFamily) -> Self {
        Self { family, gens: HashMap::new() }
    }

    pub fn generator(&mut self, i: usize) -> &SparseEndo<LaurentPoly> {
        let fam = self.family;
        self.gens.entry(i).or_insert_with(|| psi(i, fam))
    }

    pub fn eval(&mut self, w: &PositiveWord) -> SparseEndo<LaurentPoly> {
        let t = self.family.table();
        let mut acc = SparseEndo::identity(t.len(), t.is_complete());
        for &l in w.letters().iter().rev() {
            acc = self.generator(l).compose(&acc);
        }
        acc
    }
}

/// One braid relation `s_i s_j … = s_j s_i …` compared on the columns exact
/// on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidCheck {
    pub i: usize,
    pub j: usize,
    pub m: u8,
    pub compared_columns: usize,
    /// Columns where the two sides differ.
    pub differences: Vec<usize>,
}

/// Every braid relation of the graph, evaluated through `ψ`.
pub fn braid_check(family: &LkFamily) -> Vec<BraidCheck> {
    let g = family.table().graph();
    let mut ev = WordEvaluator::new(family);
    let mut out = Vec::new();
    for i in 0..g.rank() {
        for j in i + 1..g.rank() {
            let m = g.m(i, j);
            let side = |a: usize, b: usize| PositiveWord((0..m as usize).map(|k| if k % 2 == 0 { a } else { b }).collect());
            let (l, r) = (ev.eval(&side(i, j)), ev.eval(&side(j, i)));
            let compared_columns = (0..l.dim()).filter(|&c| l.is_exact(c) && r.is_exact(c)).count();
            out.push(BraidCheck { i, j, m, compared_columns, differences: l.differences(&r) });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterGraph;
    use crate::laurent::make_params;
    use crate::rootsys::Root;
    use std::sync::Arc;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn phi_columns_on_a2() {
        let t = RootTable::complete(&CoxeterGraph::named("A", 2).unwrap()).unwrap();
        let par = make_params(1, 0, 0);
        let ph = phi(0, &t, &par);
        assert!(ph.column(0).is_empty());
        let ab = t.find(&Root(vec![1, 1])).unwrap();
        assert_eq!(ph.column(1), &[(1, par.a().clone()), (ab, par.c().clone())]);
        assert_eq!(ph.column(ab), &[(1, par.b().clone())]);
    }

    #[test]
    fn loop_column_on_a3() {
        let t = RootTable::complete(&CoxeterGraph::named("A", 3).unwrap()).unwrap();
        let par = make_params(1, 0, 0);
        assert_eq!(phi(0, &t, &par).column(2), &[(2, par.d().clone())]);
    }

    #[test]
    fn inverse_of_psi() {
        let t = Arc::new(RootTable::complete(&CoxeterGraph::named("A", 2).unwrap()).unwrap());
        let par = make_params(1, 0, 0);
        let ab = t.find(&Root(vec![1, 1])).unwrap();
        let mut vals = vec![vec![LaurentPoly::zero(); 3]; 2];
        vals[0][0] = p("x");
        vals[0][ab] = p("-x + x*y");
        vals[1][1] = p("x");
        vals[1][ab] = p("-x + x*y");
        let fam = LkFamily::new(t, par, vals).unwrap();
        for i in 0..2 {
            let inv = psi_inverse(i, &fam).unwrap();
            let ps = psi(i, &fam).map(|v| Frac::from_poly(v.clone()));
            assert!(ps.compose(&inv).is_identity_on_exact());
            assert!(inv.compose(&ps).is_identity_on_exact());
        }
        let zero = LkFamily::zero(fam.table_arc().clone(), fam.params().clone());
        assert_eq!(psi_inverse(0, &zero).unwrap_err(), LkError::NonUnitPivot { i: 0 });
    }
}
