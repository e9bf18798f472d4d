use std::sync::Arc;

use serde::Serialize;

use super::{finish, FamilyError};
use crate::coxeter::CoxeterGraph;
use crate::laurent::{LaurentPoly, LkParams};
use crate::lkcore::{check_table1, LkFamily};
use crate::rootsys::{Reflection, RootTable};

/// A root where two admissible choices of `j_α` give different values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JChoiceDisagreement {
    pub i: usize,
    pub root: String,
    /// `(j, value)` for every admissible `j`.
    pub values: Vec<(usize, String)>,
}

/// Outcome of rebuilding each value with every admissible `j_α`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceReport {
    pub all_agree: bool,
    /// Pairs `(i, α)` with more than one admissible `j_α`.
    pub multi_choice_sites: usize,
    pub disagreements: Vec<JChoiceDisagreement>,
    /// Table 1 violations of the family built with least `j_α`.
    pub table1_violations: usize,
}

/// The inductive-step value for `(i, α)` with `j_α = j`.
fn inductive(
    t: &RootTable,
    par: &LkParams,
    f: &LaurentPoly,
    vals: &[Vec<Option<LaurentPoly>>],
    i: usize,
    k: usize,
    j: usize,
) -> LaurentPoly {
    let (a, b, d) = (par.a(), par.b(), par.d());
    let (ic, id) = (par.inv_c(), par.inv_d());
    let v = |l: usize, r: usize| vals[l][r].as_ref().expect("shallower value");
    let beta = t.reflect_root(j, k).expect("j_α lowers α");
    if t.graph().m(i, j) == 2 {
        // (C4)
        return &(b * &id) * v(i, beta);
    }
    match t.pairing(beta, i).signum() {
        1 => {
            // (C5)
            let gamma = match t.reflect(i, beta) {
                Reflection::Root(g) => g,
                other => unreachable!("s_i(β) = {other:?} with (β|α_i) > 0 and β ≠ α_i"),
            };
            &(&(b * v(j, gamma)) - &(a * v(i, beta))) * &ic
        }
        // (C6)
        0 => &(&(d * v(j, beta)) - &(a * v(i, beta))) * &ic,
        _ => {
            // (C7)
            let dep = t.depth(k) as i64;
            let corr = &(&(&(a * d) * f) * &(&ic * &ic)) * &par.b_over_d(dep - 3);
            &(&(&(b * &id) * v(i, beta)) + &(&(d * &ic) * v(j, beta))) + &corr
        }
    }
}

/// The family of Paris with `f_{i,α_i} = f`, on the full root table of a
/// spherical graph or up to `depth_bound` otherwise. Values use the least
/// admissible `j_α`; every other choice is evaluated and compared.
pub fn paris_family(
    g: &CoxeterGraph,
    par: &LkParams,
    f: &LaurentPoly,
    depth_bound: usize,
) -> Result<(LkFamily, IndependenceReport), FamilyError> {
    if !g.is_connected() {
        return Err(FamilyError::NotConnected);
    }
    let spherical = g.is_spherical(&(0..g.rank()).collect::<Vec<_>>());
    if !spherical && depth_bound == 0 {
        return Err(FamilyError::DepthBoundTooSmall(depth_bound));
    }
    let t = Arc::new(RootTable::enumerate(g, depth_bound.max(1))?);
    let n = t.rank();
    let mut vals: Vec<Vec<Option<LaurentPoly>>> = vec![vec![None; t.len()]; n];
    let mut report = IndependenceReport {
        all_agree: true,
        multi_choice_sites: 0,
        disagreements: Vec::new(),
        table1_violations: 0,
    };
    let c3_base = -&(&(par.a() * f) * &par.inv_c());
    for k in 0..t.len() {
        for i in 0..n {
            let v = if t.is_simple(k) {
                if k == t.simple(i) {
                    f.clone()
                } else {
                    LaurentPoly::zero()
                }
            } else if t.pairing(k, i) > 0 {
                // (C3)
                &c3_base * &par.b_over_d(t.depth(k) as i64 - 2)
            } else {
                let js: Vec<usize> = (0..n).filter(|&j| t.pairing(k, j) > 0).collect();
                let vs: Vec<LaurentPoly> = js.iter().map(|&j| inductive(&t, par, f, &vals, i, k, j)).collect();
                if js.len() > 1 {
                    report.multi_choice_sites += 1;
                    if vs.iter().any(|x| *x != vs[0]) {
                        report.all_agree = false;
                        report.disagreements.push(JChoiceDisagreement {
                            i,
                            root: t.root(k).to_string(),
                            values: js.iter().zip(&vs).map(|(j, x)| (*j, x.to_string())).collect(),
                        });
                    }
                }
                vs.into_iter().next().expect("a non-simple root has a descent")
            };
            vals[i][k] = Some(v);
        }
    }
    let fam = finish(t, par, vals)?;
    report.table1_violations = check_table1(&fam).violations.len();
    Ok((fam, report))
}
