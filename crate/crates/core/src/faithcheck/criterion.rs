use std::sync::Arc;

use serde::Serialize;

use super::{relation_of_endo, Check, FaithError, RootRelation};
use crate::laurent::Regime;
use crate::lkcore::{psi, LkFamily};

/// The two hypotheses of the criterion, split into checkable conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub regime: Regime,
    /// `params_positive`, `values_vanish_at_x0`: the specialisation hypothesis.
    /// `values_in_x_ideal`, `simple_values_nonzero`: the sufficient condition
    /// for a cancellative image.
    pub checks: Vec<Check>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<String> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect()
    }
}

pub fn criterion_report(family: &LkFamily, regime: Regime) -> CriterionReport {
    let t = family.table();
    let par = family.params();
    let positive = match par.positivity_report(regime) {
        Ok(r) => {
            let bad = [("a", r.a_pos), ("b", r.b_pos), ("c", r.c_pos), ("d", r.d_pos)]
                .into_iter()
                .filter(|(_, ok)| !ok)
                .map(|(n, _)| format!("{n} is not positive at {regime}"))
                .collect();
            Check::from_failures("params_positive", bad)
        }
        Err(e) => Check::from_failures("params_positive", vec![e.to_string()]),
    };
    let (mut vanish, mut ideal, mut simple) = (Vec::new(), Vec::new(), Vec::new());
    for i in 0..t.rank() {
        for k in 0..t.len() {
            let v = family.f(i, k);
            let site = || format!("f_{i} at {} = {v}", t.root(k));
            match v.eval_x0() {
                Ok(z) if z.is_zero() => {}
                Ok(z) => vanish.push(format!("{} -> {z}", site())),
                Err(e) => vanish.push(format!("{}: {e}", site())),
            }
            if !v.in_x_ideal() {
                ideal.push(site());
            }
        }
        if family.f(i, t.simple(i)).is_zero() {
            simple.push(format!("f_{i} vanishes at α_{i}"));
        }
    }
    CriterionReport {
        regime,
        checks: vec![
            positive,
            Check::from_failures("values_vanish_at_x0", vanish),
            Check::from_failures("values_in_x_ideal", ideal),
            Check::from_failures("simple_values_nonzero", simple),
        ],
    }
}

/// The three properties of `b ↦ R_b` on the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeeReport {
    /// `α_i ∉ R_{s_i}(Φ⁺)`.
    pub not_in_own_image: Check,
    /// `α_i R_{s_j} α_i` for `i ≠ j`.
    pub fixed_by_others: Check,
    /// `α_i R_{s_j} R_{s_i} α_j` when `m_{ij} = 3`.
    pub chain: Check,
}

impl HeeReport {
    pub fn passed(&self) -> bool {
        self.not_in_own_image.passed && self.fixed_by_others.passed && self.chain.passed
    }

    pub fn checks(&self) -> [&Check; 3] {
        [&self.not_in_own_image, &self.fixed_by_others, &self.chain]
    }
}

/// The generator relations `R_{s_i}`, in vertex order.
pub(super) fn generator_relations(family: &LkFamily, regime: Regime) -> Result<Vec<RootRelation>, FaithError> {
    let t: &Arc<_> = family.table_arc();
    (0..t.rank()).map(|i| relation_of_endo(&psi(i, family), t.clone(), regime)).collect()
}

/// On a truncated table the images are computed inside the table, which
/// suffices: all three properties only involve simple roots.
pub fn hee_properties(family: &LkFamily, regime: Regime) -> Result<HeeReport, FaithError> {
    let t = family.table();
    let g = t.graph();
    let rs = generator_relations(family, regime)?;
    let n = t.rank();
    let own = (0..n).filter(|&i| rs[i].image_all().contains(&t.simple(i))).map(|i| format!("α_{i} ∈ R_{i}(Φ⁺)"));
    let mut others = Vec::new();
    let mut chain = Vec::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let ai = t.simple(i);
            if !rs[j].relates(ai, ai) {
                others.push(format!("not α_{i} R_{j} α_{i}"));
            }
            if g.m(i, j) == 3 && !rs[j].compose(&rs[i]).relates(ai, t.simple(j)) {
                chain.push(format!("not α_{i} R_{j}R_{i} α_{j}"));
            }
        }
    }
    Ok(HeeReport {
        not_in_own_image: Check::from_failures("hee_i", own.collect()),
        fixed_by_others: Check::from_failures("hee_ii", others),
        chain: Check::from_failures("hee_iii", chain),
    })
}
