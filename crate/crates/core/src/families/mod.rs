//! Constructors of LK-families: the spherical family, the family of Paris
//! (cases C1–C7), and the affine families parametrised by a sequence.

mod affine;
mod paris;

use std::sync::Arc;

use thiserror::Error;

pub use affine::{affine_family, antilde_closed_form, mu_affine, paris_seed, AffineSeed};
pub use paris::{paris_family, IndependenceReport, JChoiceDisagreement};

use crate::coxeter::CoxeterGraph;
use crate::laurent::{LaurentPoly, LkParams};
use crate::lkcore::{LkError, LkFamily};
use crate::rootsys::{Reflection, RootError, RootTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("relations give different values for f_{i} at root {root}: {values:?}")]
    InconsistentRelations { i: usize, root: String, values: Vec<String> },
    #[error("no relation defines f_{i} at root {root}")]
    Undetermined { i: usize, root: String },
    #[error("depth bound {0} is too small")]
    DepthBoundTooSmall(usize),
    #[error("seed has {got} terms, the requested depth needs {needed}")]
    SeedTooShort { needed: usize, got: usize },
    #[error("the table is too shallow to read off {0}")]
    InsufficientDepth(String),
    #[error("graph must be connected")]
    NotConnected,
    #[error("graph is not spherical")]
    NotSpherical,
    #[error("graph is not affine")]
    NotAffine,
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Lk(#[from] LkError),
}

/// Values of `f_{i,α}` for every relation among (6)–(10) with `(i, α)` on
/// its left-hand side, tagged by relation number. All right-hand sides only
/// involve shallower roots, which must already be filled in `vals`.
pub(crate) fn left_candidates(
    t: &RootTable,
    par: &LkParams,
    vals: &[Vec<Option<LaurentPoly>>],
    i: usize,
    k: usize,
) -> Vec<(u8, LaurentPoly)> {
    let g = t.graph();
    let (a, b, d) = (par.a(), par.b(), par.d());
    let (ic, id) = (par.inv_c(), par.inv_d());
    let v = |j: usize, r: usize| vals[j][r].as_ref().expect("shallower value already built");
    let down = |j: usize, r: usize| match t.reflect(j, r) {
        Reflection::Root(s) if t.depth(s) < t.depth(r) => Some(s),
        _ => None,
    };
    let mut out = Vec::new();
    for j in 0..t.rank() {
        if j == i {
            continue;
        }
        match g.m(i, j) {
            2 => {
                if let Some(s) = down(j, k) {
                    out.push((6, &(b * &id) * v(i, s)));
                }
            }
            3 => {
                if let Some(y) = down(j, k) {
                    if y == t.simple(i) {
                        out.push((7, -&(&(a * &ic) * v(i, y))));
                    } else if let Some(x) = down(i, y) {
                        out.push((8, &(&(b * v(j, x)) - &(a * v(i, y))) * &ic));
                    } else if t.pairing(y, i) == 0 {
                        out.push((9, &(&(d * v(j, y)) - &(a * v(i, y))) * &ic));
                    }
                }
                if t.pairing(k, j) == 0 {
                    if let Some(s) = down(i, k) {
                        out.push((10, &(b * &id) * v(j, s)));
                    }
                }
            }
            _ => {}
        }
    }
    out
}

/// Reduces a list of candidate values to one, or reports the disagreement.
pub(crate) fn agree(
    t: &RootTable,
    i: usize,
    k: usize,
    cands: Vec<(u8, LaurentPoly)>,
) -> Result<LaurentPoly, FamilyError> {
    let Some((_, first)) = cands.first().cloned() else {
        return Err(FamilyError::Undetermined { i, root: t.root(k).to_string() });
    };
    if cands.iter().any(|(_, c)| *c != first) {
        return Err(FamilyError::InconsistentRelations {
            i,
            root: t.root(k).to_string(),
            values: cands.iter().map(|(r, c)| format!("({r}) {c}")).collect(),
        });
    }
    Ok(first)
}

pub(crate) fn finish(t: Arc<RootTable>, par: &LkParams, vals: Vec<Vec<Option<LaurentPoly>>>) -> Result<LkFamily, FamilyError> {
    let values = vals.into_iter().map(|row| row.into_iter().map(|v| v.expect("every value built")).collect()).collect();
    Ok(LkFamily::new(t, par.clone(), values)?)
}

/// The unique LK-family of a connected spherical graph with `f_{i,α_i} = f`.
pub fn spherical_family(g: &CoxeterGraph, par: &LkParams, f: &LaurentPoly) -> Result<LkFamily, FamilyError> {
    let all: Vec<usize> = (0..g.rank()).collect();
    if !g.is_spherical(&all) {
        return Err(FamilyError::NotSpherical);
    }
    if !g.is_connected() {
        return Err(FamilyError::NotConnected);
    }
    let t = Arc::new(RootTable::complete(g)?);
    spherical_on(t, par, f)
}

pub(crate) fn spherical_on(t: Arc<RootTable>, par: &LkParams, f: &LaurentPoly) -> Result<LkFamily, FamilyError> {
    let n = t.rank();
    let mut vals = vec![vec![None; t.len()]; n];
    for k in 0..t.len() {
        for i in 0..n {
            let v = if t.is_simple(k) {
                if k == t.simple(i) {
                    f.clone()
                } else {
                    LaurentPoly::zero()
                }
            } else {
                agree(&t, i, k, left_candidates(&t, par, &vals, i, k))?
            };
            vals[i][k] = Some(v);
        }
    }
    finish(t, par, vals)
}

/// `f_{i_0,α_{i_0}}`, checked to be the same for every `i_0`.
pub fn mu_spherical(family: &LkFamily) -> Result<LaurentPoly, FamilyError> {
    let t = family.table();
    let v0 = family.f(0, t.simple(0)).clone();
    for i in 1..t.rank() {
        if *family.f(i, t.simple(i)) != v0 {
            return Err(FamilyError::InconsistentRelations {
                i,
                root: t.root(t.simple(i)).to_string(),
                values: vec![v0.to_string(), family.f(i, t.simple(i)).to_string()],
            });
        }
    }
    Ok(v0)
}

/// Whether every `f_{i,α_i}` is invertible: a unit of the Laurent ring
/// times powers of the declared units.
pub fn is_group_family(family: &LkFamily, declared_units: &[LaurentPoly]) -> bool {
    let t = family.table();
    (0..t.rank()).all(|i| {
        let mut v = family.f(i, t.simple(i)).clone();
        if v.is_zero() {
            return false;
        }
        'outer: loop {
            if v.is_unit() {
                return true;
            }
            for u in declared_units.iter().filter(|u| !u.is_zero() && !u.is_unit()) {
                if let Some(q) = v.exact_div(u) {
                    v = q;
                    continue 'outer;
                }
            }
            return false;
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::make_params;
    use crate::lkcore::check_table1;
    use crate::rootsys::Root;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn a2_values() {
        let g = CoxeterGraph::from_label("A2").unwrap();
        let par = make_params(1, 0, 0);
        let fam = spherical_family(&g, &par, &p("x*y^2")).unwrap();
        let ab = fam.table().find(&Root(vec![1, 1])).unwrap();
        assert_eq!(fam.f(0, 0), &p("x*y^2"));
        assert!(fam.f(0, 1).is_zero());
        // −a f / c
        assert_eq!(fam.f(0, ab), &-&(par.a() * &p("x*y^2")));
        assert!(check_table1(&fam).is_ok());
        assert_eq!(mu_spherical(&fam).unwrap(), p("x*y^2"));
    }

    #[test]
    fn group_membership() {
        let g = CoxeterGraph::from_label("A3").unwrap();
        let par = make_params(1, 0, 0);
        assert!(is_group_family(&spherical_family(&g, &par, &p("-x*y")).unwrap(), &[]));
        let f = p("1 + x");
        let fam = spherical_family(&g, &par, &f).unwrap();
        assert!(!is_group_family(&fam, &[]));
        assert!(is_group_family(&fam, &[f]));
        assert!(!is_group_family(&LkFamily::zero(fam.table_arc().clone(), par), &[]));
    }
}
