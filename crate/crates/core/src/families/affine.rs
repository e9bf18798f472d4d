use std::sync::Arc;

use serde::Serialize;

use super::{agree, finish, left_candidates, FamilyError};
use crate::coxeter::CoxeterGraph;
use crate::laurent::{LaurentPoly, LkParams};
use crate::lkcore::LkFamily;
use crate::rootsys::{antilde_domain, is_atilde, Root, RootTable};

/// The sequence `(𝔣_0, 𝔣_1, …)` parametrising the LK-families of an affine
/// graph, with the depth it is meant to cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineSeed {
    pub seq: Vec<LaurentPoly>,
    pub graph: CoxeterGraph,
    pub depth_bound: usize,
}

/// If `r = pδ + sign·α_i` with `p ≥ 1` (or `p = 0` for the plus sign), returns `p`.
fn delta_shift(t: &RootTable, r: &Root, i: usize, sign: i64) -> Option<i64> {
    let d = t.delta()?;
    let node = t.affine_node()?;
    let unit = i64::from(i == node);
    let p = r.0[node] - sign * unit;
    let lo = if sign > 0 { 0 } else { 1 };
    (p >= lo && *r == d.scale(p).add(&Root::simple(t.rank(), i).scale(sign))).then_some(p)
}

/// Seed index needed for the root `k` and generator `i`, if it uses one.
fn seed_index(t: &RootTable, k: usize, i: usize) -> Option<usize> {
    let r = t.root(k);
    if let Some(p) = delta_shift(t, r, i, 1) {
        return Some(2 * p as usize);
    }
    delta_shift(t, r, i, -1).map(|p| 2 * p as usize - 1)
}

fn needed_len(t: &RootTable, max_depth: usize) -> usize {
    let mut need = 0;
    for k in 0..t.len() {
        if t.depth(k) > max_depth {
            break;
        }
        for i in 0..t.rank() {
            if let Some(s) = seed_index(t, k, i) {
                need = need.max(s + 1);
            }
        }
    }
    need
}

fn check_affine(g: &CoxeterGraph) -> Result<(), FamilyError> {
    if crate::rootsys::delta(g).is_err() || !g.edges().iter().any(|&(i, j)| g.m(i, j) == 3) {
        return Err(FamilyError::NotAffine);
    }
    Ok(())
}

/// The unique LK-family with `μ = seed.seq`.
///
/// The table is enumerated two levels beyond `seed.depth_bound` when the
/// seed is long enough, so that the meshes of the advertised roots are
/// complete; `SeedTooShort` only refers to the advertised depth.
pub fn affine_family(seed: &AffineSeed, par: &LkParams) -> Result<LkFamily, FamilyError> {
    let g = &seed.graph;
    check_affine(g)?;
    if seed.depth_bound == 0 {
        return Err(FamilyError::DepthBoundTooSmall(0));
    }
    let big = RootTable::enumerate(g, seed.depth_bound + 2)?;
    let need = needed_len(&big, seed.depth_bound);
    if seed.seq.len() < need {
        return Err(FamilyError::SeedTooShort { needed: need, got: seed.seq.len() });
    }
    let depth = (seed.depth_bound..=seed.depth_bound + 2)
        .rev()
        .find(|&d| needed_len(&big, d) <= seed.seq.len())
        .expect("advertised depth is covered");
    let t = if depth == seed.depth_bound + 2 { big } else { RootTable::enumerate(g, depth)? };
    affine_on(Arc::new(t), par, &seed.seq)
}

fn affine_on(t: Arc<RootTable>, par: &LkParams, seq: &[LaurentPoly]) -> Result<LkFamily, FamilyError> {
    let n = t.rank();
    let g = t.graph().clone();
    let (b, d) = (par.b(), par.d());
    let (ic, id) = (par.inv_c(), par.inv_d());
    let icd = &ic * &id;
    let mut vals: Vec<Vec<Option<LaurentPoly>>> = vec![vec![None; t.len()]; n];
    for k in 0..t.len() {
        for i in 0..n {
            let r = t.root(k);
            let v = if t.is_simple(k) && k != t.simple(i) {
                LaurentPoly::zero()
            } else if let Some(p) = delta_shift(&t, r, i, 1) {
                seq[2 * p as usize].clone()
            } else if let Some(p) = delta_shift(&t, r, i, -1) {
                let odd = &seq[2 * p as usize - 1] * &icd;
                let cands: Vec<(u8, LaurentPoly)> = (0..n)
                    .filter(|&j| g.m(i, j) == 3)
                    .map(|j| {
                        let beta = r.sub(&Root::simple(n, j));
                        let bk = t.find(&beta).expect("pδ − α_i − α_j is shallower");
                        let v = |l: usize| vals[l][bk].as_ref().expect("shallower value");
                        (0, &(&(&(b * &id) * v(i)) + &(&(d * &ic) * v(j))) + &odd)
                    })
                    .collect();
                agree(&t, i, k, cands)?
            } else {
                agree(&t, i, k, left_candidates(&t, par, &vals, i, k))?
            };
            vals[i][k] = Some(v);
        }
    }
    finish(t, par, vals)
}

/// Reads `(𝔣_0, 𝔣_1, …)` off a family, for every admissible `(i_0, j_0)`,
/// and checks that all choices agree. Returns the longest prefix available
/// for every choice.
pub fn mu_affine(family: &LkFamily) -> Result<Vec<LaurentPoly>, FamilyError> {
    let t = family.table();
    let g = t.graph();
    check_affine(g)?;
    let par = family.params();
    let n = t.rank();
    let (b, c, d) = (par.b(), par.c(), par.d());
    let mut seqs: Vec<((usize, usize), Vec<LaurentPoly>)> = Vec::new();
    for i0 in 0..n {
        for j0 in 0..n {
            if g.m(i0, j0) != 3 {
                continue;
            }
            let mut seq = vec![family.f(i0, t.simple(i0)).clone()];
            for p in 1.. {
                let Some(minus) = t.find_delta_minus(p, i0) else { break };
                seq.push(odd_term(t, family, (b, c, d), i0, j0, minus));
                let Some(plus) = t.find_delta_plus(p, i0) else { break };
                seq.push(family.f(i0, plus).clone());
            }
            seqs.push(((i0, j0), seq));
        }
    }
    let len = seqs.iter().map(|(_, s)| s.len()).min().ok_or(FamilyError::NotAffine)?;
    if len < 2 {
        return Err(FamilyError::InsufficientDepth("𝔣_1".into()));
    }
    let first = seqs[0].1[..len].to_vec();
    for ((i0, j0), s) in &seqs {
        if let Some(q) = (0..len).find(|&q| s[q] != first[q]) {
            return Err(FamilyError::InconsistentRelations {
                i: *i0,
                root: format!("𝔣_{q} via (i0, j0) = ({i0}, {j0})"),
                values: vec![first[q].to_string(), s[q].to_string()],
            });
        }
    }
    Ok(first)
}

fn odd_term(
    t: &RootTable,
    fam: &LkFamily,
    (b, c, d): (&LaurentPoly, &LaurentPoly, &LaurentPoly),
    i0: usize,
    j0: usize,
    minus: usize,
) -> LaurentPoly {
    let beta = t.root(minus).sub(&Root::simple(t.rank(), j0));
    let bk = t.find(&beta).expect("shallower root");
    &(&(&(c * d) * fam.f(i0, minus)) - &(&(b * c) * fam.f(i0, bk))) - &(&(d * d) * fam.f(j0, bk))
}

/// The seed of the family of Paris: `𝔣_0 = f`,
/// `𝔣_{2p} = −(af/c)(b/d)^{dep(pδ+α_i)−2}`,
/// `𝔣_{2p−1} = (ad²f/c)(b/d)^{dep(pδ−α_i)−3}`.
pub fn paris_seed(g: &CoxeterGraph, par: &LkParams, f: &LaurentPoly, depth_bound: usize) -> Result<AffineSeed, FamilyError> {
    check_affine(g)?;
    let t = RootTable::enumerate(g, depth_bound + 2)?;
    let i0 = (0..t.rank()).find(|&i| (0..t.rank()).any(|j| g.m(i, j) == 3)).expect("affine has an edge");
    let (a, d) = (par.a(), par.d());
    let ic = par.inv_c();
    let even = -&(&(a * f) * &ic);
    let odd = &(&(&(a * d) * d) * f) * &ic;
    let mut seq = vec![f.clone()];
    for p in 1.. {
        let Some(minus) = t.find_delta_minus(p, i0) else { break };
        seq.push(&odd * &par.b_over_d(t.depth(minus) as i64 - 3));
        let Some(plus) = t.find_delta_plus(p, i0) else { break };
        seq.push(&even * &par.b_over_d(t.depth(plus) as i64 - 2));
    }
    Ok(AffineSeed { seq, graph: g.clone(), depth_bound })
}

/// Closed form of `f_{i,α}` on `Ã_n` in terms of the seed, by the position
/// of `i` relative to the cyclic interval of `α`.
pub fn antilde_closed_form(
    g: &CoxeterGraph,
    par: &LkParams,
    i: usize,
    alpha: &Root,
    seq: &[LaurentPoly],
) -> Result<LaurentPoly, FamilyError> {
    if !is_atilde(g) {
        return Err(FamilyError::Root(crate::rootsys::RootError::NotAtilde));
    }
    let dom = antilde_domain(g, alpha)?;
    let n = g.rank() as i64 - 1;
    let (p, ell) = (dom.p, dom.ell as i64);
    let (a, b, d) = (par.a(), par.b(), par.d());
    let (ic, id) = (par.inv_c(), par.inv_d());
    let kk = &(&b.powi(n - 1).expect("unit") * &ic) * &id.powi(n - 2).expect("unit");
    let s = |q: i64| -> Result<&LaurentPoly, FamilyError> {
        seq.get(q as usize).ok_or(FamilyError::SeedTooShort { needed: q as usize + 1, got: seq.len() })
    };
    // Σ_{q=0}^{top} w(q) K^{p−q} 𝔣_{2q}
    let sum = |top: i64, w: &dyn Fn(i64) -> i64| -> Result<LaurentPoly, FamilyError> {
        let mut acc = LaurentPoly::zero();
        for q in 0..=top {
            let term = &kk.pow((p - q) as u32) * s(2 * q)?;
            acc = &acc + &term.scale(&w(q).into());
        }
        Ok(acc)
    };
    let bd = |e: i64| par.b_over_d(e);
    let a_c = a * &ic;
    let v = if dom.boundary.contains(&i) && ell == 0 {
        s(2 * p)?.clone()
    } else if dom.boundary.contains(&i) {
        -&(&(&a_c * &bd(ell - 1)) * &sum(p, &|_| 1)?)
    } else if dom.interior.contains(&i) {
        &(&(&a_c * &a_c) * &bd(ell - 2)) * &sum(p, &|q| p - q + 1)?
    } else {
        // The factor 1/b is not in the printed formula; without it these two
        // cases disagree with the inductive construction by exactly b.
        let a2c = &(&(a * a) * &ic) * &par.inv_b();
        let tail = sum(p - 1, &|q| p - q)?;
        if ell <= n - 2 {
            &(&a2c * &bd(ell)) * &tail
        } else {
            // α = (p+1)δ − α_i
            let pre = &(&a2c * &(&(b * &id) + &(d * &ic))) * &bd(n - 2);
            &(&pre * &tail) + &(s(2 * p + 1)? * &(&ic * &id))
        }
    };
    Ok(v)
}
