use std::collections::BTreeMap;

use serde::Serialize;

use super::{OrbitBasis, TwistedError};
use crate::coxeter::{word_class, PositiveWord};
use crate::laurent::{Frac, LaurentPoly, Scalar};
use crate::lkcore::{apply_word, apply_word_inverse, LkFamily, SparseEndo};

/// Default bound on the size of a word class when testing `g(w) ∈ [w]`.
pub const DEFAULT_CLASS_CAP: usize = 200_000;

/// Every `(i, k, g)` with `f_{i,α_k} ≠ f_{g(i),g(α_k)}`, `g` an element index.
pub fn equivariance_violations(family: &LkFamily, basis: &OrbitBasis) -> Vec<(usize, usize, usize)> {
    let t = family.table();
    let mut out = Vec::new();
    for (gi, p) in basis.group().elements().iter().enumerate() {
        for k in 0..t.len() {
            for i in 0..t.rank() {
                if family.f(i, k) != family.f(p[i], basis.image(gi, k)) {
                    out.push((i, k, gi));
                }
            }
        }
    }
    out
}

/// Whether `f_{i,α} = f_{g(i),g(α)}` for every `i`, enumerated `α` and `g ∈ G`.
pub fn check_equivariance(family: &LkFamily, basis: &OrbitBasis) -> bool {
    equivariance_violations(family, basis).is_empty()
}

pub(super) fn require_equivariant(family: &LkFamily, basis: &OrbitBasis) -> Result<(), TwistedError> {
    match equivariance_violations(family, basis).first() {
        None => Ok(()),
        Some(&(i, k, gi)) => Err(TwistedError::NotEquivariant {
            i,
            root: family.table().root(k).to_string(),
            perm: basis.group().elements()[gi].clone(),
        }),
    }
}

fn require_fixed(w: &PositiveWord, basis: &OrbitBasis, cap: usize) -> Result<(), TwistedError> {
    let g = basis.table().graph();
    let moved: Vec<&Vec<usize>> = basis.group().generators().iter().filter(|p| w.permuted(p) != *w).collect();
    if moved.is_empty() {
        return Ok(());
    }
    let class = word_class(g, w, cap)?;
    match moved.into_iter().find(|p| !class.contains(&w.permuted(p))) {
        None => Ok(()),
        Some(p) => Err(TwistedError::NotFixedWord { word: w.to_string(), perm: p.clone() }),
    }
}

/// The restriction of `e` to `V^G`, in the basis `(e_Θ)`.
///
/// A column is exact when every member column is. On exact columns the
/// image must be constant on each orbit, otherwise `StabilizationFailure`.
pub fn restrict<R: Scalar>(e: &SparseEndo<R>, basis: &OrbitBasis) -> Result<SparseEndo<R>, TwistedError> {
    let mut out = SparseEndo::zero(basis.len(), e.is_complete());
    for (t, orb) in basis.orbits().iter().enumerate() {
        let mut img: BTreeMap<usize, R> = BTreeMap::new();
        for &k in orb {
            for (r, v) in e.column(k) {
                let s = img.get(r).map_or_else(|| v.clone(), |old| old.add(v));
                img.insert(*r, s);
            }
        }
        let exact = orb.iter().all(|&k| e.is_exact(k));
        let mut col = Vec::new();
        let mut seen = vec![false; basis.len()];
        for &r in img.keys() {
            let u = basis.orbit_of(r);
            if std::mem::replace(&mut seen[u], true) {
                continue;
            }
            let members = basis.orbit(u);
            let v0 = img.get(&members[0]).cloned().unwrap_or_else(R::zero);
            if exact && members.iter().any(|m| img.get(m).cloned().unwrap_or_else(R::zero) != v0) {
                return Err(TwistedError::StabilizationFailure { orbit: t, target: u });
            }
            col.push((u, v0));
        }
        out.set_column(t, col, exact);
    }
    Ok(out)
}

/// `ψ^G_w = ψ_w|_{V^G}` for a `G`-fixed element `w`.
pub fn twisted_endo(
    w: &PositiveWord,
    family: &LkFamily,
    basis: &OrbitBasis,
) -> Result<SparseEndo<LaurentPoly>, TwistedError> {
    require_equivariant(family, basis)?;
    require_fixed(w, basis, DEFAULT_CLASS_CAP)?;
    restrict(&apply_word(w, family), basis)
}

/// `(ψ_w)^{-1}|_{V^G}` over the fraction ring.
pub fn twisted_inverse(w: &PositiveWord, family: &LkFamily, basis: &OrbitBasis) -> Result<SparseEndo<Frac>, TwistedError> {
    require_equivariant(family, basis)?;
    require_fixed(w, basis, DEFAULT_CLASS_CAP)?;
    restrict(&apply_word_inverse(w, family)?, basis)
}

/// A generator `Δ_J` of the fixed submonoid, or the reason there is none.
#[derive(Debug, Clone, Serialize)]
pub struct TwistedGenerator {
    pub orbit: Vec<usize>,
    pub word: Option<PositiveWord>,
    #[serde(skip)]
    pub endo: Option<SparseEndo<LaurentPoly>>,
    pub note: Option<String>,
}

/// `ψ^G_{Δ_J}` for every orbit `J` of `I`; non-spherical orbits are listed
/// with a note and no matrix.
pub fn twisted_generators(family: &LkFamily, basis: &OrbitBasis) -> Result<Vec<TwistedGenerator>, TwistedError> {
    require_equivariant(family, basis)?;
    let g = family.table().graph();
    basis
        .vertex_orbits()
        .iter()
        .map(|j| {
            if !g.is_spherical(j) {
                return Ok(TwistedGenerator {
                    orbit: j.clone(),
                    word: None,
                    endo: None,
                    note: Some("orbit is not spherical, no generator".into()),
                });
            }
            let w = g.garside_word(j)?;
            let endo = restrict(&apply_word(&w, family), basis)?;
            Ok(TwistedGenerator { orbit: j.clone(), word: Some(w), endo: Some(endo), note: None })
        })
        .collect()
}
