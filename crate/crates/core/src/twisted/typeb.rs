use std::sync::Arc;

use super::{automorphisms, orbit_basis, subgroup, twisted_endo, OrbitBasis, TwistedError};
use crate::coxeter::{CoxeterGraph, PositiveWord};
use crate::families::spherical_family;
use crate::laurent::{LaurentPoly, LkParams};
use crate::lkcore::{det, SparseEndo};

/// The twisted representation of `B_n` inside `A_{2n−1}` (k = 1), `A_{2n}`
/// (k = 2) or `D_{n+1}` (k = 3).
#[derive(Debug, Clone)]
pub struct TypeBSuite {
    pub n: usize,
    pub k: usize,
    pub ambient: CoxeterGraph,
    pub basis: OrbitBasis,
    /// `Δ_1, …, Δ_n` as words in the ambient generators.
    pub words: Vec<PositiveWord>,
    pub generators: Vec<SparseEndo<LaurentPoly>>,
    pub dets: Vec<LaurentPoly>,
    /// The closed-form determinants, for comparison with `dets`.
    pub expected_dets: Vec<LaurentPoly>,
}

fn check(n: usize, k: usize) -> Result<(), TwistedError> {
    if n < 3 || !(1..=3).contains(&k) {
        return Err(TwistedError::BadRank { n, k });
    }
    Ok(())
}

/// `Δ_1, …, Δ_n` with Bourbaki numbering on both sides, shifted to 0-based letters.
pub fn typeb_words(n: usize, k: usize) -> Result<Vec<PositiveWord>, TwistedError> {
    check(n, k)?;
    let s = |l: &[usize]| PositiveWord(l.iter().map(|x| x - 1).collect());
    Ok((1..=n)
        .map(|i| match (k, i < n) {
            (1, true) => s(&[i, 2 * n - i]),
            (1, false) => s(&[n]),
            (2, true) => s(&[i, 2 * n + 1 - i]),
            (2, false) => s(&[n, n + 1, n]),
            (3, true) => s(&[i]),
            _ => s(&[n, n + 1]),
        })
        .collect())
}

fn ambient(n: usize, k: usize) -> Result<CoxeterGraph, TwistedError> {
    Ok(match k {
        1 => CoxeterGraph::named("A", 2 * n - 1)?,
        2 => CoxeterGraph::named("A", 2 * n)?,
        _ => CoxeterGraph::named("D", n + 1)?,
    })
}

fn signed(neg: bool, v: LaurentPoly) -> LaurentPoly {
    if neg {
        -v
    } else {
        v
    }
}

/// Closed form of `det (ψ^{G_k})_{Δ_i}`, `1 ≤ i ≤ n`.
pub fn typeb_det_formula(n: usize, k: usize, i: usize, par: &LkParams, f: &LaurentPoly) -> Result<LaurentPoly, TwistedError> {
    check(n, k)?;
    let nn = n as u32;
    let bc = par.b() * par.c();
    let pw = |e: u32, g: u32| &bc.pow(e) * &par.d().pow(g);
    let odd = (n - 1) % 2 == 1;
    Ok(match (k, i < n) {
        (1, true) => -&(&pw(2 * nn - 1, 2 * nn * (nn - 2)) * f),
        (1, false) => signed(odd, &pw(nn - 1, (nn - 1) * (nn - 1)) * f),
        (2, true) => &pw(2 * nn, 2 * (nn * nn - nn - 1)) * f,
        (2, false) => signed(odd, &pw(3 * nn - 1, 3 * nn * (nn - 1)) * &(f * f)),
        (3, true) => -&(&pw(2 * nn - 3, (nn - 1) * (nn - 1)) * f),
        _ => signed(odd, &pw(3 * (nn - 1), 2 * (nn - 1) * (nn - 2)) * f),
    })
}

/// Builds the `n` twisted generators, checks the `B_n` braid relations and
/// computes their determinants. `f` is the common value `f_{i,α_i}`.
pub fn typeb_suite(n: usize, k: usize, par: &LkParams, f: &LaurentPoly) -> Result<TypeBSuite, TwistedError> {
    check(n, k)?;
    let g = ambient(n, k)?;
    let group = if n == 3 && k == 3 {
        // Only the swap of the two short branches of D_4.
        subgroup(&g, &[vec![0, 1, 3, 2]])?
    } else {
        automorphisms(&g)
    };
    let fam = spherical_family(&g, par, f)?;
    let basis = orbit_basis(Arc::new(fam.table().clone()), &group)?;
    let words = typeb_words(n, k)?;
    let generators: Vec<SparseEndo<LaurentPoly>> =
        words.iter().map(|w| twisted_endo(w, &fam, &basis)).collect::<Result<_, _>>()?;
    for x in 0..n {
        for y in x + 1..n {
            let m = match (x, y) {
                (x, y) if y == x + 1 && y == n - 1 => 4,
                (x, y) if y == x + 1 => 3,
                _ => 2,
            };
            let (l, r) = alternating(&generators[x], &generators[y], m);
            if l != r {
                return Err(TwistedError::BraidFailure(x + 1, y + 1));
            }
        }
    }
    let dets = generators.iter().map(det).collect::<Result<_, _>>()?;
    let expected_dets = (1..=n).map(|i| typeb_det_formula(n, k, i, par, f)).collect::<Result<_, _>>()?;
    Ok(TypeBSuite { n, k, ambient: g, basis, words, generators, dets, expected_dets })
}

/// `(xyx…, yxy…)` with `m` factors each.
fn alternating(
    x: &SparseEndo<LaurentPoly>,
    y: &SparseEndo<LaurentPoly>,
    m: usize,
) -> (SparseEndo<LaurentPoly>, SparseEndo<LaurentPoly>) {
    let id = SparseEndo::identity(x.dim(), x.is_complete());
    let (mut l, mut r) = (id.clone(), id);
    for s in 0..m {
        let (p, q) = if s % 2 == 0 { (x, y) } else { (y, x) };
        l = l.compose(p);
        r = r.compose(q);
    }
    (l, r)
}

/// `2n(p+q) + 2(n²−3n+1)r`: with `(b, c, d) = (y^p, y^q, y^r)`, the `k = 1`
/// and `k = 3` representations can only be equivalent when this vanishes.
pub fn nonequivalence_value(n: i64, p: i64, q: i64, r: i64) -> i64 {
    2 * n * (p + q) + 2 * (n * n - 3 * n + 1) * r
}

/// True when the `k = 1` and `k = 3` twisted representations of `B_n` are
/// provably non-equivalent.
pub fn nonequivalence_condition(n: i64, p: i64, q: i64, r: i64) -> bool {
    nonequivalence_value(n, p, q, r) != 0
}
