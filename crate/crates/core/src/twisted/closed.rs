use super::{OrbitBasis, TwistedError};
use crate::laurent::LaurentPoly;
use crate::lkcore::{phi, LkFamily, SparseEndo};
use crate::rootsys::{mesh, Mesh, Reflection};

/// `ψ^G_{Δ_J}` for an orbit `J` of size one, or of size two under a group of
/// order two, assembled block by block from the orbit configurations rather
/// than by composing the `ψ_i`.
///
/// The form parts use `f_J(e_Θ) = Σ_{α∈Θ} f_{i,α}` and
/// `f'_J(e_Θ) = Σ_{α∈Θ} (f_i φ_j)(e_α)`, read off the family.
pub fn closed_form_delta(
    j_orbit: &[usize],
    family: &LkFamily,
    basis: &OrbitBasis,
) -> Result<SparseEndo<LaurentPoly>, TwistedError> {
    let mut jj = j_orbit.to_vec();
    jj.sort_unstable();
    if !basis.vertex_orbits().contains(&jj) {
        return Err(TwistedError::NotAnOrbit(jj));
    }
    super::restrict::require_equivariant(family, basis)?;
    match jj[..] {
        [i] => Ok(singleton(i, family, basis)),
        [i, j] => {
            if basis.group().order() != 2 {
                return Err(TwistedError::UnsupportedOrbit(format!(
                    "|J| = 2 needs |G| = 2, here |G| = {}",
                    basis.group().order()
                )));
            }
            match family.table().graph().m(i, j) {
                2 | 3 => Ok(pair(i, j, family, basis)),
                _ => Err(TwistedError::UnsupportedOrbit(format!("{{{i}, {j}}} is not spherical"))),
            }
        }
        _ => Err(TwistedError::UnsupportedOrbit(format!("|J| = {} ≥ 3", jj.len()))),
    }
}

/// `Σ_{α∈Θ} f_{i,α}`.
fn form_on(family: &LkFamily, basis: &OrbitBasis, i: usize, t: usize) -> LaurentPoly {
    basis.orbit(t).iter().fold(LaurentPoly::zero(), |acc, &k| &acc + family.f(i, k))
}

fn singleton(i: usize, family: &LkFamily, basis: &OrbitBasis) -> SparseEndo<LaurentPoly> {
    let t = family.table();
    let p = family.params();
    let (a, b, c, d) = (p.a(), p.b(), p.c(), p.d());
    let theta_j = basis.orbit_of(t.simple(i));
    let mut e = SparseEndo::zero(basis.len(), t.is_complete());
    for th in 0..basis.len() {
        let rep = basis.orbit(th)[0];
        let fj = (theta_j, form_on(family, basis, i, th));
        if th == theta_j {
            e.set_column(th, [fj], true);
            continue;
        }
        match (t.pairing(rep, i).signum(), t.reflect(i, rep)) {
            (0, _) => e.set_column(th, [(th, d.clone()), fj], true),
            (-1, Reflection::Root(up)) => {
                e.set_column(th, [(th, a.clone()), (basis.orbit_of(up), c.clone()), fj], true)
            }
            (-1, _) => e.set_column(th, [(th, a.clone()), fj], false),
            (_, Reflection::Root(lo)) => e.set_column(th, [(basis.orbit_of(lo), b.clone()), fj], true),
            (_, r) => unreachable!("s_{i} of a root with positive pairing gave {r:?}"),
        }
    }
    e
}

/// A block of `φ^G_{Δ_J}`: the orbits `Θ_1, …, Θ_r` it acts on and the
/// row-major matrix, entry `(s, t)` being the coefficient of `e_{Θ_s}` in
/// the image of `e_{Θ_t}`.
struct Block {
    orbits: Vec<usize>,
    rows: Vec<Vec<LaurentPoly>>,
}

fn pair(i: usize, j: usize, family: &LkFamily, basis: &OrbitBasis) -> SparseEndo<LaurentPoly> {
    let t = family.table();
    let p = family.params();
    let m = t.graph().m(i, j);
    let mut e = SparseEndo::zero(basis.len(), t.is_complete());
    let mut exact = vec![false; basis.len()];
    let mut done = vec![false; t.len()];
    for k in 0..t.len() {
        if done[k] {
            continue;
        }
        let Ok(mk) = mesh(t, k, (i, j)) else {
            done[k] = true;
            continue;
        };
        let g_bottom = basis.image(1, mk.bottom());
        let mg = mesh(t, g_bottom, (i, j)).expect("image of a complete mesh is complete");
        for &v in mk.members.iter().chain(&mg.members) {
            done[v] = true;
        }
        let blk = block(&mk, g_bottom, m, i, j, basis, p);
        for (col, &th) in blk.orbits.iter().enumerate() {
            let entries: Vec<(usize, LaurentPoly)> =
                blk.orbits.iter().zip(&blk.rows).map(|(&r, row)| (r, row[col].clone())).collect();
            e.set_column(th, entries, true);
            exact[th] = true;
        }
    }
    // Form parts on the α_i row and, for m = 3, the α_i + α_j row.
    let (a, b, c, d) = (p.a(), p.b(), p.c(), p.d());
    let theta_j = basis.orbit_of(t.simple(i));
    let ph_j = phi(j, t, p);
    let mut out = SparseEndo::zero(basis.len(), t.is_complete());
    for th in 0..basis.len() {
        let fj = form_on(family, basis, i, th);
        let mut col: Vec<(usize, LaurentPoly)> = e.column(th).to_vec();
        if m == 2 {
            col.push((theta_j, d * &fj));
        } else {
            let fp = basis.orbit(th).iter().fold(LaurentPoly::zero(), |acc, &k| {
                ph_j.column(k).iter().fold(acc, |acc, (r, v)| &acc + &(v * family.f(i, *r)))
            });
            let sum = t.root(t.simple(i)).add(t.root(t.simple(j)));
            let theta_pj = basis.orbit_of(t.find(&sum).expect("α_i + α_j is a root"));
            col.push((theta_j, &(&(b * c) * &fj) + &(a * &fp)));
            col.push((theta_pj, c * &fp));
        }
        out.set_column(th, col, exact[th]);
    }
    out
}

fn block(
    mk: &Mesh,
    g_bottom: usize,
    m: u8,
    i: usize,
    j: usize,
    basis: &OrbitBasis,
    p: &crate::laurent::LkParams,
) -> Block {
    let (a, b, c, d) = (p.a(), p.b(), p.c(), p.d());
    let z = LaurentPoly::zero;
    let o = |k: usize| basis.orbit_of(k);
    let up = |k: usize, l: usize| mk.up(k, l).expect("mesh edge");
    let stable = g_bottom == mk.bottom();
    let bot = mk.bottom();
    let (a2, b2, c2, d2) = (a * a, b * b, c * c, d * d);
    let (ab, ac, bc, ad, bd, cd) = (a * b, a * c, b * c, a * d, b * d, c * d);
    let two = |x: &LaurentPoly| x + x;
    let (orbits, rows): (Vec<usize>, Vec<Vec<LaurentPoly>>) = match (m, mk.mesh_type) {
        (2, 1) | (3, 5) => {
            let mut orbs: Vec<usize> = mk.members.iter().map(|&k| o(k)).collect();
            orbs.dedup();
            let r = orbs.len();
            (orbs, vec![vec![z(); r]; r])
        }
        (2, 2) => (vec![o(bot)], vec![vec![d2]]),
        (3, 6) => (vec![o(bot)], vec![vec![&d2 * d]]),
        (2, 3) => (vec![o(bot), o(mk.top())], vec![vec![ad, bd], vec![cd, z()]]),
        (2, 4) if stable => (
            vec![o(bot), o(up(bot, i)), o(mk.top())],
            vec![vec![a2, two(&ab), b2], vec![ac, bc, z()], vec![c2, z(), z()]],
        ),
        (2, 4) => (
            vec![o(bot), o(up(bot, i)), o(up(bot, j)), o(mk.top())],
            vec![
                vec![a2, ab.clone(), ab, b2],
                vec![ac.clone(), z(), bc.clone(), z()],
                vec![ac, bc, z(), z()],
                vec![c2, z(), z(), z()],
            ],
        ),
        (3, 7) => {
            let mid = mk.members[1];
            (
                vec![o(bot), o(mid), o(mk.top())],
                vec![
                    vec![&ad * d, &ab * d, &b2 * d],
                    vec![&ac * d, &bc * d, z()],
                    vec![&c2 * d, z(), z()],
                ],
            )
        }
        (3, 8) => {
            let gam = up(bot, i);
            let gam2 = up(bot, j);
            let bet = up(gam, j);
            let bet2 = up(gam2, i);
            let a_ab = a * &(&a2 + &bc);
            let (a2b, a2c, ab2, abc, b2c, ac2, bc2) =
                (&a2 * b, &a2 * c, a * &b2, &ab * c, &b2 * c, a * &c2, b * &c2);
            let (b3, c3) = (&b2 * b, &c2 * c);
            if stable {
                (
                    vec![o(bot), o(gam), o(bet), o(mk.top())],
                    vec![
                        vec![a_ab, two(&a2b), two(&ab2), b3],
                        vec![a2c, two(&abc), b2c, z()],
                        vec![ac2, bc2, z(), z()],
                        vec![c3, z(), z(), z()],
                    ],
                )
            } else {
                (
                    vec![o(bot), o(gam), o(gam2), o(bet), o(bet2), o(mk.top())],
                    vec![
                        vec![a_ab, a2b.clone(), a2b, ab2.clone(), ab2, b3],
                        vec![a2c.clone(), abc.clone(), abc.clone(), z(), b2c.clone(), z()],
                        vec![a2c, abc.clone(), abc, b2c, z(), z()],
                        vec![ac2.clone(), z(), bc2.clone(), z(), z(), z()],
                        vec![ac2, bc2, z(), z(), z(), z()],
                        vec![c3, z(), z(), z(), z(), z()],
                    ],
                )
            }
        }
        other => unreachable!("mesh configuration {other:?}"),
    };
    Block { orbits, rows }
}
