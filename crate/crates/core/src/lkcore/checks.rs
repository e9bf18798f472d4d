use std::collections::BTreeSet;

use serde::Serialize;

use super::{phi, LkError, LkFamily};
use crate::laurent::LaurentPoly;
use crate::rootsys::{complete_meshes, Mesh, RootTable};

/// A failed identity, located by generator pair and root (table index).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Condition (1..=3) or relation number (1..=10), depending on the checker.
    pub code: u8,
    pub i: usize,
    pub j: usize,
    pub root: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    /// Number of identities evaluated.
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// The distinct codes that failed.
    pub fn failed_codes(&self) -> BTreeSet<u8> {
        self.violations.iter().map(|v| v.code).collect()
    }

    fn test(&mut self, ok: bool, code: u8, i: usize, j: usize, root: usize) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation { code, i, j, root });
        }
    }
}

/// `(f_i ∘ φ_j)(e_k)`.
fn form_after_phi(family: &LkFamily, i: usize, ph_j: &crate::lkcore::SparseEndo<LaurentPoly>, k: usize) -> LaurentPoly {
    ph_j.column(k).iter().fold(LaurentPoly::zero(), |acc, (r, v)| &acc + &(v * family.f(i, *r)))
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Conditions (i)–(iii) of an LK-family, evaluated as linear-form identities
/// on every member of every `{i,j}`-mesh that lies inside the table.
pub fn check_family_conditions(family: &LkFamily) -> CheckReport {
    let t = family.table();
    let n = t.rank();
    let par = family.params();
    let phis: Vec<_> = (0..n).map(|i| phi(i, t, par)).collect();
    let mut rep = CheckReport::default();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                rep.test(family.f(i, t.simple(j)).is_zero(), 1, i, j, t.simple(j));
            }
        }
    }
    for (i, j) in pairs(n) {
        let m = t.graph().m(i, j);
        for mesh in complete_meshes(t, (i, j)) {
            for &k in &mesh.members {
                match m {
                    2 => {
                        for (x, y) in [(i, j), (j, i)] {
                            let lhs = form_after_phi(family, x, &phis[y], k);
                            rep.test(lhs == par.d() * family.f(x, k), 2, x, y, k);
                        }
                    }
                    3 => {
                        let lhs = form_after_phi(family, i, &phis[j], k);
                        let rhs = form_after_phi(family, j, &phis[i], k);
                        rep.test(lhs == rhs, 3, i, j, k);
                    }
                    _ => {}
                }
            }
        }
    }
    rep
}

/// The ten relations between the values `f_{i,α}`, each attributed to its
/// number. Meshes leaving the table are skipped.
pub fn check_table1(family: &LkFamily) -> CheckReport {
    let t = family.table();
    let n = t.rank();
    let p = family.params();
    let (a, b, c, d) = (p.a(), p.b(), p.c(), p.d());
    let f = |i: usize, k: usize| family.f(i, k);
    let mut rep = CheckReport::default();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                rep.test(f(i, t.simple(j)).is_zero(), 1, i, j, t.simple(j));
            }
        }
    }
    for (i, j) in pairs(n) {
        let m = t.graph().m(i, j);
        for mesh in complete_meshes(t, (i, j)) {
            if m == 2 {
                // (6): for each l-edge β → α, d f_{k,α} = b f_{k,β}, k the other label.
                for e in &mesh.edges {
                    let k = if e.label == i { j } else { i };
                    rep.test(d * f(k, e.upper) == b * f(k, e.lower), 6, k, e.label, e.upper);
                }
                continue;
            }
            // Ascending chains x —k— y —l— z with k ≠ l give (8):
            // c f_{k,z} = b f_{l,x} − a f_{k,y}.
            let chain8 = |rep: &mut CheckReport, x: usize, k: usize, l: usize| {
                let y = mesh.up(x, k).expect("chain edge");
                let z = mesh.up(y, l).expect("chain edge");
                rep.test(c * f(k, z) == &(b * f(l, x)) - &(a * f(k, y)), 8, k, l, z);
            };
            match mesh.mesh_type {
                5 => {
                    let (ai, aj) = (t.simple(i), t.simple(j));
                    let top = mesh.top();
                    rep.test(f(i, ai) == f(j, aj), 2, i, j, ai);
                    rep.test(c * f(i, top) == -(a * f(i, ai)), 7, i, j, top);
                    rep.test(c * f(j, top) == -(a * f(j, aj)), 7, j, i, top);
                }
                6 => {
                    let k = mesh.bottom();
                    rep.test(f(i, k) == f(j, k), 5, i, j, k);
                }
                7 => {
                    let (x, y) = bottom_top_labels(&mesh);
                    let gam = mesh.bottom();
                    let bet = mesh.up(gam, x).expect("type 7 chain");
                    let alp = mesh.top();
                    rep.test(d * f(y, alp) == b * f(x, bet), 10, y, x, alp);
                    rep.test(c * f(y, bet) == &(d * f(x, gam)) - &(a * f(y, gam)), 9, y, x, bet);
                    chain8(&mut rep, gam, x, y);
                }
                8 => {
                    let del = mesh.bottom();
                    let gam = mesh.up(del, i).expect("hexagon");
                    let gam2 = mesh.up(del, j).expect("hexagon");
                    let bet = mesh.up(gam, j).expect("hexagon");
                    let bet2 = mesh.up(gam2, i).expect("hexagon");
                    rep.test(f(i, bet2) == f(j, bet), 3, i, j, bet2);
                    let l4 = &(c * f(i, gam2)) + &(a * f(i, del));
                    let r4 = &(c * f(j, gam)) + &(a * f(j, del));
                    rep.test(l4 == r4, 4, i, j, del);
                    chain8(&mut rep, del, i, j);
                    chain8(&mut rep, del, j, i);
                    chain8(&mut rep, gam, j, i);
                    chain8(&mut rep, gam2, i, j);
                }
                other => unreachable!("mesh type {other} for m = 3"),
            }
        }
    }
    rep
}

/// Labels of the lower and upper edge of a three-element chain mesh.
fn bottom_top_labels(mesh: &Mesh) -> (usize, usize) {
    let bot = mesh.bottom();
    let e = mesh.edges.iter().find(|e| e.lower == bot).expect("type 7 bottom edge");
    let other = if e.label == mesh.pair.0 { mesh.pair.1 } else { mesh.pair.0 };
    (e.label, other)
}

/// For every triangle `{i,j,k}` of the graph, `(α_i|α)+(α_j|α)+(α_k|α) ≤ 0`
/// on every enumerated root.
pub fn lemma_cool_check(table: &RootTable) -> Result<bool, LkError> {
    let tri = table.graph().triangles();
    if tri.is_empty() {
        return Err(LkError::NoTriangle);
    }
    Ok(tri.iter().all(|[i, j, k]| {
        (0..table.len()).all(|r| table.pairing(r, *i) + table.pairing(r, *j) + table.pairing(r, *k) <= 0)
    }))
}

/// Relation (5) follows from the others: a family passing every relation
/// except (5) also passes (5).
pub fn relation5_redundancy_check(family: &LkFamily) -> bool {
    let rep = check_table1(family);
    let others_ok = rep.violations.iter().all(|v| v.code == 5);
    !others_ok || rep.is_ok()
}
