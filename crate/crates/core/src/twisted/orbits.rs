use std::sync::Arc;

use num_rational::Rational64;
use serde_json::{json, Value};

use super::{GraphAutGroup, TwistedError};
use crate::rootsys::{RootError, RootTable};

/// The partition of the enumerated roots into `G`-orbits `Θ`, giving the basis
/// `e_Θ = Σ_{α∈Θ} e_α` of `V^G`. Orbits are numbered by least member index.
#[derive(Debug, Clone)]
pub struct OrbitBasis {
    table: Arc<RootTable>,
    group: GraphAutGroup,
    root_orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
    vertex_orbits: Vec<Vec<usize>>,
    /// `images[g][k]`: index of `g(α_k)`.
    images: Vec<Vec<usize>>,
}

pub fn orbit_basis(table: Arc<RootTable>, group: &GraphAutGroup) -> Result<OrbitBasis, TwistedError> {
    let images: Vec<Vec<usize>> = group
        .elements()
        .iter()
        .map(|p| {
            (0..table.len())
                .map(|k| {
                    let r = table.root(k).permuted(p);
                    table.find(&r).ok_or_else(|| RootError::NotARoot(r.to_string()))
                })
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
    let mut orbit_of = vec![usize::MAX; table.len()];
    let mut root_orbits = Vec::new();
    for k in 0..table.len() {
        if orbit_of[k] != usize::MAX {
            continue;
        }
        let mut orb: Vec<usize> = images.iter().map(|im| im[k]).collect();
        orb.sort_unstable();
        orb.dedup();
        for &v in &orb {
            orbit_of[v] = root_orbits.len();
        }
        root_orbits.push(orb);
    }
    Ok(OrbitBasis { vertex_orbits: group.vertex_orbits(), group: group.clone(), table, root_orbits, orbit_of, images })
}

impl OrbitBasis {
    pub fn table(&self) -> &RootTable {
        &self.table
    }

    pub fn group(&self) -> &GraphAutGroup {
        &self.group
    }

    /// Number of orbits, the rank of `V^G`.
    pub fn len(&self) -> usize {
        self.root_orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.root_orbits.is_empty()
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.root_orbits
    }

    pub fn orbit(&self, t: usize) -> &[usize] {
        &self.root_orbits[t]
    }

    /// The orbit containing the root with table index `k`.
    pub fn orbit_of(&self, k: usize) -> usize {
        self.orbit_of[k]
    }

    pub fn vertex_orbits(&self) -> &[Vec<usize>] {
        &self.vertex_orbits
    }

    /// `g(α_k)` for the `g`-th group element.
    pub fn image(&self, g: usize, k: usize) -> usize {
        self.images[g][k]
    }

    /// Root coordinates of `e_Θ`.
    pub fn embed(&self, t: usize) -> Vec<(usize, i64)> {
        self.root_orbits[t].iter().map(|&k| (k, 1)).collect()
    }

    /// `"Θ{k}: {(root),(root)}"` for every orbit.
    pub fn labels(&self) -> Vec<String> {
        self.root_orbits
            .iter()
            .enumerate()
            .map(|(t, orb)| {
                let rs: Vec<String> = orb.iter().map(|&k| format!("({})", self.table.root(k))).collect();
                format!("Θ{t}: {{{}}}", rs.join(","))
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let orbits: Vec<Value> = self
            .labels()
            .into_iter()
            .zip(&self.root_orbits)
            .map(|(l, orb)| {
                let roots: Vec<String> = orb.iter().map(|&k| self.table.root(k).to_string()).collect();
                json!({ "label": l, "roots": roots })
            })
            .collect();
        json!({
            "graph": self.table.graph().label(),
            "group": self.group.elements(),
            "vertex_orbits": self.vertex_orbits,
            "orbits": orbits,
        })
    }
}

/// `α_Θ = (1/|Θ|) Σ_{α∈Θ} α`, exactly.
pub fn alpha_theta(basis: &OrbitBasis, t: usize) -> Vec<Rational64> {
    let orb = basis.orbit(t);
    let n = basis.table().rank();
    let len = orb.len() as i64;
    (0..n)
        .map(|i| {
            let s: i64 = orb.iter().map(|&k| basis.table().root(k).0[i]).sum();
            Rational64::new(s, len)
        })
        .collect()
}

/// Pairs of distinct orbits with the same average root.
pub fn collision_scan(basis: &OrbitBasis) -> Vec<(usize, usize)> {
    let avg: Vec<Vec<Rational64>> = (0..basis.len()).map(|t| alpha_theta(basis, t)).collect();
    let mut out = Vec::new();
    for s in 0..avg.len() {
        for t in s + 1..avg.len() {
            if avg[s] == avg[t] {
                out.push((s, t));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterGraph;
    use crate::twisted::automorphisms;

    fn basis(label: &str) -> OrbitBasis {
        let g = CoxeterGraph::from_label(label).unwrap();
        orbit_basis(Arc::new(RootTable::complete(&g).unwrap()), &automorphisms(&g)).unwrap()
    }

    #[test]
    fn flip_on_a3() {
        let b = basis("A3");
        let t = b.table();
        assert_eq!(b.orbit_of(t.simple(0)), b.orbit_of(t.simple(2)));
        assert_eq!(b.orbit(b.orbit_of(t.simple(0))).len(), 2);
        assert_eq!(b.len(), 4);
        assert_eq!(b.labels()[0], "Θ0: {(1,0,0),(0,0,1)}");
    }

    #[test]
    fn orbit_counts_type_a() {
        for n in 2..=4 {
            assert_eq!(basis(&format!("A{}", 2 * n - 1)).len(), n * n);
            assert_eq!(basis(&format!("A{}", 2 * n)).len(), n * (n + 1));
        }
    }

    #[test]
    fn averages() {
        let b = basis("A5");
        assert!(collision_scan(&b).is_empty());
        let mid = b.orbit_of(b.table().simple(2));
        assert_eq!(alpha_theta(&b, mid), vec![0.into(), 0.into(), 1.into(), 0.into(), 0.into()]);
        let end = b.orbit_of(b.table().simple(0));
        let half = Rational64::new(1, 2);
        assert_eq!(alpha_theta(&b, end), vec![half, 0.into(), 0.into(), 0.into(), half]);
    }
}
