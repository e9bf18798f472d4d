use std::collections::BTreeSet;

use serde::Serialize;

use super::TwistedError;
use crate::coxeter::CoxeterGraph;

/// A group of vertex permutations preserving the Coxeter matrix, listed in
/// full. `elements[0]` is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphAutGroup {
    elements: Vec<Vec<usize>>,
    generators: Vec<Vec<usize>>,
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

fn is_automorphism(g: &CoxeterGraph, p: &[usize]) -> bool {
    let n = g.rank();
    if p.len() != n || p.iter().collect::<BTreeSet<_>>().len() != n || p.iter().any(|&x| x >= n) {
        return false;
    }
    (0..n).all(|i| (0..n).all(|j| g.m(p[i], p[j]) == g.m(i, j)))
}

/// Closure of a set of permutations of `0..n` under composition.
fn closure(n: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut out = vec![id];
    let mut k = 0;
    while k < out.len() {
        for s in gens {
            let h = compose(s, &out[k]);
            if seen.insert(h.clone()) {
                out.push(h);
            }
        }
        k += 1;
    }
    out
}

impl GraphAutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// The orbits of `I`, each sorted, ordered by least element.
    pub fn vertex_orbits(&self) -> Vec<Vec<usize>> {
        let n = self.elements[0].len();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if done[i] {
                continue;
            }
            let orb: BTreeSet<usize> = self.elements.iter().map(|p| p[i]).collect();
            for &v in &orb {
                done[v] = true;
            }
            out.push(orb.into_iter().collect());
        }
        out
    }
}

/// The full automorphism group, by backtracking over vertex images.
pub fn automorphisms(g: &CoxeterGraph) -> GraphAutGroup {
    let n = g.rank();
    let mut found = Vec::new();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(g, &mut perm, &mut used, &mut found);
    found.sort();
    // Greedy generating set, in lexicographic order of the elements.
    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut span = closure(n, &generators);
    for p in &found {
        if !span.contains(p) {
            generators.push(p.clone());
            span = closure(n, &generators);
        }
    }
    GraphAutGroup { elements: span, generators }
}

fn extend(g: &CoxeterGraph, perm: &mut Vec<usize>, used: &mut [bool], found: &mut Vec<Vec<usize>>) {
    let a = perm.len();
    if a == g.rank() {
        found.push(perm.clone());
        return;
    }
    for v in 0..g.rank() {
        if used[v] || g.m(v, v) != g.m(a, a) {
            continue;
        }
        if (0..a).all(|b| g.m(v, perm[b]) == g.m(a, b)) {
            used[v] = true;
            perm.push(v);
            extend(g, perm, used, found);
            perm.pop();
            used[v] = false;
        }
    }
}

/// The subgroup generated by the given automorphisms.
pub fn subgroup(g: &CoxeterGraph, generators: &[Vec<usize>]) -> Result<GraphAutGroup, TwistedError> {
    if let Some(bad) = generators.iter().find(|p| !is_automorphism(g, p)) {
        return Err(TwistedError::NotAutomorphism(bad.clone()));
    }
    Ok(GraphAutGroup { elements: closure(g.rank(), generators), generators: generators.to_vec() })
}
