//! Positive roots with depth, meshes, and affine bookkeeping.
//!
//! Roots are integer vectors over the simple roots; small type makes every
//! pairing integral. Depth is the BFS level from the simple roots, which is
//! correct because a reflection changes depth by exactly `−sign((α|α_i))`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::CoxeterGraph;

/// Guard on the number of enumerated roots.
pub const DEFAULT_ROOT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("root enumeration exceeded {0} roots")]
    NonTerminating(usize),
    #[error("non-spherical graph needs a depth bound >= 1")]
    DepthBoundRequired,
    #[error("mesh of root {root} for pair {pair:?} leaves the enumerated table")]
    BoundaryTruncated { root: String, pair: (usize, usize) },
    #[error("graph is not affine: {0}")]
    NotAffine(String),
    #[error("graph is not of type Atilde with cyclic numbering")]
    NotAtilde,
    #[error("not a positive root: {0}")]
    NotARoot(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Root(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn support(&self) -> BTreeSet<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Root {
        Root(self.0.iter().map(|a| a * k).collect())
    }

    /// The vertex permutation `perm` acting on coordinates: `(gα)_{g(i)} = α_i`.
    pub fn permuted(&self, perm: &[usize]) -> Root {
        let mut v = vec![0; self.0.len()];
        for (i, &c) in self.0.iter().enumerate() {
            v[perm[i]] = c;
        }
        Root(v)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Root {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map(Root)
            .map_err(|_| RootError::NotARoot(s.to_string()))
    }
}

/// `(α | β)` extended bilinearly from the simple roots.
pub fn pairing(g: &CoxeterGraph, a: &Root, b: &Root) -> i64 {
    let n = g.rank();
    let mut acc = 0;
    for i in 0..n {
        if a.0[i] == 0 {
            continue;
        }
        for j in 0..n {
            acc += a.0[i] * b.0[j] * g.simple_pairing(i, j);
        }
    }
    acc
}

/// `s_i(α) = α − (α|α_i) α_i`. May be negative.
pub fn reflect(g: &CoxeterGraph, i: usize, a: &Root) -> Root {
    let p = pairing(g, a, &Root::simple(g.rank(), i));
    let mut v = a.0.clone();
    v[i] -= p;
    Root(v)
}

/// Where `s_i` sends a root of the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reflection {
    Root(usize),
    /// `s_i(α_i) = −α_i`.
    Negative,
    /// The image is deeper than the enumeration bound.
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct AffineData {
    node: usize,
}

/// The enumerated positive roots, ordered by `(depth, coordinates descending)`
/// so that the simple roots come first in vertex order.
#[derive(Debug, Clone)]
pub struct RootTable {
    graph: CoxeterGraph,
    roots: Vec<Root>,
    depth: Vec<usize>,
    depth_bound: Option<usize>,
    reflect: Vec<Vec<Reflection>>,
    pair: Vec<Vec<i64>>,
    index: HashMap<Root, usize>,
    delta: Option<Root>,
    affine: Option<AffineData>,
}

impl RootTable {
    /// Enumerates `Φ⁺`, or its roots of depth at most `depth_bound` when `g`
    /// is not spherical. The bound is ignored for spherical graphs.
    pub fn enumerate(g: &CoxeterGraph, depth_bound: usize) -> Result<Self, RootError> {
        Self::enumerate_capped(g, depth_bound, DEFAULT_ROOT_CAP)
    }

    /// The complete table of a spherical graph.
    pub fn complete(g: &CoxeterGraph) -> Result<Self, RootError> {
        if !g.is_spherical(&(0..g.rank()).collect::<Vec<_>>()) {
            return Err(RootError::DepthBoundRequired);
        }
        Self::enumerate(g, 1)
    }

    pub fn enumerate_capped(g: &CoxeterGraph, depth_bound: usize, cap: usize) -> Result<Self, RootError> {
        let n = g.rank();
        let spherical = g.is_spherical(&(0..n).collect::<Vec<_>>());
        if !spherical && depth_bound == 0 {
            return Err(RootError::DepthBoundRequired);
        }
        let mut levels: Vec<Vec<Root>> = vec![(0..n).map(|i| Root::simple(n, i)).collect()];
        let mut total = n;
        loop {
            if !spherical && levels.len() >= depth_bound {
                break;
            }
            let mut next = BTreeSet::new();
            for a in levels.last().expect("nonempty") {
                for i in 0..n {
                    if pairing(g, a, &Root::simple(n, i)) < 0 {
                        next.insert(reflect(g, i, a));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            total += next.len();
            if total > cap {
                return Err(RootError::NonTerminating(cap));
            }
            levels.push(next.into_iter().collect());
        }
        let mut roots = Vec::with_capacity(total);
        let mut depth = Vec::with_capacity(total);
        for (k, mut lvl) in levels.into_iter().enumerate() {
            lvl.sort_by(|a, b| b.cmp(a));
            depth.extend(std::iter::repeat_n(k + 1, lvl.len()));
            roots.extend(lvl);
        }
        let index: HashMap<Root, usize> = roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        let depth_bound = (!spherical).then_some(depth_bound);
        let mut reflect_map = vec![Vec::with_capacity(roots.len()); n];
        let mut pair = Vec::with_capacity(roots.len());
        for (k, a) in roots.iter().enumerate() {
            let pa: Vec<i64> = (0..n).map(|i| pairing(g, a, &Root::simple(n, i))).collect();
            for (i, row) in reflect_map.iter_mut().enumerate() {
                let img = if *a == Root::simple(n, i) {
                    Reflection::Negative
                } else {
                    match index.get(&reflect(g, i, a)) {
                        Some(&t) => Reflection::Root(t),
                        None => {
                            debug_assert!(pa[i] < 0 && Some(depth[k]) == depth_bound);
                            Reflection::Boundary
                        }
                    }
                };
                row.push(img);
            }
            pair.push(pa);
        }
        let (delta, affine) = match delta(g) {
            Ok(d) => {
                let node = (0..n).find(|&i| d.0[i] == 1).expect("affine delta has a unit coordinate");
                (Some(d), Some(AffineData { node }))
            }
            Err(_) => (None, None),
        };
        Ok(Self { graph: g.clone(), roots, depth, depth_bound, reflect: reflect_map, pair, index, delta, affine })
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    pub fn depth(&self, k: usize) -> usize {
        self.depth[k]
    }

    /// `None` for a complete (spherical) table.
    pub fn depth_bound(&self) -> Option<usize> {
        self.depth_bound
    }

    pub fn is_complete(&self) -> bool {
        self.depth_bound.is_none()
    }

    pub fn max_depth(&self) -> usize {
        self.depth.last().copied().unwrap_or(0)
    }

    pub fn find(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// Index of `α_i` (the simple roots come first, in order).
    pub fn simple(&self, i: usize) -> usize {
        i
    }

    pub fn is_simple(&self, k: usize) -> bool {
        k < self.rank()
    }

    pub fn reflect(&self, i: usize, k: usize) -> Reflection {
        self.reflect[i][k]
    }

    /// `(α_k | α_i)` for the root with index `k`.
    pub fn pairing(&self, k: usize, i: usize) -> i64 {
        self.pair[k][i]
    }

    /// The image under `s_i` when it is a root of the table.
    pub fn reflect_root(&self, i: usize, k: usize) -> Option<usize> {
        match self.reflect[i][k] {
            Reflection::Root(t) => Some(t),
            _ => None,
        }
    }

    pub fn delta(&self) -> Option<&Root> {
        self.delta.as_ref()
    }

    /// The vertex used to split `Φ⁺` into δ-levels (the affine node).
    pub fn affine_node(&self) -> Option<usize> {
        self.affine.map(|a| a.node)
    }

    /// `α = pδ + β` with `β` in the finite root system of the graph minus the affine node.
    pub fn affine_decompose(&self, r: &Root) -> Result<(i64, Root), RootError> {
        let (d, node) = match (&self.delta, self.affine) {
            (Some(d), Some(a)) => (d, a.node),
            _ => return Err(RootError::NotAffine("no imaginary root".into())),
        };
        let p = r.0[node];
        Ok((p, r.sub(&d.scale(p))))
    }

    /// `pδ + α_i`, if enumerated.
    pub fn find_delta_plus(&self, p: i64, i: usize) -> Option<usize> {
        let d = self.delta.as_ref()?;
        self.find(&d.scale(p).add(&Root::simple(self.rank(), i)))
    }

    /// `pδ − α_i`, if enumerated.
    pub fn find_delta_minus(&self, p: i64, i: usize) -> Option<usize> {
        let d = self.delta.as_ref()?;
        self.find(&d.scale(p).sub(&Root::simple(self.rank(), i)))
    }

    /// Roots whose every reflection stays in the table.
    pub fn is_interior(&self, k: usize) -> bool {
        (0..self.rank()).all(|i| self.reflect[i][k] != Reflection::Boundary)
    }

    /// The roots in index order with their depths, plus the `δ`-level `p` of
    /// `α = pδ + α₀` on affine tables.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.len())
            .map(|k| {
                let mut row = serde_json::json!({ "index": k, "root": self.root(k).to_string(), "depth": self.depth(k) });
                if let Ok((p, _)) = self.affine_decompose(self.root(k)) {
                    row["delta_level"] = p.into();
                }
                row
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

/// Convenience wrapper matching the table constructor.
pub fn enumerate_roots(g: &CoxeterGraph, depth_bound: usize) -> Result<RootTable, RootError> {
    RootTable::enumerate(g, depth_bound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MeshEdge {
    pub lower: usize,
    pub upper: usize,
    pub label: usize,
}

/// `[α]_{ij} = W_{ij}(α) ∩ Φ⁺` with its graded layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mesh {
    pub pair: (usize, usize),
    /// Sorted by table index, hence by depth.
    pub members: Vec<usize>,
    pub edges: Vec<MeshEdge>,
    pub mesh_type: u8,
}

impl Mesh {
    pub fn bottom(&self) -> usize {
        self.members[0]
    }

    pub fn top(&self) -> usize {
        *self.members.last().expect("nonempty")
    }

    pub fn contains(&self, k: usize) -> bool {
        self.members.binary_search(&k).is_ok()
    }

    /// The edge leaving `k` upwards with the given label.
    pub fn up(&self, k: usize, label: usize) -> Option<usize> {
        self.edges.iter().find(|e| e.lower == k && e.label == label).map(|e| e.upper)
    }
}

pub fn mesh(table: &RootTable, k: usize, pair: (usize, usize)) -> Result<Mesh, RootError> {
    let (i, j) = pair;
    let mut members = BTreeSet::from([k]);
    let mut stack = vec![k];
    while let Some(v) = stack.pop() {
        for l in [i, j] {
            match table.reflect(l, v) {
                Reflection::Root(w) => {
                    if members.insert(w) {
                        stack.push(w);
                    }
                }
                Reflection::Negative => {}
                Reflection::Boundary => {
                    return Err(RootError::BoundaryTruncated { root: table.root(k).to_string(), pair });
                }
            }
        }
    }
    let members: Vec<usize> = members.into_iter().collect();
    let mut edges = Vec::new();
    for &v in &members {
        for l in [i, j] {
            if let Reflection::Root(w) = table.reflect(l, v) {
                if table.depth(w) > table.depth(v) {
                    edges.push(MeshEdge { lower: v, upper: w, label: l });
                }
            }
        }
    }
    let has_simple = members.iter().any(|&v| v == table.simple(i) || v == table.simple(j));
    let mesh_type = match (table.graph().m(i, j), members.len(), has_simple) {
        (2, 1, true) => 1,
        (2, 1, false) => 2,
        (2, 2, _) => 3,
        (2, 4, _) => 4,
        (3, 3, true) => 5,
        (3, 1, _) => 6,
        (3, 3, false) => 7,
        (3, 6, _) => 8,
        other => panic!("impossible mesh shape {other:?}"),
    };
    Ok(Mesh { pair, members, edges, mesh_type })
}

/// All meshes of the pair that lie entirely inside the table, each listed once.
pub fn complete_meshes(table: &RootTable, pair: (usize, usize)) -> Vec<Mesh> {
    let mut done = vec![false; table.len()];
    let mut out = Vec::new();
    for k in 0..table.len() {
        if done[k] {
            continue;
        }
        match mesh(table, k, pair) {
            Ok(m) => {
                for &v in &m.members {
                    done[v] = true;
                }
                out.push(m);
            }
            Err(_) => done[k] = true,
        }
    }
    out
}

/// The primitive positive vector spanning the radical of the pairing.
pub fn delta(g: &CoxeterGraph) -> Result<Root, RootError> {
    let n = g.rank();
    let mut m: Vec<Vec<Ratio<i64>>> =
        (0..n).map(|i| (0..n).map(|j| Ratio::from_integer(g.simple_pairing(i, j))).collect()).collect();
    // Reduced row echelon form.
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in 0..n {
            m[row][c] *= inv;
        }
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..n {
                    let v = m[row][c] * f;
                    m[r][c] -= v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return Err(RootError::NotAffine(format!("radical has dimension {}", free.len())));
    }
    let fc = free[0];
    let mut v = vec![Ratio::from_integer(0i64); n];
    v[fc] = Ratio::from_integer(1);
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -m[r][fc];
    }
    let lcm = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<i64> = v.iter().map(|x| (x * lcm).to_integer()).collect();
    let g_all = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    for x in ints.iter_mut() {
        *x /= g_all;
    }
    if ints.iter().any(|x| x.is_negative()) {
        for x in ints.iter_mut() {
            *x = -*x;
        }
    }
    if ints.iter().any(|&x| x <= 0) || !g.is_connected() {
        return Err(RootError::NotAffine("radical is not spanned by a positive vector".into()));
    }
    Ok(Root(ints))
}

/// Standalone form of [`RootTable::affine_decompose`].
pub fn affine_decompose(g: &CoxeterGraph, r: &Root) -> Result<(i64, Root), RootError> {
    let d = delta(g)?;
    let node = (0..g.rank()).find(|&i| d.0[i] == 1).expect("unit coordinate");
    let p = r.0[node];
    Ok((p, r.sub(&d.scale(p))))
}

/// Cyclic-interval data of a positive root of `Ã_n`:
/// `α = pδ + Σ_{k=j}^{j+ℓ} α_{k mod n+1}` with `0 ≤ ℓ ≤ n−1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtildeDomain {
    pub p: i64,
    pub start: usize,
    pub ell: usize,
    pub domain: BTreeSet<usize>,
    pub interior: BTreeSet<usize>,
    pub boundary: BTreeSet<usize>,
}

pub fn is_atilde(g: &CoxeterGraph) -> bool {
    let n = g.rank();
    n >= 3
        && (0..n).all(|i| {
            (0..n).all(|j| {
                let adj = i != j && ((i + 1) % n == j || (j + 1) % n == i);
                (g.m(i, j) == 3) == adj
            })
        })
}

pub fn antilde_domain(g: &CoxeterGraph, r: &Root) -> Result<AtildeDomain, RootError> {
    if !is_atilde(g) {
        return Err(RootError::NotAtilde);
    }
    let n1 = g.rank();
    let bad = || RootError::NotARoot(r.to_string());
    if r.0.len() != n1 {
        return Err(bad());
    }
    let p = *r.0.iter().min().expect("nonempty");
    let rest: Vec<i64> = r.0.iter().map(|c| c - p).collect();
    if p < 0 || rest.iter().any(|&c| c > 1) {
        return Err(bad());
    }
    let ones = rest.iter().filter(|&&c| c == 1).count();
    if ones == 0 || ones == n1 {
        return Err(bad());
    }
    let start = (0..n1).find(|&k| rest[k] == 1 && rest[(k + n1 - 1) % n1] == 0).expect("interval start");
    if (0..ones).any(|t| rest[(start + t) % n1] != 1) {
        return Err(bad());
    }
    let ell = ones - 1;
    let at = |t: usize| (start + t) % n1;
    let domain = (0..=ell).map(at).collect();
    let interior = (1..ell).map(at).collect();
    let boundary = [at(0), at(ell)].into_iter().collect();
    Ok(AtildeDomain { p, start, ell, domain, interior, boundary })
}
