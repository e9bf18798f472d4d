//! Positive roots of a few Coxeter graphs, their depths, and mesh shapes.

use std::collections::BTreeMap;

use lkrep::coxeter::CoxeterGraph;
use lkrep::rootsys::{complete_meshes, RootTable};

fn main() {
    for label in ["A3", "D4", "E6"] {
        let g = CoxeterGraph::from_label(label).unwrap();
        let t = RootTable::complete(&g).unwrap();
        println!("{label}: {} positive roots, max depth {}", t.len(), t.max_depth());
    }

    let g = CoxeterGraph::from_label("D4").unwrap();
    let t = RootTable::complete(&g).unwrap();
    for (k, r) in t.roots().iter().enumerate() {
        println!("  {:>2}  depth {}  {r}", k, t.depth(k));
    }

    // Mesh census for every edge and non-edge of D4.
    let mut census: BTreeMap<u8, usize> = BTreeMap::new();
    for i in 0..g.rank() {
        for j in i + 1..g.rank() {
            for m in complete_meshes(&t, (i, j)) {
                *census.entry(m.mesh_type).or_default() += 1;
            }
        }
    }
    println!("mesh types on D4: {census:?}");

    // Affine graphs only have a depth-bounded table; δ is the isotropic root.
    let g = CoxeterGraph::from_label("Atilde2").unwrap();
    let t = RootTable::enumerate(&g, 7).unwrap();
    println!("Ã2 up to depth 7: {} roots, δ = {}", t.len(), t.delta().unwrap());
    for k in (0..t.len()).filter(|&k| t.depth(k) == 7) {
        let (p, rest) = t.affine_decompose(t.root(k)).unwrap();
        println!("  {} = {p}δ + ({rest})", t.root(k));
    }
}
