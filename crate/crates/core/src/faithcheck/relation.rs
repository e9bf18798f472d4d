use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::FaithError;
use crate::laurent::{LaurentPoly, Regime};
use crate::lkcore::SparseEndo;
use crate::rootsys::RootTable;

/// A binary relation on the enumerated positive roots; `(β, α)` means `β R α`.
#[derive(Debug, Clone)]
pub struct RootRelation {
    table: Arc<RootTable>,
    pairs: BTreeSet<(usize, usize)>,
}

impl PartialEq for RootRelation {
    fn eq(&self, other: &Self) -> bool {
        self.table.len() == other.table.len() && self.pairs == other.pairs
    }
}

impl Eq for RootRelation {}

impl RootRelation {
    pub fn new(table: Arc<RootTable>, pairs: BTreeSet<(usize, usize)>) -> Self {
        assert!(pairs.iter().all(|&(b, a)| b < table.len() && a < table.len()), "pair out of range");
        Self { table, pairs }
    }

    /// The diagonal.
    pub fn identity(table: Arc<RootTable>) -> Self {
        let pairs = (0..table.len()).map(|k| (k, k)).collect();
        Self { table, pairs }
    }

    pub fn table(&self) -> &RootTable {
        &self.table
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn relates(&self, beta: usize, alpha: usize) -> bool {
        self.pairs.contains(&(beta, alpha))
    }

    /// `β (RR′) α` iff `β R γ` and `γ R′ α` for some `γ`.
    pub fn compose(&self, rhs: &RootRelation) -> RootRelation {
        let mut by_target: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(b, g) in &self.pairs {
            by_target.entry(g).or_default().push(b);
        }
        let mut pairs = BTreeSet::new();
        for &(g, a) in &rhs.pairs {
            for &b in by_target.get(&g).into_iter().flatten() {
                pairs.insert((b, a));
            }
        }
        RootRelation { table: self.table.clone(), pairs }
    }

    /// `R(Ψ) = {β | β R α for some α ∈ Ψ}`.
    pub fn image(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        self.pairs.iter().filter(|(_, a)| set.contains(a)).map(|&(b, _)| b).collect()
    }

    /// `R(Φ⁺)`.
    pub fn image_all(&self) -> BTreeSet<usize> {
        self.pairs.iter().map(|&(b, _)| b).collect()
    }

    /// Keeps only the pairs whose source column is flagged.
    pub fn on_columns(&self, keep: &[bool]) -> RootRelation {
        let pairs = self.pairs.iter().filter(|&&(_, a)| keep[a]).copied().collect();
        RootRelation { table: self.table.clone(), pairs }
    }
}

impl Serialize for RootRelation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RootRelation", 2)?;
        st.serialize_field("dim", &self.table.len())?;
        st.serialize_field("pairs", &self.pairs.iter().map(|&(b, a)| [b, a]).collect::<Vec<_>>())?;
        st.end()
    }
}

/// `R_{ē}`: `β R α` iff the coefficient of `e_β` in `ē(e_α)` is positive,
/// `ē` being `e` at `x = 0` and the regime's sample value of `y`.
pub fn relation_of_endo(
    e: &SparseEndo<LaurentPoly>,
    table: Arc<RootTable>,
    regime: Regime,
) -> Result<RootRelation, FaithError> {
    assert_eq!(e.dim(), table.len(), "endomorphism and table disagree");
    let y = regime.sample_point();
    let mut pairs = BTreeSet::new();
    for a in 0..e.dim() {
        for (b, v) in e.column(a) {
            let val = v.eval_x0_at(&y)?;
            if val.is_negative() {
                return Err(FaithError::NegativeEntry {
                    beta: table.root(*b).to_string(),
                    alpha: table.root(a).to_string(),
                    value: val.to_string(),
                });
            }
            if !val.is_zero() {
                pairs.insert((*b, a));
            }
        }
    }
    Ok(RootRelation { table, pairs })
}

/// `{i | α_i ∉ R(Φ⁺)}`, which is `I(b)` when `R = R_b`.
pub fn recover_initial_set(rel: &RootRelation) -> BTreeSet<usize> {
    let img = rel.image_all();
    (0..rel.table.rank()).filter(|&i| !img.contains(&rel.table.simple(i))).collect()
}
