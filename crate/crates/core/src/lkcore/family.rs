use std::sync::Arc;

use serde_json::{json, Value};

use super::LkError;
use crate::laurent::{LaurentPoly, LkParams};
use crate::rootsys::RootTable;

/// A family of linear forms `f_i` on `V`, stored by value `f_{i,α} = f_i(e_α)`
/// for every enumerated root.
#[derive(Debug, Clone)]
pub struct LkFamily {
    table: Arc<RootTable>,
    params: LkParams,
    values: Vec<Vec<LaurentPoly>>,
}

impl LkFamily {
    /// Validates shape and `f_i(e_{α_j}) = 0` for `i ≠ j`.
    pub fn new(table: Arc<RootTable>, params: LkParams, values: Vec<Vec<LaurentPoly>>) -> Result<Self, LkError> {
        let fam = Self::new_unchecked(table, params, values)?;
        let n = fam.rank();
        for i in 0..n {
            for j in 0..n {
                if i != j && !fam.values[i][j].is_zero() {
                    return Err(LkError::ConditionOne { i, j, value: fam.values[i][j].to_string() });
                }
            }
        }
        Ok(fam)
    }

    /// Shape check only. Used for falsification fixtures that deliberately
    /// break `f_i(e_{α_j}) = 0`.
    pub fn new_unchecked(
        table: Arc<RootTable>,
        params: LkParams,
        values: Vec<Vec<LaurentPoly>>,
    ) -> Result<Self, LkError> {
        if values.len() != table.rank() || values.iter().any(|v| v.len() != table.len()) {
            return Err(LkError::Shape(format!(
                "expected {} x {} values, got {} rows",
                table.rank(),
                table.len(),
                values.len()
            )));
        }
        Ok(Self { table, params, values })
    }

    pub fn zero(table: Arc<RootTable>, params: LkParams) -> Self {
        let values = vec![vec![LaurentPoly::zero(); table.len()]; table.rank()];
        Self { table, params, values }
    }

    pub fn table(&self) -> &RootTable {
        &self.table
    }

    pub fn table_arc(&self) -> &Arc<RootTable> {
        &self.table
    }

    pub fn params(&self) -> &LkParams {
        &self.params
    }

    pub fn rank(&self) -> usize {
        self.table.rank()
    }

    pub fn depth_bound(&self) -> Option<usize> {
        self.table.depth_bound()
    }

    /// `f_{i,α}` for the root with table index `k`.
    pub fn f(&self, i: usize, k: usize) -> &LaurentPoly {
        &self.values[i][k]
    }

    pub fn values(&self) -> &[Vec<LaurentPoly>] {
        &self.values
    }

    /// A copy with one value replaced, bypassing every check.
    pub fn with_value(&self, i: usize, k: usize, v: LaurentPoly) -> Self {
        let mut out = self.clone();
        out.values[i][k] = v;
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().flatten().all(LaurentPoly::is_zero)
    }

    /// Sum of two families on the same table and parameters.
    pub fn add(&self, o: &Self) -> Self {
        let values = self
            .values
            .iter()
            .zip(&o.values)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Self { table: self.table.clone(), params: self.params.clone(), values }
    }

    pub fn scale(&self, s: &LaurentPoly) -> Self {
        let values = self.values.iter().map(|row| row.iter().map(|x| x * s).collect()).collect();
        Self { table: self.table.clone(), params: self.params.clone(), values }
    }

    /// The same family on the roots of depth at most `depth`.
    pub fn restrict_depth(&self, depth: usize) -> Result<Self, LkError> {
        if self.table.is_complete() {
            return Ok(self.clone());
        }
        let small = RootTable::enumerate(self.table.graph(), depth)?;
        let values = (0..self.rank())
            .map(|i| {
                small
                    .roots()
                    .iter()
                    .map(|r| {
                        let k = self.table.find(r).expect("restriction to a smaller depth");
                        self.values[i][k].clone()
                    })
                    .collect()
            })
            .collect();
        Self::new_unchecked(Arc::new(small), self.params.clone(), values)
    }

    /// `{"params": ..., "values": {"i,rootcoords": poly}}`, zero values omitted.
    pub fn to_json(&self) -> Value {
        let mut values = serde_json::Map::new();
        for (i, row) in self.values.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    values.insert(format!("{i},{}", self.table.root(k)), Value::String(v.to_string()));
                }
            }
        }
        json!({
            "graph": self.table.graph().label(),
            "params": self.params,
            "depth_bound": self.depth_bound(),
            "values": values,
        })
    }
}
