use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::laurent::{LaurentPoly, Scalar};

/// A column-sparse endomorphism of a free module with a finite (possibly
/// truncated) basis. Column `j` lists the image of the `j`-th basis vector.
///
/// A column is *exact* when it is the true image of the basis vector. On a
/// truncated root table the image may leave the table, in which case the
/// column holds only the in-table part and is flagged.
#[derive(Debug, Clone)]
pub struct SparseEndo<R: Scalar> {
    dim: usize,
    columns: Vec<Vec<(usize, R)>>,
    exact: Vec<bool>,
    complete: bool,
}

fn accumulate<R: Scalar>(acc: &mut BTreeMap<usize, R>, row: usize, v: R) {
    if v.is_zero() {
        return;
    }
    match acc.get_mut(&row) {
        Some(old) => {
            let s = old.add(&v);
            if s.is_zero() {
                acc.remove(&row);
            } else {
                *old = s;
            }
        }
        None => {
            acc.insert(row, v);
        }
    }
}

impl<R: Scalar> SparseEndo<R> {
    pub fn identity(dim: usize, complete: bool) -> Self {
        Self {
            dim,
            columns: (0..dim).map(|j| vec![(j, R::one())]).collect(),
            exact: vec![true; dim],
            complete,
        }
    }

    pub fn zero(dim: usize, complete: bool) -> Self {
        Self { dim, columns: vec![Vec::new(); dim], exact: vec![true; dim], complete }
    }

    /// Builds column `j` from arbitrary `(row, value)` pairs; repeated rows are
    /// summed and zeros dropped.
    pub fn set_column<I: IntoIterator<Item = (usize, R)>>(&mut self, j: usize, entries: I, exact: bool) {
        let mut acc = BTreeMap::new();
        for (r, v) in entries {
            assert!(r < self.dim, "row {r} out of range");
            accumulate(&mut acc, r, v);
        }
        self.columns[j] = acc.into_iter().collect();
        self.exact[j] = exact;
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Whether the basis is the whole of `Φ⁺` (or a finite orbit basis of it).
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn column(&self, j: usize) -> &[(usize, R)] {
        &self.columns[j]
    }

    pub fn is_exact(&self, j: usize) -> bool {
        self.exact[j]
    }

    pub fn exact_count(&self) -> usize {
        self.exact.iter().filter(|&&e| e).count()
    }

    pub fn all_exact(&self) -> bool {
        self.exact.iter().all(|&e| e)
    }

    pub fn entry(&self, row: usize, col: usize) -> R {
        self.columns[col]
            .binary_search_by_key(&row, |(r, _)| *r)
            .map(|p| self.columns[col][p].1.clone())
            .unwrap_or_else(|_| R::zero())
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// `self ∘ rhs`. Column `j` of the product is exact iff column `j` of
    /// `rhs` is exact and so is every column of `self` it touches.
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut columns = Vec::with_capacity(self.dim);
        let mut exact = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let mut acc = BTreeMap::new();
            let mut ok = rhs.exact[j];
            for (k, v) in &rhs.columns[j] {
                ok &= self.exact[*k];
                for (r, w) in &self.columns[*k] {
                    accumulate(&mut acc, *r, w.mul(v));
                }
            }
            columns.push(acc.into_iter().collect());
            exact.push(ok);
        }
        Self { dim: self.dim, columns, exact, complete: self.complete && rhs.complete }
    }

    /// `self + rhs`, exact where both are.
    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = Self::zero(self.dim, self.complete && rhs.complete);
        for j in 0..self.dim {
            let entries = self.columns[j].iter().chain(&rhs.columns[j]).cloned();
            out.set_column(j, entries, self.exact[j] && rhs.exact[j]);
        }
        out
    }

    /// Columns where both sides are exact and the images differ.
    pub fn differences(&self, other: &Self) -> Vec<usize> {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        (0..self.dim)
            .filter(|&j| self.exact[j] && other.exact[j] && self.columns[j] != other.columns[j])
            .collect()
    }

    /// Equality on the columns exact on both sides.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.differences(other).is_empty()
    }

    pub fn is_identity_on_exact(&self) -> bool {
        self.agrees_with(&Self::identity(self.dim, self.complete))
    }

    pub fn map<S: Scalar, F: Fn(&R) -> S>(&self, f: F) -> SparseEndo<S> {
        let mut out = SparseEndo::zero(self.dim, self.complete);
        for j in 0..self.dim {
            out.set_column(j, self.columns[j].iter().map(|(r, v)| (*r, f(v))), self.exact[j]);
        }
        out
    }

    /// Row-major dense matrix, `dense[r][c]`.
    pub fn dense(&self) -> Vec<Vec<R>> {
        let mut m = vec![vec![R::zero(); self.dim]; self.dim];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                m[*r][c] = v.clone();
            }
        }
        m
    }

    /// The sub-block on the given basis indices, as a dense row-major matrix.
    pub fn block(&self, idx: &[usize]) -> Vec<Vec<R>> {
        idx.iter().map(|&r| idx.iter().map(|&c| self.entry(r, c)).collect()).collect()
    }

    /// `{"basis": [...], "columns": {"j": [[i, "poly"], ...]}, "inexact": [...]}`.
    pub fn to_json(&self, labels: &[String]) -> Value {
        let mut cols = Map::new();
        for (j, col) in self.columns.iter().enumerate() {
            if col.is_empty() {
                continue;
            }
            let entries: Vec<Value> = col.iter().map(|(r, v)| json!([r, v.to_string()])).collect();
            cols.insert(j.to_string(), Value::Array(entries));
        }
        let inexact: Vec<usize> = (0..self.dim).filter(|&j| !self.exact[j]).collect();
        json!({ "basis": labels, "columns": cols, "inexact": inexact })
    }

    /// Dense CSV with a header row of labels; inexact columns are marked `*`.
    pub fn to_csv(&self, labels: &[String]) -> String {
        let q = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
        let mut out = String::from("\"\"");
        for (j, l) in labels.iter().enumerate() {
            let mark = if self.exact[j] { "" } else { "*" };
            write!(out, ",{}", q(&format!("{l}{mark}"))).expect("write to string");
        }
        out.push('\n');
        for (r, row) in self.dense().iter().enumerate() {
            out.push_str(&q(&labels[r]));
            for v in row {
                write!(out, ",{}", q(&v.to_string())).expect("write to string");
            }
            out.push('\n');
        }
        out
    }
}

impl<R: Scalar> PartialEq for SparseEndo<R> {
    /// Full structural equality, including exactness flags.
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.columns == other.columns && self.exact == other.exact
    }
}

impl SparseEndo<LaurentPoly> {
    /// Entrywise `x -> 0`.
    pub fn eval_x0(&self) -> Result<Self, crate::laurent::LaurentError> {
        let mut out = Self::zero(self.dim, self.complete);
        for j in 0..self.dim {
            let col: Result<Vec<_>, _> = self.columns[j].iter().map(|(r, v)| Ok((*r, v.eval_x0()?))).collect();
            out.set_column(j, col?, self.exact[j]);
        }
        Ok(out)
    }
}
