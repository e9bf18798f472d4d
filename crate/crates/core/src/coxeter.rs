//! Coxeter graphs of small type and the Artin-Tits monoid as a rewriting system.
//!
//! Monoid equality is decided by saturating braid rewrites. The presentation
//! is homogeneous, so each class is finite and this doubles as an
//! independent oracle for everything built on top of it.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on class members and on enumerated classes.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("diagonal entry at {0} must be 1")]
    BadDiagonal(usize),
    #[error("entry m[{i}][{j}] = {value} is not of small type")]
    NonSmallType { i: usize, j: usize, value: i64 },
    #[error("unknown graph label {0:?}")]
    UnknownLabel(String),
    #[error("rank {rank} is not valid for type {label}")]
    BadRank { label: String, rank: usize },
    #[error("subset {0:?} is not spherical")]
    NotSpherical(Vec<usize>),
    #[error("cap of {0} exceeded")]
    CapExceeded(usize),
    #[error("bad word: {0}")]
    BadWord(String),
}

/// A Coxeter matrix with entries in `{1, 2, 3}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CoxeterGraph {
    n: usize,
    m: Vec<Vec<u8>>,
    label: Option<String>,
}

impl CoxeterGraph {
    pub fn new(matrix: &[Vec<i64>]) -> Result<Self, CoxeterError> {
        let n = matrix.len();
        if matrix.iter().any(|row| row.len() != n) {
            return Err(CoxeterError::NotSquare);
        }
        let mut m = vec![vec![1u8; n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = matrix[i][j];
                if v != matrix[j][i] {
                    return Err(CoxeterError::NotSymmetric(i, j));
                }
                if i == j {
                    if v != 1 {
                        return Err(CoxeterError::BadDiagonal(i));
                    }
                } else if v == 2 || v == 3 {
                    m[i][j] = v as u8;
                } else {
                    return Err(CoxeterError::NonSmallType { i, j, value: v });
                }
            }
        }
        Ok(Self { n, m, label: None })
    }

    /// Builds a graph from its `m = 3` edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, CoxeterError> {
        let mut mat = vec![vec![2i64; n]; n];
        for (i, row) in mat.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j) in edges {
            if i >= n || j >= n || i == j {
                return Err(CoxeterError::BadWord(format!("bad edge ({i}, {j})")));
            }
            mat[i][j] = 3;
            mat[j][i] = 3;
        }
        Self::new(&mat)
    }

    /// Standard graphs with Bourbaki numbering shifted to start at 0.
    ///
    /// For the affine types the extra node is vertex 0 and the remaining
    /// vertices keep their Bourbaki numbers, so `Dtilde` and `Etilde` have
    /// vertices `0..=rank`.
    pub fn named(label: &str, rank: usize) -> Result<Self, CoxeterError> {
        let bad = || CoxeterError::BadRank { label: label.to_string(), rank };
        let path = |k: usize, off: usize| (0..k.saturating_sub(1)).map(move |i| (i + off, i + off + 1));
        let (n, edges, tag): (usize, Vec<(usize, usize)>, String) = match label {
            "A" => {
                if rank < 1 {
                    return Err(bad());
                }
                (rank, path(rank, 0).collect(), format!("A{rank}"))
            }
            "D" => {
                if rank < 4 {
                    return Err(bad());
                }
                let mut e: Vec<_> = path(rank - 1, 0).collect();
                e.push((rank - 3, rank - 1));
                (rank, e, format!("D{rank}"))
            }
            "E" | "E6" | "E7" | "E8" => {
                let rank = if label == "E" { rank } else { label[1..].parse().expect("digit suffix") };
                if !(6..=8).contains(&rank) {
                    return Err(bad());
                }
                let mut e = vec![(0, 2), (1, 3)];
                e.extend(path(rank - 2, 2));
                (rank, e, format!("E{rank}"))
            }
            "Atilde" => {
                if rank < 2 {
                    return Err(bad());
                }
                let mut e: Vec<_> = path(rank + 1, 0).collect();
                e.push((rank, 0));
                (rank + 1, e, format!("Atilde{rank}"))
            }
            "Dtilde" => {
                if rank < 4 {
                    return Err(bad());
                }
                let mut e: Vec<_> = path(rank - 2, 1).collect();
                e.push((0, 2));
                e.push((rank - 2, rank - 1));
                e.push((rank - 2, rank));
                (rank + 1, e, format!("Dtilde{rank}"))
            }
            "Etilde" | "Etilde6" | "Etilde7" | "Etilde8" => {
                let rank = if label == "Etilde" { rank } else { label[6..].parse().expect("digit suffix") };
                if !(6..=8).contains(&rank) {
                    return Err(bad());
                }
                let mut e: Vec<(usize, usize)> = vec![(1, 3), (2, 4)];
                e.extend(path(rank - 2, 3));
                match rank {
                    6 => e.push((0, 2)),
                    7 => e.push((0, 1)),
                    8 => e.push((0, 8)),
                    _ => return Err(bad()),
                }
                (rank + 1, e, format!("Etilde{rank}"))
            }
            _ => return Err(CoxeterError::UnknownLabel(label.to_string())),
        };
        let mut g = Self::from_edges(n, &edges)?;
        g.label = Some(tag);
        Ok(g)
    }

    /// Parses labels such as `"A5"`, `"D4"`, `"Atilde2"`, `"E6"`.
    pub fn from_label(tag: &str) -> Result<Self, CoxeterError> {
        let split = tag.find(|c: char| c.is_ascii_digit()).ok_or_else(|| CoxeterError::UnknownLabel(tag.into()))?;
        let (name, rank) = tag.split_at(split);
        let rank: usize = rank.parse().map_err(|_| CoxeterError::UnknownLabel(tag.into()))?;
        Self::named(name, rank)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn m(&self, i: usize, j: usize) -> u8 {
        self.m[i][j]
    }

    pub fn matrix(&self) -> &[Vec<u8>] {
        &self.m
    }

    /// `(α_i | α_j)`: 2 on the diagonal, 0 for `m = 2`, −1 for `m = 3`.
    pub fn simple_pairing(&self, i: usize, j: usize) -> i64 {
        match self.m[i][j] {
            1 => 2,
            2 => 0,
            _ => -1,
        }
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.m[i][j] == 3)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.m[i][j] == 3 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                for k in j + 1..self.n {
                    if self.m[i][j] == 3 && self.m[j][k] == 3 && self.m[i][k] == 3 {
                        out.push([i, j, k]);
                    }
                }
            }
        }
        out
    }

    /// Connected components of the induced subgraph on `subset`.
    pub fn components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let inside: BTreeSet<usize> = subset.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &s in &inside {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if inside.contains(&w) && seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.n).collect();
        self.components(&all).len() <= 1
    }

    /// True iff every component of `Γ_J` is of type A, D or E.
    pub fn is_spherical(&self, subset: &[usize]) -> bool {
        self.components(subset).iter().all(|c| self.component_is_ade(c))
    }

    fn component_is_ade(&self, comp: &[usize]) -> bool {
        let inside: BTreeSet<usize> = comp.iter().copied().collect();
        let deg = |v: usize| self.neighbors(v).filter(|w| inside.contains(w)).count();
        let edge_count: usize = comp.iter().map(|&v| deg(v)).sum::<usize>() / 2;
        if edge_count + 1 != comp.len() {
            return false;
        }
        let branch: Vec<usize> = comp.iter().copied().filter(|&v| deg(v) >= 3).collect();
        match branch.as_slice() {
            [] => true,
            [c] if deg(*c) == 3 => {
                let mut arms: Vec<u64> = self
                    .neighbors(*c)
                    .filter(|w| inside.contains(w))
                    .map(|start| {
                        let (mut prev, mut cur, mut len) = (*c, start, 1u64);
                        loop {
                            let next: Vec<usize> = self.neighbors(cur).filter(|w| inside.contains(w) && *w != prev).collect();
                            match next.as_slice() {
                                [] => break len,
                                [nx] => {
                                    prev = cur;
                                    cur = *nx;
                                    len += 1;
                                }
                                _ => break u64::MAX,
                            }
                        }
                    })
                    .collect();
                if arms.contains(&u64::MAX) {
                    return false;
                }
                arms.sort_unstable();
                let (p, q, r) = (arms[0] + 1, arms[1] + 1, arms[2] + 1);
                q * r + p * r + p * q > p * q * r
            }
            _ => false,
        }
    }

    /// `s_j` as an integer matrix acting on root coordinates (column vectors).
    fn reflection_matrix(&self, j: usize) -> Vec<i64> {
        let n = self.n;
        let mut s = vec![0i64; n * n];
        for k in 0..n {
            s[k * n + k] = 1;
            s[j * n + k] -= self.simple_pairing(k, j);
        }
        s
    }

    fn mat_mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let v = a[i * n + k];
                if v != 0 {
                    for j in 0..n {
                        out[i * n + j] += v * b[k * n + j];
                    }
                }
            }
        }
        out
    }

    /// `|W_J|` by closure of the reflection representation, or `None` past `cap`.
    pub fn parabolic_order(&self, subset: &[usize], cap: usize) -> Option<usize> {
        let n = self.n;
        let mut id = vec![0i64; n * n];
        for i in 0..n {
            id[i * n + i] = 1;
        }
        let gens: Vec<Vec<i64>> = subset.iter().map(|&j| self.reflection_matrix(j)).collect();
        let mut seen = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for s in &gens {
                let ws = self.mat_mul(&w, s);
                if seen.insert(ws.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    queue.push_back(ws);
                }
            }
        }
        Some(seen.len())
    }

    /// The positive lift of the longest element of `W_J`.
    ///
    /// Built by ascending: while some `j ∈ J` has `w(α_j) > 0`, replace `w` by
    /// `w s_j`, taking the least such `j`.
    pub fn garside_word(&self, subset: &[usize]) -> Result<PositiveWord, CoxeterError> {
        let mut j_set: Vec<usize> = subset.to_vec();
        j_set.sort_unstable();
        j_set.dedup();
        if j_set.iter().any(|&j| j >= self.n) {
            return Err(CoxeterError::BadWord(format!("vertex out of range in {subset:?}")));
        }
        if !self.is_spherical(&j_set) {
            return Err(CoxeterError::NotSpherical(j_set));
        }
        let n = self.n;
        let mut w = vec![0i64; n * n];
        for i in 0..n {
            w[i * n + i] = 1;
        }
        let mut word = Vec::new();
        loop {
            let next = j_set.iter().copied().find(|&j| (0..n).all(|r| w[r * n + j] >= 0));
            match next {
                Some(j) => {
                    w = self.mat_mul(&w, &self.reflection_matrix(j));
                    word.push(j);
                }
                None => break,
            }
        }
        Ok(PositiveWord(word))
    }

    pub fn check_word(&self, w: &PositiveWord) -> Result<(), CoxeterError> {
        match w.0.iter().find(|&&l| l >= self.n) {
            Some(l) => Err(CoxeterError::BadWord(format!("letter {l} out of range for rank {}", self.n))),
            None => Ok(()),
        }
    }
}

/// A word in the generators `s_0, …, s_{n−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct PositiveWord(pub Vec<usize>);

impl PositiveWord {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn concat(&self, other: &PositiveWord) -> PositiveWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        PositiveWord(v)
    }

    pub fn push(&self, letter: usize) -> PositiveWord {
        let mut v = self.0.clone();
        v.push(letter);
        PositiveWord(v)
    }

    /// Image under a vertex permutation.
    pub fn permuted(&self, perm: &[usize]) -> PositiveWord {
        PositiveWord(self.0.iter().map(|&l| perm[l]).collect())
    }
}

impl fmt::Display for PositiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.iter().any(|&l| l >= 10) { "." } else { "" };
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        if parts.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&parts.join(sep))
        }
    }
}

impl FromStr for PositiveWord {
    type Err = CoxeterError;

    /// Accepts `"010"`, `"0.1.0"`, and the empty string or `"ε"` for the identity.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "ε" || s == "e" {
            return Ok(Self::empty());
        }
        let bad = || CoxeterError::BadWord(s.to_string());
        let letters = if s.contains('.') || s.contains(',') {
            s.split(['.', ','])
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<Vec<_>, _>>()?
        };
        Ok(Self(letters))
    }
}

/// All positive words equal to a given one in `B⁺`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordClass {
    pub representative: PositiveWord,
    pub members: BTreeSet<PositiveWord>,
}

impl WordClass {
    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }

    pub fn contains(&self, w: &PositiveWord) -> bool {
        self.members.contains(w)
    }

    pub fn initial_set(&self) -> BTreeSet<usize> {
        self.members.iter().filter_map(|w| w.0.first().copied()).collect()
    }
}

/// Saturates `w` under the braid rewrites of `g`.
pub fn word_class(g: &CoxeterGraph, w: &PositiveWord, cap: usize) -> Result<WordClass, CoxeterError> {
    g.check_word(w)?;
    let mut members = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(cur) = queue.pop_front() {
        let l = &cur.0;
        for k in 0..l.len().saturating_sub(1) {
            let (i, j) = (l[k], l[k + 1]);
            if i == j {
                continue;
            }
            let mut image = None;
            if g.m(i, j) == 2 {
                let mut v = l.clone();
                v.swap(k, k + 1);
                image = Some(v);
            } else if k + 2 < l.len() && l[k + 2] == i {
                let mut v = l.clone();
                v[k] = j;
                v[k + 1] = i;
                v[k + 2] = j;
                image = Some(v);
            }
            if let Some(v) = image {
                let v = PositiveWord(v);
                if !members.contains(&v) {
                    if members.len() >= cap {
                        return Err(CoxeterError::CapExceeded(cap));
                    }
                    members.insert(v.clone());
                    queue.push_back(v);
                }
            }
        }
    }
    let representative = members.iter().next().cloned().expect("nonempty");
    Ok(WordClass { representative, members })
}

/// `I(b)`: the generators that left-divide `w`.
pub fn initial_set(g: &CoxeterGraph, w: &PositiveWord, cap: usize) -> Result<BTreeSet<usize>, CoxeterError> {
    Ok(word_class(g, w, cap)?.initial_set())
}

#[derive(Debug, Clone)]
pub struct ClassEnumeration {
    /// Ordered by `(length, representative)`.
    pub classes: Vec<WordClass>,
    pub per_length: Vec<usize>,
}

/// Every element of `B⁺` of length at most `max_len`.
pub fn enumerate_classes(g: &CoxeterGraph, max_len: usize, cap: usize) -> Result<ClassEnumeration, CoxeterError> {
    let identity = WordClass {
        representative: PositiveWord::empty(),
        members: BTreeSet::from([PositiveWord::empty()]),
    };
    let mut classes = vec![identity];
    let mut per_length = vec![1];
    let mut level_start = 0;
    for _ in 0..max_len {
        let mut seen: HashSet<PositiveWord> = HashSet::new();
        let mut next = Vec::new();
        for c in &classes[level_start..] {
            for i in 0..g.rank() {
                let w = c.representative.push(i);
                if seen.contains(&w) {
                    continue;
                }
                let cls = word_class(g, &w, cap)?;
                seen.extend(cls.members.iter().cloned());
                next.push(cls);
                if classes.len() + next.len() > cap {
                    return Err(CoxeterError::CapExceeded(cap));
                }
            }
        }
        next.sort_by(|a, b| a.representative.cmp(&b.representative));
        level_start = classes.len();
        per_length.push(next.len());
        classes.extend(next);
    }
    Ok(ClassEnumeration { classes, per_length })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> PositiveWord {
        s.parse().unwrap()
    }

    #[test]
    fn build_and_reject() {
        let a2 = CoxeterGraph::new(&[vec![1, 3], vec![3, 1]]).unwrap();
        assert_eq!(a2.edges(), vec![(0, 1)]);
        let tri = CoxeterGraph::new(&[vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert_eq!(tri.triangles().len(), 1);
        assert!(matches!(
            CoxeterGraph::new(&[vec![1, 4], vec![4, 1]]),
            Err(CoxeterError::NonSmallType { value: 4, .. })
        ));
        assert!(matches!(CoxeterGraph::new(&[vec![1, 3], vec![2, 1]]), Err(CoxeterError::NotSymmetric(..))));
        assert!(matches!(CoxeterGraph::new(&[vec![2, 3], vec![3, 1]]), Err(CoxeterError::BadDiagonal(0))));
    }

    #[test]
    fn named_shapes() {
        let a5 = CoxeterGraph::named("A", 5).unwrap();
        assert_eq!((a5.rank(), a5.edges().len()), (5, 4));
        // Bourbaki vertex 2 of D4 is the centre.
        let d4 = CoxeterGraph::named("D", 4).unwrap();
        assert_eq!(d4.neighbors(1).collect::<Vec<_>>(), vec![0, 2, 3]);
        let e6 = CoxeterGraph::named("E6", 0).unwrap();
        assert_eq!(e6.neighbors(3).collect::<Vec<_>>(), vec![1, 2, 4]);
        let d5 = CoxeterGraph::named("D", 5).unwrap();
        assert_eq!(d5.neighbors(2).collect::<Vec<_>>(), vec![1, 3, 4]);
        assert_eq!(CoxeterGraph::named("Atilde", 2).unwrap().triangles().len(), 1);
        assert!(matches!(CoxeterGraph::named("D", 3), Err(CoxeterError::BadRank { .. })));
        assert!(matches!(CoxeterGraph::named("F", 4), Err(CoxeterError::UnknownLabel(_))));
        assert_eq!(CoxeterGraph::from_label("Dtilde4").unwrap().neighbors(2).count(), 4);
        let et8 = CoxeterGraph::from_label("Etilde8").unwrap();
        assert_eq!(et8.rank(), 9);
        assert!(!et8.is_spherical(&(0..9).collect::<Vec<_>>()));
        assert!(et8.is_spherical(&(1..9).collect::<Vec<_>>()));
    }

    #[test]
    fn sphericity() {
        let t = CoxeterGraph::named("Atilde", 2).unwrap();
        assert!(!t.is_spherical(&[0, 1, 2]));
        assert!(t.is_spherical(&[0, 1]));
        assert!(t.is_spherical(&[]));
        let dt4 = CoxeterGraph::named("Dtilde", 4).unwrap();
        assert!(!dt4.is_spherical(&[0, 1, 2, 3, 4]));
        assert!(dt4.is_spherical(&[0, 1, 2, 3]));
    }

    #[test]
    fn group_orders() {
        let a3 = CoxeterGraph::named("A", 3).unwrap();
        assert_eq!(a3.parabolic_order(&[0, 1, 2], 10_000), Some(24));
        let d4 = CoxeterGraph::named("D", 4).unwrap();
        assert_eq!(d4.parabolic_order(&[0, 1, 2, 3], 10_000), Some(192));
        let t = CoxeterGraph::named("Atilde", 2).unwrap();
        assert_eq!(t.parabolic_order(&[0, 1, 2], 10_000), None);
    }

    #[test]
    fn garside_words() {
        let a2 = CoxeterGraph::named("A", 2).unwrap();
        assert_eq!(a2.garside_word(&[0, 1]).unwrap(), w("010"));
        assert_eq!(a2.garside_word(&[1]).unwrap(), w("1"));
        let a3 = CoxeterGraph::named("A", 3).unwrap();
        assert_eq!(a3.garside_word(&[0, 2]).unwrap(), w("02"));
        assert_eq!(a3.garside_word(&[0, 1, 2]).unwrap().len(), 6);
        let t = CoxeterGraph::named("Atilde", 2).unwrap();
        assert!(matches!(t.garside_word(&[0, 1, 2]), Err(CoxeterError::NotSpherical(_))));
        let cls = word_class(&a2, &a2.garside_word(&[0, 1]).unwrap(), 100).unwrap();
        assert_eq!(cls.members, BTreeSet::from([w("010"), w("101")]));
    }

    #[test]
    fn classes() {
        let a2 = CoxeterGraph::named("A", 2).unwrap();
        let c = word_class(&a2, &w("101"), 100).unwrap();
        assert_eq!(c.representative, w("010"));
        assert_eq!(word_class(&a2, &w("0"), 100).unwrap().members.len(), 1);
        let a3 = CoxeterGraph::named("A", 3).unwrap();
        assert_eq!(word_class(&a3, &w("20"), 100).unwrap().members, BTreeSet::from([w("02"), w("20")]));
        assert_eq!(initial_set(&a2, &w("010"), 100).unwrap(), BTreeSet::from([0, 1]));
        assert_eq!(initial_set(&a2, &w("0"), 100).unwrap(), BTreeSet::from([0]));
        assert!(initial_set(&a2, &w(""), 100).unwrap().is_empty());
        assert!(matches!(word_class(&a2, &w("010"), 1), Err(CoxeterError::CapExceeded(1))));
        assert!(word_class(&a2, &w("2"), 100).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let a2 = CoxeterGraph::named("A", 2).unwrap();
        assert_eq!(enumerate_classes(&a2, 0, 100).unwrap().classes.len(), 1);
        assert_eq!(enumerate_classes(&a2, 1, 100).unwrap().classes.len(), 3);
        let e = enumerate_classes(&a2, 3, 100).unwrap();
        // 1, 2, 4, 7: the only coincidence at length 3 is 010 = 101.
        assert_eq!(e.per_length, vec![1, 2, 4, 7]);
        assert!(e.classes.iter().any(|c| c.members.len() == 2 && c.contains(&w("101"))));
    }

    #[test]
    fn word_text_form() {
        assert_eq!(w("0.1.0"), w("010"));
        assert_eq!(PositiveWord(vec![0, 11, 2]).to_string(), "0.11.2");
        assert_eq!(w("0.11.2"), PositiveWord(vec![0, 11, 2]));
        assert!("0a".parse::<PositiveWord>().is_err());
    }
}
