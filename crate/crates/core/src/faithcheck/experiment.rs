use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use num_traits::Signed;
use serde::Serialize;

use super::{
    criterion_report, hee_properties, recover_initial_set, relation_of_endo, Check, CriterionReport, FaithError,
    HeeReport, RootRelation,
};
use crate::coxeter::{enumerate_classes, PositiveWord, WordClass, DEFAULT_CAP};
use crate::laurent::{LaurentPoly, Regime};
use crate::lkcore::{LkFamily, SparseEndo, WordEvaluator};
use crate::twisted::{equivariance_violations, restrict, OrbitBasis, TwistedError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExperimentConfig {
    /// Elements of `B⁺` up to this length are enumerated.
    pub max_len: usize,
    pub regime: Regime,
    /// Cap on enumerated classes and on each class size.
    pub cap: usize,
}

impl ExperimentConfig {
    pub fn new(max_len: usize) -> Self {
        Self { max_len, regime: Regime::SmallY, cap: DEFAULT_CAP }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FaithReport {
    pub graph: String,
    pub twisted: bool,
    pub group_order: usize,
    /// Rank of the module the matrices act on.
    pub dim: usize,
    pub config: ExperimentConfig,
    /// Elements checked per length (fixed elements only, when twisted).
    pub per_length: Vec<usize>,
    pub elements: usize,
    pub criterion: CriterionReport,
    pub hee: HeeReport,
    pub checks: Vec<Check>,
    pub caveat: String,
    pub elapsed_ms: u128,
}

impl FaithReport {
    pub fn passed(&self) -> bool {
        self.hee.passed() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<String> {
        self.hee.checks().into_iter().chain(&self.checks).filter(|c| !c.passed).map(|c| c.name.clone()).collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.hee.checks().into_iter().chain(&self.checks).find(|c| c.name == name)
    }

    fn finish(self) -> Result<Self, FaithError> {
        if self.passed() {
            Ok(self)
        } else {
            Err(FaithError::FaithfulnessViolation(Box::new(self)))
        }
    }
}

type MatrixKey = Vec<Vec<(usize, LaurentPoly)>>;

fn key(e: &SparseEndo<LaurentPoly>) -> MatrixKey {
    (0..e.dim()).map(|j| e.column(j).to_vec()).collect()
}

fn graph_name(family: &LkFamily) -> String {
    let g = family.table().graph();
    g.label().map_or_else(|| format!("rank {} graph", g.rank()), str::to_string)
}

fn member_index(classes: &[WordClass]) -> HashMap<&PositiveWord, usize> {
    classes.iter().enumerate().flat_map(|(k, c)| c.members.iter().map(move |w| (w, k))).collect()
}

fn distinct(name: &str, reps: &[&PositiveWord], mats: &[SparseEndo<LaurentPoly>]) -> Check {
    let mut seen: HashMap<MatrixKey, usize> = HashMap::new();
    let mut bad = Vec::new();
    for (k, m) in mats.iter().enumerate() {
        if let Some(&first) = seen.get(&key(m)) {
            bad.push(format!("{} and {} have the same matrix", reps[first], reps[k]));
        } else {
            seen.insert(key(m), k);
        }
    }
    Check::from_failures(name, bad)
}

fn recovery(classes: &[&WordClass], rels: &[RootRelation]) -> Check {
    let bad = classes
        .iter()
        .zip(rels)
        .filter_map(|(c, r)| {
            let (got, want) = (recover_initial_set(r), c.initial_set());
            (got != want).then(|| format!("{}: recovered {got:?}, rewriting gives {want:?}", c.representative))
        })
        .collect();
    Check::from_failures("initial_set_recovery", bad)
}

fn image_determines_initial_set(classes: &[&WordClass], rels: &[RootRelation]) -> Check {
    let mut by_image: HashMap<BTreeSet<usize>, usize> = HashMap::new();
    let mut bad = Vec::new();
    for (k, r) in rels.iter().enumerate() {
        let first = *by_image.entry(r.image_all()).or_insert(k);
        if classes[first].initial_set() != classes[k].initial_set() {
            bad.push(format!(
                "{} and {}: same R_b(Φ⁺), different I(b)",
                classes[first].representative, classes[k].representative
            ));
        }
    }
    Check::from_failures("image_determines_initial_set", bad)
}

/// `R_{bb′} = R_b R_{b′}` whenever `ℓ(b) + ℓ(b′) ≤ L`, compared on the
/// columns `α` where all three matrices are exact along the way.
fn homomorphism(
    classes: &[WordClass],
    index: &HashMap<&PositiveWord, usize>,
    mats: &[SparseEndo<LaurentPoly>],
    rels: &[RootRelation],
    max_len: usize,
) -> Check {
    let mut bad = Vec::new();
    for (x, b) in classes.iter().enumerate() {
        for (y, b2) in classes.iter().enumerate() {
            if b.len() + b2.len() > max_len {
                continue;
            }
            let prod = index[&b.representative.concat(&b2.representative)];
            let keep: Vec<bool> = (0..mats[y].dim())
                .map(|a| {
                    mats[prod].is_exact(a)
                        && mats[y].is_exact(a)
                        && mats[y].column(a).iter().all(|(g, _)| mats[x].is_exact(*g))
                })
                .collect();
            if rels[x].compose(&rels[y]).on_columns(&keep) != rels[prod].on_columns(&keep) {
                bad.push(format!("R_{} R_{} ≠ R_{}", b.representative, b2.representative, classes[prod].representative));
            }
        }
    }
    Check::from_failures("relation_homomorphism", bad)
}

/// `b′ ≼ b ⇒ R_b(Φ⁺) ⊆ R_{b′}(Φ⁺)` over the prefixes of every member word.
fn monotonicity(classes: &[WordClass], index: &HashMap<&PositiveWord, usize>, rels: &[RootRelation]) -> Check {
    let mut bad = Vec::new();
    for (k, c) in classes.iter().enumerate() {
        let img = rels[k].image_all();
        let prefixes: BTreeSet<usize> = c
            .members
            .iter()
            .flat_map(|w| (0..w.len()).map(|l| index[&PositiveWord(w.letters()[..l].to_vec())]))
            .collect();
        for p in prefixes {
            if !img.is_subset(&rels[p].image_all()) {
                bad.push(format!("{} ≼ {} but R(Φ⁺) grows", classes[p].representative, c.representative));
            }
        }
    }
    Check::from_failures("prefix_monotonicity", bad)
}

fn precheck(family: &LkFamily, regime: Regime) -> Result<(CriterionReport, HeeReport), FaithError> {
    let criterion = criterion_report(family, regime);
    if !criterion.passed() {
        return Err(FaithError::CriterionFailed(Box::new(criterion)));
    }
    let hee = hee_properties(family, regime)?;
    Ok((criterion, hee))
}

/// Bounded-length faithfulness check of `ψ` against the rewriting oracle.
///
/// On a complete table every element of length `≤ L` is enumerated and the
/// checks are: distinct classes have distinct matrices, `recover_initial_set`
/// agrees with rewriting, `R_b(Φ⁺)` determines `I(b)`, the relation
/// homomorphism law and prefix monotonicity. On a truncated table only the
/// Hée properties and the homomorphism law are checked.
///
/// Refuses to run unless [`criterion_report`] passes. Any failed check is
/// returned as [`FaithError::FaithfulnessViolation`].
pub fn faithfulness_experiment(family: &LkFamily, cfg: &ExperimentConfig) -> Result<FaithReport, FaithError> {
    let start = Instant::now();
    let (criterion, hee) = precheck(family, cfg.regime)?;
    let t = family.table_arc().clone();
    let en = enumerate_classes(t.graph(), cfg.max_len, cfg.cap)?;
    let index = member_index(&en.classes);
    let mut ev = WordEvaluator::new(family);
    let mats: Vec<_> = en.classes.iter().map(|c| ev.eval(&c.representative)).collect();
    let rels: Vec<_> =
        mats.iter().map(|m| relation_of_endo(m, t.clone(), cfg.regime)).collect::<Result<_, _>>()?;
    let mut checks = vec![homomorphism(&en.classes, &index, &mats, &rels, cfg.max_len)];
    let caveat = if t.is_complete() {
        let all: Vec<&WordClass> = en.classes.iter().collect();
        let reps: Vec<&PositiveWord> = all.iter().map(|c| &c.representative).collect();
        checks.insert(0, distinct("distinct_matrices", &reps, &mats));
        checks.insert(1, recovery(&all, &rels));
        checks.insert(2, image_determines_initial_set(&all, &rels));
        checks.push(monotonicity(&en.classes, &index, &rels));
        format!(
            "bounded check: only elements of length ≤ {} are enumerated; faithfulness beyond that length is not established by this run",
            cfg.max_len
        )
    } else {
        format!(
            "root table truncated at depth {}: matrices are infinite, so only the Hée properties and the relation homomorphism law are checked, on columns whose images stay in the table",
            t.max_depth()
        )
    };
    FaithReport {
        graph: graph_name(family),
        twisted: false,
        group_order: 1,
        dim: t.len(),
        config: *cfg,
        per_length: en.per_length.clone(),
        elements: en.classes.len(),
        criterion,
        hee,
        checks,
        caveat,
        elapsed_ms: start.elapsed().as_millis(),
    }
    .finish()
}

/// Bounded-length faithfulness check of `ψ^G` on the `G`-fixed elements.
///
/// Besides distinctness of the restricted matrices and `I(b)` recovery, it
/// verifies the orbit-union identity `R_b(Φ⁺) = ∪_Θ R_b(Θ)` and that
/// `R_b(Θ)` is the union of the orbits with a positive coefficient in
/// `ψ^G_b(e_Θ)`.
pub fn twisted_faithfulness_experiment(
    family: &LkFamily,
    basis: &OrbitBasis,
    cfg: &ExperimentConfig,
) -> Result<FaithReport, FaithError> {
    let start = Instant::now();
    let t = family.table_arc().clone();
    if !t.is_complete() {
        return Err(FaithError::Truncated(format!("depth bound {:?}", t.depth_bound())));
    }
    if let Some(&(i, k, gi)) = equivariance_violations(family, basis).first() {
        return Err(TwistedError::NotEquivariant {
            i,
            root: t.root(k).to_string(),
            perm: basis.group().elements()[gi].clone(),
        }
        .into());
    }
    let (criterion, hee) = precheck(family, cfg.regime)?;
    let en = enumerate_classes(t.graph(), cfg.max_len, cfg.cap)?;
    let gens = basis.group().generators();
    let fixed: Vec<&WordClass> = en
        .classes
        .iter()
        .filter(|c| gens.iter().all(|p| c.contains(&c.representative.permuted(p))))
        .collect();
    let mut per_length = vec![0; cfg.max_len + 1];
    for c in &fixed {
        per_length[c.len()] += 1;
    }
    let mut ev = WordEvaluator::new(family);
    let mut rels = Vec::new();
    let mut twisted = Vec::new();
    for c in &fixed {
        let m = ev.eval(&c.representative);
        rels.push(relation_of_endo(&m, t.clone(), cfg.regime)?);
        twisted.push(restrict(&m, basis)?);
    }
    let y = cfg.regime.sample_point();
    let mut union_bad = Vec::new();
    let mut support_bad = Vec::new();
    for ((c, r), tw) in fixed.iter().zip(&rels).zip(&twisted) {
        let mut union = BTreeSet::new();
        for (th, orb) in basis.orbits().iter().enumerate() {
            let img = r.image(&orb.iter().copied().collect());
            let mut support = BTreeSet::new();
            for (u, v) in tw.column(th) {
                if v.eval_x0_at(&y)?.is_positive() {
                    support.extend(basis.orbit(*u).iter().copied());
                }
            }
            if img != support {
                support_bad.push(format!("{} on Θ{th}", c.representative));
            }
            union.extend(img);
        }
        if union != r.image_all() {
            union_bad.push(c.representative.to_string());
        }
    }
    let reps: Vec<&PositiveWord> = fixed.iter().map(|c| &c.representative).collect();
    let checks = vec![
        distinct("distinct_twisted_matrices", &reps, &twisted),
        recovery(&fixed, &rels),
        image_determines_initial_set(&fixed, &rels),
        Check::from_failures("orbit_union", union_bad),
        Check::from_failures("orbit_support", support_bad),
    ];
    FaithReport {
        graph: graph_name(family),
        twisted: true,
        group_order: basis.group().order(),
        dim: basis.len(),
        config: *cfg,
        per_length,
        elements: fixed.len(),
        criterion,
        hee,
        checks,
        caveat: format!(
            "bounded check: only G-fixed elements of length ≤ {} in the ambient monoid are enumerated; faithfulness beyond that length is not established by this run",
            cfg.max_len
        ),
        elapsed_ms: start.elapsed().as_millis(),
    }
    .finish()
}
