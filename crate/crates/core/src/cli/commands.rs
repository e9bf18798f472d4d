use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use clap::ValueEnum;
use serde_json::{json, Value};

use super::{CliError, Format, Output, RunConfig, CSV_MAX_COLUMNS};
use crate::coxeter::{CoxeterGraph, PositiveWord};
use crate::faithcheck::{faithfulness_experiment, twisted_faithfulness_experiment, ExperimentConfig, FaithReport};
use crate::families::{affine_family, mu_affine, mu_spherical, paris_family, spherical_family, AffineSeed};
use crate::laurent::{make_params, LaurentPoly, Scalar};
use crate::lkcore::{apply_word, apply_word_inverse, braid_check, check_table1, det, LkFamily, SparseEndo};
use crate::rootsys::{complete_meshes, delta, RootTable};
use crate::twisted::{
    automorphisms, check_equivariance, closed_form_delta, collision_scan, nonequivalence_condition,
    nonequivalence_value, orbit_basis, subgroup, twisted_generators, typeb_suite, GraphAutGroup, OrbitBasis,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Spherical,
    Paris,
    Affine,
}

/// Which group of graph automorphisms to use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Full,
    /// The full group, required to have order two.
    Flip,
    Trivial,
    Generators(Vec<Vec<usize>>),
}

impl FromStr for GroupSpec {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "full" => GroupSpec::Full,
            "flip" => GroupSpec::Flip,
            "trivial" => GroupSpec::Trivial,
            _ => GroupSpec::Generators(
                s.split(';')
                    .map(|p| p.split(',').map(|x| x.trim().parse::<usize>()).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| CliError::Usage(format!("bad group {s:?}: {e}")))?,
            ),
        })
    }
}

impl GroupSpec {
    pub fn resolve(&self, g: &CoxeterGraph) -> Result<GraphAutGroup, CliError> {
        Ok(match self {
            GroupSpec::Full => automorphisms(g),
            GroupSpec::Flip => {
                let aut = automorphisms(g);
                if aut.order() != 2 {
                    return Err(CliError::Usage(format!(
                        "\"flip\" needs |Aut| = 2, here |Aut| = {}; pass generators instead",
                        aut.order()
                    )));
                }
                aut
            }
            GroupSpec::Trivial => subgroup(g, &[])?,
            GroupSpec::Generators(gens) => subgroup(g, gens)?,
        })
    }
}

fn labels(t: &RootTable) -> Vec<String> {
    (0..t.len()).map(|k| t.root(k).to_string()).collect()
}

fn is_spherical(g: &CoxeterGraph) -> bool {
    g.is_spherical(&(0..g.rank()).collect::<Vec<_>>())
}

fn need_depth(cfg: &RunConfig, g: &CoxeterGraph) -> Result<usize, CliError> {
    match cfg.depth_bound {
        Some(d) => Ok(d),
        None if is_spherical(g) => Ok(0),
        None => Err(CliError::Usage("non-spherical graph needs --depth".into())),
    }
}

fn matrix_output<R: Scalar>(
    cfg: &RunConfig,
    e: &SparseEndo<R>,
    labels: &[String],
    summary: Vec<String>,
    mut json: Value,
) -> Result<Output, CliError> {
    json["matrix"] = e.to_json(labels);
    let csv = match cfg.format {
        Format::Csv if e.dim() > CSV_MAX_COLUMNS => {
            return Err(CliError::Usage(format!("CSV export is limited to {CSV_MAX_COLUMNS} columns, matrix has {}", e.dim())))
        }
        Format::Csv => Some(e.to_csv(labels)),
        Format::Json => None,
    };
    Ok(Output { summary, json, csv })
}

pub fn cmd_roots(cfg: &RunConfig) -> Result<Output, CliError> {
    let g = cfg.graph()?;
    let t = RootTable::enumerate_capped(g, need_depth(cfg, g)?, cfg.cap)?;
    let mut census: BTreeMap<u8, usize> = BTreeMap::new();
    for i in 0..t.rank() {
        for j in i + 1..t.rank() {
            for m in complete_meshes(&t, (i, j)) {
                *census.entry(m.mesh_type).or_default() += 1;
            }
        }
    }
    let mut summary = vec![match t.depth_bound() {
        None => format!("{} positive roots", t.len()),
        Some(d) => format!("{} positive roots of depth ≤ {d}", t.len()),
    }];
    if let Some(d) = t.delta() {
        summary.push(format!("δ = ({d}), δ-levels annotated"));
    }
    summary.push(format!(
        "mesh census: {}",
        census.iter().map(|(k, v)| format!("type {k}: {v}")).collect::<Vec<_>>().join(", ")
    ));
    let census_json: BTreeMap<String, usize> = census.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    Ok(Output::json(
        summary,
        json!({
            "config": cfg.header(),
            "count": t.len(),
            "complete": t.is_complete(),
            "delta": t.delta().map(|d| d.to_string()),
            "roots": t.to_json(),
            "mesh_census": census_json,
        }),
    ))
}

/// The family the config asks for, plus construction-specific JSON and summary lines.
fn build_family(cfg: &RunConfig, construction: Option<Construction>) -> Result<(LkFamily, Value, Vec<String>), CliError> {
    let g = cfg.graph()?;
    let spherical = is_spherical(g);
    let c = construction.unwrap_or(if spherical { Construction::Spherical } else { Construction::Paris });
    match c {
        Construction::Spherical => {
            if !spherical {
                return Err(CliError::Usage("the spherical construction needs a spherical graph".into()));
            }
            let fam = spherical_family(g, &cfg.params, &cfg.f)?;
            let mu = mu_spherical(&fam)?;
            let ok = mu == cfg.f;
            let line = format!("μ round-trip: {}", if ok { "pass" } else { "fail" });
            if !ok {
                return Err(CliError::verification(line, None));
            }
            Ok((fam, json!({ "construction": "spherical", "mu": mu.to_string() }), vec![line]))
        }
        Construction::Paris => {
            let (fam, rep) = paris_family(g, &cfg.params, &cfg.f, need_depth(cfg, g)?)?;
            let line = format!(
                "independence of j_α: {} ({} sites with several choices)",
                if rep.all_agree { "agree" } else { "disagree" },
                rep.multi_choice_sites
            );
            Ok((fam, json!({ "construction": "paris", "independence": rep }), vec![line]))
        }
        Construction::Affine => {
            delta(g).map_err(|_| CliError::Usage("the affine construction needs an affine graph".into()))?;
            let seq = cfg.seed.clone().ok_or_else(|| CliError::Usage("the affine construction needs --seed".into()))?;
            let depth = cfg.depth_bound.ok_or_else(|| CliError::Usage("the affine construction needs --depth".into()))?;
            let seed = AffineSeed { seq: seq.clone(), graph: g.clone(), depth_bound: depth };
            let fam = affine_family(&seed, &cfg.params)?;
            let mu = mu_affine(&fam)?;
            let k = mu.len().min(seq.len());
            let ok = mu[..k] == seq[..k];
            let line = format!("μ round-trip on {k} seed terms: {}", if ok { "pass" } else { "fail" });
            if !ok {
                return Err(CliError::verification(line, None));
            }
            let mu_s: Vec<String> = mu.iter().map(ToString::to_string).collect();
            Ok((fam, json!({ "construction": "affine", "mu": mu_s }), vec![line]))
        }
    }
}

pub fn cmd_family(cfg: &RunConfig, construction: Option<Construction>) -> Result<Output, CliError> {
    let (fam, extra, mut summary) = build_family(cfg, construction)?;
    let report = check_table1(&fam);
    summary.insert(0, format!("{} values, Table 1: {} checks, {} violations", fam.rank() * fam.table().len(), report.checked, report.violations.len()));
    let json = json!({ "config": cfg.header(), "family": fam.to_json(), "table1": report, "construction": extra });
    if !report.is_ok() {
        return Err(CliError::verification(summary[0].clone(), Some(json)));
    }
    Ok(Output::json(summary, json))
}

pub fn cmd_rep(
    cfg: &RunConfig,
    construction: Option<Construction>,
    word: &PositiveWord,
    inverse: bool,
) -> Result<Output, CliError> {
    let (fam, _, _) = build_family(cfg, construction)?;
    let t = fam.table();
    t.graph().check_word(word)?;
    let lab = labels(t);
    let head = json!({ "config": cfg.header(), "word": word.to_string(), "inverse": inverse });
    let what = if inverse { "ψ_w^{-1}" } else { "ψ_w" };
    let line = format!("{what} for w = {word}: {n}×{n}", n = t.len());
    if inverse {
        matrix_output(cfg, &apply_word_inverse(word, &fam)?, &lab, vec![line], head)
    } else {
        matrix_output(cfg, &apply_word(word, &fam), &lab, vec![line], head)
    }
}

fn twisted_setup(cfg: &RunConfig, construction: Option<Construction>, group: &GroupSpec) -> Result<(LkFamily, OrbitBasis), CliError> {
    let (fam, _, _) = build_family(cfg, construction)?;
    let grp = group.resolve(fam.table().graph())?;
    let basis = orbit_basis(fam.table_arc().clone(), &grp)?;
    if !check_equivariance(&fam, &basis) {
        return Err(CliError::verification("the family is not G-equivariant", None));
    }
    Ok((fam, basis))
}

pub fn cmd_twisted(cfg: &RunConfig, construction: Option<Construction>, group: &GroupSpec) -> Result<Output, CliError> {
    let (fam, basis) = twisted_setup(cfg, construction, group)?;
    let lab = basis.labels();
    let complete = fam.table().is_complete();
    let mut gens_json = Vec::new();
    let mut cross = (0, 0);
    for gen in twisted_generators(&fam, &basis)? {
        let Some(endo) = &gen.endo else {
            gens_json.push(json!({ "orbit": gen.orbit, "note": gen.note }));
            continue;
        };
        let closed = match closed_form_delta(&gen.orbit, &fam, &basis) {
            Ok(c) => {
                let ok = c == *endo;
                cross.0 += 1;
                cross.1 += usize::from(ok);
                json!(if ok { "pass" } else { "fail" })
            }
            Err(e) => json!(format!("n/a: {e}")),
        };
        let d = if complete { Some(det(endo)?.to_string()) } else { None };
        gens_json.push(json!({
            "orbit": gen.orbit,
            "word": gen.word.as_ref().map(ToString::to_string),
            "matrix": endo.to_json(&lab),
            "det": d,
            "closed_form": closed,
        }));
    }
    let collisions = collision_scan(&basis);
    let verdict = if cross.0 == cross.1 { "pass" } else { "fail" };
    let summary = vec![
        format!("|G| = {}, {} orbits on roots, {} vertex orbits", basis.group().order(), basis.len(), basis.vertex_orbits().len()),
        format!("{n}×{n} twisted generators", n = basis.len()),
        format!("closed-form cross-check: {verdict} ({}/{} orbits)", cross.1, cross.0),
        format!("α_Θ collisions: {}", collisions.len()),
    ];
    let json = json!({
        "config": cfg.header(),
        "group": { "order": basis.group().order(), "generators": basis.group().generators() },
        "orbits": basis.to_json(),
        "generators": gens_json,
        "alpha_theta_collisions": collisions,
    });
    if verdict == "fail" {
        return Err(CliError::verification(summary[2].clone(), Some(json)));
    }
    Ok(Output::json(summary, json))
}

pub fn cmd_typeb(cfg: &RunConfig, n: usize, ks: &[usize], nonequiv: bool) -> Result<Output, CliError> {
    let ks: Vec<usize> = if ks.is_empty() && !nonequiv { vec![1, 2, 3] } else { ks.to_vec() };
    let mut summary = Vec::new();
    let mut rows = Vec::new();
    let mut all_ok = true;
    for &k in &ks {
        let s = typeb_suite(n, k, &cfg.params, &cfg.f)?;
        let mut dets = Vec::new();
        for i in 0..n {
            let ok = s.dets[i] == s.expected_dets[i];
            all_ok &= ok;
            dets.push(json!({
                "i": i + 1,
                "word": s.words[i].to_string(),
                "det": s.dets[i].to_string(),
                "expected": s.expected_dets[i].to_string(),
                "agree": ok,
            }));
        }
        summary.push(format!(
            "k = {k}: ambient {}, degree {}, braid relations pass, determinants {}",
            s.ambient.label().unwrap_or("?"),
            s.basis.len(),
            if dets.iter().all(|d| d["agree"] == true) { "match" } else { "MISMATCH" }
        ));
        rows.push(json!({ "k": k, "ambient": s.ambient.label(), "degree": s.basis.len(), "determinants": dets }));
    }
    let mut json = json!({ "config": cfg.header(), "n": n, "suites": rows });
    if nonequiv {
        let (p, q, r) = cfg
            .params
            .exponents()
            .ok_or_else(|| CliError::Usage("--nonequiv needs --pqr".into()))?;
        let nn = n as i64;
        let cond = nonequivalence_condition(nn, p, q, r);
        let formula = format!("{}(p+q)+{}r", 2 * nn, 2 * (nn * nn - 3 * nn + 1));
        summary.push(format!("non-equivalent: {formula} ≠ 0 check = {cond}"));
        json["nonequivalence"] = json!({
            "formula": formula,
            "value": nonequivalence_value(nn, p, q, r),
            "non_equivalent": cond,
        });
    }
    if !all_ok {
        return Err(CliError::verification("type-B determinants disagree with the closed forms", Some(json)));
    }
    Ok(Output::json(summary, json))
}

fn faith_summary(rep: &FaithReport) -> Vec<String> {
    let mut out = vec![format!(
        "{}{}: {} elements of length ≤ {}, matrices of rank {}",
        rep.graph,
        if rep.twisted { format!(" (twisted, |G| = {})", rep.group_order) } else { String::new() },
        rep.elements,
        rep.config.max_len,
        rep.dim
    )];
    for c in rep.hee.checks().into_iter().chain(&rep.checks) {
        out.push(format!("{} {} ({} failures)", if c.passed { "PASS" } else { "FAIL" }, c.name, c.failures));
    }
    let collisions = rep
        .checks
        .iter()
        .find(|c| c.name.starts_with("distinct"))
        .map(|c| c.failures);
    if let Some(n) = collisions {
        out.push(if n == 0 { "zero collisions".into() } else { format!("{n} collisions") });
    }
    out.push(rep.caveat.clone());
    out
}

pub fn cmd_faithful(cfg: &RunConfig, construction: Option<Construction>, group: Option<&GroupSpec>) -> Result<Output, CliError> {
    let ecfg = ExperimentConfig { max_len: cfg.max_len, regime: cfg.regime, cap: cfg.cap };
    let rep = match group {
        None => {
            let (fam, _, _) = build_family(cfg, construction)?;
            faithfulness_experiment(&fam, &ecfg)?
        }
        Some(gs) => {
            let (fam, basis) = twisted_setup(cfg, construction, gs)?;
            twisted_faithfulness_experiment(&fam, &basis, &ecfg)?
        }
    };
    let mut json = serde_json::to_value(&rep).expect("report serialises");
    json["config"] = cfg.header();
    Ok(Output::json(faith_summary(&rep), json))
}

type SelfCheck = (&'static str, fn() -> Result<bool, CliError>);

fn std_family(label: &str) -> Result<LkFamily, CliError> {
    Ok(spherical_family(&CoxeterGraph::from_label(label)?, &make_params(1, 0, 0), &"x*y^2".parse()?)?)
}

const SELF_CHECKS: [SelfCheck; 7] = [
    ("braid relations on A3, D4 and Atilde2 (depth 6)", || {
        let aff = paris_family(&CoxeterGraph::from_label("Atilde2")?, &make_params(1, 0, 0), &"x*y^2".parse()?, 6)?.0;
        Ok([std_family("A3")?, std_family("D4")?, aff]
            .iter()
            .all(|f| braid_check(f).iter().all(|b| b.differences.is_empty() && b.compared_columns > 0)))
    }),
    ("Table 1 holds for spherical D4 and Paris Atilde3 (depth 5)", || {
        let par = paris_family(&CoxeterGraph::from_label("Atilde3")?, &make_params(0, 1, 0), &"x".parse()?, 5)?;
        Ok(check_table1(&std_family("D4")?).is_ok() && check_table1(&par.0).is_ok() && par.1.all_agree)
    }),
    ("spherical parametrisation round-trip on A3", || {
        let f: LaurentPoly = "3*x^2*y - x".parse()?;
        let fam = spherical_family(&CoxeterGraph::from_label("A3")?, &make_params(1, 1, 0), &f)?;
        Ok(mu_spherical(&fam)? == f)
    }),
    ("twisted closed forms on A5 with the flip", || {
        let fam = std_family("A5")?;
        let basis = orbit_basis(Arc::new(fam.table().clone()), &automorphisms(fam.table().graph()))?;
        let gens = twisted_generators(&fam, &basis)?;
        Ok(basis.len() == 9
            && gens.iter().all(|g| match (&g.endo, closed_form_delta(&g.orbit, &fam, &basis)) {
                (Some(e), Ok(c)) => *e == c,
                _ => false,
            }))
    }),
    ("type-B determinants for n = 3", || {
        let f: LaurentPoly = "x*y^2".parse()?;
        for k in 1..=3 {
            let s = typeb_suite(3, k, &make_params(1, 0, 0), &f)?;
            if s.dets != s.expected_dets {
                return Ok(false);
            }
        }
        Ok(true)
    }),
    ("faithfulness on A2 up to length 5", || {
        Ok(faithfulness_experiment(&std_family("A2")?, &ExperimentConfig::new(5)).map(|r| r.passed()).unwrap_or(false))
    }),
    ("α_Θ collisions: none on A5/flip, some on Atilde3/half-turn", || {
        let a5 = std_family("A5")?;
        let b5 = orbit_basis(a5.table_arc().clone(), &automorphisms(a5.table().graph()))?;
        let g = CoxeterGraph::from_label("Atilde3")?;
        let t = Arc::new(RootTable::enumerate(&g, 6)?);
        let half = subgroup(&g, &[vec![2, 3, 0, 1]])?;
        Ok(collision_scan(&b5).is_empty() && !collision_scan(&orbit_basis(t, &half)?).is_empty())
    }),
];

pub fn cmd_selftest(cfg: &RunConfig) -> Result<Output, CliError> {
    let mut summary = Vec::new();
    let mut results = Vec::new();
    for (name, check) in SELF_CHECKS {
        let (ok, detail) = match check() {
            Ok(ok) => (ok, None),
            Err(e) => (false, Some(e.to_string())),
        };
        summary.push(format!("{} {name}{}", if ok { "PASS" } else { "FAIL" }, detail.as_ref().map(|d| format!(": {d}")).unwrap_or_default()));
        results.push(json!({ "check": name, "passed": ok, "error": detail }));
    }
    let json = json!({ "config": cfg.header(), "results": results });
    let failed: Vec<&str> = summary.iter().filter(|l| l.starts_with("FAIL")).map(String::as_str).collect();
    if !failed.is_empty() {
        return Err(CliError::verification(failed.join("; "), Some(json)));
    }
    Ok(Output::json(summary, json))
}
