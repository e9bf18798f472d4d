use std::collections::BTreeSet;

use lkrep::coxeter::{initial_set, CoxeterGraph, PositiveWord, DEFAULT_CAP};
use lkrep::faithcheck::{
    criterion_report, faithfulness_experiment, hee_properties, recover_initial_set, relation_of_endo,
    twisted_faithfulness_experiment, ExperimentConfig, FaithError, RootRelation,
};
use lkrep::families::{affine_family, spherical_family, AffineSeed};
use lkrep::laurent::{make_params, LaurentPoly, Regime};
use lkrep::lkcore::{apply_word, psi, LkFamily, SparseEndo};
use lkrep::twisted::{automorphisms, orbit_basis, TwistedError};

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn g(label: &str) -> CoxeterGraph {
    CoxeterGraph::from_label(label).unwrap()
}

fn w(s: &str) -> PositiveWord {
    s.parse().unwrap()
}

fn std_family(label: &str) -> LkFamily {
    spherical_family(&g(label), &make_params(1, 0, 0), &p("x*y^2")).unwrap()
}

fn rel(fam: &LkFamily, word: &str) -> RootRelation {
    relation_of_endo(&apply_word(&w(word), fam), fam.table_arc().clone(), Regime::SmallY).unwrap()
}

/// Coefficients of `1 / Σ_T (-1)^{|T|} q^{ℓ(Δ_T)}`, the growth series of a
/// monoid counted by ambient length; `den[k]` is the coefficient of `q^k`.
fn growth(den: &[i64], n: usize) -> Vec<usize> {
    let mut c: Vec<i64> = vec![1];
    for k in 1..=n {
        let s: i64 = (1..=k.min(den.len() - 1)).map(|j| -den[j] * c[k - j]).sum();
        c.push(s);
    }
    c.into_iter().map(|x| x as usize).collect()
}

fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

#[test]
fn identity_gives_diagonal() {
    let fam = std_family("A3");
    let t = fam.table_arc().clone();
    let id = SparseEndo::identity(t.len(), true);
    assert_eq!(relation_of_endo(&id, t.clone(), Regime::SmallY).unwrap(), RootRelation::identity(t.clone()));
    let r = rel(&fam, "0120");
    assert_eq!(r.compose(&RootRelation::identity(t.clone())), r);
    assert_eq!(RootRelation::identity(t).compose(&r), r);
}

#[test]
fn generator_relations_on_a2() {
    // Roots: α_0, α_1, α_0+α_1. For s_0 at x = 0 the columns are
    // α_0 -> 0, α_1 -> a α_1 + c (α_0+α_1), α_0+α_1 -> b α_1.
    let fam = std_family("A2");
    let r0 = rel(&fam, "0");
    let expected = [(1, 1), (2, 1), (1, 2)].into_iter().collect();
    assert_eq!(r0.pairs(), &expected);
    assert!(!r0.image_all().contains(&0));
}

#[test]
fn composition_matches_products_on_a2() {
    let fam = std_family("A2");
    for (a, b) in [("0", "1"), ("1", "0"), ("01", "0"), ("0", "10"), ("010", "1")] {
        let lhs = rel(&fam, &format!("{a}{b}"));
        assert_eq!(lhs, rel(&fam, a).compose(&rel(&fam, b)), "{a}·{b}");
    }
}

#[test]
fn composition_is_boolean_matrix_product() {
    let fam = std_family("A3");
    let t = fam.table_arc().clone();
    let n = t.len();
    let (x, y) = (rel(&fam, "021"), rel(&fam, "1201"));
    let z = x.compose(&y);
    for b in 0..n {
        for a in 0..n {
            let want = (0..n).any(|c| x.relates(b, c) && y.relates(c, a));
            assert_eq!(z.relates(b, a), want);
        }
    }
}

#[test]
fn negative_entries_are_reported() {
    // a = y - y^-1 is negative at y = 1/2.
    let fam = spherical_family(&g("A2"), &make_params(0, 0, 1), &p("x*y^2")).unwrap();
    let err = relation_of_endo(&psi(0, &fam), fam.table_arc().clone(), Regime::SmallY).unwrap_err();
    match err {
        FaithError::NegativeEntry { beta, alpha, value } => {
            assert_eq!((beta.as_str(), alpha.as_str(), value.as_str()), ("0,1", "0,1", "-3/2"));
        }
        e => panic!("{e}"),
    }
    assert!(relation_of_endo(&psi(0, &fam), fam.table_arc().clone(), Regime::LargeY).is_ok());
}

#[test]
fn initial_sets_recovered() {
    let fam = std_family("A2");
    assert_eq!(recover_initial_set(&rel(&fam, "")), set(&[]));
    assert_eq!(recover_initial_set(&rel(&fam, "0")), set(&[0]));
    assert_eq!(recover_initial_set(&rel(&fam, "010")), set(&[0, 1]));
    let fam = std_family("D4");
    for word in ["", "1", "013", "1021", "02310", "3120132"] {
        let gr = fam.table().graph();
        assert_eq!(recover_initial_set(&rel(&fam, word)), initial_set(gr, &w(word), DEFAULT_CAP).unwrap(), "{word}");
    }
}

#[test]
fn criterion_reports() {
    let r = criterion_report(&std_family("A3"), Regime::SmallY);
    assert!(r.passed(), "{r:?}");

    let no_x = spherical_family(&g("A3"), &make_params(1, 0, 0), &p("y^2")).unwrap();
    let r = criterion_report(&no_x, Regime::SmallY);
    assert_eq!(r.failed_checks(), ["values_vanish_at_x0", "values_in_x_ideal"]);

    let zero_a = spherical_family(&g("A3"), &make_params(0, 0, 0), &p("x*y^2")).unwrap();
    assert_eq!(criterion_report(&zero_a, Regime::SmallY).failed_checks(), ["params_positive"]);

    // 2r < p + q is the small-y regime only.
    let r = criterion_report(&std_family("A3"), Regime::LargeY);
    assert_eq!(r.failed_checks(), ["params_positive"]);
    assert!(r.checks[0].witnesses[0].starts_with("a is not positive"));

    let zero = LkFamily::zero(std_family("A3").table_arc().clone(), make_params(1, 0, 0));
    assert_eq!(criterion_report(&zero, Regime::SmallY).failed_checks(), ["simple_values_nonzero"]);
}

#[test]
fn hee_properties_hold() {
    for label in ["A2", "A4", "D4", "D5", "E6"] {
        assert!(hee_properties(&std_family(label), Regime::SmallY).unwrap().passed(), "{label}");
    }
    let large = spherical_family(&g("D4"), &make_params(1, 2, 2), &p("x")).unwrap();
    assert!(hee_properties(&large, Regime::LargeY).unwrap().passed());
}

#[test]
fn faithfulness_a2_a3() {
    let rep = faithfulness_experiment(&std_family("A2"), &ExperimentConfig::new(6)).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.per_length, growth(&[1, -2, 0, 1], 6));
    let rep = faithfulness_experiment(&std_family("A3"), &ExperimentConfig::new(5)).unwrap();
    assert_eq!(rep.per_length, growth(&[1, -3, 1, 2, 0, 0, -1], 5));
    for name in [
        "distinct_matrices",
        "initial_set_recovery",
        "image_determines_initial_set",
        "relation_homomorphism",
        "prefix_monotonicity",
        "hee_i",
    ] {
        assert!(rep.check(name).unwrap().passed, "{name}");
    }
    assert!(rep.caveat.contains("length ≤ 5"));
}

#[test]
fn experiment_refuses_without_criterion() {
    let zero = LkFamily::zero(std_family("A2").table_arc().clone(), make_params(1, 0, 0));
    match faithfulness_experiment(&zero, &ExperimentConfig::new(3)) {
        Err(FaithError::CriterionFailed(r)) => assert!(!r.passed()),
        other => panic!("{other:?}"),
    }
}

#[test]
fn cap_is_enforced() {
    let cfg = ExperimentConfig { cap: 10, ..ExperimentConfig::new(4) };
    assert!(matches!(faithfulness_experiment(&std_family("A2"), &cfg), Err(FaithError::CapExceeded(10))));
}

#[test]
fn truncated_affine_checks_only_relations() {
    let seq = ["x*y^2", "x", "x*y", "2*x", "x^2", "x*y^-1", "x", "3*x*y", "x", "x", "x", "x"];
    let seed = AffineSeed { seq: seq.iter().map(|s| p(s)).collect(), graph: g("Atilde2"), depth_bound: 6 };
    let fam = affine_family(&seed, &make_params(1, 0, 0)).unwrap();
    let rep = faithfulness_experiment(&fam, &ExperimentConfig::new(4)).unwrap();
    assert!(rep.caveat.contains("truncated"));
    let names: Vec<&str> = rep.checks.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, ["relation_homomorphism"]);
    assert!(rep.hee.passed());
}

#[test]
fn twisted_faithfulness() {
    // Fixed submonoids B_2 and B_3, generators weighted by ambient length.
    let b2 = growth(&[1, -1, -1, 0, 0, 0, 1], 6);
    let b3 = growth(&[1, -1, -2, 1, 0, 0, 2], 4);
    for (label, len, lengths) in [("A3", 6, b2), ("A5", 4, b3)] {
        let fam = std_family(label);
        let basis = orbit_basis(fam.table_arc().clone(), &automorphisms(&g(label))).unwrap();
        let rep = twisted_faithfulness_experiment(&fam, &basis, &ExperimentConfig::new(len)).unwrap();
        assert!(rep.passed(), "{label}");
        assert_eq!(rep.per_length, lengths, "{label}");
        assert!(rep.check("orbit_union").unwrap().passed);
        assert!(rep.check("orbit_support").unwrap().passed);
    }
    let fam = std_family("A3");
    let basis = orbit_basis(fam.table_arc().clone(), &automorphisms(&g("A3"))).unwrap();
    let rep = twisted_faithfulness_experiment(&fam, &basis, &ExperimentConfig::new(0)).unwrap();
    assert_eq!(rep.elements, 1);
}

#[test]
fn twisted_needs_equivariance() {
    let fam = std_family("A3");
    let basis = orbit_basis(fam.table_arc().clone(), &automorphisms(&g("A3"))).unwrap();
    let broken = fam.with_value(0, 0, p("2*x*y^2"));
    let err = twisted_faithfulness_experiment(&broken, &basis, &ExperimentConfig::new(2)).unwrap_err();
    assert!(matches!(err, FaithError::Twisted(TwistedError::NotEquivariant { .. })), "{err}");
}

#[test]
fn report_json() {
    let rep = faithfulness_experiment(&std_family("A2"), &ExperimentConfig::new(3)).unwrap();
    let v = serde_json::to_value(&rep).unwrap();
    for k in ["graph", "criterion", "hee", "checks", "caveat", "elapsed_ms", "per_length", "config"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    assert_eq!(v["config"]["regime"], "0<y<1");
    assert_eq!(v["checks"][0]["name"], "distinct_matrices");
}
