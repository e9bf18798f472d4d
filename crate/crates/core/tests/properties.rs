use std::collections::BTreeSet;
use std::sync::Arc;

use lkrep::coxeter::{initial_set, CoxeterGraph, PositiveWord, DEFAULT_CAP};
use lkrep::faithcheck::{recover_initial_set, relation_of_endo, RootRelation};
use lkrep::families::{mu_spherical, spherical_family};
use lkrep::laurent::{make_params, LaurentPoly, Regime};
use lkrep::lkcore::{apply_word, braid_check, check_table1, det, LkFamily};
use lkrep::rootsys::RootTable;
use proptest::prelude::*;

fn g(label: &str) -> CoxeterGraph {
    CoxeterGraph::from_label(label).unwrap()
}

fn poly_with(xs: std::ops::Range<i32>) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-5i64..=5, xs, -3i32..=3), 0..5).prop_map(|ts| {
        ts.into_iter().fold(LaurentPoly::zero(), |acc, (c, xe, ye)| acc + LaurentPoly::monomial(c, xe, ye))
    })
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    poly_with(-2..3)
}

fn word(rank: usize, max: usize) -> impl Strategy<Value = PositiveWord> {
    prop::collection::vec(0..rank, 0..=max).prop_map(PositiveWord)
}

fn std_family(label: &str) -> LkFamily {
    spherical_family(&g(label), &make_params(1, 0, 0), &"x*y^2".parse().unwrap()).unwrap()
}

fn rel(fam: &LkFamily, w: &PositiveWord) -> RootRelation {
    relation_of_endo(&apply_word(w, fam), fam.table_arc().clone(), Regime::SmallY).unwrap()
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert_eq!(&a + &LaurentPoly::zero(), a);
    }

    #[test]
    fn display_parse_round_trip(a in poly()) {
        let back: LaurentPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn exact_division(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
    }

    #[test]
    fn units_invert(c in prop::sample::select(vec![-1i64, 1]), xe in -4i32..=4, ye in -4i32..=4) {
        let u = LaurentPoly::monomial(c, xe, ye);
        prop_assert!(u.is_unit());
        prop_assert!((&u * &u.unit_inverse().unwrap()).is_one());
    }

    #[test]
    fn eval_x0_is_a_ring_map(a in poly_with(0..3), b in poly_with(0..3)) {
        let (ea, eb) = (a.eval_x0().unwrap(), b.eval_x0().unwrap());
        prop_assert_eq!((&a + &b).eval_x0().unwrap(), &ea + &eb);
        prop_assert_eq!((&a * &b).eval_x0().unwrap(), &ea * &eb);
    }

    #[test]
    fn x_ideal_vanishes_at_x0(a in poly_with(0..3)) {
        let ax = &a * &LaurentPoly::x();
        prop_assert!(ax.in_x_ideal());
        prop_assert!(ax.eval_x0().unwrap().is_zero());
    }

    #[test]
    fn word_matrices_multiply(u in word(3, 4), v in word(3, 4)) {
        let fam = std_family("A3");
        let lhs = apply_word(&u.concat(&v), &fam);
        prop_assert_eq!(&lhs, &apply_word(&u, &fam).compose(&apply_word(&v, &fam)));
        let d = &det(&apply_word(&u, &fam)).unwrap() * &det(&apply_word(&v, &fam)).unwrap();
        prop_assert_eq!(det(&lhs).unwrap(), d);
    }

    #[test]
    fn relation_is_a_homomorphism(u in word(3, 4), v in word(3, 4)) {
        let fam = std_family("A3");
        prop_assert_eq!(rel(&fam, &u.concat(&v)), rel(&fam, &u).compose(&rel(&fam, &v)));
    }

    #[test]
    fn initial_set_from_relation(w in word(4, 6)) {
        let fam = std_family("D4");
        prop_assert_eq!(recover_initial_set(&rel(&fam, &w)), initial_set(fam.table().graph(), &w, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn relation_composition_is_associative(
        x in prop::collection::btree_set((0usize..6, 0usize..6), 0..12),
        y in prop::collection::btree_set((0usize..6, 0usize..6), 0..12),
        z in prop::collection::btree_set((0usize..6, 0usize..6), 0..12),
    ) {
        let t = Arc::new(RootTable::complete(&g("A3")).unwrap());
        let mk = |s: BTreeSet<(usize, usize)>| RootRelation::new(t.clone(), s);
        let (x, y, z) = (mk(x), mk(y), mk(z));
        prop_assert_eq!(x.compose(&y).compose(&z), x.compose(&y.compose(&z)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn positivity_methods_agree(p in -6i64..=6, q in -6i64..=6, r in -6i64..=6) {
        prop_assume!(2 * r != p + q);
        let par = make_params(p, q, r);
        for regime in [Regime::SmallY, Regime::LargeY] {
            prop_assert_eq!(par.positivity_report(regime).unwrap(), par.positivity_by_evaluation(regime).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn spherical_round_trip(f in poly(), label in prop::sample::select(vec!["A3", "D4"])) {
        prop_assume!(!f.is_zero());
        let fam = spherical_family(&g(label), &make_params(1, 1, 0), &f).unwrap();
        prop_assert_eq!(mu_spherical(&fam).unwrap(), f);
        prop_assert!(check_table1(&fam).is_ok());
    }

    #[test]
    fn braid_relations_for_any_parameters(
        p in -3i64..=3, q in -3i64..=3, r in -3i64..=3,
        c in prop::sample::select(vec![-2i64, -1, 1, 3]), xe in 1i32..=2, ye in -2i32..=2,
        label in prop::sample::select(vec!["A3", "D4"]),
    ) {
        prop_assume!(2 * r != p + q);
        let f = LaurentPoly::monomial(c, xe, ye);
        let fam = spherical_family(&g(label), &make_params(p, q, r), &f).unwrap();
        for b in braid_check(&fam) {
            prop_assert!(b.differences.is_empty(), "({}, {})", b.i, b.j);
        }
    }
}
