mod common;

use cbord_core::homfly::{homfly, mfw_bounds};
use cbord_core::obstruction::{
    cor16_order, cor19_mirror, cor26_certificate, cor27_certificate, cor33_test, cor34_test,
    prop14_certificate, quasipositive_genus, spc_test, thm23_certificate, thm25_certificate,
    Certificate, GenusValue, Quantity,
};
use cbord_core::plumbing::{is_spc_cboundary, tree_seifert_matrix};
use cbord_core::seifert::{bennequin_seifert_matrix, signature};
use cbord_core::Rational64;
use common::*;
use proptest::prelude::*;

fn lower(n: i64, d: i64) -> GenusValue {
    GenusValue::lower_bound(Rational64::new(n, d), "test")
}

fn exact(n: i64) -> GenusValue {
    GenusValue::exact(Rational64::from(n), "test").unwrap()
}

fn round_trip(c: &Certificate) -> Certificate {
    serde_json::from_str(&serde_json::to_string(c).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn valuation_test_is_monotone_in_genus(b in arb_braid(4, 10), m in 0i64..8, extra in 0i64..8) {
        let h = homfly(&b).unwrap();
        let small = spc_test(&h, &lower(m, 2)).unwrap();
        let large = spc_test(&h, &lower(m + extra, 2)).unwrap();
        prop_assert!(!small.verdict.is_obstructed() || large.verdict.is_obstructed());
    }

    #[test]
    fn special_cases_imply_general_test(b in arb_braid(4, 10)) {
        let h = homfly(&b).unwrap();
        let zero = spc_test(&h, &lower(0, 1)).unwrap();
        prop_assert_eq!(cor33_test(&h).verdict, zero.verdict);
        if h.components == 1 {
            let sigma = signature(&bennequin_seifert_matrix(&b));
            let c = cor34_test(&h, sigma).unwrap();
            let via_sigma = spc_test(&h, &lower(sigma.abs(), 2)).unwrap();
            prop_assert_eq!(c.verdict, via_sigma.verdict);
            prop_assert!(c.recheck().unwrap());
        } else {
            prop_assert!(cor34_test(&h, 0).is_err());
        }
    }

    /// Closures of quasipositive braids are C-boundaries, so the valuation
    /// test must never fire on them; the bound is `e - n + 1`.
    #[test]
    fn quasipositive_closures_pass(q in arb_quasipositive(5, 6)) {
        let b = q.expand();
        let m = quasipositive_genus(&q).unwrap();
        let h = homfly(&b).unwrap();
        let c = spc_test(&h, &m).unwrap();
        prop_assert!(!c.verdict.is_obstructed(), "{}", c);
        prop_assert_eq!(c.computed["bound"].clone(), Quantity::Rational(Rational64::from(mfw_bounds(&b).0)));
    }

    #[test]
    fn certificates_survive_json(b in arb_braid(4, 8), m in 0i64..6) {
        let h = homfly(&b).unwrap();
        let c = spc_test(&h, &lower(m, 2)).unwrap();
        let back = round_trip(&c);
        prop_assert_eq!(&back, &c);
        prop_assert!(back.recheck().unwrap());
    }
}

#[test]
fn tampered_verdicts_fail_recheck() {
    let certs = vec![
        prop14_certificate(&exact(1), &exact(1), Some(&GenusValue::upper_bound(Rational64::from(0), "t").unwrap())).unwrap(),
        cor16_order(&exact(1), 2).unwrap(),
        cor19_mirror(&exact(1)).unwrap(),
        thm23_certificate(&exact(2), &exact(1)).unwrap(),
        thm25_certificate(&exact(3), &exact(1), 2, 2).unwrap(),
        cor26_certificate(&exact(0), 3, 2).unwrap(),
        cor27_certificate(&lower(0, 1), 2, true).unwrap(),
        is_spc_cboundary(&tree("(2 (-2))")).unwrap().certificate,
    ];
    for c in certs {
        let back = round_trip(&c);
        assert_eq!(back, c);
        assert!(back.recheck().unwrap(), "{c}");
        let mut bad = back.clone();
        bad.verdict = cbord_core::obstruction::Verdict::from_obstructed(!bad.verdict.is_obstructed());
        assert!(!bad.recheck().unwrap(), "{c}");
    }
}

#[test]
fn mirror_trefoil_chain() {
    // the right trefoil bounds a curve with M = 1, so its mirror cannot
    let right = homfly(&braid("B2: 1 1 1")).unwrap();
    let left = homfly(&braid("B2: -1 -1 -1")).unwrap();
    assert!(!spc_test(&right, &exact(1)).unwrap().verdict.is_obstructed());
    assert!(spc_test(&left, &lower(1, 1)).unwrap().verdict.is_obstructed());
    assert!(cor19_mirror(&exact(1)).unwrap().verdict.is_obstructed());
}

#[test]
fn whitehead_pattern_signature_feeds_cor27() {
    for rho in 1..=4 {
        let pattern = tree(&format!("(2 ({}))", 2 * rho));
        let sigma = signature(&tree_seifert_matrix(&pattern));
        assert_eq!(sigma, 2);
        let c = cor27_certificate(&lower(1, 1), sigma, true).unwrap();
        assert!(c.verdict.is_obstructed());
    }
}
