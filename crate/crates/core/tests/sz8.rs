use std::collections::BTreeSet;
use std::path::PathBuf;

use num_bigint::BigUint;
use solvrad_core::{
    class_pair_solvability, conjugacy_classes, is_solvable, load_group_file, prime_order_elements,
    solvable_radical_oracle, two_conjugate_test, Bsgs, ConjugacyClass, SearchConfig,
};

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/sz8.json")
}

fn sz8() -> (Bsgs, Vec<ConjugacyClass>) {
    let loaded = load_group_file(&fixture()).unwrap();
    let classes = conjugacy_classes(&loaded.bsgs, 50_000).unwrap();
    (loaded.bsgs, classes)
}

#[test]
fn order_matches_suzuki_formula() {
    let loaded = load_group_file(&fixture()).unwrap();
    // q^2 = 8: q^4 (q^2 - 1)(q^4 + 1)
    let q2 = 8u32;
    assert_eq!(q2 * q2 * (q2 - 1) * (q2 * q2 + 1), 29120);
    assert_eq!(loaded.bsgs.order(), &BigUint::from(29120u32));
    assert_eq!(loaded.generators.degree(), 65);
    assert_eq!(loaded.bsgs.enumerate(50_000).unwrap().count(), 29120);
}

#[test]
fn class_structure() {
    let (g, classes) = sz8();
    assert!(!is_solvable(&g));
    let orders: BTreeSet<u64> = classes
        .iter()
        .map(|c| u64::try_from(c.representative().order()).unwrap())
        .collect();
    assert_eq!(orders, BTreeSet::from([1, 2, 4, 5, 7, 13]));
    assert_eq!(classes.len(), 11);
    let mut prime: Vec<u64> = prime_order_elements(&classes).iter().map(|p| p.order).collect();
    prime.sort_unstable();
    assert_eq!(prime, vec![5, 7, 7, 7, 13, 13, 13]);
}

#[test]
fn two_conjugate_refutes_every_prime_class() {
    let (g, classes) = sz8();
    let oracle = solvable_radical_oracle(&g, &classes);
    assert!(oracle.subgroup.is_trivial());
    for profile in prime_order_elements(&classes) {
        let v = two_conjugate_test(&g, &classes, &profile.element, &SearchConfig::default()).unwrap();
        let w = v.witness().expect("Sz(8) is simple");
        assert!(!w.solvable);
        assert!(w.regenerates());
    }
}

#[test]
fn class_pairs_find_a_witness() {
    let (g, classes) = sz8();
    let verdict = class_pair_solvability(&g, &classes, &SearchConfig::default()).unwrap();
    assert_eq!(verdict.claims_solvable(), Some(false));
    assert!(verdict.counterexample().unwrap().regenerates());
}
