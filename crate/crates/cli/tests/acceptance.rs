//! Acceptance battery. Runs without the libtest harness so each criterion
//! prints one PASS/FAIL line; exits nonzero if any criterion fails.

use std::collections::{BTreeSet, HashSet};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use solvrad_cli::{cmd_suite, RunFlags, SuiteConfig};
use solvrad_core::{
    baer_suzuki_set, class_pair_solvability, conjugacy_classes, construct, fitting_oracle,
    four_conjugate_radical, four_conjugate_test, is_solvable, prime_order_elements, solvable_radical_oracle,
    thompson_test, transposition_triple_sharpness, two_conjugate_test, Bsgs, ConjugacyClass, GeneratorSet,
    GroupSpec, Permutation, RadicalResult, SearchConfig, DEFAULT_ELEMENT_CAP,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

const CRITERION_1: &[&str] = &[
    "S(3)",
    "S(4)",
    "S(5)",
    "A(5)",
    "D(4)",
    "D(6)",
    "C(12)",
    "direct(C(4),S(3))",
    "PSL2(5)",
    "PSL2(7)",
];
const CRITERION_2: &[&str] = &["S(4)", "S(5)", "A(5)", "direct(C(5),A(5))", "PSL2(5)"];
const CRITERION_3: &[&str] = &[
    "A(5)",
    "A(6)",
    "S(5)",
    "S(7)",
    "PSL2(7)",
    "PSL2(11)",
    "direct(C(5),A(5))",
    "direct(C(7),PSL2(7))",
    "file:sz8.json",
];

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

struct Group {
    spec: String,
    gens: GeneratorSet,
    bsgs: Bsgs,
    classes: Vec<ConjugacyClass>,
}

fn group(spec: &str) -> Result<Group, String> {
    let parsed: GroupSpec = spec.parse().map_err(|e| format!("{spec}: {e}"))?;
    let gens = construct(&parsed.with_base_dir(&fixtures())).map_err(|e| format!("{spec}: {e}"))?;
    let bsgs = Bsgs::build(&gens);
    let classes = conjugacy_classes(&bsgs, DEFAULT_ELEMENT_CAP).map_err(|e| format!("{spec}: {e}"))?;
    Ok(Group {
        spec: spec.to_string(),
        gens,
        bsgs,
        classes,
    })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Identical order and each subgroup contains the other's generators.
fn same_radical(a: &RadicalResult, b: &RadicalResult) -> bool {
    let contains_all = |x: &Bsgs, y: &Bsgs| y.generators().iter().all(|g| x.contains(g).unwrap_or(false));
    a.subgroup.order() == b.subgroup.order()
        && contains_all(&a.subgroup, &b.subgroup)
        && contains_all(&b.subgroup, &a.subgroup)
        && a.agrees_with(b)
}

fn baer_suzuki() -> Check {
    let cfg = SearchConfig::default();
    let mut orders = Vec::new();
    for spec in CRITERION_1 {
        let g = group(spec)?;
        let oracle = fitting_oracle(&g.bsgs, &g.classes);
        let run = baer_suzuki_set(&g.bsgs, &g.classes, &cfg).map_err(|e| e.to_string())?;
        ensure(same_radical(&run.radical, &oracle), || {
            format!(
                "{spec}: criterion order {} vs Fitting order {}",
                run.radical.subgroup.order(),
                oracle.subgroup.order()
            )
        })?;
        orders.push(format!("{spec}:{}", oracle.subgroup.order()));
    }
    Ok(orders.join(" "))
}

fn four_conjugate() -> Check {
    let cfg = SearchConfig::default();
    let mut orders = Vec::new();
    for spec in CRITERION_2 {
        let g = group(spec)?;
        let oracle = solvable_radical_oracle(&g.bsgs, &g.classes);
        let run = four_conjugate_radical(&g.bsgs, &g.classes, &cfg).map_err(|e| format!("{spec}: {e}"))?;
        ensure(same_radical(&run.radical, &oracle), || {
            format!(
                "{spec}: criterion order {} vs radical order {}",
                run.radical.subgroup.order(),
                oracle.subgroup.order()
            )
        })?;
        for v in &run.verdicts {
            if let Some(w) = v.witness() {
                ensure(w.regenerates() && !w.solvable && w.conjugators.len() == 3, || {
                    format!("{spec}: bad witness for {}", v.element)
                })?;
            }
        }
        orders.push(format!("{spec}:{}", oracle.subgroup.order()));
    }
    Ok(orders.join(" "))
}

fn two_conjugate() -> Check {
    let cfg = SearchConfig::default();
    let (mut checked, mut refuted) = (0, 0);
    for spec in CRITERION_3 {
        let g = group(spec)?;
        let oracle = solvable_radical_oracle(&g.bsgs, &g.classes);
        for profile in prime_order_elements(&g.classes) {
            let v = two_conjugate_test(&g.bsgs, &g.classes, &profile.element, &cfg)
                .map_err(|e| format!("{spec}: {e}"))?;
            let member = oracle.subgroup.contains(&profile.element).map_err(|e| e.to_string())?;
            ensure(v.in_radical_claimed() == member, || {
                format!("{spec}: {} claimed {} but oracle says {member}", profile.element, v.in_radical_claimed())
            })?;
            if let Some(w) = v.witness() {
                ensure(w.regenerates() && !w.solvable, || format!("{spec}: bad witness for {}", profile.element))?;
                refuted += 1;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} prime-order representatives, {refuted} refuted"))
}

fn class_pairs() -> Check {
    let cfg = SearchConfig::default();
    let mut specs: Vec<&str> = CRITERION_1.to_vec();
    specs.push("file:sz8.json");
    for spec in specs {
        let g = group(spec)?;
        let solvable = is_solvable(&g.bsgs);
        let v = class_pair_solvability(&g.bsgs, &g.classes, &cfg).map_err(|e| e.to_string())?;
        ensure(v.claims_solvable() == Some(solvable), || {
            format!("{spec}: criterion {:?}, oracle {solvable}", v.claims_solvable())
        })?;
        if let Some(w) = v.counterexample() {
            ensure(w.regenerates() && !w.solvable, || format!("{spec}: witness does not regenerate"))?;
        }
        if spec.starts_with("file:") {
            let w = v.counterexample().ok_or("Sz(8): no witness")?;
            ensure(w.conjugators.len() == 1, || "Sz(8): witness is not a pair".to_string())?;
        }
    }
    Ok("agrees with is_solvable; Sz(8) witness regenerates".to_string())
}

fn battery_specs() -> Result<Vec<String>, String> {
    let text = std::fs::read_to_string(fixtures().join("battery.json")).map_err(|e| e.to_string())?;
    let config: SuiteConfig = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let mut seen = BTreeSet::new();
    Ok(config
        .entries
        .into_iter()
        .filter(|e| e.command != "sharpness")
        .map(|e| e.spec)
        .filter(|s| seen.insert(s.clone()))
        .collect())
}

fn thompson() -> Check {
    let cfg = SearchConfig::default();
    let mut names = Vec::new();
    for spec in battery_specs()? {
        let g = group(&spec)?;
        if g.bsgs.order() > &BigUint::from(2000u32) {
            continue;
        }
        let solvable = is_solvable(&g.bsgs);
        let v = thompson_test(&g.bsgs, &g.classes, DEFAULT_ELEMENT_CAP, &cfg).map_err(|e| e.to_string())?;
        ensure(v.claims_solvable() == Some(solvable), || {
            format!("{spec}: criterion {:?}, oracle {solvable}", v.claims_solvable())
        })?;
        if let Some(w) = v.counterexample() {
            ensure(w.regenerates() && !w.solvable, || format!("{spec}: witness does not regenerate"))?;
        }
        names.push(g.spec);
    }
    Ok(format!("{} groups", names.len()))
}

fn sharpness() -> Check {
    for (n, triples) in [(5, 120), (6, 455), (7, 1330)] {
        let r = transposition_triple_sharpness(n).map_err(|e| e.to_string())?;
        ensure(r.triples_checked == triples && r.all_solvable, || {
            format!("n={n}: {} triples, all_solvable={}", r.triples_checked, r.all_solvable)
        })?;
    }
    let s5 = group("S(5)")?;
    let cfg = SearchConfig::default();
    let mut count = 0;
    for a in 1..=5 {
        for b in a + 1..=5 {
            let t = Permutation::from_cycles(5, &[vec![a, b]]).map_err(|e| e.to_string())?;
            let v = four_conjugate_test(&s5.bsgs, &s5.classes, &t, &cfg).map_err(|e| e.to_string())?;
            let w = v.witness().ok_or_else(|| format!("no witness for {t}"))?;
            ensure(
                w.element == t && w.conjugators.len() == 3 && w.regenerates() && !w.solvable,
                || format!("bad witness for {t}"),
            )?;
            count += 1;
        }
    }
    Ok(format!("120/455/1330 triples solvable; {count} transposition witnesses"))
}

fn sz8_pinning() -> Check {
    let g = group("file:sz8.json")?;
    let q = 8u32;
    let expected = BigUint::from(q * q * (q - 1) * (q * q + 1));
    ensure(g.bsgs.order() == &expected && expected == BigUint::from(29120u32), || {
        format!("order {}", g.bsgs.order())
    })?;
    ensure(!is_solvable(&g.bsgs), || "Sz(8) reported solvable".to_string())?;
    let orders: BTreeSet<u64> = g
        .classes
        .iter()
        .map(|c| u64::try_from(c.representative().order()).unwrap())
        .collect();
    ensure(orders.is_subset(&BTreeSet::from([1, 2, 4, 5, 7, 13])), || format!("element orders {orders:?}"))?;
    let prime: Vec<Permutation> = prime_order_elements(&g.classes).into_iter().map(|p| p.element).collect();
    let expected: Vec<Permutation> = g
        .classes
        .iter()
        .map(|c| c.representative().clone())
        .filter(|r| [5u32, 7, 13].iter().any(|&o| r.order() == BigUint::from(o)))
        .collect();
    ensure(prime == expected, || "prime-order classes differ".to_string())?;
    Ok(format!("order {}, element orders {orders:?}, {} prime classes", g.bsgs.order(), prime.len()))
}

fn brute_force_closure(gens: &GeneratorSet) -> HashSet<Permutation> {
    let id = Permutation::identity(gens.degree());
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens.generators() {
            let y = &x * g;
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

fn engine() -> Check {
    let mut count = 0;
    for spec in battery_specs()? {
        let g = group(&spec)?;
        if g.bsgs.order() > &BigUint::from(5000u32) {
            continue;
        }
        let elements = brute_force_closure(&g.gens);
        ensure(g.bsgs.order() == &BigUint::from(elements.len()), || {
            format!("{spec}: order {} vs closure {}", g.bsgs.order(), elements.len())
        })?;
        let n = g.gens.degree();
        let probes: Vec<Permutation> = [vec![1, 2], vec![1, n], vec![1, 2, 3]]
            .into_iter()
            .filter(|c| c.iter().collect::<HashSet<_>>().len() == c.len() && c.iter().all(|&p| p <= n))
            .map(|c| Permutation::from_cycles(n, &[c]).unwrap())
            .collect();
        for x in &elements {
            ensure(g.bsgs.contains(x).unwrap(), || format!("{spec}: member {x} rejected"))?;
            for t in &probes {
                let y = x * t;
                ensure(g.bsgs.contains(&y).unwrap() == elements.contains(&y), || {
                    format!("{spec}: membership of {y} disagrees")
                })?;
            }
        }
        for c in &g.classes {
            let product = BigUint::from(c.class_size()) * c.centralizer().order();
            ensure(&product == g.bsgs.order(), || {
                format!("{spec}: class of {} gives {product}", c.representative())
            })?;
        }
        count += 1;
    }
    Ok(format!("{count} groups"))
}

fn determinism() -> Check {
    let path = fixtures().join("battery.json");
    let run = |threads| {
        let flags = RunFlags {
            seed: Some(2024),
            threads: Some(threads),
            ..RunFlags::default()
        };
        cmd_suite(&path, &flags)
    };
    let one = run(1);
    let four = run(4);
    ensure(one.exit_code == 0, || format!("suite exit {}: {}", one.exit_code, one.message))?;
    let a = serde_json::to_string_pretty(&one.without_timing()).map_err(|e| e.to_string())?;
    let b = serde_json::to_string_pretty(&four.without_timing()).map_err(|e| e.to_string())?;
    ensure(a == b, || "reports differ between 1 and 4 threads".to_string())?;
    Ok(format!("{} entries, {} bytes, identical", one.entries.len(), a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("baer-suzuki equals fitting oracle", baer_suzuki),
        ("four-conjugate equals solvable radical oracle", four_conjugate),
        ("two-conjugate prime-order test matches oracle", two_conjugate),
        ("class-pair solvability equivalence", class_pairs),
        ("thompson pair equivalence", thompson),
        ("transposition sharpness", sharpness),
        ("Sz(8) pinning", sz8_pinning),
        ("engine matches brute force", engine),
        ("suite determinism across thread counts", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = started.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
