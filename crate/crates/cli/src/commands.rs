//! The `info`, `verify`, `sharpness` and `suite` commands. Every command
//! produces a report; failures are folded into its `exit_code` and `message`.

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};
use solvrad_core::{
    baer_suzuki_set, class_pair_solvability, conjugacy_classes, derived_series, fitting_oracle,
    four_conjugate_radical, four_conjugate_test, is_nilpotent, is_solvable, prime_order_elements,
    solvable_radical_oracle, thompson_test, transposition_triple_sharpness, two_conjugate_test,
    Bsgs, ConjugacyClass, CriterionRun, Error, GroupSpec, Outcome, Permutation, RadicalResult,
    SearchConfig, SearchMode, DEFAULT_ELEMENT_CAP, DEFAULT_RANDOM_SAMPLES, DEFAULT_TUPLE_BUDGET,
};

use crate::report::{
    ClassSummary, GroupInfo, GroupVerdictRecord, OracleComparison, PairWitnessRecord, SharpnessRecord,
    StructureSummary, SuiteEntryReport, SuiteReport, VerdictRecord, VerificationReport, WitnessRecord,
    TOOL_VERSION,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONTRADICTION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

const CONTRADICTION_NOTE: &str =
    "this indicates a bug in this implementation, not a failure of the theorem";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// Nilpotent radical via pairs of conjugates.
    Bs,
    /// Solvable radical via four conjugates.
    Four,
    /// Prime-order elements via pairs of conjugates.
    Two,
    /// Solvability via each class paired with its conjugates.
    Pairs,
    /// Solvability via arbitrary pairs of elements.
    Thompson,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Bs => "bs",
            Theorem::Four => "four",
            Theorem::Two => "two",
            Theorem::Pairs => "pairs",
            Theorem::Thompson => "thompson",
        })
    }
}

/// Flags shared by every command and by suite entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Args)]
pub struct RunFlags {
    /// Search every reduced tuple (default).
    #[arg(long, conflicts_with = "randomized")]
    pub exhaustive: bool,
    /// Sample conjugators at random; never certifies radical membership.
    #[arg(long)]
    pub randomized: bool,
    /// Tuple budget (exhaustive) or samples per element (randomized).
    #[arg(long, value_name = "N")]
    pub budget: Option<u64>,
    #[arg(long, value_name = "N")]
    pub seed: Option<u64>,
    /// Worker threads; reports do not depend on it.
    #[arg(long, value_name = "N")]
    pub threads: Option<usize>,
    /// Largest group order for which elements are enumerated.
    #[arg(long, value_name = "N")]
    pub element_cap: Option<u64>,
    /// Also write the report to this file.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Restrict `verify two` / `verify four` to one element, in cycle notation.
    #[arg(long, value_name = "CYCLES")]
    pub element: Option<String>,
}

impl RunFlags {
    pub fn search_config(&self) -> SearchConfig {
        let seed = self.seed.unwrap_or(0);
        if self.randomized {
            SearchConfig::randomized(self.budget.unwrap_or(DEFAULT_RANDOM_SAMPLES), seed)
        } else {
            SearchConfig {
                seed,
                ..SearchConfig::exhaustive(self.budget.unwrap_or(DEFAULT_TUPLE_BUDGET))
            }
        }
    }

    pub fn element_cap(&self) -> u64 {
        self.element_cap.unwrap_or(DEFAULT_ELEMENT_CAP)
    }

    /// Runs `f` on a pool with `threads` workers, or the global pool.
    pub fn in_pool<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.threads {
            Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            },
            None => f(),
        }
    }
}

/// A failure that ends a command early.
#[derive(Debug)]
pub struct Failure {
    pub exit_code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure {
            exit_code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let exit_code = match e {
            Error::CapExceeded { .. } | Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            exit_code,
            message: e.to_string(),
        }
    }
}

fn finish(mut report: VerificationReport, started: Instant, result: Result<(), Failure>) -> VerificationReport {
    if let Err(f) = result {
        report.exit_code = f.exit_code;
        report.message = f.message;
    }
    report.timing_ms = started.elapsed().as_millis() as u64;
    report
}

struct Loaded {
    info: GroupInfo,
    group: Bsgs,
}

fn load(spec_text: &str, base_dir: Option<&Path>) -> Result<Loaded, Failure> {
    let mut spec: GroupSpec = spec_text.parse()?;
    if let Some(base) = base_dir {
        spec = spec.with_base_dir(base);
    }
    let gens = solvrad_core::construct(&spec)?;
    let group = Bsgs::build(&gens);
    Ok(Loaded {
        info: GroupInfo {
            spec_text: spec_text.to_string(),
            degree: group.degree(),
            order: group.order().clone(),
        },
        group,
    })
}

fn classes_of(group: &Bsgs, flags: &RunFlags) -> Result<Vec<ConjugacyClass>, Failure> {
    Ok(conjugacy_classes(group, flags.element_cap())?)
}

fn class_summaries(classes: &[ConjugacyClass]) -> Vec<ClassSummary> {
    classes
        .iter()
        .map(|c| ClassSummary {
            representative: c.representative().to_cycle_string(),
            element_order: u64::try_from(c.representative().order()).unwrap_or(u64::MAX),
            size: c.class_size(),
        })
        .collect()
}

/// Degree, order, classes and the basic structure of a group.
pub fn cmd_info(spec_text: &str, flags: &RunFlags, base_dir: Option<&Path>) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("info");
    let result = flags.in_pool(|| -> Result<(), Failure> {
        let loaded = load(spec_text, base_dir)?;
        report.group = Some(loaded.info.clone());
        let group = &loaded.group;
        let classes = classes_of(group, flags)?;
        let radical = solvable_radical_oracle(group, &classes);
        let fitting = fitting_oracle(group, &classes);
        report.structure = Some(StructureSummary {
            solvable: is_solvable(group),
            nilpotent: is_nilpotent(group),
            derived_series_orders: derived_series(group).terms.iter().map(|t| t.order().clone()).collect(),
            solvable_radical_order: radical.subgroup.order().clone(),
            fitting_order: fitting.subgroup.order().clone(),
            class_count: classes.len(),
        });
        report.message = format!("order {}, {} classes", group.order(), classes.len());
        report.classes = Some(class_summaries(&classes));
        Ok(())
    });
    finish(report, started, result)
}

/// Runs one criterion against its oracle.
pub fn cmd_verify(theorem: Theorem, spec_text: &str, flags: &RunFlags, base_dir: Option<&Path>) -> VerificationReport {
    let started = Instant::now();
    let cfg = flags.search_config();
    let mut report = VerificationReport::new(format!("verify {theorem}"));
    report.search_mode = Some(cfg.mode);
    report.rng_seed = (cfg.mode == SearchMode::Randomized).then_some(cfg.seed);
    let result = flags.in_pool(|| -> Result<(), Failure> {
        let loaded = load(spec_text, base_dir)?;
        report.group = Some(loaded.info.clone());
        let group = &loaded.group;
        let classes = classes_of(group, flags)?;
        let element = match &flags.element {
            Some(text) if matches!(theorem, Theorem::Two | Theorem::Four) => {
                Some(Permutation::parse_cycles(text, group.degree())?)
            }
            Some(_) => return Err(Failure::usage("--element only applies to `verify two` and `verify four`")),
            None => None,
        };
        match theorem {
            Theorem::Bs => {
                let oracle = fitting_oracle(group, &classes);
                let run = baer_suzuki_set(group, &classes, &cfg)?;
                compare_radicals(&mut report, &cfg, &oracle, &run)
            }
            Theorem::Four => {
                let oracle = solvable_radical_oracle(group, &classes);
                match element {
                    Some(g) => {
                        let verdict = four_conjugate_test(group, &classes, &g, &cfg)?;
                        compare_elements(&mut report, &cfg, &oracle, vec![verdict])
                    }
                    None => {
                        let run = four_conjugate_radical(group, &classes, &cfg)?;
                        compare_radicals(&mut report, &cfg, &oracle, &run)
                    }
                }
            }
            Theorem::Two => {
                let oracle = solvable_radical_oracle(group, &classes);
                let targets: Vec<Permutation> = match element {
                    Some(g) => vec![g],
                    None => prime_order_elements(&classes).into_iter().map(|p| p.element).collect(),
                };
                let verdicts = targets
                    .iter()
                    .map(|g| two_conjugate_test(group, &classes, g, &cfg))
                    .collect::<solvrad_core::Result<Vec<_>>>()?;
                compare_elements(&mut report, &cfg, &oracle, verdicts)
            }
            Theorem::Pairs => {
                let verdict = class_pair_solvability(group, &classes, &cfg)?;
                report.group_verdict = Some(GroupVerdictRecord {
                    claims_solvable: verdict.claims_solvable(),
                    pairs_checked: verdict.pairs_checked,
                    class_witness: verdict.counterexample().map(WitnessRecord::from),
                    pair_witness: None,
                });
                compare_solvability(&mut report, &cfg, is_solvable(group), verdict.claims_solvable())
            }
            Theorem::Thompson => {
                let verdict = thompson_test(group, &classes, flags.element_cap(), &cfg)?;
                report.group_verdict = Some(GroupVerdictRecord {
                    claims_solvable: verdict.claims_solvable(),
                    pairs_checked: verdict.pairs_checked,
                    class_witness: None,
                    pair_witness: verdict.counterexample().map(PairWitnessRecord::from),
                });
                compare_solvability(&mut report, &cfg, is_solvable(group), verdict.claims_solvable())
            }
        }
    });
    finish(report, started, result)
}

fn contradiction(what: String) -> Failure {
    Failure {
        exit_code: EXIT_CONTRADICTION,
        message: format!("contradiction: {what}; {CONTRADICTION_NOTE}"),
    }
}

fn inconclusive(what: String) -> Failure {
    Failure {
        exit_code: EXIT_BUDGET,
        message: format!("inconclusive: {what}; sample budget exhausted"),
    }
}

/// Criterion radical against oracle radical. In randomized mode the criterion
/// radical is the closure of the unrefuted classes, an upper bound.
fn compare_radicals(
    report: &mut VerificationReport,
    cfg: &SearchConfig,
    oracle: &RadicalResult,
    run: &CriterionRun,
) -> Result<(), Failure> {
    report.per_element_results = run
        .verdicts
        .iter()
        .map(|v| VerdictRecord::new(v, Some(oracle.member_class_reps.contains(&v.element))))
        .collect();
    let equal = run.radical.agrees_with(oracle);
    report.oracle_comparison = Some(OracleComparison {
        oracle_order: Some(oracle.subgroup.order().clone()),
        criterion_order: Some(run.radical.subgroup.order().clone()),
        oracle_solvable: None,
        criterion_solvable: None,
        equal,
    });
    check_records(report, cfg)?;
    report.message = format!(
        "criterion order {} equals oracle order {}",
        run.radical.subgroup.order(),
        oracle.subgroup.order()
    );
    Ok(())
}

/// Per-element verdicts against oracle membership.
fn compare_elements(
    report: &mut VerificationReport,
    cfg: &SearchConfig,
    oracle: &RadicalResult,
    verdicts: Vec<solvrad_core::CriterionVerdict>,
) -> Result<(), Failure> {
    report.per_element_results = verdicts
        .iter()
        .map(|v| {
            let member = oracle.subgroup.contains(&v.element).unwrap_or(false);
            VerdictRecord::new(v, Some(member))
        })
        .collect();
    let equal = report
        .per_element_results
        .iter()
        .all(|r| r.oracle_member == Some(r.witness.is_none()));
    report.oracle_comparison = Some(OracleComparison {
        oracle_order: Some(oracle.subgroup.order().clone()),
        criterion_order: None,
        oracle_solvable: None,
        criterion_solvable: None,
        equal,
    });
    check_records(report, cfg)?;
    let refuted = report.per_element_results.iter().filter(|r| r.witness.is_some()).count();
    report.message = format!(
        "elements checked: {}, refuted: {refuted}, all agree with the oracle",
        report.per_element_results.len()
    );
    Ok(())
}

/// A refuted element inside the oracle radical, or an exhaustive in-radical
/// claim outside it, is a contradiction. An undecided element outside the
/// oracle radical is inconclusive.
fn check_records(report: &VerificationReport, cfg: &SearchConfig) -> Result<(), Failure> {
    for r in &report.per_element_results {
        let member = r.oracle_member.unwrap_or(false);
        match r.outcome {
            crate::report::OutcomeTag::Refuted if member => {
                return Err(contradiction(format!("{} is in the oracle radical but was refuted", r.element)))
            }
            crate::report::OutcomeTag::InRadical if !member => {
                return Err(contradiction(format!(
                    "{} passed every tuple but is outside the oracle radical",
                    r.element
                )))
            }
            crate::report::OutcomeTag::Undecided if !member => {
                return Err(inconclusive(format!("no witness found for {}", r.element)))
            }
            _ => {}
        }
    }
    if !report.witnesses_regenerate()? {
        return Err(contradiction("a reported witness does not regenerate".to_string()));
    }
    let equal = report.oracle_comparison.as_ref().is_some_and(|c| c.equal);
    if !equal {
        let what = "criterion and oracle differ".to_string();
        return Err(match cfg.mode {
            SearchMode::Exhaustive => contradiction(what),
            SearchMode::Randomized => inconclusive(what),
        });
    }
    Ok(())
}

fn compare_solvability(
    report: &mut VerificationReport,
    cfg: &SearchConfig,
    oracle: bool,
    claimed: Option<bool>,
) -> Result<(), Failure> {
    // a randomized run without a counterexample is consistent with solvability
    let criterion = claimed.unwrap_or(true);
    let equal = criterion == oracle;
    report.oracle_comparison = Some(OracleComparison {
        oracle_order: None,
        criterion_order: None,
        oracle_solvable: Some(oracle),
        criterion_solvable: claimed,
        equal,
    });
    if !report.witnesses_regenerate()? {
        return Err(contradiction("a reported witness does not regenerate".to_string()));
    }
    if !equal {
        return Err(if claimed.is_none() && cfg.mode == SearchMode::Randomized {
            inconclusive("no counterexample found for a nonsolvable group".to_string())
        } else {
            contradiction(format!("criterion says solvable={criterion}, oracle says {oracle}"))
        });
    }
    report.message = match claimed {
        Some(true) => "solvable; every pair generates a solvable subgroup".to_string(),
        Some(false) => "nonsolvable; counterexample reported".to_string(),
        None => "no counterexample found; group is solvable".to_string(),
    };
    Ok(())
}

/// Transposition triples in `S(n)`, plus a four-conjugate witness for `(1,2)`.
pub fn cmd_sharpness(n: usize, flags: &RunFlags) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new("sharpness");
    report.search_mode = Some(SearchMode::Exhaustive);
    let result = flags.in_pool(|| -> Result<(), Failure> {
        let sharp = transposition_triple_sharpness(n)?;
        let spec = GroupSpec::Symmetric(n);
        let group = Bsgs::build(&solvrad_core::construct(&spec)?);
        report.group = Some(GroupInfo {
            spec_text: spec.to_string(),
            degree: n,
            order: group.order().clone(),
        });
        let classes = classes_of(&group, flags)?;
        let t = Permutation::from_cycles(n, &[vec![1, 2]])?;
        let verdict = four_conjugate_test(&group, &classes, &t, &SearchConfig::exhaustive(flags.budget.unwrap_or(DEFAULT_TUPLE_BUDGET)))?;
        let witness = match &verdict.outcome {
            Outcome::Refuted(w) => Some(WitnessRecord::from(w)),
            _ => None,
        };
        report.sharpness = Some(SharpnessRecord::new(&sharp, witness.clone()));
        if !report.witnesses_regenerate()? {
            return Err(contradiction("the four-conjugate witness does not regenerate".to_string()));
        }
        if !sharp.all_solvable {
            return Err(contradiction(format!("a triple of transpositions in S({n}) generates a nonsolvable group")));
        }
        if witness.is_none() {
            return Err(contradiction(format!("no four-conjugate witness for (1,2) in S({n})")));
        }
        report.message = format!(
            "{} triples, all solvable (max order {}); (1,2) refuted with three conjugators",
            sharp.triples_checked, sharp.max_generated_order
        );
        Ok(())
    });
    finish(report, started, result)
}

/// One entry of a suite config.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub spec: String,
    /// `info`, `verify <theorem>` or `sharpness` (with `spec` holding `n`).
    pub command: String,
    #[serde(default)]
    pub flags: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    #[serde(default)]
    pub entries: Vec<SuiteEntry>,
}

#[derive(clap::Parser)]
#[command(no_binary_name = true)]
struct EntryFlags {
    #[command(flatten)]
    flags: RunFlags,
}

/// Entry flags layered over the suite-level flags.
fn entry_flags(entry: &SuiteEntry, suite: &RunFlags) -> Result<RunFlags, Failure> {
    use clap::Parser;
    let mut flags = EntryFlags::try_parse_from(&entry.flags)
        .map_err(|e| Failure::usage(format!("bad flags {:?}: {}", entry.flags, e.to_string().trim())))?
        .flags;
    if !flags.randomized && !flags.exhaustive && suite.randomized {
        flags.randomized = true;
    }
    flags.budget = flags.budget.or(suite.budget);
    flags.seed = flags.seed.or(suite.seed);
    flags.element_cap = flags.element_cap.or(suite.element_cap);
    // entries never write files or pick their own pool
    flags.out = None;
    flags.threads = None;
    Ok(flags)
}

fn run_entry(entry: &SuiteEntry, suite: &RunFlags, base_dir: &Path) -> Result<VerificationReport, Failure> {
    let flags = entry_flags(entry, suite)?;
    let words: Vec<&str> = entry.command.split_whitespace().collect();
    match words.as_slice() {
        ["info"] => Ok(cmd_info(&entry.spec, &flags, Some(base_dir))),
        ["verify", theorem] => {
            let theorem = Theorem::from_str(theorem, true).map_err(Failure::usage)?;
            Ok(cmd_verify(theorem, &entry.spec, &flags, Some(base_dir)))
        }
        ["sharpness"] => {
            let n = entry
                .spec
                .trim()
                .parse()
                .map_err(|_| Failure::usage(format!("sharpness needs an integer spec, got {:?}", entry.spec)))?;
            Ok(cmd_sharpness(n, &flags))
        }
        _ => Err(Failure::usage(format!("unknown command {:?}", entry.command))),
    }
}

pub fn load_suite_config(path: &Path) -> Result<SuiteConfig, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("bad config {}: {e}", path.display())))
}

/// Runs every entry of the config at `path`. Relative `file:` specs resolve
/// against the config's directory.
pub fn cmd_suite(path: &Path, flags: &RunFlags) -> SuiteReport {
    let started = Instant::now();
    let mut report = SuiteReport {
        tool_version: TOOL_VERSION.to_string(),
        entries: Vec::new(),
        passed: false,
        exit_code: EXIT_OK,
        message: String::new(),
        timing_ms: 0,
    };
    match load_suite_config(path) {
        Err(f) => {
            report.exit_code = f.exit_code;
            report.message = f.message;
        }
        Ok(config) => {
            let base_dir = path.parent().unwrap_or(Path::new("."));
            flags.in_pool(|| {
                for entry in &config.entries {
                    eprintln!("suite: {} {}", entry.command, entry.spec);
                    let (exit_code, run, error) = match run_entry(entry, flags, base_dir) {
                        Ok(r) => (r.exit_code, Some(r), None),
                        Err(f) => (f.exit_code, None, Some(f.message)),
                    };
                    report.entries.push(SuiteEntryReport {
                        spec: entry.spec.clone(),
                        command: entry.command.clone(),
                        flags: entry.flags.clone(),
                        exit_code,
                        report: run,
                        error,
                    });
                }
            });
            let codes = report.entries.iter().map(|e| e.exit_code);
            report.exit_code = if codes.clone().any(|c| c == EXIT_CONTRADICTION) {
                EXIT_CONTRADICTION
            } else {
                codes.into_iter().find(|&c| c != EXIT_OK).unwrap_or(EXIT_OK)
            };
            let failed = report.entries.iter().filter(|e| e.exit_code != EXIT_OK).count();
            report.message = format!("{} entries, {failed} failed", report.entries.len());
        }
    }
    report.passed = report.exit_code == EXIT_OK;
    report.timing_ms = started.elapsed().as_millis() as u64;
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn exhaustive() -> RunFlags {
        RunFlags::default()
    }

    #[test]
    fn info_examples() {
        let r = cmd_info("S(5)", &exhaustive(), None);
        assert_eq!(r.exit_code, 0, "{}", r.message);
        assert_eq!(r.group.as_ref().unwrap().order, BigUint::from(120u32));
        assert_eq!(r.classes.as_ref().unwrap().len(), 7);
        let r = cmd_info("C(1)", &exhaustive(), None);
        assert_eq!(r.exit_code, 0, "{}", r.message);
        assert_eq!(r.group.unwrap().order, BigUint::from(1u32));
    }

    #[test]
    fn info_errors() {
        assert_eq!(cmd_info("Q(5)", &exhaustive(), None).exit_code, EXIT_USAGE);
        let capped = RunFlags {
            element_cap: Some(100),
            ..RunFlags::default()
        };
        assert_eq!(cmd_info("S(5)", &capped, None).exit_code, EXIT_BUDGET);
    }

    #[test]
    fn verify_examples() {
        let r = cmd_verify(Theorem::Bs, "S(4)", &exhaustive(), None);
        assert_eq!(r.exit_code, 0, "{}", r.message);
        let cmp = r.oracle_comparison.unwrap();
        assert_eq!(cmp.criterion_order, Some(BigUint::from(4u32)));
        assert!(cmp.equal);

        let r = cmd_verify(Theorem::Pairs, "A(5)", &exhaustive(), None);
        assert_eq!(r.exit_code, 0, "{}", r.message);
        assert!(r.group_verdict.unwrap().class_witness.is_some());

        let r = cmd_verify(Theorem::Two, "direct(C(5),A(5))", &exhaustive(), None);
        assert_eq!(r.exit_code, 0, "{}", r.message);
        let passed: Vec<&str> = r
            .per_element_results
            .iter()
            .filter(|v| v.in_radical_claimed)
            .map(|v| v.element.as_str())
            .collect();
        // the four nontrivial powers of the C(5) generator
        assert_eq!(passed.len(), 4);
        assert!(passed.iter().all(|e| e.matches('(').count() == 1 && e.contains("1,")));
        assert!(r.per_element_results.iter().any(|v| v.witness.is_some()));
    }

    #[test]
    fn single_element_and_bad_element() {
        let flags = RunFlags {
            element: Some("(1,2,3,4,5)".into()),
            ..RunFlags::default()
        };
        let r = cmd_verify(Theorem::Two, "A(5)", &flags, None);
        assert_eq!(r.exit_code, 0, "{}", r.message);
        assert_eq!(r.per_element_results.len(), 1);
        let flags = RunFlags {
            element: Some("(1,2)".into()),
            ..RunFlags::default()
        };
        assert_eq!(cmd_verify(Theorem::Two, "A(5)", &flags, None).exit_code, EXIT_USAGE);
        assert_eq!(cmd_verify(Theorem::Bs, "A(5)", &flags, None).exit_code, EXIT_USAGE);
    }

    #[test]
    fn budget_exceeded() {
        let flags = RunFlags {
            budget: Some(10),
            ..RunFlags::default()
        };
        let r = cmd_verify(Theorem::Four, "S(5)", &flags, None);
        assert_eq!(r.exit_code, EXIT_BUDGET, "{}", r.message);
    }

    #[test]
    fn randomized_runs_never_claim_membership() {
        let flags = RunFlags {
            randomized: true,
            seed: Some(11),
            ..RunFlags::default()
        };
        let r = cmd_verify(Theorem::Four, "direct(C(5),A(5))", &flags, None);
        assert_eq!(r.exit_code, 0, "{}", r.message);
        assert!(r.per_element_results.iter().all(|v| !v.in_radical_claimed));
        assert_eq!(r.rng_seed, Some(11));
    }

    #[test]
    fn sharpness_range() {
        let r = cmd_sharpness(5, &exhaustive());
        assert_eq!(r.exit_code, 0, "{}", r.message);
        assert_eq!(r.sharpness.unwrap().triples_checked, 120);
        assert_eq!(cmd_sharpness(4, &exhaustive()).exit_code, EXIT_USAGE);
    }

    #[test]
    fn entry_flags_override_suite_flags() {
        let suite = RunFlags {
            randomized: true,
            seed: Some(5),
            threads: Some(2),
            ..RunFlags::default()
        };
        let entry = SuiteEntry {
            spec: "S(3)".into(),
            command: "verify bs".into(),
            flags: vec!["--exhaustive".into(), "--budget".into(), "99".into()],
        };
        let f = entry_flags(&entry, &suite).unwrap();
        assert!(!f.randomized && f.exhaustive);
        assert_eq!((f.budget, f.seed, f.threads), (Some(99), Some(5), None));
        let bad = SuiteEntry {
            flags: vec!["--frobnicate".into()],
            ..entry
        };
        assert_eq!(entry_flags(&bad, &suite).unwrap_err().exit_code, EXIT_USAGE);
    }
}
