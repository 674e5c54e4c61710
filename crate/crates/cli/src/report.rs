//! JSON report documents. Permutations are written in cycle notation against
//! the group's degree; orders are numbers when they fit in `u64`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use solvrad_core::{
    CriterionVerdict, Outcome, PairWitness, Permutation, SearchMode, SharpnessReport, Witness,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub spec_text: String,
    pub degree: usize,
    #[serde(with = "solvrad_core::order_serde")]
    pub order: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub representative: String,
    pub element_order: u64,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub element: String,
    pub conjugators: Vec<String>,
    #[serde(with = "solvrad_core::order_serde")]
    pub generated_order: BigUint,
    pub solvable: bool,
    pub nilpotent: bool,
}

impl From<&Witness> for WitnessRecord {
    fn from(w: &Witness) -> WitnessRecord {
        WitnessRecord {
            element: w.element.to_cycle_string(),
            conjugators: w.conjugators.iter().map(Permutation::to_cycle_string).collect(),
            generated_order: w.generated_order.clone(),
            solvable: w.solvable,
            nilpotent: w.nilpotent,
        }
    }
}

impl WitnessRecord {
    /// Re-parses the permutations; the recorded flags are kept as written, so
    /// [`Witness::regenerates`] on the result checks them.
    pub fn parse(&self, degree: usize) -> solvrad_core::Result<Witness> {
        Ok(Witness {
            element: Permutation::parse_cycles(&self.element, degree)?,
            conjugators: self
                .conjugators
                .iter()
                .map(|c| Permutation::parse_cycles(c, degree))
                .collect::<solvrad_core::Result<_>>()?,
            generated_order: self.generated_order.clone(),
            solvable: self.solvable,
            nilpotent: self.nilpotent,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitnessRecord {
    pub first: String,
    pub second: String,
    #[serde(with = "solvrad_core::order_serde")]
    pub generated_order: BigUint,
    pub solvable: bool,
}

impl From<&PairWitness> for PairWitnessRecord {
    fn from(w: &PairWitness) -> PairWitnessRecord {
        PairWitnessRecord {
            first: w.first.to_cycle_string(),
            second: w.second.to_cycle_string(),
            generated_order: w.generated_order.clone(),
            solvable: w.solvable,
        }
    }
}

impl PairWitnessRecord {
    pub fn parse(&self, degree: usize) -> solvrad_core::Result<PairWitness> {
        Ok(PairWitness {
            first: Permutation::parse_cycles(&self.first, degree)?,
            second: Permutation::parse_cycles(&self.second, degree)?,
            generated_order: self.generated_order.clone(),
            solvable: self.solvable,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OutcomeTag {
    InRadical,
    Refuted,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub element: String,
    pub element_order: u64,
    pub outcome: OutcomeTag,
    pub in_radical_claimed: bool,
    pub witness: Option<WitnessRecord>,
    pub search_mode: SearchMode,
    pub tuples_checked: u64,
    /// Membership in the oracle radical, when compared.
    pub oracle_member: Option<bool>,
}

impl VerdictRecord {
    pub fn new(v: &CriterionVerdict, oracle_member: Option<bool>) -> VerdictRecord {
        let (outcome, witness) = match &v.outcome {
            Outcome::InRadical => (OutcomeTag::InRadical, None),
            Outcome::Refuted(w) => (OutcomeTag::Refuted, Some(WitnessRecord::from(w))),
            Outcome::Undecided => (OutcomeTag::Undecided, None),
        };
        VerdictRecord {
            element: v.element.to_cycle_string(),
            element_order: u64::try_from(v.element.order()).unwrap_or(u64::MAX),
            outcome,
            in_radical_claimed: v.in_radical_claimed(),
            witness,
            search_mode: v.search_mode,
            tuples_checked: v.tuples_checked,
            oracle_member,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleComparison {
    #[serde(default, with = "solvrad_core::order_serde::option")]
    pub oracle_order: Option<BigUint>,
    #[serde(default, with = "solvrad_core::order_serde::option")]
    pub criterion_order: Option<BigUint>,
    pub oracle_solvable: Option<bool>,
    pub criterion_solvable: Option<bool>,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupVerdictRecord {
    pub claims_solvable: Option<bool>,
    pub pairs_checked: u64,
    pub class_witness: Option<WitnessRecord>,
    pub pair_witness: Option<PairWitnessRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharpnessRecord {
    pub n: usize,
    pub triples_checked: u64,
    pub all_solvable: bool,
    #[serde(with = "solvrad_core::order_serde")]
    pub max_generated_order: BigUint,
    pub first_nonsolvable: Option<Vec<String>>,
    /// Four-conjugate witness for the transposition `(1,2)` of `S(n)`.
    pub four_conjugate_witness: Option<WitnessRecord>,
}

impl SharpnessRecord {
    pub fn new(r: &SharpnessReport, four_conjugate_witness: Option<WitnessRecord>) -> SharpnessRecord {
        SharpnessRecord {
            n: r.n,
            triples_checked: r.triples_checked,
            all_solvable: r.all_solvable,
            max_generated_order: r.max_generated_order.clone(),
            first_nonsolvable: r
                .first_nonsolvable
                .as_ref()
                .map(|t| t.iter().map(Permutation::to_cycle_string).collect()),
            four_conjugate_witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSummary {
    pub solvable: bool,
    pub nilpotent: bool,
    #[serde(with = "order_list")]
    pub derived_series_orders: Vec<BigUint>,
    #[serde(with = "solvrad_core::order_serde")]
    pub solvable_radical_order: BigUint,
    #[serde(with = "solvrad_core::order_serde")]
    pub fitting_order: BigUint,
    pub class_count: usize,
}

mod order_list {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Wrapped(#[serde(with = "solvrad_core::order_serde")] BigUint);

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        v.iter().cloned().map(Wrapped).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Ok(Vec::<Wrapped>::deserialize(d)?.into_iter().map(|w| w.0).collect())
    }
}

/// One report per invocation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub command: String,
    pub group: Option<GroupInfo>,
    pub search_mode: Option<SearchMode>,
    pub rng_seed: Option<u64>,
    pub structure: Option<StructureSummary>,
    pub classes: Option<Vec<ClassSummary>>,
    pub per_element_results: Vec<VerdictRecord>,
    pub oracle_comparison: Option<OracleComparison>,
    pub group_verdict: Option<GroupVerdictRecord>,
    pub sharpness: Option<SharpnessRecord>,
    pub exit_code: i32,
    pub message: String,
    pub timing_ms: u64,
}

impl VerificationReport {
    pub fn new(command: impl Into<String>) -> VerificationReport {
        VerificationReport {
            tool_version: TOOL_VERSION.to_string(),
            command: command.into(),
            group: None,
            search_mode: None,
            rng_seed: None,
            structure: None,
            classes: None,
            per_element_results: Vec::new(),
            oracle_comparison: None,
            group_verdict: None,
            sharpness: None,
            exit_code: 0,
            message: String::new(),
            timing_ms: 0,
        }
    }

    /// Every serialized witness rebuilds to the recorded order and flags.
    pub fn witnesses_regenerate(&self) -> solvrad_core::Result<bool> {
        let degree = match &self.group {
            Some(g) => g.degree,
            None => self.sharpness.as_ref().map_or(0, |s| s.n),
        };
        let mut ok = true;
        for w in self.per_element_results.iter().filter_map(|r| r.witness.as_ref()) {
            ok &= w.parse(degree)?.regenerates();
        }
        if let Some(gv) = &self.group_verdict {
            if let Some(w) = &gv.class_witness {
                ok &= w.parse(degree)?.regenerates();
            }
            if let Some(w) = &gv.pair_witness {
                ok &= w.parse(degree)?.regenerates();
            }
        }
        if let Some(w) = self.sharpness.as_ref().and_then(|s| s.four_conjugate_witness.as_ref()) {
            ok &= w.parse(degree)?.regenerates();
        }
        Ok(ok)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntryReport {
    pub spec: String,
    pub command: String,
    pub flags: Vec<String>,
    pub exit_code: i32,
    pub report: Option<VerificationReport>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub tool_version: String,
    pub entries: Vec<SuiteEntryReport>,
    pub passed: bool,
    pub exit_code: i32,
    pub message: String,
    pub timing_ms: u64,
}

impl SuiteReport {
    /// Copy with every timing field zeroed.
    pub fn without_timing(&self) -> SuiteReport {
        let mut out = self.clone();
        out.timing_ms = 0;
        for e in &mut out.entries {
            if let Some(r) = &mut e.report {
                r.timing_ms = 0;
            }
        }
        out
    }
}
