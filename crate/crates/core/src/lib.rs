//! Finite permutation groups and conjugate-generated subgroup tests for the
//! solvable radical and the Fitting subgroup.
//!
//! Composition applies the right factor first; see [`perm`] for the
//! conjugation and commutator conventions.

pub mod bsgs;
pub mod classes;
pub mod criteria;
pub mod error;
pub mod order_serde;
pub mod perm;
pub mod structure;
pub mod zoo;

pub use bsgs::{normal_closure, Bsgs, GeneratorSet};
pub use classes::{
    centralizer, class_index, conjugacy_class_of, conjugacy_classes, ConjugacyClass, DEFAULT_ELEMENT_CAP,
};
pub use criteria::{
    baer_suzuki_set, class_pair_solvability, four_conjugate_radical, four_conjugate_test, ns_property_search,
    prime_order_elements, reduced_conjugate_orbit, thompson_test, transposition_triple_sharpness,
    two_conjugate_test, CriterionRun, CriterionVerdict, ElementProfile, Finding, Outcome, PairWitness,
    SearchConfig, SearchMode, SharpnessReport, Witness, DEFAULT_RANDOM_SAMPLES, DEFAULT_TUPLE_BUDGET,
};
pub use error::{Error, Result};
pub use perm::{CycleText, Permutation};
pub use structure::{
    derived_series, derived_subgroup, fitting_oracle, is_nilpotent, is_solvable, lower_central_series,
    solvable_radical_oracle, RadicalKind, RadicalMethod, RadicalResult, SeriesResult,
};
pub use zoo::{construct, load_group_file, psl2_perm, GroupFile, GroupSpec, LoadedGroup, PrimeFieldMatrix};
