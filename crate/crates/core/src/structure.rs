//! Derived and lower central series, and the oracle radicals.
//!
//! The oracles decide radical membership class by class: an element lies in
//! the solvable radical iff its normal closure is solvable, and in the Fitting
//! subgroup iff its normal closure is nilpotent.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bsgs::{normal_closure_unchecked, Bsgs};
use crate::classes::ConjugacyClass;
use crate::perm::Permutation;

/// A descending chain of subgroups, ending either at the trivial group
/// (`terminated`) or at a repeated nontrivial term (`stabilized`).
#[derive(Clone, Debug)]
pub struct SeriesResult {
    pub terms: Vec<Bsgs>,
    pub terminated: bool,
    pub stabilized: bool,
}

impl SeriesResult {
    /// Last term: trivial when terminated, otherwise the perfect (or
    /// hypercentral-quotient) core where the series stuck.
    pub fn last(&self) -> &Bsgs {
        self.terms.last().expect("series has at least one term")
    }
}

/// Normal closure in `h` of `{[x, y] : x ∈ xs, y ∈ ys}`.
fn commutator_closure(h: &Bsgs, xs: &[Permutation], ys: &[Permutation]) -> Bsgs {
    let mut seeds = Vec::new();
    for x in xs {
        for y in ys {
            let c = x.commutator_unchecked(y);
            if !c.is_identity() {
                seeds.push(c);
            }
        }
    }
    normal_closure_unchecked(h, seeds)
}

/// `[H, H]`, as the normal closure of commutators of generator pairs.
pub fn derived_subgroup(h: &Bsgs) -> Bsgs {
    let gens = h.generators();
    let mut seeds = Vec::new();
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i + 1..] {
            let c = x.commutator_unchecked(y);
            if !c.is_identity() {
                seeds.push(c);
            }
        }
    }
    normal_closure_unchecked(h, seeds)
}

fn series(h: &Bsgs, mut step: impl FnMut(&Bsgs) -> Bsgs) -> SeriesResult {
    let mut terms = vec![h.clone()];
    loop {
        let prev = terms.last().expect("nonempty");
        if prev.is_trivial() {
            return SeriesResult {
                terms,
                terminated: true,
                stabilized: false,
            };
        }
        let next = step(prev);
        let stuck = next.order() == prev.order();
        terms.push(next);
        if stuck {
            return SeriesResult {
                terms,
                terminated: false,
                stabilized: true,
            };
        }
    }
}

pub fn derived_series(h: &Bsgs) -> SeriesResult {
    series(h, derived_subgroup)
}

/// `γ₁ = H`, `γᵢ₊₁ = [γᵢ, H]`.
pub fn lower_central_series(h: &Bsgs) -> SeriesResult {
    series(h, |term| {
        commutator_closure(h, term.generators(), h.generators())
    })
}

pub fn is_solvable(h: &Bsgs) -> bool {
    derived_series(h).terminated
}

pub fn is_nilpotent(h: &Bsgs) -> bool {
    lower_central_series(h).terminated
}

/// Solvability of the subgroup generated by `gens` (all of degree `degree`).
pub(crate) fn generates_solvable(degree: usize, gens: &[Permutation]) -> bool {
    is_solvable(&Bsgs::from_valid_generators(degree, gens.to_vec()))
}

pub(crate) fn generates_nilpotent(degree: usize, gens: &[Permutation]) -> bool {
    is_nilpotent(&Bsgs::from_valid_generators(degree, gens.to_vec()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RadicalKind {
    SolvableRadical,
    Fitting,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RadicalMethod {
    Oracle,
    Criterion,
}

/// A radical computed either by an oracle or by one of the conjugate criteria.
///
/// `subgroup` is the normal closure of `member_class_reps`, which equals the
/// union of the member classes.
#[derive(Clone, Debug)]
pub struct RadicalResult {
    pub subgroup: Bsgs,
    pub kind: RadicalKind,
    pub member_class_reps: Vec<Permutation>,
    pub method: RadicalMethod,
}

impl RadicalResult {
    pub(crate) fn from_members(
        group: &Bsgs,
        member_class_reps: Vec<Permutation>,
        kind: RadicalKind,
        method: RadicalMethod,
    ) -> RadicalResult {
        RadicalResult {
            subgroup: normal_closure_unchecked(group, member_class_reps.iter().cloned()),
            kind,
            member_class_reps,
            method,
        }
    }

    /// Same subgroup and the same member classes.
    pub fn agrees_with(&self, other: &RadicalResult) -> bool {
        self.subgroup.same_group(&other.subgroup) && self.member_class_reps == other.member_class_reps
    }
}

fn oracle(
    group: &Bsgs,
    classes: &[ConjugacyClass],
    kind: RadicalKind,
    test: fn(&Bsgs) -> bool,
) -> RadicalResult {
    let members: Vec<Option<Permutation>> = classes
        .par_iter()
        .map(|class| {
            let rep = class.representative();
            let closure = normal_closure_unchecked(group, [rep.clone()]);
            test(&closure).then(|| rep.clone())
        })
        .collect();
    RadicalResult::from_members(
        group,
        members.into_iter().flatten().collect(),
        kind,
        RadicalMethod::Oracle,
    )
}

/// Largest solvable normal subgroup.
pub fn solvable_radical_oracle(group: &Bsgs, classes: &[ConjugacyClass]) -> RadicalResult {
    oracle(group, classes, RadicalKind::SolvableRadical, is_solvable)
}

/// Largest nilpotent normal subgroup.
pub fn fitting_oracle(group: &Bsgs, classes: &[ConjugacyClass]) -> RadicalResult {
    oracle(group, classes, RadicalKind::Fitting, is_nilpotent)
}
