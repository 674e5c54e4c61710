//! Conjugate-generated subgroup criteria for radical membership.
//!
//! Every criterion quantifies over conjugates `x·g·x⁻¹`. Two reductions keep
//! the universal quantifier finite and small:
//!
//! * `⟨g, x·g·x⁻¹⟩` depends on `x` only through the conjugate `h = x·g·x⁻¹`,
//!   so `x` ranges over the class of `g` instead of the whole group;
//! * conjugating by `c ∈ C_G(g)` fixes `g` and moves `h` to `c·h·c⁻¹`, so only
//!   one `h` per `C_G(g)`-orbit on the class needs checking.
//!
//! For the four-conjugate criterion only the first of the three conjugates is
//! orbit-reduced; the other two range over the whole class.
//!
//! Exhaustive searches visit candidates in lexicographic order and report the
//! first failure in that order, so verdicts and witnesses do not depend on the
//! number of threads. Randomized searches can only refute membership.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bsgs::Bsgs;
use crate::classes::{class_index, ConjugacyClass};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::structure::{
    generates_nilpotent, generates_solvable, is_nilpotent, is_solvable, RadicalKind, RadicalMethod,
    RadicalResult,
};
use crate::zoo::is_prime;

pub const DEFAULT_TUPLE_BUDGET: u64 = 10_000_000;
pub const DEFAULT_RANDOM_SAMPLES: u64 = 1_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SearchMode {
    Exhaustive,
    Randomized,
}

/// How a criterion searches: in exhaustive mode `budget` caps the number of
/// reduced tuples per element, in randomized mode it is the number of samples
/// per element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub budget: u64,
    pub seed: u64,
}

impl SearchConfig {
    pub fn exhaustive(budget: u64) -> SearchConfig {
        SearchConfig {
            mode: SearchMode::Exhaustive,
            budget,
            seed: 0,
        }
    }

    pub fn randomized(samples: u64, seed: u64) -> SearchConfig {
        SearchConfig {
            mode: SearchMode::Randomized,
            budget: samples,
            seed,
        }
    }

    fn rng_for(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

impl Default for SearchConfig {
    fn default() -> SearchConfig {
        SearchConfig::exhaustive(DEFAULT_TUPLE_BUDGET)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Property {
    Solvable,
    Nilpotent,
}

impl Property {
    fn holds_for(self, degree: usize, gens: &[Permutation]) -> bool {
        match self {
            Property::Solvable => generates_solvable(degree, gens),
            Property::Nilpotent => generates_nilpotent(degree, gens),
        }
    }
}

/// `g` together with conjugators `x₁, …, x_k`; the subgroup in question is
/// `⟨g, x₁·g·x₁⁻¹, …, x_k·g·x_k⁻¹⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub element: Permutation,
    pub conjugators: Vec<Permutation>,
    pub generated_order: BigUint,
    pub solvable: bool,
    pub nilpotent: bool,
}

impl Witness {
    /// Builds the subgroup and records its order and flags.
    pub fn new(element: Permutation, conjugators: Vec<Permutation>) -> Result<Witness> {
        for x in &conjugators {
            if x.degree() != element.degree() {
                return Err(Error::DegreeMismatch {
                    left: element.degree(),
                    right: x.degree(),
                });
            }
        }
        let gens = conjugate_generators(&element, &conjugators);
        let h = Bsgs::from_valid_generators(element.degree(), gens);
        Ok(Witness {
            generated_order: h.order().clone(),
            solvable: is_solvable(&h),
            nilpotent: is_nilpotent(&h),
            element,
            conjugators,
        })
    }

    pub fn generators(&self) -> Vec<Permutation> {
        conjugate_generators(&self.element, &self.conjugators)
    }

    /// Rebuilding from `element` and `conjugators` reproduces every field.
    pub fn regenerates(&self) -> bool {
        Witness::new(self.element.clone(), self.conjugators.clone()).is_ok_and(|w| w == *self)
    }
}

fn conjugate_generators(g: &Permutation, conjugators: &[Permutation]) -> Vec<Permutation> {
    std::iter::once(g.clone())
        .chain(conjugators.iter().map(|x| g.conjugate_unchecked(x)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Every reduced tuple passed (exhaustive mode only).
    InRadical,
    Refuted(Witness),
    /// Randomized search found no witness; nothing is claimed.
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub element: Permutation,
    pub outcome: Outcome,
    pub search_mode: SearchMode,
    /// In-radical verdicts: the number of reduced tuples. Refutations: the
    /// 1-based position of the witness in the search order. Randomized runs:
    /// samples drawn.
    pub tuples_checked: u64,
}

impl CriterionVerdict {
    pub fn in_radical_claimed(&self) -> bool {
        matches!(self.outcome, Outcome::InRadical)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Refuted(w) => Some(w),
            _ => None,
        }
    }
}

/// Order data for one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementProfile {
    pub element: Permutation,
    pub order: u64,
    /// The order is a prime larger than 3.
    pub prime_order_gt3: bool,
}

impl ElementProfile {
    pub fn of(element: &Permutation) -> ElementProfile {
        // a permutation of prime order p is a product of p-cycles, so p fits
        let order = element.order().to_u64().unwrap_or(u64::MAX);
        ElementProfile {
            element: element.clone(),
            order,
            prime_order_gt3: order > 3 && is_prime(order),
        }
    }
}

/// One `C_G(x)`-orbit on the class of `x`: its smallest element and a
/// conjugator carrying `x` to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedConjugate {
    pub conjugate: Permutation,
    pub conjugator: Permutation,
    pub orbit_size: usize,
}

/// Orbit representatives of `cent` acting by conjugation on `class`, sorted.
///
/// `x` must be the class representative and `cent` must centralize it.
pub fn reduced_conjugate_orbit(
    x: &Permutation,
    class: &ConjugacyClass,
    cent: &Bsgs,
) -> Result<Vec<ReducedConjugate>> {
    if x != class.representative() {
        return Err(Error::InvalidParameter(format!(
            "{x} is not the representative of its class"
        )));
    }
    for c in cent.generators() {
        if c.degree() != x.degree() || &x.conjugate_unchecked(c) != x {
            return Err(Error::InvalidParameter(format!("{c} does not centralize {x}")));
        }
    }
    let n = class.class_size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for c in cent.generators() {
        for (i, e) in class.elements().iter().enumerate() {
            let j = class
                .position(&e.conjugate_unchecked(c))
                .expect("class is closed under conjugation");
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            // keep the smaller index as root so roots are orbit minima
            if ri < rj {
                parent[rj] = ri;
            } else if rj < ri {
                parent[ri] = rj;
            }
        }
    }
    let mut sizes = vec![0usize; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        sizes[r] += 1;
    }
    Ok((0..n)
        .filter(|&i| parent[i] == i)
        .map(|i| ReducedConjugate {
            conjugate: class.elements()[i].clone(),
            conjugator: class.conjugator(i).clone(),
            orbit_size: sizes[i],
        })
        .collect())
}

fn reduced(class: &ConjugacyClass) -> Vec<ReducedConjugate> {
    reduced_conjugate_orbit(class.representative(), class, class.centralizer())
        .expect("class representative and its centralizer")
}

fn check_budget(needed: u64, budget: u64) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded {
            needed: BigUint::from(needed),
            budget,
        })
    } else {
        Ok(())
    }
}

/// Exhaustive universal test of `⟨rep, h⟩` over the reduced conjugates of the
/// class representative.
fn exhaustive_pair(class: &ConjugacyClass, prop: Property, budget: u64) -> Result<CriterionVerdict> {
    let rep = class.representative();
    let reps = reduced(class);
    check_budget(reps.len() as u64, budget)?;
    let hit = reps.par_iter().position_first(|r| {
        !prop.holds_for(rep.degree(), &[rep.clone(), r.conjugate.clone()])
    });
    Ok(match hit {
        None => CriterionVerdict {
            element: rep.clone(),
            outcome: Outcome::InRadical,
            search_mode: SearchMode::Exhaustive,
            tuples_checked: reps.len() as u64,
        },
        Some(k) => CriterionVerdict {
            element: rep.clone(),
            outcome: Outcome::Refuted(Witness::new(rep.clone(), vec![reps[k].conjugator.clone()])?),
            search_mode: SearchMode::Exhaustive,
            tuples_checked: k as u64 + 1,
        },
    })
}

/// Samples `arity`-tuples of uniform conjugators until the property fails.
fn randomized_conjugates(
    group: &Bsgs,
    g: &Permutation,
    arity: usize,
    prop: Property,
    cfg: &SearchConfig,
    stream: u64,
) -> Result<CriterionVerdict> {
    let mut rng = cfg.rng_for(stream);
    for sample in 0..cfg.budget {
        let xs: Vec<Permutation> = (0..arity).map(|_| group.random_element(&mut rng)).collect();
        if !prop.holds_for(g.degree(), &conjugate_generators(g, &xs)) {
            return Ok(CriterionVerdict {
                element: g.clone(),
                outcome: Outcome::Refuted(Witness::new(g.clone(), xs)?),
                search_mode: SearchMode::Randomized,
                tuples_checked: sample + 1,
            });
        }
    }
    Ok(CriterionVerdict {
        element: g.clone(),
        outcome: Outcome::Undecided,
        search_mode: SearchMode::Randomized,
        tuples_checked: cfg.budget,
    })
}

/// Carries a verdict for the class representative over to `g = x₀·rep·x₀⁻¹`.
fn transport(verdict: CriterionVerdict, g: &Permutation, x0: &Permutation) -> Result<CriterionVerdict> {
    let outcome = match verdict.outcome {
        Outcome::Refuted(w) => {
            let x0_inv = x0.inverse();
            let conjugators = w
                .conjugators
                .iter()
                .map(|y| x0.mul_unchecked(&y.mul_unchecked(&x0_inv)))
                .collect();
            Outcome::Refuted(Witness::new(g.clone(), conjugators)?)
        }
        other => other,
    };
    Ok(CriterionVerdict {
        element: g.clone(),
        outcome,
        ..verdict
    })
}

fn require_prime_order_gt3(g: &Permutation) -> Result<()> {
    if ElementProfile::of(g).prime_order_gt3 {
        Ok(())
    } else {
        Err(Error::OrderPrecondition {
            element: g.to_string(),
            order: g.order(),
        })
    }
}

/// For `g` of prime order greater than 3: `g` lies in the solvable radical iff
/// `⟨g, x·g·x⁻¹⟩` is solvable for every `x`.
pub fn two_conjugate_test(
    group: &Bsgs,
    classes: &[ConjugacyClass],
    g: &Permutation,
    cfg: &SearchConfig,
) -> Result<CriterionVerdict> {
    group.require_member(g)?;
    require_prime_order_gt3(g)?;
    match cfg.mode {
        SearchMode::Exhaustive => {
            let class = &classes[class_index(classes, g)?];
            let verdict = exhaustive_pair(class, Property::Solvable, cfg.budget)?;
            let x0 = class.conjugator_of(g).expect("g is in its class");
            transport(verdict, g, x0)
        }
        SearchMode::Randomized => randomized_conjugates(group, g, 1, Property::Solvable, cfg, 0),
    }
}

/// Randomized falsifier for the two-conjugate property: samples uniform `x`
/// and returns the first `x` with `⟨g, x·g·x⁻¹⟩` nonsolvable, if any.
pub fn ns_property_search(group: &Bsgs, g: &Permutation, budget: u64, seed: u64) -> Result<Option<Witness>> {
    group.require_member(g)?;
    require_prime_order_gt3(g)?;
    let cfg = SearchConfig::randomized(budget, seed);
    let verdict = randomized_conjugates(group, g, 1, Property::Solvable, &cfg, 0)?;
    Ok(verdict.witness().cloned())
}

/// Result of running a criterion over all classes.
#[derive(Clone, Debug)]
pub struct CriterionRun {
    /// Normal closure of the representatives not refuted. In randomized mode
    /// this is only an upper bound for the radical.
    pub radical: RadicalResult,
    /// One verdict per class, in class order.
    pub verdicts: Vec<CriterionVerdict>,
}

fn run_over_classes(
    group: &Bsgs,
    classes: &[ConjugacyClass],
    kind: RadicalKind,
    per_class: impl Fn(usize, &ConjugacyClass) -> Result<CriterionVerdict> + Sync,
) -> Result<CriterionRun> {
    let verdicts = classes
        .par_iter()
        .enumerate()
        .map(|(i, class)| per_class(i, class))
        .collect::<Result<Vec<_>>>()?;
    let members = verdicts
        .iter()
        .filter(|v| v.witness().is_none())
        .map(|v| v.element.clone())
        .collect();
    Ok(CriterionRun {
        radical: RadicalResult::from_members(group, members, kind, RadicalMethod::Criterion),
        verdicts,
    })
}

/// Classes whose representative `g` has `⟨g, x·g·x⁻¹⟩` nilpotent for all `x`.
pub fn baer_suzuki_set(group: &Bsgs, classes: &[ConjugacyClass], cfg: &SearchConfig) -> Result<CriterionRun> {
    run_over_classes(group, classes, RadicalKind::Fitting, |i, class| match cfg.mode {
        SearchMode::Exhaustive => exhaustive_pair(class, Property::Nilpotent, cfg.budget),
        SearchMode::Randomized => randomized_conjugates(
            group,
            class.representative(),
            1,
            Property::Nilpotent,
            cfg,
            i as u64,
        ),
    })
}

fn four_conjugate_budget(class: &ConjugacyClass, budget: u64) -> Result<()> {
    let c = BigUint::from(class.class_size());
    let needed = &c * &c * &c;
    if needed > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// `g` lies in the solvable radical iff `⟨g, a·g·a⁻¹, b·g·b⁻¹, c·g·c⁻¹⟩` is
/// solvable for all `a, b, c`. Exhaustive mode requires `|class(g)|³ ≤ budget`.
pub fn four_conjugate_test(
    group: &Bsgs,
    classes: &[ConjugacyClass],
    g: &Permutation,
    cfg: &SearchConfig,
) -> Result<CriterionVerdict> {
    group.require_member(g)?;
    match cfg.mode {
        SearchMode::Exhaustive => {
            let class = &classes[class_index(classes, g)?];
            four_conjugate_budget(class, cfg.budget)?;
            let verdict = four_conjugate_exhaustive(class)?;
            let x0 = class.conjugator_of(g).expect("g is in its class");
            transport(verdict, g, x0)
        }
        SearchMode::Randomized => randomized_conjugates(group, g, 3, Property::Solvable, cfg, 0),
    }
}

/// Classes whose representative passes [`four_conjugate_test`].
///
/// Exhaustive mode checks the budget for every class before doing any work.
pub fn four_conjugate_radical(
    group: &Bsgs,
    classes: &[ConjugacyClass],
    cfg: &SearchConfig,
) -> Result<CriterionRun> {
    if cfg.mode == SearchMode::Exhaustive {
        for class in classes {
            four_conjugate_budget(class, cfg.budget)?;
        }
    }
    run_over_classes(group, classes, RadicalKind::SolvableRadical, |i, class| match cfg.mode {
        SearchMode::Exhaustive => four_conjugate_exhaustive(class),
        SearchMode::Randomized => randomized_conjugates(
            group,
            class.representative(),
            3,
            Property::Solvable,
            cfg,
            i as u64,
        ),
    })
}

fn four_conjugate_exhaustive(class: &ConjugacyClass) -> Result<CriterionVerdict> {
    let rep = class.representative();
    let reps = reduced(class);
    let c = class.class_size();
    let elems = class.elements();
    let total = reps.len() * c * c;
    let hit = (0..total).into_par_iter().position_first(|t| {
        let (i1, i2, i3) = (t / (c * c), (t / c) % c, t % c);
        let gens = [
            rep.clone(),
            reps[i1].conjugate.clone(),
            elems[i2].clone(),
            elems[i3].clone(),
        ];
        !generates_solvable(rep.degree(), &gens)
    });
    Ok(match hit {
        None => CriterionVerdict {
            element: rep.clone(),
            outcome: Outcome::InRadical,
            search_mode: SearchMode::Exhaustive,
            tuples_checked: total as u64,
        },
        Some(t) => {
            let (i1, i2, i3) = (t / (c * c), (t / c) % c, t % c);
            let conjugators = vec![
                reps[i1].conjugator.clone(),
                class.conjugator(i2).clone(),
                class.conjugator(i3).clone(),
            ];
            CriterionVerdict {
                element: rep.clone(),
                outcome: Outcome::Refuted(Witness::new(rep.clone(), conjugators)?),
                search_mode: SearchMode::Exhaustive,
                tuples_checked: t as u64 + 1,
            }
        }
    })
}

/// Outcome of a whole-group solvability criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Finding<W> {
    /// Every checked subgroup was solvable (exhaustive mode only).
    AllSolvable,
    Counterexample(W),
    /// Randomized search found no counterexample.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupVerdict<W> {
    pub finding: Finding<W>,
    pub search_mode: SearchMode,
    pub pairs_checked: u64,
}

impl<W> GroupVerdict<W> {
    /// `Some(true)` if the criterion certifies solvability, `Some(false)` if
    /// it found a counterexample, `None` if inconclusive.
    pub fn claims_solvable(&self) -> Option<bool> {
        match self.finding {
            Finding::AllSolvable => Some(true),
            Finding::Counterexample(_) => Some(false),
            Finding::Inconclusive => None,
        }
    }

    pub fn counterexample(&self) -> Option<&W> {
        match &self.finding {
            Finding::Counterexample(w) => Some(w),
            _ => None,
        }
    }
}

pub type ClassPairVerdict = GroupVerdict<Witness>;
pub type ThompsonVerdict = GroupVerdict<PairWitness>;

/// True iff, in every class, the representative and each of its conjugates
/// generate a solvable subgroup. The first failing class (in class order)
/// provides the witness.
pub fn class_pair_solvability(
    group: &Bsgs,
    classes: &[ConjugacyClass],
    cfg: &SearchConfig,
) -> Result<ClassPairVerdict> {
    let mut checked = 0u64;
    for (i, class) in classes.iter().enumerate() {
        let verdict = match cfg.mode {
            SearchMode::Exhaustive => exhaustive_pair(class, Property::Solvable, cfg.budget)?,
            SearchMode::Randomized => randomized_conjugates(
                group,
                class.representative(),
                1,
                Property::Solvable,
                cfg,
                i as u64,
            )?,
        };
        checked += verdict.tuples_checked;
        if let Outcome::Refuted(w) = verdict.outcome {
            return Ok(GroupVerdict {
                finding: Finding::Counterexample(w),
                search_mode: cfg.mode,
                pairs_checked: checked,
            });
        }
    }
    Ok(GroupVerdict {
        finding: match cfg.mode {
            SearchMode::Exhaustive => Finding::AllSolvable,
            SearchMode::Randomized => Finding::Inconclusive,
        },
        search_mode: cfg.mode,
        pairs_checked: checked,
    })
}

/// Two arbitrary elements and the subgroup they generate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub first: Permutation,
    pub second: Permutation,
    pub generated_order: BigUint,
    pub solvable: bool,
}

impl PairWitness {
    pub fn new(first: Permutation, second: Permutation) -> Result<PairWitness> {
        if first.degree() != second.degree() {
            return Err(Error::DegreeMismatch {
                left: first.degree(),
                right: second.degree(),
            });
        }
        let h = Bsgs::from_valid_generators(first.degree(), vec![first.clone(), second.clone()]);
        Ok(PairWitness {
            generated_order: h.order().clone(),
            solvable: is_solvable(&h),
            first,
            second,
        })
    }

    pub fn regenerates(&self) -> bool {
        PairWitness::new(self.first.clone(), self.second.clone()).is_ok_and(|w| w == *self)
    }
}

/// True iff every two elements generate a solvable subgroup. Up to
/// simultaneous conjugation the first element is a class representative; the
/// second ranges over the whole group.
pub fn thompson_test(
    group: &Bsgs,
    classes: &[ConjugacyClass],
    element_cap: u64,
    cfg: &SearchConfig,
) -> Result<ThompsonVerdict> {
    let degree = group.degree();
    match cfg.mode {
        SearchMode::Exhaustive => {
            let mut elements: Vec<Permutation> = group.enumerate(element_cap)?.collect();
            elements.sort_unstable();
            let total = (classes.len() as u64).saturating_mul(elements.len() as u64);
            check_budget(total, cfg.budget)?;
            let mut checked = 0u64;
            for class in classes {
                let a = class.representative();
                let hit = elements
                    .par_iter()
                    .position_first(|b| !generates_solvable(degree, &[a.clone(), b.clone()]));
                match hit {
                    Some(k) => {
                        return Ok(GroupVerdict {
                            finding: Finding::Counterexample(PairWitness::new(a.clone(), elements[k].clone())?),
                            search_mode: SearchMode::Exhaustive,
                            pairs_checked: checked + k as u64 + 1,
                        })
                    }
                    None => checked += elements.len() as u64,
                }
            }
            Ok(GroupVerdict {
                finding: Finding::AllSolvable,
                search_mode: SearchMode::Exhaustive,
                pairs_checked: checked,
            })
        }
        SearchMode::Randomized => {
            let mut checked = 0u64;
            for (i, class) in classes.iter().enumerate() {
                let a = class.representative();
                let mut rng = cfg.rng_for(i as u64);
                for _ in 0..cfg.budget {
                    checked += 1;
                    let b = group.random_element(&mut rng);
                    if !generates_solvable(degree, &[a.clone(), b.clone()]) {
                        return Ok(GroupVerdict {
                            finding: Finding::Counterexample(PairWitness::new(a.clone(), b)?),
                            search_mode: SearchMode::Randomized,
                            pairs_checked: checked,
                        });
                    }
                }
            }
            Ok(GroupVerdict {
                finding: Finding::Inconclusive,
                search_mode: SearchMode::Randomized,
                pairs_checked: checked,
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpnessReport {
    pub n: usize,
    pub triples_checked: u64,
    pub all_solvable: bool,
    pub max_generated_order: BigUint,
    /// First triple (in lexicographic order) generating a nonsolvable group.
    pub first_nonsolvable: Option<[Permutation; 3]>,
}

/// Checks every unordered triple of distinct transpositions of `S(n)`,
/// `5 ≤ n ≤ 8`, for solvability of the generated subgroup.
pub fn transposition_triple_sharpness(n: usize) -> Result<SharpnessReport> {
    if !(5..=8).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "transposition triples need 5 <= n <= 8, got {n}"
        )));
    }
    let transpositions: Vec<Permutation> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .map(|(a, b)| Permutation::from_cycles(n, &[vec![a, b]]).expect("transposition"))
        .collect();
    let m = transpositions.len();
    let triples: Vec<[usize; 3]> = (0..m)
        .flat_map(|i| (i + 1..m).flat_map(move |j| (j + 1..m).map(move |k| [i, j, k])))
        .collect();
    let results: Vec<(BigUint, bool)> = triples
        .par_iter()
        .map(|t| {
            let gens = t.iter().map(|&i| transpositions[i].clone()).collect();
            let h = Bsgs::from_valid_generators(n, gens);
            (h.order().clone(), is_solvable(&h))
        })
        .collect();
    let first_nonsolvable = results
        .iter()
        .position(|(_, solvable)| !solvable)
        .map(|k| triples[k].map(|i| transpositions[i].clone()));
    Ok(SharpnessReport {
        n,
        triples_checked: triples.len() as u64,
        all_solvable: first_nonsolvable.is_none(),
        max_generated_order: results.iter().map(|(o, _)| o.clone()).max().unwrap_or_default(),
        first_nonsolvable,
    })
}

/// Profiles of the class representatives whose order is a prime above 3.
pub fn prime_order_elements(classes: &[ConjugacyClass]) -> Vec<ElementProfile> {
    classes
        .iter()
        .map(|c| ElementProfile::of(c.representative()))
        .filter(|p| p.prime_order_gt3)
        .collect()
}
