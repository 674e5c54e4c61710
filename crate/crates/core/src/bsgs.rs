//! Stabilizer chains for permutation groups.
//!
//! [`Bsgs::build`] runs the deterministic incremental Schreier–Sims
//! algorithm: Schreier generators are checked level by level, bottom up, and
//! any residue that fails to sift becomes a new strong generator. Each level
//! stores an explicit transversal (coset representative and its inverse for
//! every orbit point), which keeps sifting to one composition per level.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;

const NONE: u32 = u32::MAX;

/// Generators of a permutation group, all of one degree, identities removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    degree: usize,
    generators: Vec<Permutation>,
}

impl GeneratorSet {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<GeneratorSet> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(GeneratorSet {
            degree,
            generators: generators.into_iter().filter(|g| !g.is_identity()).collect(),
        })
    }

    pub fn trivial(degree: usize) -> Result<GeneratorSet> {
        GeneratorSet::new(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<Permutation> {
        self.generators
    }
}

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    strong: Vec<Permutation>,
    orbit: Vec<u32>,
    slot: Vec<u32>,
    reps: Vec<Permutation>,
    reps_inv: Vec<Permutation>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Level {
        let mut slot = vec![NONE; degree];
        slot[base_point] = 0;
        Level {
            base_point,
            strong: Vec::new(),
            orbit: vec![base_point as u32],
            slot,
            reps: vec![Permutation::identity(degree)],
            reps_inv: vec![Permutation::identity(degree)],
        }
    }

    fn add_generator(&mut self, g: Permutation) {
        self.strong.push(g);
        self.close_orbit();
    }

    fn close_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let pt = self.orbit[i] as usize;
            for s in 0..self.strong.len() {
                let img = self.strong[s].image0(pt);
                if self.slot[img] == NONE {
                    let rep = self.strong[s].mul_unchecked(&self.reps[self.slot[pt] as usize]);
                    self.slot[img] = self.reps.len() as u32;
                    self.reps_inv.push(rep.inverse());
                    self.reps.push(rep);
                    self.orbit.push(img as u32);
                }
            }
            i += 1;
        }
    }

    #[inline]
    fn rep(&self, pt: usize) -> &Permutation {
        &self.reps[self.slot[pt] as usize]
    }

    #[inline]
    fn rep_inv(&self, pt: usize) -> &Permutation {
        &self.reps_inv[self.slot[pt] as usize]
    }
}

/// Base, strong generating set and transversals of a permutation group.
///
/// A built `Bsgs` is immutable through its public API (apart from
/// [`Bsgs::extend`]) and can be shared between threads.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
    order: BigUint,
}

impl Bsgs {
    pub fn trivial(degree: usize) -> Bsgs {
        Bsgs {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
            order: BigUint::one(),
        }
    }

    pub fn build(gens: &GeneratorSet) -> Bsgs {
        Bsgs::from_valid_generators(gens.degree, gens.generators.clone())
    }

    /// Convenience wrapper: validates degrees, then builds.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Bsgs> {
        Ok(Bsgs::build(&GeneratorSet::new(degree, generators)?))
    }

    /// Generators must share `degree`; identities are dropped.
    pub(crate) fn from_valid_generators(degree: usize, generators: Vec<Permutation>) -> Bsgs {
        let generators: Vec<Permutation> =
            generators.into_iter().filter(|g| !g.is_identity()).collect();
        let mut levels: Vec<Level> = Vec::new();
        for g in &generators {
            if levels.iter().all(|l| g.image0(l.base_point) == l.base_point) {
                let bp = g.first_moved().expect("non-identity generator");
                levels.push(Level::new(bp, degree));
            }
        }
        for g in &generators {
            for level in levels.iter_mut() {
                level.strong.push(g.clone());
                if g.image0(level.base_point) != level.base_point {
                    break;
                }
            }
        }
        for level in &mut levels {
            level.close_orbit();
        }
        let mut bsgs = Bsgs {
            degree,
            generators,
            levels,
            order: BigUint::one(),
        };
        if !bsgs.levels.is_empty() {
            bsgs.schreier_sims(bsgs.levels.len() - 1);
        }
        bsgs.recompute_order();
        bsgs
    }

    fn recompute_order(&mut self) {
        self.order = self
            .levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()));
    }

    /// Sifts `p` through the levels starting at `from`. Returns the residue and
    /// the index of the level where sifting stopped (`levels.len()` if it passed
    /// through all of them).
    fn strip(&self, p: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = p.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let pt = h.image0(level.base_point);
            if level.slot[pt] == NONE {
                return (h, l);
            }
            h = level.rep_inv(pt).mul_unchecked(&h);
        }
        (h, self.levels.len())
    }

    fn schreier_sims(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let li = i as usize;
            let found = self.first_failing_schreier_generator(li);
            match found {
                None => i -= 1,
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let bp = h.first_moved().expect("non-identity residue");
                        self.levels.push(Level::new(bp, self.degree));
                    }
                    for l in li + 1..=j {
                        self.levels[l].add_generator(h.clone());
                    }
                    i = j as isize;
                }
            }
        }
    }

    fn first_failing_schreier_generator(&self, li: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[li];
        for &beta in &level.orbit {
            let beta = beta as usize;
            let u_beta = level.rep(beta);
            for s in &level.strong {
                let gb = s.image0(beta);
                let u_gb = level.rep(gb);
                // The Schreier generator is trivial iff s ∘ u_beta == u_gb.
                let trivial = u_beta
                    .images()
                    .iter()
                    .zip(u_gb.images())
                    .all(|(&x, &y)| s.image0(x as usize) == y as usize);
                if trivial {
                    continue;
                }
                let schreier = level.rep_inv(gb).mul_unchecked(&s.mul_unchecked(u_beta));
                let (h, j) = self.strip(&schreier, li + 1);
                if j < self.levels.len() || !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    /// Adds `p` as a generator unless it is already a member. Returns whether
    /// the group grew.
    pub fn extend(&mut self, p: Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.extend_unchecked(p))
    }

    pub(crate) fn extend_unchecked(&mut self, p: Permutation) -> bool {
        if self.contains_unchecked(&p) {
            return false;
        }
        if self
            .levels
            .iter()
            .all(|l| p.image0(l.base_point) == l.base_point)
        {
            let bp = p.first_moved().expect("non-member is not the identity");
            self.levels.push(Level::new(bp, self.degree));
        }
        let mut deepest = 0;
        for l in 0..self.levels.len() {
            self.levels[l].add_generator(p.clone());
            deepest = l;
            if p.image0(self.levels[l].base_point) != self.levels[l].base_point {
                break;
            }
        }
        self.generators.push(p);
        self.schreier_sims(deepest);
        self.recompute_order();
        true
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    /// The defining generators (plus any added through [`Bsgs::extend`]).
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_set(&self) -> GeneratorSet {
        GeneratorSet {
            degree: self.degree,
            generators: self.generators.clone(),
        }
    }

    /// Base points, 1-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point + 1).collect()
    }

    /// All strong generators without duplicates, in insertion order.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for s in &level.strong {
                if !out.contains(s) {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Basic orbit lengths along the stabilizer chain.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Coset representatives of level `level`, keyed by 1-based orbit point.
    pub fn transversal(&self, level: usize) -> Vec<(usize, &Permutation)> {
        let l = &self.levels[level];
        l.orbit
            .iter()
            .map(|&pt| (pt as usize + 1, l.rep(pt as usize)))
            .collect()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.contains_unchecked(p))
    }

    pub(crate) fn contains_unchecked(&self, p: &Permutation) -> bool {
        let (h, j) = self.strip(p, 0);
        j == self.levels.len() && h.is_identity()
    }

    pub(crate) fn require_member(&self, p: &Permutation) -> Result<()> {
        if self.contains(p)? {
            Ok(())
        } else {
            Err(Error::NotAMember(p.to_string()))
        }
    }

    /// Whether every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &Bsgs) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains_unchecked(g))
    }

    /// Same group: equal orders and mutual containment of generators.
    pub fn same_group(&self, other: &Bsgs) -> bool {
        self.order == other.order && self.is_subgroup_of(other)
    }

    /// Orbit of the 1-based `point`, in breadth-first order.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut out = vec![point - 1];
        seen[point - 1] = true;
        let mut i = 0;
        while i < out.len() {
            for g in &self.generators {
                let img = g.image0(out[i]);
                if !std::mem::replace(&mut seen[img], true) {
                    out.push(img);
                }
            }
            i += 1;
        }
        out.into_iter().map(|p| p + 1).collect()
    }

    fn check_cap(&self, cap: u64) -> Result<()> {
        if self.order > BigUint::from(cap) {
            Err(Error::CapExceeded {
                order: self.order.clone(),
                cap,
            })
        } else {
            Ok(())
        }
    }

    /// Every element exactly once, as products of transversal elements.
    pub fn enumerate(&self, cap: u64) -> Result<Elements<'_>> {
        self.check_cap(cap)?;
        Ok(Elements {
            bsgs: self,
            counters: vec![0; self.levels.len()],
            done: false,
        })
    }

    /// Uniformly distributed element: one independent uniform coset
    /// representative per level, multiplied down the chain.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut out = Permutation::identity(self.degree);
        for level in &self.levels {
            let k = rng.gen_range(0..level.reps.len());
            out = out.mul_unchecked(&level.reps[k]);
        }
        out
    }
}

/// Iterator returned by [`Bsgs::enumerate`].
pub struct Elements<'a> {
    bsgs: &'a Bsgs,
    counters: Vec<usize>,
    done: bool,
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut out = Permutation::identity(self.bsgs.degree);
        for (level, &k) in self.bsgs.levels.iter().zip(&self.counters) {
            out = out.mul_unchecked(&level.reps[k]);
        }
        // odometer, last level fastest
        self.done = true;
        for l in (0..self.counters.len()).rev() {
            self.counters[l] += 1;
            if self.counters[l] < self.bsgs.levels[l].reps.len() {
                self.done = false;
                break;
            }
            self.counters[l] = 0;
        }
        Some(out)
    }
}

/// Normal closure of `seeds` inside `group`. Seeds must be members.
pub fn normal_closure(group: &Bsgs, seeds: &GeneratorSet) -> Result<Bsgs> {
    if seeds.degree() != group.degree() {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: seeds.degree(),
        });
    }
    for s in seeds.generators() {
        group.require_member(s)?;
    }
    Ok(normal_closure_unchecked(group, seeds.generators().iter().cloned()))
}

pub(crate) fn normal_closure_unchecked(
    group: &Bsgs,
    seeds: impl IntoIterator<Item = Permutation>,
) -> Bsgs {
    let mut closure = Bsgs::trivial(group.degree());
    let mut queue: VecDeque<Permutation> = seeds.into_iter().collect();
    while let Some(x) = queue.pop_front() {
        if closure.extend_unchecked(x.clone()) {
            for a in group.generators() {
                queue.push_back(x.conjugate_unchecked(a));
            }
        }
    }
    closure
}
