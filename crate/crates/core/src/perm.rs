//! Permutations of `{1..n}` and disjoint-cycle text.
//!
//! # Conventions
//!
//! Points are 1-based on every public surface (cycle text, [`Permutation::apply`],
//! [`Permutation::from_images`]). Internally the image array is 0-based.
//!
//! Composition applies the **right** factor first:
//! `compose(p, q)` (also written `&p * &q`) maps `i` to `p(q(i))`.
//! With that convention
//!
//! * `conjugate(g, a) = a * g * a⁻¹`, so `conjugate(g, a)` maps `a(i)` to `a(g(i))`;
//! * `commutator(x, y) = x * y * x⁻¹ * y⁻¹`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

/// A bijection of `{1..degree}`.
///
/// Ordering is lexicographic on the image array, which is the canonical search
/// order used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &img in images {
            if img == 0 || img > degree {
                return Err(Error::PointOutOfRange { point: img, degree });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::RepeatedPoint(img));
            }
            out.push((img - 1) as u32);
        }
        Ok(Permutation {
            images: out.into_boxed_slice(),
        })
    }

    /// Wraps a 0-based image array that is already known to be a bijection.
    pub(crate) fn from_raw(images: Vec<u32>) -> Permutation {
        debug_assert!({
            let mut seen = vec![false; images.len()];
            images
                .iter()
                .all(|&i| !std::mem::replace(&mut seen[i as usize], true))
        });
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Builds a permutation from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(Error::PointOutOfRange { point: pt, degree });
                }
                if std::mem::replace(&mut seen[pt - 1], true) {
                    return Err(Error::RepeatedPoint(pt));
                }
            }
            for (k, &pt) in cycle.iter().enumerate() {
                images[pt - 1] = (cycle[(k + 1) % cycle.len()] - 1) as u32;
            }
        }
        Ok(Permutation::from_raw(images))
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `point`.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 0-based image array.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub(crate) fn image0(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Smallest moved point (0-based), if any.
    pub(crate) fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &j)| i != j as usize)
            .map(|(i, _)| i)
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() == other.degree() {
            Ok(())
        } else {
            Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            })
        }
    }

    /// `self ∘ q`: apply `q` first, then `self`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        self.check_degree(q)?;
        Ok(self.mul_unchecked(q))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, q: &Permutation) -> Permutation {
        Permutation {
            images: q.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation::from_raw(inv)
    }

    /// `a ∘ self ∘ a⁻¹`.
    pub fn conjugate(&self, a: &Permutation) -> Result<Permutation> {
        self.check_degree(a)?;
        Ok(self.conjugate_unchecked(a))
    }

    #[inline]
    pub(crate) fn conjugate_unchecked(&self, a: &Permutation) -> Permutation {
        let mut out = vec![0u32; self.degree()];
        for (i, &gi) in self.images.iter().enumerate() {
            out[a.images[i] as usize] = a.images[gi as usize];
        }
        Permutation::from_raw(out)
    }

    /// `[x, y] = x ∘ y ∘ x⁻¹ ∘ y⁻¹`.
    pub fn commutator(&self, y: &Permutation) -> Result<Permutation> {
        self.check_degree(y)?;
        Ok(self.commutator_unchecked(y))
    }

    pub(crate) fn commutator_unchecked(&self, y: &Permutation) -> Permutation {
        let xy = self.mul_unchecked(y);
        let yx = y.mul_unchecked(self);
        // x y x⁻¹ y⁻¹ = (x y) (y x)⁻¹
        xy.mul_unchecked(&yx.inverse())
    }

    /// Disjoint cycles of length at least two, 1-based, each starting at its
    /// smallest point and sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image0(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut pt = start;
            while !seen[pt] {
                seen[pt] = true;
                cycle.push(pt + 1);
                pt = self.image0(pt);
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths (including fixed points), sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lengths.iter().sum();
        lengths.extend(std::iter::repeat_n(1, self.degree() - moved));
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> BigUint {
        self.cycles()
            .iter()
            .fold(BigUint::one(), |acc, c| acc.lcm(&BigUint::from(c.len())))
    }

    /// `self^k` for non-negative `k`.
    pub fn pow(&self, k: u64) -> Permutation {
        let mut out = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            k >>= 1;
        }
        out
    }

    /// Canonical cycle text; the identity prints as the empty string.
    pub fn to_cycle_string(&self) -> String {
        let mut s = String::new();
        for cycle in self.cycles() {
            s.push('(');
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&pt.to_string());
            }
            s.push(')');
        }
        s
    }

    pub fn to_cycle_text(&self) -> CycleText {
        CycleText {
            text: self.to_cycle_string(),
            degree: self.degree(),
        }
    }

    /// Parses disjoint-cycle text such as `"(1,2,3)(4,5)"` at the given degree.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let cycles = parse_cycle_list(text)?;
        Permutation::from_cycles(degree, &cycles)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            write!(f, "()[{}]", self.degree())
        } else {
            write!(f, "{}[{}]", self.to_cycle_string(), self.degree())
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            f.write_str("()")
        } else {
            f.write_str(&self.to_cycle_string())
        }
    }
}

/// Panics on degree mismatch; use [`Permutation::compose`] for the checked form.
impl Mul<&Permutation> for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in composition");
        self.mul_unchecked(rhs)
    }
}

/// Cycle-notation text together with its explicit degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleText {
    pub text: String,
    pub degree: usize,
}

impl CycleText {
    pub fn new(text: impl Into<String>, degree: usize) -> CycleText {
        CycleText {
            text: text.into(),
            degree,
        }
    }

    pub fn parse(&self) -> Result<Permutation> {
        Permutation::parse_cycles(&self.text, self.degree)
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let malformed = |msg: &str| Error::MalformedCycles {
        text: text.to_string(),
        reason: msg.to_string(),
    };
    let mut cycles = Vec::new();
    let mut rest = text.trim_start();
    while !rest.is_empty() {
        rest = rest
            .strip_prefix('(')
            .ok_or_else(|| malformed("expected '('"))?;
        let close = rest.find(')').ok_or_else(|| malformed("unclosed cycle"))?;
        let body = &rest[..close];
        if body.contains('(') {
            return Err(malformed("nested '('"));
        }
        let mut cycle = Vec::new();
        if !body.trim().is_empty() {
            for tok in body.split(',') {
                let tok = tok.trim();
                let pt: usize = tok
                    .parse()
                    .map_err(|_| malformed(&format!("bad point {tok:?}")))?;
                if pt == 0 {
                    return Err(malformed("points are 1-based"));
                }
                cycle.push(pt);
            }
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}
