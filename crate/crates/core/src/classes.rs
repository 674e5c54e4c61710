//! Conjugacy classes and centralizers by conjugation-orbit enumeration.
//!
//! The class of `x` is the orbit of `x` under conjugation by the group
//! generators. Recording a conjugator for every orbit element yields Schreier
//! generators for the stabilizer of `x`, which is the centralizer `C_G(x)`.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::bsgs::Bsgs;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap on full element enumeration.
pub const DEFAULT_ELEMENT_CAP: u64 = 200_000;

/// A conjugacy class, complete, with a conjugator for every element.
///
/// Elements are sorted lexicographically; the representative is the smallest.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    elements: Vec<Permutation>,
    conjugators: Vec<Permutation>,
    centralizer: Bsgs,
}

impl ConjugacyClass {
    pub fn representative(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn class_size(&self) -> usize {
        self.elements.len()
    }

    /// Centralizer of the representative.
    pub fn centralizer(&self) -> &Bsgs {
        &self.centralizer
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.position(p).is_some()
    }

    /// Some `x` with `x · rep · x⁻¹ = elements()[index]`.
    pub fn conjugator(&self, index: usize) -> &Permutation {
        &self.conjugators[index]
    }

    pub fn conjugator_of(&self, p: &Permutation) -> Option<&Permutation> {
        self.position(p).map(|i| &self.conjugators[i])
    }
}

struct ConjugationOrbit {
    elements: Vec<Permutation>,
    conjugators: Vec<Permutation>,
    centralizer: Bsgs,
}

fn conjugation_orbit(group: &Bsgs, x: &Permutation) -> ConjugationOrbit {
    let degree = group.degree();
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    let mut elements = vec![x.clone()];
    let mut conjugators = vec![Permutation::identity(degree)];
    index.insert(x.clone(), 0);
    let mut i = 0;
    while i < elements.len() {
        for a in group.generators() {
            let y = elements[i].conjugate_unchecked(a);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elements.len());
                conjugators.push(a.mul_unchecked(&conjugators[i]));
                elements.push(y);
            }
        }
        i += 1;
    }

    let target = group.order() / BigUint::from(elements.len());
    let mut centralizer = Bsgs::trivial(degree);
    'schreier: for i in 0..elements.len() {
        for a in group.generators() {
            if *centralizer.order() == target {
                break 'schreier;
            }
            let j = index[&elements[i].conjugate_unchecked(a)];
            let s = conjugators[j]
                .inverse()
                .mul_unchecked(&a.mul_unchecked(&conjugators[i]));
            centralizer.extend_unchecked(s);
        }
    }
    debug_assert_eq!(*centralizer.order(), target);
    ConjugationOrbit {
        elements,
        conjugators,
        centralizer,
    }
}

/// Centralizer of a member `x` of `group`.
pub fn centralizer(group: &Bsgs, x: &Permutation) -> Result<Bsgs> {
    group.require_member(x)?;
    Ok(conjugation_orbit(group, x).centralizer)
}

/// Conjugacy class of a member `x`; `x` need not be the smallest element, but
/// the returned class is normalized so that its representative is.
pub fn conjugacy_class_of(group: &Bsgs, x: &Permutation) -> Result<ConjugacyClass> {
    group.require_member(x)?;
    Ok(normalize(conjugation_orbit(group, x)))
}

fn normalize(orbit: ConjugationOrbit) -> ConjugacyClass {
    let ConjugationOrbit {
        elements,
        conjugators,
        centralizer,
    } = orbit;
    let mut paired: Vec<(Permutation, Permutation)> = elements.into_iter().zip(conjugators).collect();
    paired.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let (elements, conjugators): (Vec<_>, Vec<_>) = paired.into_iter().unzip();
    if conjugators[0].is_identity() {
        return ConjugacyClass {
            elements,
            conjugators,
            centralizer,
        };
    }
    // Re-anchor at the smallest element m = c·x·c⁻¹: conjugators become
    // y_i·c⁻¹ and the centralizer is conjugated by c.
    let c = conjugators[0].clone();
    let c_inv = c.inverse();
    let conjugators = conjugators.iter().map(|y| y.mul_unchecked(&c_inv)).collect();
    let cent_gens = centralizer
        .generators()
        .iter()
        .map(|g| g.conjugate_unchecked(&c))
        .collect();
    ConjugacyClass {
        elements,
        conjugators,
        centralizer: Bsgs::from_valid_generators(centralizer.degree(), cent_gens),
    }
}

/// All conjugacy classes, ordered by representative. Fails past `element_cap`.
pub fn conjugacy_classes(group: &Bsgs, element_cap: u64) -> Result<Vec<ConjugacyClass>> {
    let mut all: Vec<Permutation> = group.enumerate(element_cap)?.collect();
    all.sort_unstable();
    let mut assigned = vec![false; all.len()];
    let mut classes = Vec::new();
    for idx in 0..all.len() {
        if assigned[idx] {
            continue;
        }
        let class = normalize(conjugation_orbit(group, &all[idx]));
        for e in class.elements() {
            let k = all.binary_search(e).expect("class element is a group element");
            assigned[k] = true;
        }
        classes.push(class);
    }
    Ok(classes)
}

/// Index of the class containing `p`.
pub fn class_index(classes: &[ConjugacyClass], p: &Permutation) -> Result<usize> {
    classes
        .iter()
        .position(|c| c.contains(p))
        .ok_or_else(|| Error::ClassNotFound(p.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    fn group(n: usize, gens: &[&str]) -> Bsgs {
        Bsgs::from_generators(n, gens.iter().map(|g| p(g, n)).collect()).unwrap()
    }

    fn sorted_sizes(classes: &[ConjugacyClass]) -> Vec<usize> {
        let mut v: Vec<usize> = classes.iter().map(|c| c.class_size()).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn centralizer_examples() {
        let s5 = group(5, &["(1,2)", "(1,2,3,4,5)"]);
        assert_eq!(
            centralizer(&s5, &p("(1,2,3,4,5)", 5)).unwrap().order(),
            &BigUint::from(5u32)
        );
        assert!(centralizer(&s5, &Permutation::identity(5))
            .unwrap()
            .same_group(&s5));
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        assert_eq!(
            centralizer(&s4, &p("(1,2)(3,4)", 4)).unwrap().order(),
            &BigUint::from(8u32)
        );
        let a4 = group(4, &["(1,2,3)", "(1,2)(3,4)"]);
        assert!(matches!(
            centralizer(&a4, &p("(1,2)", 4)),
            Err(Error::NotAMember(_))
        ));
    }

    #[test]
    fn class_examples() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let classes = conjugacy_classes(&s4, 1000).unwrap();
        assert_eq!(sorted_sizes(&classes), vec![1, 3, 6, 6, 8]);
        let c5 = group(5, &["(1,2,3,4,5)"]);
        assert_eq!(sorted_sizes(&conjugacy_classes(&c5, 1000).unwrap()), vec![1; 5]);
        let a5 = group(5, &["(1,2,3)", "(3,4,5)"]);
        assert_eq!(
            sorted_sizes(&conjugacy_classes(&a5, 1000).unwrap()),
            vec![1, 12, 12, 15, 20]
        );
        assert!(matches!(
            conjugacy_classes(&a5, 59),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn class_structure_is_consistent() {
        let g = group(6, &["(1,2,3,4,5,6)", "(1,2)"]);
        for class in conjugacy_classes(&g, 1000).unwrap() {
            let rep = class.representative();
            assert_eq!(rep, class.elements().iter().min().unwrap());
            assert_eq!(
                BigUint::from(class.class_size()) * class.centralizer().order(),
                *g.order()
            );
            for (i, e) in class.elements().iter().enumerate() {
                assert_eq!(&rep.conjugate(class.conjugator(i)).unwrap(), e);
                assert_eq!(e.cycle_type(), rep.cycle_type());
            }
            for c in class.centralizer().generators() {
                assert_eq!(&rep.conjugate(c).unwrap(), rep);
            }
        }
    }

    #[test]
    fn class_of_non_minimal_element_is_reanchored() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let class = conjugacy_class_of(&s4, &p("(2,4,3)", 4)).unwrap();
        assert_eq!(class.class_size(), 8);
        let rep = class.representative().clone();
        for c in class.centralizer().generators() {
            assert_eq!(rep.conjugate(c).unwrap(), rep);
        }
        for (i, e) in class.elements().iter().enumerate() {
            assert_eq!(&rep.conjugate(class.conjugator(i)).unwrap(), e);
        }
    }
}
