//! Finite permutation groups as explicit element sets.
//!
//! At the degrees this crate works at (p <= 11, ambient |S_7| = 5040)
//! breadth-first closure over the full element set is the reference
//! algorithm; everything downstream leans on it being exhaustive.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    /// Sorted lexicographically on image sequences.
    elements: Vec<Perm>,
    membership: HashSet<Perm>,
    generators: Vec<Perm>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}
impl Eq for PermGroup {}

impl PermGroup {
    /// Breadth-first closure of a nonempty generating set.
    pub fn generate(generators: &[Perm]) -> Result<PermGroup> {
        let first = generators.first().ok_or(Error::EmptyGenerators)?;
        let degree = first.degree();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let mut membership = HashSet::new();
        let identity = Perm::identity(degree);
        membership.insert(identity.clone());
        let mut frontier = vec![identity];
        while let Some(g) = frontier.pop() {
            for h in generators {
                let x = g.compose(h)?;
                if membership.insert(x.clone()) {
                    frontier.push(x);
                }
            }
        }
        let mut elements: Vec<Perm> = membership.iter().cloned().collect();
        elements.sort();
        Ok(PermGroup {
            degree,
            elements,
            membership,
            generators: generators.to_vec(),
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::generate(&[Perm::identity(degree)]).expect("identity generates")
    }

    pub fn symmetric(degree: usize) -> PermGroup {
        if degree == 1 {
            return PermGroup::trivial(1);
        }
        let mut t: Vec<usize> = (1..=degree).collect();
        t.swap(0, 1);
        let transposition = Perm::from_images(t).unwrap();
        let mut c: Vec<usize> = (2..=degree).collect();
        c.push(1);
        let cycle = Perm::from_images(c).unwrap();
        PermGroup::generate(&[transposition, cycle]).expect("valid generators")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.membership.contains(p)
    }

    pub fn is_subgroup_of(&self, ambient: &PermGroup) -> bool {
        self.degree == ambient.degree && self.elements.iter().all(|g| ambient.contains(g))
    }

    /// True iff the orbit of point 1 is all of {1,..,n}.
    pub fn is_transitive(&self) -> bool {
        let n = self.degree;
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![1usize];
        let mut count = 1;
        while let Some(pt) = stack.pop() {
            for g in &self.generators {
                let img = g.apply(pt);
                if !seen[img - 1] {
                    seen[img - 1] = true;
                    count += 1;
                    stack.push(img);
                }
            }
        }
        count == n
    }

    /// Exhaustive closure check, used by tests against the group axioms.
    pub fn is_closed(&self) -> bool {
        self.contains(&Perm::identity(self.degree))
            && self.elements.iter().all(|g| self.contains(&g.inverse()))
            && self.elements.iter().all(|g| {
                self.elements
                    .iter()
                    .all(|h| self.contains(&g.compose(h).unwrap()))
            })
    }

    /// g self g^{-1} as a group.
    pub fn conjugate_by(&self, g: &Perm) -> Result<PermGroup> {
        let gens: Vec<Perm> = self
            .generators
            .iter()
            .map(|x| x.conjugate_by(g))
            .collect::<Result<_>>()?;
        PermGroup::generate(&gens)
    }

    fn normalizes(&self, g: &Perm) -> bool {
        self.elements
            .iter()
            .all(|x| self.contains(&x.conjugate_by(g).unwrap()))
    }

    /// N = { g in ambient : g self g^{-1} = self }, by brute force over the
    /// ambient element list.
    pub fn normalizer(&self, ambient: &PermGroup) -> Result<PermGroup> {
        if !self.is_subgroup_of(ambient) {
            return Err(Error::NotSubgroup {
                sub: self.order(),
                ambient: ambient.order(),
            });
        }
        let gens: Vec<Perm> = ambient
            .elements
            .iter()
            .filter(|g| self.normalizes(g))
            .cloned()
            .collect();
        PermGroup::generate(&gens)
    }

    /// A witness g in ambient with g self g^{-1} = other, verified
    /// element-by-element before being returned.
    pub fn conjugating_witness(
        &self,
        other: &PermGroup,
        ambient: &PermGroup,
    ) -> Result<Option<Perm>> {
        if !self.is_subgroup_of(ambient) {
            return Err(Error::NotSubgroup {
                sub: self.order(),
                ambient: ambient.order(),
            });
        }
        if !other.is_subgroup_of(ambient) {
            return Err(Error::NotSubgroup {
                sub: other.order(),
                ambient: ambient.order(),
            });
        }
        if self.order() != other.order() {
            return Ok(None);
        }
        for g in &ambient.elements {
            if self
                .elements
                .iter()
                .all(|x| other.contains(&x.conjugate_by(g).unwrap()))
            {
                debug_assert_eq!(&self.conjugate_by(g).unwrap(), other);
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    /// Sharp 2-transitivity on ordered pairs of distinct points; the
    /// certificate that an order p(p-1) normalizer is AGL_1(F_p).
    pub fn is_sharply_two_transitive(&self) -> bool {
        let n = self.degree;
        if self.order() != n * (n - 1) {
            return false;
        }
        let mut seen = HashSet::new();
        for g in &self.elements {
            if !seen.insert((g.apply(1), g.apply(2))) {
                return false;
            }
        }
        seen.len() == n * (n - 1)
    }
}

/// cyclic / dihedral / other, by group order and generator shape.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", content = "order")]
pub enum GroupTag {
    Cyclic(usize),
    Dihedral(usize),
    Other(usize),
}

pub fn identify_group(group: &PermGroup) -> GroupTag {
    let n = group.order();
    if group.elements().iter().any(|g| g.order() == n) {
        return GroupTag::Cyclic(n);
    }
    if n % 2 == 0 {
        let m = n / 2;
        for r in group.elements() {
            if r.order() != m {
                continue;
            }
            for t in group.elements() {
                if t.is_involution()
                    && r.conjugate_by(t).unwrap() == r.inverse()
                    && PermGroup::generate(&[r.clone(), t.clone()]).unwrap().order() == n
                {
                    return GroupTag::Dihedral(n);
                }
            }
        }
    }
    GroupTag::Other(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn p7(s: &str) -> Perm {
        parse_cycles(s, 7).unwrap()
    }

    #[test]
    fn generate_dihedral_of_order_14() {
        let g = PermGroup::generate(&[p7("(12)(34)(56)"), p7("(23)(45)(67)")]).unwrap();
        assert_eq!(g.order(), 14);
        assert!(g.is_closed());
        assert!(g.is_transitive());
    }

    #[test]
    fn generate_trivial_and_cyclic() {
        assert_eq!(PermGroup::trivial(7).order(), 1);
        let c = PermGroup::generate(&[p7("(1234567)")]).unwrap();
        assert_eq!(c.order(), 7);
    }

    #[test]
    fn symmetric_group_order() {
        assert_eq!(PermGroup::symmetric(7).order(), 5040);
        assert_eq!(PermGroup::symmetric(4).order(), 24);
    }

    #[test]
    fn intransitive_examples() {
        let a = PermGroup::generate(&[p7("(12)(34)(56)")]).unwrap();
        assert!(!a.is_transitive());
        assert!(PermGroup::symmetric(7).is_transitive());
    }

    #[test]
    fn normalizer_of_dihedral_has_order_42() {
        let s7 = PermGroup::symmetric(7);
        let d7 = PermGroup::generate(&[p7("(12)(34)(56)"), p7("(23)(45)(67)")]).unwrap();
        let n = d7.normalizer(&s7).unwrap();
        assert_eq!(n.order(), 42);
        assert!(n.is_sharply_two_transitive());
        assert_eq!(s7.normalizer(&s7).unwrap().order(), 5040);
    }

    #[test]
    fn conjugating_witness_between_candidate_groups() {
        let s7 = PermGroup::symmetric(7);
        let g1 = PermGroup::generate(&[p7("(12)(34)(56)"), p7("(23)(45)(67)")]).unwrap();
        let g8 = PermGroup::generate(&[p7("(12)(34)(56)"), p7("(25)(36)(47)")]).unwrap();
        let w = g1.conjugating_witness(&g8, &s7).unwrap().unwrap();
        assert_eq!(g1.conjugate_by(&w).unwrap(), g8);
    }

    #[test]
    fn witness_requires_subgroup() {
        let s5 = PermGroup::symmetric(5);
        let d7 = PermGroup::generate(&[p7("(12)(34)(56)"), p7("(23)(45)(67)")]).unwrap();
        assert!(d7.normalizer(&s5).is_err());
    }

    #[test]
    fn identify_small_groups() {
        let c7 = PermGroup::generate(&[p7("(1234567)")]).unwrap();
        assert_eq!(identify_group(&c7), GroupTag::Cyclic(7));
        let d7 = PermGroup::generate(&[p7("(12)(34)(56)"), p7("(23)(45)(67)")]).unwrap();
        assert_eq!(identify_group(&d7), GroupTag::Dihedral(14));
        let s4 = PermGroup::symmetric(4);
        assert_eq!(identify_group(&s4), GroupTag::Other(24));
    }
}
