//! Enumeration of GI(R), the set of all graded ideals of a graded ring.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::elements::ElementSet;
use crate::graded::GradedRing;
use crate::ideal::{additive_closure, gradedness_violation, GradedIdeal, IdealError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Rings above this order are rejected.
    pub max_order: usize,
    /// Rings up to this order are cross-checked against the subgroup scan.
    pub cross_check_max_order: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            max_order: 64,
            cross_check_max_order: 32,
        }
    }
}

/// Every graded ideal of a ring, deduplicated and in canonical order
/// (by size, then by sorted element list).
#[derive(Debug, Clone)]
pub struct IdealInventory {
    ring: Arc<GradedRing>,
    ideals: Vec<GradedIdeal>,
}

impl IdealInventory {
    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn ideals(&self) -> &[GradedIdeal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn get(&self, index: usize) -> &GradedIdeal {
        &self.ideals[index]
    }

    pub fn index_of(&self, elements: &ElementSet) -> Option<usize> {
        self.ideals
            .binary_search_by(|probe| probe.elements().cmp(elements))
            .ok()
    }

    pub fn find(&self, elements: &ElementSet) -> Option<&GradedIdeal> {
        self.index_of(elements).map(|i| &self.ideals[i])
    }

    /// Indices of the proper ideals.
    pub fn proper_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.ideals.len()).filter(|&i| self.ideals[i].is_proper())
    }

    pub fn proper(&self) -> impl Iterator<Item = &GradedIdeal> {
        self.ideals.iter().filter(|p| p.is_proper())
    }
}

pub fn enumerate_graded_ideals(ring: &Arc<GradedRing>) -> Result<IdealInventory, IdealError> {
    enumerate_graded_ideals_with(ring, EnumerationOptions::default())
}

/// Closes the principal ideals of homogeneous elements under sums. Graded
/// ideals are exactly the homogeneously generated ones, and each is a finite
/// sum of principal ideals.
pub fn enumerate_graded_ideals_with(
    ring: &Arc<GradedRing>,
    options: EnumerationOptions,
) -> Result<IdealInventory, IdealError> {
    if ring.order() > options.max_order {
        return Err(IdealError::TooLarge {
            order: ring.order(),
            cap: options.max_order,
        });
    }
    let principal: BTreeSet<ElementSet> = ring
        .homogeneous()
        .iter()
        .map(|a| {
            additive_closure(ring, ring.elements().map(|r| ring.mul(r, a)))
        })
        .collect();

    let mut found: BTreeSet<ElementSet> = principal.clone();
    let mut frontier: Vec<ElementSet> = principal.iter().cloned().collect();
    let generators: Vec<ElementSet> = principal.into_iter().collect();
    while let Some(current) = frontier.pop() {
        for g in &generators {
            if g.is_subset(&current) {
                continue;
            }
            let mut sum = ElementSet::empty(ring.order());
            for a in current.iter() {
                for b in g.iter() {
                    sum.insert(ring.add(a, b));
                }
            }
            if found.insert(sum.clone()) {
                frontier.push(sum);
            }
        }
    }

    for set in &found {
        if let Some(a) = gradedness_violation(ring, set) {
            return Err(IdealError::NotGraded(a));
        }
    }

    if ring.order() <= options.cross_check_max_order {
        let oracle: BTreeSet<ElementSet> = scan_graded_ideals(ring).into_iter().collect();
        let missing = oracle.difference(&found).count();
        let extra = found.difference(&oracle).count();
        if missing + extra > 0 {
            return Err(IdealError::EnumerationMismatch { missing, extra });
        }
    }

    let ideals = found
        .into_iter()
        .map(|elements| GradedIdeal::from_trusted(Arc::clone(ring), elements))
        .collect();
    Ok(IdealInventory {
        ring: Arc::clone(ring),
        ideals,
    })
}

/// Independent oracle: every additive subgroup of the ring, filtered to
/// those closed under multiplication by ring elements and under taking
/// homogeneous components. Sorted canonically.
pub fn scan_graded_ideals(ring: &GradedRing) -> Vec<ElementSet> {
    let n = ring.order();
    let cyclic: Vec<ElementSet> = ring
        .elements()
        .map(|a| {
            let mut set = ElementSet::singleton(n, ring.zero());
            let mut m = a;
            while set.insert(m) {
                m = ring.add(m, a);
            }
            set
        })
        .collect();

    let mut subgroups: BTreeSet<ElementSet> = BTreeSet::new();
    let trivial = ElementSet::singleton(n, ring.zero());
    subgroups.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for a in ring.elements() {
            if h.contains(a) {
                continue;
            }
            let mut joined = ElementSet::empty(n);
            for x in h.iter() {
                for y in cyclic[a].iter() {
                    joined.insert(ring.add(x, y));
                }
            }
            if subgroups.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }

    subgroups
        .into_iter()
        .filter(|h| {
            h.iter()
                .all(|x| ring.elements().all(|r| h.contains(ring.mul(r, x))))
        })
        .filter(|h| {
            h.iter()
                .all(|x| ring.decompose(x).iter().all(|&c| h.contains(c)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::ring::FiniteRing;

    fn lists(inv: &IdealInventory) -> Vec<Vec<usize>> {
        inv.ideals().iter().map(|p| p.elements().to_vec()).collect()
    }

    #[test]
    fn z4_has_three_ideals() {
        let r = Arc::new(GradedRing::trivially_graded(FiniteRing::zmod(4).unwrap()));
        let inv = enumerate_graded_ideals(&r).unwrap();
        assert_eq!(lists(&inv), vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn dual_numbers_z2_graded() {
        let ring = FiniteRing::polyquot(2, &[0, 0, 1]).unwrap();
        let r = Arc::new(
            GradedRing::new(
                ring,
                FiniteGroup::cyclic(2).unwrap(),
                vec![
                    ElementSet::from_elements(4, [0, 1]),
                    ElementSet::from_elements(4, [0, 2]),
                ],
            )
            .unwrap(),
        );
        let inv = enumerate_graded_ideals(&r).unwrap();
        assert_eq!(lists(&inv), vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn prime_fields_have_two_ideals() {
        for p in [2, 3, 5, 7, 11, 13] {
            let r = Arc::new(GradedRing::trivially_graded(FiniteRing::zmod(p).unwrap()));
            assert_eq!(enumerate_graded_ideals(&r).unwrap().len(), 2);
        }
    }

    #[test]
    fn non_graded_ideals_are_excluded() {
        // Z_2[Z_2] = Z_2[x]/(x^2 - 1) graded by Z_2: the ideal (1 + x) is not graded
        let ring = FiniteRing::polyquot(2, &[1, 0, 1]).unwrap();
        let r = Arc::new(
            GradedRing::new(
                ring,
                FiniteGroup::cyclic(2).unwrap(),
                vec![
                    ElementSet::from_elements(4, [0, 1]),
                    ElementSet::from_elements(4, [0, 2]),
                ],
            )
            .unwrap(),
        );
        let inv = enumerate_graded_ideals(&r).unwrap();
        assert_eq!(lists(&inv), vec![vec![0], vec![0, 1, 2, 3]]);
        let ungraded = GradedRing::trivially_graded(FiniteRing::polyquot(2, &[1, 0, 1]).unwrap());
        assert_eq!(scan_graded_ideals(&ungraded).len(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        let r = Arc::new(GradedRing::trivially_graded(FiniteRing::zmod(65).unwrap()));
        assert!(matches!(
            enumerate_graded_ideals(&r),
            Err(IdealError::TooLarge { order: 65, cap: 64 })
        ));
    }

    #[test]
    fn index_lookup() {
        let r = Arc::new(GradedRing::trivially_graded(FiniteRing::zmod(12).unwrap()));
        let inv = enumerate_graded_ideals(&r).unwrap();
        for (i, p) in inv.ideals().iter().enumerate() {
            assert_eq!(inv.index_of(p.elements()), Some(i));
        }
        assert_eq!(inv.len(), 6);
    }
}
