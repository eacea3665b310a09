//! Group gradings of finite rings: validation, homogeneous decomposition, and
//! the element-level sets (annihilators, regular elements, zero divisors).

use thiserror::Error;

use crate::elements::ElementSet;
use crate::group::FiniteGroup;
use crate::ring::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("expected one component per group element ({expected}), found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("component element {0} is not a ring element")]
    OutOfRange(usize),
    #[error("component {0} is not an additive subgroup")]
    NotSubgroup(usize),
    #[error("the components do not form a direct sum decomposition")]
    NotDirectSum,
    #[error("product of components {g} and {h} leaves component {gh}")]
    ComponentProductViolation { g: usize, h: usize, gh: usize },
    #[error("unity does not lie in the identity component")]
    OneNotInIdentityComponent,
}

/// A validated decomposition of a ring into one additive subgroup per group
/// element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    group: FiniteGroup,
    components: Vec<ElementSet>,
}

impl Grading {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn component(&self, g: usize) -> &ElementSet {
        &self.components[g]
    }

    pub fn components(&self) -> &[ElementSet] {
        &self.components
    }
}

/// Checks that `components` grades `ring` by `group`.
pub fn validate_grading(
    ring: &FiniteRing,
    group: FiniteGroup,
    components: Vec<ElementSet>,
) -> Result<Grading, GradingError> {
    check_grading(ring, &group, &components)?;
    Ok(Grading { group, components })
}

fn check_grading(
    ring: &FiniteRing,
    group: &FiniteGroup,
    components: &[ElementSet],
) -> Result<Vec<usize>, GradingError> {
    if components.len() != group.order() {
        return Err(GradingError::ComponentCount {
            expected: group.order(),
            found: components.len(),
        });
    }
    for c in components {
        if c.universe() != ring.order() {
            return Err(GradingError::OutOfRange(c.universe()));
        }
    }
    for (g, c) in components.iter().enumerate() {
        if !is_subgroup(c, ring.zero(), |a, b| ring.add(a, b)) {
            return Err(GradingError::NotSubgroup(g));
        }
    }
    let table = direct_sum_table(ring.order(), ring.zero(), |a, b| ring.add(a, b), components)
        .ok_or(GradingError::NotDirectSum)?;
    for g in group.elements() {
        for h in group.elements() {
            let gh = group.mul(g, h);
            let target = &components[gh];
            for a in components[g].iter() {
                for b in components[h].iter() {
                    if !target.contains(ring.mul(a, b)) {
                        return Err(GradingError::ComponentProductViolation { g, h, gh });
                    }
                }
            }
        }
    }
    if !components[group.identity()].contains(ring.one()) {
        return Err(GradingError::OneNotInIdentityComponent);
    }
    Ok(table)
}

/// A finite subset containing zero and closed under addition is a subgroup.
pub(crate) fn is_subgroup(set: &ElementSet, zero: usize, add: impl Fn(usize, usize) -> usize) -> bool {
    set.contains(zero) && set.iter().all(|a| set.iter().all(|b| set.contains(add(a, b))))
}

/// If the subgroups form an internal direct sum covering all `order`
/// elements, returns the flat table `element * k + i -> component i`.
pub(crate) fn direct_sum_table(
    order: usize,
    zero: usize,
    add: impl Fn(usize, usize) -> usize,
    components: &[ElementSet],
) -> Option<Vec<usize>> {
    let k = components.len();
    let size = components.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()))?;
    if size != order {
        return None;
    }
    // partial sums with the tuple of summands that produced them
    let mut reached: Vec<Option<Vec<usize>>> = vec![None; order];
    reached[zero] = Some(Vec::new());
    let mut frontier: Vec<usize> = vec![zero];
    for c in components {
        let mut next_reached: Vec<Option<Vec<usize>>> = vec![None; order];
        let mut next_frontier = Vec::with_capacity(frontier.len() * c.len());
        for &s in &frontier {
            let prefix = reached[s].as_ref().expect("frontier element has a tuple");
            for x in c.iter() {
                let t = add(s, x);
                if next_reached[t].is_some() {
                    return None;
                }
                let mut tuple = prefix.clone();
                tuple.push(x);
                next_reached[t] = Some(tuple);
                next_frontier.push(t);
            }
        }
        reached = next_reached;
        frontier = next_frontier;
    }
    let mut table = vec![zero; order * k];
    for (a, tuple) in reached.into_iter().enumerate() {
        let tuple = tuple?;
        table[a * k..(a + 1) * k].copy_from_slice(&tuple);
    }
    Some(table)
}

/// A finite commutative ring together with a validated grading and the
/// lookup tables derived from it.
#[derive(Debug, Clone)]
pub struct GradedRing {
    ring: FiniteRing,
    grading: Grading,
    homogeneous: ElementSet,
    decomposition: Vec<usize>,
    degree: Vec<Option<usize>>,
    regular: ElementSet,
    zero_divisors: ElementSet,
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.grading == other.grading
    }
}

impl Eq for GradedRing {}

impl GradedRing {
    pub fn new(
        ring: FiniteRing,
        group: FiniteGroup,
        components: Vec<ElementSet>,
    ) -> Result<Self, GradingError> {
        let decomposition = check_grading(&ring, &group, &components)?;
        Ok(Self::assemble(ring, Grading { group, components }, decomposition))
    }

    pub fn from_grading(ring: FiniteRing, grading: Grading) -> Result<Self, GradingError> {
        Self::new(ring, grading.group, grading.components)
    }

    /// Every element in the identity component.
    pub fn trivially_graded(ring: FiniteRing) -> Self {
        let all = ElementSet::full(ring.order());
        Self::new(ring, FiniteGroup::trivial(), vec![all]).expect("trivial grading is always valid")
    }

    fn assemble(ring: FiniteRing, grading: Grading, decomposition: Vec<usize>) -> Self {
        let n = ring.order();
        let k = grading.group.order();
        let mut homogeneous = ElementSet::empty(n);
        let mut degree = vec![None; n];
        for (g, c) in grading.components.iter().enumerate() {
            for a in c.iter() {
                homogeneous.insert(a);
                if a != ring.zero() {
                    degree[a] = Some(g);
                }
            }
        }
        debug_assert!(ring.elements().all(|a| {
            let parts = &decomposition[a * k..(a + 1) * k];
            let nonzero = parts.iter().filter(|&&x| x != ring.zero()).count();
            homogeneous.contains(a) == (nonzero <= 1)
        }));
        let mut regular = ElementSet::empty(n);
        for x in ring.elements() {
            if ring.elements().all(|a| a == ring.zero() || ring.mul(a, x) != ring.zero()) {
                regular.insert(x);
            }
        }
        let zero_divisors = ElementSet::full(n).difference(&regular);
        Self {
            ring,
            grading,
            homogeneous,
            decomposition,
            degree,
            regular,
            zero_divisors,
        }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.grading.group
    }

    pub fn order(&self) -> usize {
        self.ring.order()
    }

    pub fn zero(&self) -> usize {
        self.ring.zero()
    }

    pub fn one(&self) -> usize {
        self.ring.one()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        self.ring.elements()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.ring.add(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.ring.mul(a, b)
    }

    pub fn component(&self, g: usize) -> &ElementSet {
        self.grading.component(g)
    }

    /// h(R), the union of all components.
    pub fn homogeneous(&self) -> &ElementSet {
        &self.homogeneous
    }

    pub fn is_homogeneous(&self, a: usize) -> bool {
        self.homogeneous.contains(a)
    }

    /// Degree of a nonzero homogeneous element; `None` for zero and for
    /// inhomogeneous elements.
    pub fn degree(&self, a: usize) -> Option<usize> {
        self.degree[a]
    }

    /// The homogeneous components of `a`, indexed by group element.
    pub fn decompose(&self, a: usize) -> &[usize] {
        let k = self.grading.group.order();
        &self.decomposition[a * k..(a + 1) * k]
    }

    /// Ann(x) = { a : a x = 0 }.
    pub fn annihilator(&self, x: usize) -> ElementSet {
        ElementSet::from_elements(
            self.order(),
            self.elements().filter(|&a| self.mul(a, x) == self.zero()),
        )
    }

    /// Ann(I) = { a : a x = 0 for every x in I }.
    pub fn annihilator_of(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_elements(
            self.order(),
            self.elements()
                .filter(|&a| set.iter().all(|x| self.mul(a, x) == self.zero())),
        )
    }

    /// r(R): elements with trivial annihilator.
    pub fn regular_elements(&self) -> &ElementSet {
        &self.regular
    }

    /// Zd(R) = R - r(R); contains zero.
    pub fn zero_divisors(&self) -> &ElementSet {
        &self.zero_divisors
    }

    pub fn is_regular(&self, x: usize) -> bool {
        self.regular.contains(x)
    }

    /// Smallest `n >= 1` with `x^n` in `target`, found by walking the power
    /// sequence until it cycles. The walk visits at most `|R|` distinct
    /// powers, so `n <= |R|` whenever it exists.
    pub fn first_power_in(&self, x: usize, target: &ElementSet) -> Option<usize> {
        let mut seen = ElementSet::empty(self.order());
        let mut power = x;
        let mut n = 1;
        loop {
            if target.contains(power) {
                assert!(n <= self.order(), "power search exceeded the ring order");
                return Some(n);
            }
            if !seen.insert(power) {
                return None;
            }
            power = self.mul(power, x);
            n += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual_numbers() -> (FiniteRing, FiniteGroup) {
        (
            FiniteRing::polyquot(2, &[0, 0, 1]).unwrap(),
            FiniteGroup::cyclic(2).unwrap(),
        )
    }

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_elements(n, xs.iter().copied())
    }

    #[test]
    fn trivial_grading_of_z4() {
        let r = GradedRing::trivially_graded(FiniteRing::zmod(4).unwrap());
        assert_eq!(r.decompose(3), &[3]);
        assert_eq!(r.homogeneous().len(), 4);
    }

    #[test]
    fn z2_grading_of_dual_numbers() {
        // hand check: R_0 = {0,1}, R_1 = {0,x}; 1*1 = 1, 1*x = x, x*x = 0 all land correctly
        let (ring, group) = dual_numbers();
        let r = GradedRing::new(ring, group, vec![set(4, &[0, 1]), set(4, &[0, 2])]).unwrap();
        assert_eq!(r.decompose(3), &[1, 2]);
        assert_eq!(r.decompose(0), &[0, 0]);
        assert!(!r.is_homogeneous(3));
        assert_eq!(r.degree(2), Some(1));
        assert_eq!(r.degree(0), None);
    }

    #[test]
    fn overlapping_components_are_not_a_direct_sum() {
        let (ring, group) = dual_numbers();
        let err = validate_grading(&ring, group, vec![set(4, &[0, 1, 2, 3]), set(4, &[0, 2])]);
        assert_eq!(err, Err(GradingError::NotDirectSum));
    }

    #[test]
    fn component_errors() {
        let (ring, group) = dual_numbers();
        assert_eq!(
            validate_grading(&ring, group.clone(), vec![set(4, &[0, 1, 2]), set(4, &[0])]),
            Err(GradingError::NotSubgroup(0))
        );
        // swapping the roles puts 1 in degree 1 and breaks R_1 R_1 in R_0
        assert!(matches!(
            validate_grading(&ring, group, vec![set(4, &[0, 2]), set(4, &[0, 1])]),
            Err(GradingError::ComponentProductViolation { .. })
        ));
    }

    #[test]
    fn element_sets_of_small_rings() {
        let z4 = GradedRing::trivially_graded(FiniteRing::zmod(4).unwrap());
        assert_eq!(z4.annihilator(2).to_vec(), vec![0, 2]);
        assert_eq!(z4.annihilator(1).to_vec(), vec![0]);
        assert_eq!(z4.annihilator(0).len(), 4);
        assert_eq!(z4.regular_elements().to_vec(), vec![1, 3]);
        assert_eq!(z4.zero_divisors().to_vec(), vec![0, 2]);

        let z6 = GradedRing::trivially_graded(FiniteRing::zmod(6).unwrap());
        assert_eq!(z6.regular_elements().to_vec(), vec![1, 5]);

        let z5 = GradedRing::trivially_graded(FiniteRing::zmod(5).unwrap());
        assert_eq!(z5.zero_divisors().to_vec(), vec![0]);
        assert_eq!(z5.regular_elements().to_vec(), vec![1, 2, 3, 4]);

        let (ring, _) = dual_numbers();
        let d = GradedRing::trivially_graded(ring);
        assert_eq!(d.zero_divisors().to_vec(), vec![0, 2]);
    }

    #[test]
    fn power_search() {
        let z8 = GradedRing::trivially_graded(FiniteRing::zmod(8).unwrap());
        let zero = set(8, &[0]);
        assert_eq!(z8.first_power_in(2, &zero), Some(3));
        assert_eq!(z8.first_power_in(6, &zero), Some(3));
        assert_eq!(z8.first_power_in(4, &zero), Some(2));
        assert_eq!(z8.first_power_in(3, &zero), None);
    }
}
