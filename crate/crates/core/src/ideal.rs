//! Graded ideals and the ideal-level operators: generation, products, powers,
//! the intersection of all powers, colon ideals, and the graded radical.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::elements::ElementSet;
use crate::graded::GradedRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("generator {0} is not homogeneous")]
    NonHomogeneousGenerator(usize),
    #[error("element {0} is not homogeneous")]
    NonHomogeneousElement(usize),
    #[error("element {0} is not in the ring")]
    OutOfRange(usize),
    #[error("ideals belong to different rings")]
    ParentMismatch,
    #[error("the set is not an ideal")]
    NotAnIdeal,
    #[error("the ideal is not graded: a component of {0} lies outside it")]
    NotGraded(usize),
    #[error("ring order {order} exceeds the enumeration cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("enumeration disagrees with the subgroup scan ({missing} missing, {extra} extra)")]
    EnumerationMismatch { missing: usize, extra: usize },
}

/// A graded ideal of a shared [`GradedRing`].
#[derive(Clone)]
pub struct GradedIdeal {
    ring: Arc<GradedRing>,
    elements: ElementSet,
}

impl PartialEq for GradedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for GradedIdeal {}

impl PartialOrd for GradedIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GradedIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements.cmp(&other.elements)
    }
}

impl Hash for GradedIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl fmt::Debug for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedIdeal{}", self.elements)
    }
}

impl fmt::Display for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.elements, f)
    }
}

pub(crate) fn same_ring(a: &Arc<GradedRing>, b: &Arc<GradedRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Additive closure of `seed` together with zero.
pub(crate) fn additive_closure(ring: &GradedRing, seed: impl IntoIterator<Item = usize>) -> ElementSet {
    let mut group = ElementSet::singleton(ring.order(), ring.zero());
    for s in seed {
        if group.contains(s) {
            continue;
        }
        let mut cyclic = vec![ring.zero()];
        let mut m = s;
        while m != ring.zero() {
            cyclic.push(m);
            m = ring.add(m, s);
        }
        let old: Vec<usize> = group.iter().collect();
        for &a in &old {
            for &c in &cyclic {
                group.insert(ring.add(a, c));
            }
        }
    }
    group
}

fn sumset(ring: &GradedRing, a: &ElementSet, b: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(ring.order());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(ring.add(x, y));
        }
    }
    out
}

pub(crate) fn is_ideal(ring: &GradedRing, set: &ElementSet) -> bool {
    set.contains(ring.zero())
        && set.iter().all(|a| set.iter().all(|b| set.contains(ring.add(a, b))))
        && set
            .iter()
            .all(|a| ring.elements().all(|r| set.contains(ring.mul(r, a))))
}

/// First element of `set` with a homogeneous component outside `set`.
pub(crate) fn gradedness_violation(ring: &GradedRing, set: &ElementSet) -> Option<usize> {
    set.iter()
        .find(|&a| ring.decompose(a).iter().any(|&c| !set.contains(c)))
}

impl GradedIdeal {
    /// Wraps a set already known to be a graded ideal.
    pub(crate) fn from_trusted(ring: Arc<GradedRing>, elements: ElementSet) -> Self {
        debug_assert!(is_ideal(&ring, &elements));
        debug_assert!(gradedness_violation(&ring, &elements).is_none());
        Self { ring, elements }
    }

    /// Checks the ideal axioms and gradedness.
    pub fn from_elements(ring: &Arc<GradedRing>, elements: ElementSet) -> Result<Self, IdealError> {
        if elements.universe() != ring.order() {
            return Err(IdealError::OutOfRange(elements.universe()));
        }
        if !is_ideal(ring, &elements) {
            return Err(IdealError::NotAnIdeal);
        }
        if let Some(a) = gradedness_violation(ring, &elements) {
            return Err(IdealError::NotGraded(a));
        }
        Ok(Self {
            ring: Arc::clone(ring),
            elements,
        })
    }

    pub fn zero(ring: &Arc<GradedRing>) -> Self {
        Self::from_trusted(Arc::clone(ring), ElementSet::singleton(ring.order(), ring.zero()))
    }

    pub fn unit(ring: &Arc<GradedRing>) -> Self {
        Self::from_trusted(Arc::clone(ring), ElementSet::full(ring.order()))
    }

    /// The smallest ideal containing the homogeneous generators `gens`.
    pub fn generate(ring: &Arc<GradedRing>, gens: &[usize]) -> Result<Self, IdealError> {
        for &g in gens {
            if g >= ring.order() {
                return Err(IdealError::OutOfRange(g));
            }
            if !ring.is_homogeneous(g) {
                return Err(IdealError::NonHomogeneousGenerator(g));
            }
        }
        let products = gens
            .iter()
            .flat_map(|&g| ring.elements().map(move |r| (r, g)))
            .map(|(r, g)| ring.mul(r, g));
        let elements = additive_closure(ring, products);
        // homogeneously generated ideals are graded; checked rather than assumed
        if let Some(a) = gradedness_violation(ring, &elements) {
            return Err(IdealError::NotGraded(a));
        }
        Ok(Self {
            ring: Arc::clone(ring),
            elements,
        })
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.contains(a)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_proper(&self) -> bool {
        !self.elements.contains(self.ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subset(&self, other: &GradedIdeal) -> bool {
        self.elements.is_subset(&other.elements)
    }

    /// P_g = P ∩ R_g.
    pub fn component(&self, g: usize) -> ElementSet {
        self.elements.intersection(self.ring.component(g))
    }

    /// P ∩ h(R).
    pub fn homogeneous_elements(&self) -> ElementSet {
        self.elements.intersection(self.ring.homogeneous())
    }

    fn check_parent(&self, other: &GradedIdeal) -> Result<(), IdealError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(IdealError::ParentMismatch)
        }
    }

    fn graded_from(&self, elements: ElementSet) -> Result<Self, IdealError> {
        if let Some(a) = gradedness_violation(&self.ring, &elements) {
            return Err(IdealError::NotGraded(a));
        }
        Ok(Self {
            ring: Arc::clone(&self.ring),
            elements,
        })
    }

    /// The ideal generated by all products `ab` with `a` in `self`, `b` in `other`.
    pub fn product(&self, other: &GradedIdeal) -> Result<Self, IdealError> {
        self.check_parent(other)?;
        let ring = &self.ring;
        let products = self
            .elements
            .iter()
            .flat_map(|a| other.elements.iter().map(move |b| (a, b)))
            .map(|(a, b)| ring.mul(a, b));
        self.graded_from(additive_closure(ring, products))
    }

    pub fn sum(&self, other: &GradedIdeal) -> Result<Self, IdealError> {
        self.check_parent(other)?;
        self.graded_from(sumset(&self.ring, &self.elements, &other.elements))
    }

    pub fn intersection(&self, other: &GradedIdeal) -> Result<Self, IdealError> {
        self.check_parent(other)?;
        self.graded_from(self.elements.intersection(&other.elements))
    }

    /// P^n for `n >= 1`; `n = 0` is treated as `n = 1`.
    pub fn power(&self, n: u32) -> Self {
        let mut acc = self.clone();
        for _ in 1..n {
            if !self.is_proper() {
                break;
            }
            let next = acc.product(self).expect("same parent ring");
            if next == acc {
                break;
            }
            acc = next;
        }
        acc
    }

    /// The descending chain P ⊇ P² ⊇ ... as far as its first repeat, which
    /// is where it stabilizes.
    pub fn power_chain(&self) -> Vec<GradedIdeal> {
        let mut chain = vec![self.clone()];
        loop {
            let last = chain.last().expect("non-empty chain");
            let next = last.product(self).expect("same parent ring");
            if &next == last {
                return chain;
            }
            chain.push(next);
        }
    }

    /// ∩_{n>=1} P^n, the stable value of the power chain.
    pub fn omega_intersection(&self) -> Self {
        self.power_chain().pop().expect("non-empty chain")
    }

    /// Smallest `k` with P^k = P^{k+1}.
    pub fn stabilization_index(&self) -> usize {
        self.power_chain().len()
    }

    /// (P : a) = { b : ab ∈ P } for homogeneous `a`.
    pub fn colon(&self, a: usize) -> Result<Self, IdealError> {
        if a >= self.ring.order() {
            return Err(IdealError::OutOfRange(a));
        }
        if !self.ring.is_homogeneous(a) {
            return Err(IdealError::NonHomogeneousElement(a));
        }
        let ring = &self.ring;
        let elements = ElementSet::from_elements(
            ring.order(),
            ring.elements().filter(|&b| self.contains(ring.mul(a, b))),
        );
        self.graded_from(elements)
    }

    /// Grad(I): elements each of whose homogeneous components has a power
    /// in I.
    pub fn graded_radical(&self) -> Result<Self, IdealError> {
        let ring = &self.ring;
        let homogeneous_in: Vec<bool> = ring
            .elements()
            .map(|x| ring.is_homogeneous(x) && ring.first_power_in(x, &self.elements).is_some())
            .collect();
        let elements = ElementSet::from_elements(
            ring.order(),
            ring.elements()
                .filter(|&x| ring.decompose(x).iter().all(|&c| homogeneous_in[c])),
        );
        if !is_ideal(ring, &elements) {
            return Err(IdealError::NotAnIdeal);
        }
        self.graded_from(elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::ring::FiniteRing;

    fn zmod(n: usize) -> Arc<GradedRing> {
        Arc::new(GradedRing::trivially_graded(FiniteRing::zmod(n).unwrap()))
    }

    fn dual_numbers() -> Arc<GradedRing> {
        let ring = FiniteRing::polyquot(2, &[0, 0, 1]).unwrap();
        Arc::new(
            GradedRing::new(
                ring,
                FiniteGroup::cyclic(2).unwrap(),
                vec![
                    ElementSet::from_elements(4, [0, 1]),
                    ElementSet::from_elements(4, [0, 2]),
                ],
            )
            .unwrap(),
        )
    }

    fn ideal(r: &Arc<GradedRing>, gens: &[usize]) -> GradedIdeal {
        GradedIdeal::generate(r, gens).unwrap()
    }

    #[test]
    fn generation() {
        let z4 = zmod(4);
        assert_eq!(ideal(&z4, &[2]).elements().to_vec(), vec![0, 2]);
        assert!(ideal(&z4, &[]).is_zero());
        assert_eq!(ideal(&z4, &[1]).len(), 4);
        assert!(!ideal(&z4, &[1]).is_proper());
        let d = dual_numbers();
        assert_eq!(
            GradedIdeal::generate(&d, &[3]),
            Err(IdealError::NonHomogeneousGenerator(3))
        );
    }

    #[test]
    fn products_and_powers() {
        let z4 = zmod(4);
        let p = ideal(&z4, &[2]);
        assert!(p.product(&p).unwrap().is_zero());
        assert!(GradedIdeal::zero(&z4).product(&p).unwrap().is_zero());
        assert_eq!(GradedIdeal::unit(&z4).product(&p).unwrap(), p);
        assert!(p.power(3).is_zero());
        assert_eq!(p.power(1), p);

        let z8 = zmod(8);
        let q = ideal(&z8, &[2]);
        assert_eq!(q.power(2).elements().to_vec(), vec![0, 4]);
    }

    #[test]
    fn parent_mismatch() {
        let a = ideal(&zmod(4), &[2]);
        let b = ideal(&zmod(8), &[2]);
        assert_eq!(a.product(&b), Err(IdealError::ParentMismatch));
    }

    #[test]
    fn omega_intersection() {
        let z4 = zmod(4);
        assert!(ideal(&z4, &[2]).omega_intersection().is_zero());
        let z6 = zmod(6);
        let idem = ideal(&z6, &[3]);
        assert_eq!(idem.omega_intersection(), idem);
        assert_eq!(GradedIdeal::unit(&z6).omega_intersection(), GradedIdeal::unit(&z6));
    }

    #[test]
    fn colon() {
        let z8 = zmod(8);
        let p = ideal(&z8, &[4]);
        assert_eq!(p.colon(2).unwrap().elements().to_vec(), vec![0, 2, 4, 6]);
        assert_eq!(p.colon(1).unwrap(), p);
        let z4 = zmod(4);
        assert_eq!(ideal(&z4, &[2]).colon(2).unwrap().len(), 4);
        let d = dual_numbers();
        assert_eq!(
            GradedIdeal::zero(&d).colon(3),
            Err(IdealError::NonHomogeneousElement(3))
        );
    }

    #[test]
    fn radical() {
        let z8 = zmod(8);
        let rad = GradedIdeal::zero(&z8).graded_radical().unwrap();
        assert_eq!(rad.elements().to_vec(), vec![0, 2, 4, 6]);
        let d = dual_numbers();
        let rad = GradedIdeal::zero(&d).graded_radical().unwrap();
        assert_eq!(rad.elements().to_vec(), vec![0, 2]);
        let prime = ideal(&zmod(9), &[3]);
        assert_eq!(prime.graded_radical().unwrap(), prime);
    }
}
