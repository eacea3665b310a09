use std::sync::Arc;

use crate::elements::ElementSet;
use crate::graded::GradedRing;
use crate::ideal::{same_ring, GradedIdeal};
use crate::lattice::IdealInventory;
use crate::phi::{CustomPhi, PhiMap};
use crate::ring::FiniteRing;

use super::ConstructionError;

/// S⁻¹R for a multiplicative set S ⊆ h(R), with the canonical map a ↦ a/1.
///
/// Classes are numbered by their least member (s, a), where s is ranked by its
/// position in S (unity first, then increasing). So 0/1 is class 0 and the
/// classes of a/1 come first.
#[derive(Debug, Clone)]
pub struct LocalizationMap {
    source: Arc<GradedRing>,
    mult_set: ElementSet,
    target: Arc<GradedRing>,
    canonical: Vec<usize>,
    // class of (a, S[i]) at a * |S| + i
    class_of: Vec<usize>,
    denominators: Vec<usize>,
}

/// The smallest multiplicatively closed set containing 1 and `gens`.
pub fn multiplicative_closure(ring: &GradedRing, gens: &[usize]) -> ElementSet {
    let mut set = ElementSet::singleton(ring.order(), ring.one());
    let mut frontier = vec![ring.one()];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = ring.mul(x, g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

pub fn localize(ring: &Arc<GradedRing>, s: &ElementSet) -> Result<LocalizationMap, ConstructionError> {
    let n = ring.order();
    if s.universe() != n {
        return Err(ConstructionError::ParentMismatch);
    }
    if !s.contains(ring.one()) {
        return Err(ConstructionError::MissingOne);
    }
    if let Some(x) = s.iter().find(|&x| !ring.is_homogeneous(x)) {
        return Err(ConstructionError::NotHomogeneous(x));
    }
    for a in s.iter() {
        for b in s.iter() {
            if !s.contains(ring.mul(a, b)) {
                return Err(ConstructionError::NotMultiplicative(a, b));
            }
        }
    }
    if s.contains(ring.zero()) {
        return Err(ConstructionError::ZeroRing);
    }

    let mut denominators = vec![ring.one()];
    denominators.extend(s.iter().filter(|&x| x != ring.one()));
    let k = denominators.len();
    let mut rank = vec![usize::MAX; n];
    for (i, &d) in denominators.iter().enumerate() {
        rank[d] = i;
    }

    // x is killed by S when ux = 0 for some u in S
    let killed = ElementSet::from_elements(
        n,
        ring.elements()
            .filter(|&x| s.iter().any(|u| ring.mul(u, x) == ring.zero())),
    );
    let sub = |a: usize, b: usize| ring.ring().sub(a, b);
    let equivalent = |a: usize, i: usize, b: usize, j: usize| {
        killed.contains(sub(ring.mul(a, denominators[j]), ring.mul(b, denominators[i])))
    };

    // pairs are visited in (rank, numerator) order, so each new class gets
    // its least member as representative
    let mut class_of = vec![usize::MAX; n * k];
    let mut reps: Vec<(usize, usize)> = Vec::new();
    for i in 0..k {
        for a in ring.elements() {
            if class_of[a * k + i] != usize::MAX {
                continue;
            }
            let class = reps.len();
            reps.push((a, i));
            for j in 0..k {
                for b in ring.elements() {
                    if class_of[b * k + j] == usize::MAX && equivalent(a, i, b, j) {
                        class_of[b * k + j] = class;
                    }
                }
            }
        }
    }

    let m = reps.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &(a, i) in &reps {
        for &(b, j) in &reps {
            let (s, t) = (denominators[i], denominators[j]);
            let st = rank[ring.mul(s, t)];
            let numerator = ring.add(ring.mul(a, t), ring.mul(b, s));
            add.push(class_of[numerator * k + st]);
            mul.push(class_of[ring.mul(a, b) * k + st]);
        }
    }
    let zero = class_of[ring.zero() * k];
    let one = class_of[ring.one() * k];
    let target_ring = FiniteRing::from_tables(m, add, mul, zero, one)?;

    // (S⁻¹R)_g = { a/s : a ∈ R_h, s ∈ S ∩ R_{h g⁻¹} }
    let group = ring.group();
    let components = group
        .elements()
        .map(|g| {
            let mut c = ElementSet::singleton(m, zero);
            for h in group.elements() {
                let wanted = group.mul(h, group.inverse(g));
                for (i, &d) in denominators.iter().enumerate() {
                    if ring.degree(d) != Some(wanted) {
                        continue;
                    }
                    for a in ring.component(h).iter() {
                        c.insert(class_of[a * k + i]);
                    }
                }
            }
            c
        })
        .collect();
    let target = GradedRing::new(target_ring, group.clone(), components)?;
    let canonical = ring.elements().map(|a| class_of[a * k]).collect();
    Ok(LocalizationMap {
        source: Arc::clone(ring),
        mult_set: s.clone(),
        target: Arc::new(target),
        canonical,
        class_of,
        denominators,
    })
}

impl LocalizationMap {
    pub fn source(&self) -> &Arc<GradedRing> {
        &self.source
    }

    pub fn mult_set(&self) -> &ElementSet {
        &self.mult_set
    }

    pub fn target(&self) -> &Arc<GradedRing> {
        &self.target
    }

    /// a ↦ a/1.
    pub fn canonical(&self, a: usize) -> usize {
        self.canonical[a]
    }

    /// The class of a/s. Panics if `s` is not in S.
    pub fn fraction(&self, a: usize, s: usize) -> usize {
        let i = self
            .denominators
            .iter()
            .position(|&d| d == s)
            .expect("denominator must lie in the multiplicative set");
        self.class_of[a * self.denominators.len() + i]
    }

    /// I ∩ R, read as { a ∈ R : a/1 ∈ I }.
    pub fn contract(&self, i: &GradedIdeal) -> Result<GradedIdeal, ConstructionError> {
        if !same_ring(i.ring(), &self.target) {
            return Err(ConstructionError::ParentMismatch);
        }
        let elements = ElementSet::from_elements(
            self.source.order(),
            self.source.elements().filter(|&a| i.contains(self.canonical[a])),
        );
        Ok(GradedIdeal::from_elements(&self.source, elements)?)
    }

    /// S⁻¹P = { p/s : p ∈ P, s ∈ S }.
    pub fn extend(&self, p: &GradedIdeal) -> Result<GradedIdeal, ConstructionError> {
        if !same_ring(p.ring(), &self.source) {
            return Err(ConstructionError::ParentMismatch);
        }
        Ok(GradedIdeal::from_elements(&self.target, self.extend_set(p.elements()))?)
    }

    fn extend_set(&self, set: &ElementSet) -> ElementSet {
        let k = self.denominators.len();
        ElementSet::from_elements(
            self.target.order(),
            set.iter().flat_map(|a| (0..k).map(move |i| self.class_of[a * k + i])),
        )
    }

    /// φ_S(I) = S⁻¹φ(I ∩ R), and ∅ when φ(I ∩ R) = ∅, tabulated over every
    /// graded ideal of the target.
    pub fn induced_phi(&self, phi: &PhiMap, target_ideals: &IdealInventory) -> Result<PhiMap, ConstructionError> {
        if !same_ring(target_ideals.ring(), &self.target) {
            return Err(ConstructionError::ParentMismatch);
        }
        let mut table = CustomPhi::new(format!("{phi}_S"));
        for i in target_ideals.ideals() {
            let value = match phi.apply(&self.contract(i)?)? {
                None => None,
                Some(v) => Some(self.extend(&v)?),
            };
            table.insert(i, value.as_ref());
        }
        Ok(PhiMap::custom(table))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::graded_isomorphic;
    use crate::lattice::enumerate_graded_ideals;

    fn zmod(n: usize) -> Arc<GradedRing> {
        Arc::new(GradedRing::trivially_graded(FiniteRing::zmod(n).unwrap()))
    }

    fn set(r: &GradedRing, xs: &[usize]) -> ElementSet {
        ElementSet::from_elements(r.order(), xs.iter().copied())
    }

    #[test]
    fn unit_localization_is_a_copy() {
        let r = zmod(6);
        let l = localize(&r, &set(&r, &[1, 5])).unwrap();
        assert!(graded_isomorphic(l.target(), &r));
        let trivial = localize(&r, &set(&r, &[1])).unwrap();
        assert!(graded_isomorphic(trivial.target(), &r));
    }

    #[test]
    fn z6_at_3_has_two_classes() {
        let r = zmod(6);
        let l = localize(&r, &set(&r, &[1, 3])).unwrap();
        assert_eq!(l.target().order(), 2);
        let zero = GradedIdeal::zero(l.target());
        assert_eq!(l.contract(&zero).unwrap().elements().to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn canonical_map_is_a_ring_homomorphism() {
        let r = zmod(12);
        let l = localize(&r, &multiplicative_closure(&r, &[2])).unwrap();
        let t = l.target();
        for a in r.elements() {
            for b in r.elements() {
                assert_eq!(l.canonical(r.add(a, b)), t.add(l.canonical(a), l.canonical(b)));
                assert_eq!(l.canonical(r.mul(a, b)), t.mul(l.canonical(a), l.canonical(b)));
            }
        }
        // Z_12 at powers of 2 is Z_3
        assert_eq!(t.order(), 3);
    }

    #[test]
    fn extension_examples() {
        let r = zmod(4);
        let l = localize(&r, &set(&r, &[1, 3])).unwrap();
        let p = GradedIdeal::generate(&r, &[2]).unwrap();
        let e = l.extend(&p).unwrap();
        assert_eq!(e.len(), 2);
        assert!(l.contract(&e).unwrap().is_subset(&p));
        assert!(l.extend(&GradedIdeal::zero(&r)).unwrap().is_zero());

        let r = zmod(6);
        let l = localize(&r, &set(&r, &[1, 3])).unwrap();
        let p = GradedIdeal::generate(&r, &[3]).unwrap();
        assert!(!l.extend(&p).unwrap().is_proper());
    }

    #[test]
    fn bad_sets_are_rejected() {
        let r = zmod(6);
        assert_eq!(localize(&r, &set(&r, &[5])).err(), Some(ConstructionError::MissingOne));
        assert_eq!(
            localize(&r, &set(&r, &[1, 2])).err(),
            Some(ConstructionError::NotMultiplicative(2, 2))
        );
        assert_eq!(localize(&r, &set(&r, &[0, 1])).err(), Some(ConstructionError::ZeroRing));
    }

    #[test]
    fn induced_phi_zero_is_the_kernel_extension() {
        let r = zmod(12);
        let l = localize(&r, &multiplicative_closure(&r, &[3])).unwrap();
        let inv = enumerate_graded_ideals(l.target()).unwrap();
        let phi = l.induced_phi(&PhiMap::Zero, &inv).unwrap();
        let kernel = l.extend(&GradedIdeal::zero(&r)).unwrap();
        for i in inv.ideals() {
            let expected = kernel.elements().intersection(i.elements());
            assert_eq!(phi.apply(i).unwrap().unwrap().elements(), &expected);
        }
        let empty = l.induced_phi(&PhiMap::Empty, &inv).unwrap();
        assert!(inv.ideals().iter().all(|i| empty.apply(i).unwrap().is_none()));
    }
}
