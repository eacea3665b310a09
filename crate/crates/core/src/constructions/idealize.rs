use std::sync::Arc;

use crate::elements::ElementSet;
use crate::graded::GradedRing;
use crate::ideal::{same_ring, GradedIdeal};
use crate::lattice::IdealInventory;
use crate::phi::{CustomPhi, PhiMap};
use crate::ring::FiniteRing;

use super::{ConstructionError, GradedModule};

/// R(+)M on pairs (r, m), stored at index `r * |M| + m`, with
/// (x, m1)(y, m2) = (xy, x m2 + y m1) and X_g = R_g (+) M_g.
#[derive(Debug, Clone)]
pub struct Idealization {
    base: Arc<GradedRing>,
    module: GradedModule,
    ring: Arc<GradedRing>,
    module_zero_divisors: ElementSet,
}

pub fn idealization(module: &GradedModule) -> Result<Idealization, ConstructionError> {
    let base = Arc::clone(module.base());
    if !base.group().is_abelian() {
        return Err(ConstructionError::NonAbelianGroup);
    }
    let mo = module.order();
    let n = base.order() * mo;
    let pair = |r: usize, m: usize| r * mo + m;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (r1, m1) = (x / mo, x % mo);
        for y in 0..n {
            let (r2, m2) = (y / mo, y % mo);
            add.push(pair(base.add(r1, r2), module.add(m1, m2)));
            mul.push(pair(
                base.mul(r1, r2),
                module.add(module.act(r1, m2), module.act(r2, m1)),
            ));
        }
    }
    let ring = FiniteRing::from_tables(
        n,
        add,
        mul,
        pair(base.zero(), module.zero()),
        pair(base.one(), module.zero()),
    )?;
    let components = base
        .group()
        .elements()
        .map(|g| {
            ElementSet::from_elements(
                n,
                base.component(g)
                    .iter()
                    .flat_map(|r| module.component(g).iter().map(move |m| pair(r, m))),
            )
        })
        .collect();
    let ring = GradedRing::new(ring, base.group().clone(), components)?;
    Ok(Idealization {
        module_zero_divisors: module.zero_divisors(),
        base,
        module: module.clone(),
        ring: Arc::new(ring),
    })
}

impl Idealization {
    pub fn base(&self) -> &Arc<GradedRing> {
        &self.base
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    /// Zd(M) = { a ∈ R : am = 0 for some nonzero m ∈ M }.
    pub fn module_zero_divisors(&self) -> &ElementSet {
        &self.module_zero_divisors
    }

    pub fn pair(&self, r: usize, m: usize) -> usize {
        r * self.module.order() + m
    }

    pub fn split(&self, x: usize) -> (usize, usize) {
        (x / self.module.order(), x % self.module.order())
    }

    /// Whether Zd(R) = Zd(M).
    pub fn zero_divisors_agree(&self) -> bool {
        *self.base.zero_divisors() == self.module_zero_divisors
    }

    /// { (a, m) : a ∈ Zd(R) ∪ Zd(M) }.
    pub fn predicted_zero_divisors(&self) -> ElementSet {
        let bad = self.base.zero_divisors().union(&self.module_zero_divisors);
        ElementSet::from_elements(
            self.ring.order(),
            self.ring.elements().filter(|&x| bad.contains(self.split(x).0)),
        )
    }

    /// Elements where the computed Zd(R(+)M) and the predicted set differ.
    pub fn zero_divisor_mismatches(&self) -> Vec<usize> {
        let predicted = self.predicted_zero_divisors();
        let actual = self.ring.zero_divisors();
        self.ring
            .elements()
            .filter(|&x| predicted.contains(x) != actual.contains(x))
            .collect()
    }

    /// P(+)M.
    pub fn ideal_plus_module(&self, p: &GradedIdeal) -> Result<GradedIdeal, ConstructionError> {
        if !same_ring(p.ring(), &self.base) {
            return Err(ConstructionError::ParentMismatch);
        }
        let mo = self.module.order();
        let elements = ElementSet::from_elements(
            self.ring.order(),
            p.elements().iter().flat_map(|r| (0..mo).map(move |m| r * mo + m)),
        );
        Ok(GradedIdeal::from_elements(&self.ring, elements)?)
    }

    /// φ₂(P(+)M) = φ₁(P)(+)M, defined only on ideals of that form.
    pub fn lift_phi(&self, phi: &PhiMap, base_ideals: &IdealInventory) -> Result<PhiMap, ConstructionError> {
        if !same_ring(base_ideals.ring(), &self.base) {
            return Err(ConstructionError::ParentMismatch);
        }
        let mut table = CustomPhi::new(format!("{phi}(+)M"));
        for p in base_ideals.ideals() {
            let value = match phi.apply(p)? {
                None => None,
                Some(v) => Some(self.ideal_plus_module(&v)?),
            };
            table.insert(&self.ideal_plus_module(p)?, value.as_ref());
        }
        Ok(PhiMap::custom(table))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::iso::graded_isomorphic;
    use crate::lattice::enumerate_graded_ideals;
    use crate::phi::PhiError;

    fn zmod(n: usize) -> Arc<GradedRing> {
        Arc::new(GradedRing::trivially_graded(FiniteRing::zmod(n).unwrap()))
    }

    #[test]
    fn z2_plus_z2_is_dual_numbers() {
        let r = zmod(2);
        let x = idealization(&GradedModule::cyclic(&r, 2).unwrap()).unwrap();
        let dual = Arc::new(GradedRing::trivially_graded(FiniteRing::polyquot(2, &[0, 0, 1]).unwrap()));
        assert!(graded_isomorphic(x.ring(), &dual));
        assert!(x.zero_divisors_agree());
        assert!(x.zero_divisor_mismatches().is_empty());
    }

    #[test]
    fn zero_module_gives_a_copy() {
        let r = zmod(6);
        let x = idealization(&GradedModule::zero_module(&r)).unwrap();
        assert!(graded_isomorphic(x.ring(), &r));
    }

    #[test]
    fn zero_divisor_identity_on_small_idealizations() {
        for (m, n) in [(4, 2), (6, 3), (8, 4), (9, 3)] {
            let r = zmod(m);
            let x = idealization(&GradedModule::cyclic(&r, n).unwrap()).unwrap();
            assert!(x.zero_divisor_mismatches().is_empty(), "Z_{m}(+)Z_{n}");
        }
        let r = zmod(4);
        let x = idealization(&GradedModule::regular(&r)).unwrap();
        assert!(x.zero_divisor_mismatches().is_empty());
    }

    #[test]
    fn non_abelian_group_is_rejected() {
        // S_3 as a permutation group, grading R concentrated in degree e
        #[rustfmt::skip]
        let s3 = vec![
            0, 1, 2, 3, 4, 5,
            1, 2, 0, 4, 5, 3,
            2, 0, 1, 5, 3, 4,
            3, 5, 4, 0, 2, 1,
            4, 3, 5, 1, 0, 2,
            5, 4, 3, 2, 1, 0,
        ];
        let group = FiniteGroup::from_table(6, s3, 0).unwrap();
        let mut components = vec![ElementSet::singleton(2, 0); 6];
        components[0] = ElementSet::full(2);
        let r = Arc::new(GradedRing::new(FiniteRing::zmod(2).unwrap(), group, components).unwrap());
        let m = GradedModule::zero_module(&r);
        assert_eq!(idealization(&m).err(), Some(ConstructionError::NonAbelianGroup));
    }

    #[test]
    fn lifted_phi_is_partial() {
        let r = zmod(4);
        let x = idealization(&GradedModule::cyclic(&r, 2).unwrap()).unwrap();
        let inv = enumerate_graded_ideals(&r).unwrap();
        let phi = x.lift_phi(&PhiMap::Zero, &inv).unwrap();
        let p = GradedIdeal::generate(&r, &[2]).unwrap();
        let lifted = x.ideal_plus_module(&p).unwrap();
        let value = phi.apply(&lifted).unwrap().unwrap();
        assert_eq!(value, x.ideal_plus_module(&GradedIdeal::zero(&r)).unwrap());
        let zero = GradedIdeal::zero(x.ring());
        assert!(matches!(phi.apply(&zero), Err(PhiError::CustomTableMiss { .. })));
    }
}
