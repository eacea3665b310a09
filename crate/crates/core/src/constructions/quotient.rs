use std::sync::Arc;

use crate::elements::ElementSet;
use crate::graded::GradedRing;
use crate::ideal::{same_ring, GradedIdeal};
use crate::lattice::IdealInventory;
use crate::phi::{CustomPhi, PhiMap};
use crate::ring::FiniteRing;

use super::ConstructionError;

/// The projection R → R/P with (R/P)_g = (R_g + P)/P.
///
/// Cosets are numbered by their smallest element, in increasing order.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    source: Arc<GradedRing>,
    ideal: GradedIdeal,
    target: Arc<GradedRing>,
    projection: Vec<usize>,
    representatives: Vec<usize>,
}

pub fn quotient(p: &GradedIdeal) -> Result<QuotientMap, ConstructionError> {
    if !p.is_proper() {
        return Err(ConstructionError::NotProper);
    }
    let source = Arc::clone(p.ring());
    let n = source.order();
    let mut projection = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for a in source.elements() {
        if projection[a] != usize::MAX {
            continue;
        }
        let class = representatives.len();
        representatives.push(a);
        for q in p.elements().iter() {
            projection[source.add(a, q)] = class;
        }
    }
    let m = representatives.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &representatives {
        for &b in &representatives {
            add.push(projection[source.add(a, b)]);
            mul.push(projection[source.mul(a, b)]);
        }
    }
    let ring = FiniteRing::from_tables(
        m,
        add,
        mul,
        projection[source.zero()],
        projection[source.one()],
    )?;
    let components = source
        .grading()
        .components()
        .iter()
        .map(|c| ElementSet::from_elements(m, c.iter().map(|a| projection[a])))
        .collect();
    let target = GradedRing::new(ring, source.group().clone(), components)?;
    Ok(QuotientMap {
        source,
        ideal: p.clone(),
        target: Arc::new(target),
        projection,
        representatives,
    })
}

impl QuotientMap {
    pub fn source(&self) -> &Arc<GradedRing> {
        &self.source
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn target(&self) -> &Arc<GradedRing> {
        &self.target
    }

    pub fn project(&self, a: usize) -> usize {
        self.projection[a]
    }

    /// Smallest source element of each coset.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn project_set(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_elements(self.target.order(), set.iter().map(|a| self.projection[a]))
    }

    /// I ↦ (I + P)/P.
    pub fn image(&self, i: &GradedIdeal) -> Result<GradedIdeal, ConstructionError> {
        if !same_ring(i.ring(), &self.source) {
            return Err(ConstructionError::ParentMismatch);
        }
        Ok(GradedIdeal::from_elements(&self.target, self.project_set(i.elements()))?)
    }

    /// The full preimage of a target ideal, which contains P.
    pub fn preimage(&self, t: &GradedIdeal) -> Result<GradedIdeal, ConstructionError> {
        if !same_ring(t.ring(), &self.target) {
            return Err(ConstructionError::ParentMismatch);
        }
        let elements = ElementSet::from_elements(
            self.source.order(),
            self.source.elements().filter(|&a| t.contains(self.projection[a])),
        );
        Ok(GradedIdeal::from_elements(&self.source, elements)?)
    }

    /// φ_P(I/P) = (φ(I) + P)/P, and ∅ when φ(I) = ∅, tabulated over every
    /// graded ideal of the quotient.
    pub fn induced_phi(&self, phi: &PhiMap, target_ideals: &IdealInventory) -> Result<PhiMap, ConstructionError> {
        if !same_ring(target_ideals.ring(), &self.target) {
            return Err(ConstructionError::ParentMismatch);
        }
        let mut table = CustomPhi::new(format!("{phi}_P"));
        for t in target_ideals.ideals() {
            let i = self.preimage(t)?;
            let value = match phi.apply(&i)? {
                None => None,
                Some(v) => Some(self.image(&v)?),
            };
            table.insert(t, value.as_ref());
        }
        Ok(PhiMap::custom(table))
    }
}
