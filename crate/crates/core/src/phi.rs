//! Maps φ: GI(R) → GI(R) ∪ {∅} used to excuse products lying in φ(P).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::elements::ElementSet;
use crate::ideal::GradedIdeal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PhiError {
    #[error("custom map `{name}` has no entry for the ideal {ideal}")]
    CustomTableMiss { name: String, ideal: ElementSet },
    #[error("unrecognized phi `{0}` (expected empty, zero, identity, power:n or omega)")]
    Unrecognized(String),
    #[error("power maps need an exponent of at least 1, got {0}")]
    BadExponent(u32),
}

/// A finite φ given by a table over graded ideals; `None` values mean ∅.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CustomPhi {
    name: String,
    table: BTreeMap<ElementSet, Option<ElementSet>>,
}

impl CustomPhi {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            table: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, ideal: &GradedIdeal, value: Option<&GradedIdeal>) {
        self.table
            .insert(ideal.elements().clone(), value.map(|v| v.elements().clone()));
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&ElementSet, Option<&ElementSet>)> {
        self.table.iter().map(|(k, v)| (k, v.as_ref()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhiMap {
    /// φ_∅
    Empty,
    /// φ_0
    Zero,
    /// φ_1
    Identity,
    /// φ_n(P) = P^n
    Power(u32),
    /// φ_ω(P) = ∩ P^n
    Omega,
    Custom(Arc<CustomPhi>),
}

impl PhiMap {
    /// The sweep used by the theorem harness, in the order of the chain
    /// φ_∅ ≤ φ_0 ≤ φ_ω ≤ φ_3 ≤ φ_2 ≤ φ_1 where it applies.
    pub fn standard_sweep() -> Vec<PhiMap> {
        vec![
            PhiMap::Empty,
            PhiMap::Zero,
            PhiMap::Power(2),
            PhiMap::Power(3),
            PhiMap::Omega,
            PhiMap::Identity,
        ]
    }

    /// The same maps listed along the pointwise order.
    pub fn ordered_chain() -> Vec<PhiMap> {
        vec![
            PhiMap::Empty,
            PhiMap::Zero,
            PhiMap::Omega,
            PhiMap::Power(3),
            PhiMap::Power(2),
            PhiMap::Identity,
        ]
    }

    pub fn custom(table: CustomPhi) -> Self {
        PhiMap::Custom(Arc::new(table))
    }

    /// φ(P), normalized so that the result is contained in P. `None` is ∅.
    pub fn apply(&self, p: &GradedIdeal) -> Result<Option<GradedIdeal>, PhiError> {
        let ring = p.ring();
        Ok(match self {
            PhiMap::Empty => None,
            PhiMap::Zero => Some(GradedIdeal::zero(ring)),
            PhiMap::Identity => Some(p.clone()),
            PhiMap::Power(0) => return Err(PhiError::BadExponent(0)),
            PhiMap::Power(n) => Some(p.power(*n)),
            PhiMap::Omega => Some(p.omega_intersection()),
            PhiMap::Custom(table) => {
                let value = table.table.get(p.elements()).ok_or_else(|| PhiError::CustomTableMiss {
                    name: table.name.clone(),
                    ideal: p.elements().clone(),
                })?;
                value.as_ref().map(|v| {
                    let inside = v.intersection(p.elements());
                    GradedIdeal::from_trusted(Arc::clone(ring), inside)
                })
            }
        })
    }

    /// φ(P) as an element set, with ∅ as the empty set.
    pub fn excused(&self, p: &GradedIdeal) -> Result<ElementSet, PhiError> {
        Ok(self
            .apply(p)?
            .map(|q| q.elements().clone())
            .unwrap_or_else(|| ElementSet::empty(p.ring().order())))
    }
}

impl fmt::Display for PhiMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhiMap::Empty => write!(f, "empty"),
            PhiMap::Zero => write!(f, "zero"),
            PhiMap::Identity => write!(f, "identity"),
            PhiMap::Power(n) => write!(f, "power:{n}"),
            PhiMap::Omega => write!(f, "omega"),
            PhiMap::Custom(t) => write!(f, "custom:{}", t.name),
        }
    }
}

impl FromStr for PhiMap {
    type Err = PhiError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "empty" => Ok(PhiMap::Empty),
            "zero" => Ok(PhiMap::Zero),
            "identity" => Ok(PhiMap::Identity),
            "omega" => Ok(PhiMap::Omega),
            _ => {
                let n = s
                    .strip_prefix("power:")
                    .and_then(|n| n.parse::<u32>().ok())
                    .ok_or_else(|| PhiError::Unrecognized(s.to_string()))?;
                match n {
                    0 => Err(PhiError::BadExponent(0)),
                    1 => Ok(PhiMap::Identity),
                    n => Ok(PhiMap::Power(n)),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedRing;
    use crate::ring::FiniteRing;

    fn z8() -> Arc<GradedRing> {
        Arc::new(GradedRing::trivially_graded(FiniteRing::zmod(8).unwrap()))
    }

    #[test]
    fn standard_family() {
        let r = z8();
        let p = GradedIdeal::generate(&r, &[2]).unwrap();
        assert_eq!(PhiMap::Power(2).apply(&p).unwrap().unwrap().elements().to_vec(), vec![0, 4]);
        assert_eq!(PhiMap::Identity.apply(&p).unwrap(), Some(p.clone()));
        assert_eq!(PhiMap::Empty.apply(&p).unwrap(), None);
        assert!(PhiMap::Zero.apply(&p).unwrap().unwrap().is_zero());
        assert!(PhiMap::Omega.apply(&p).unwrap().unwrap().is_zero());
    }

    #[test]
    fn custom_tables_normalize_and_miss() {
        let r = z8();
        let p = GradedIdeal::generate(&r, &[4]).unwrap();
        let q = GradedIdeal::generate(&r, &[2]).unwrap();
        let mut table = CustomPhi::new("t");
        table.insert(&p, Some(&q));
        let phi = PhiMap::custom(table);
        assert_eq!(phi.apply(&p).unwrap(), Some(p.clone()));
        assert!(matches!(phi.apply(&q), Err(PhiError::CustomTableMiss { .. })));
    }

    #[test]
    fn parse_round_trip() {
        for phi in PhiMap::standard_sweep() {
            assert_eq!(phi.to_string().parse::<PhiMap>().unwrap(), phi);
        }
        assert_eq!("power:1".parse::<PhiMap>().unwrap(), PhiMap::Identity);
        assert!("power:0".parse::<PhiMap>().is_err());
        assert!("half".parse::<PhiMap>().is_err());
    }
}
