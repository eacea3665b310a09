use std::sync::Arc;

use thiserror::Error;

use crate::elements::ElementSet;
use crate::graded::{direct_sum_table, is_subgroup, GradedRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("a module needs at least one element")]
    Empty,
    #[error("{table} table has {found} entries, expected {expected}")]
    TableShape {
        table: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("table entry {0} is not a module element")]
    OutOfRange(usize),
    #[error("module addition is not an abelian group operation")]
    NotAbelianGroup,
    #[error("the action is not bilinear at ring element {r}, module element {m}")]
    NotBilinear { r: usize, m: usize },
    #[error("the action is not associative at ({r}, {s}, {m})")]
    NotAssociative { r: usize, s: usize, m: usize },
    #[error("unity does not act as the identity on {0}")]
    OneNotIdentity(usize),
    #[error("expected {expected} components, found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("module component {0} is not an additive subgroup")]
    NotSubgroup(usize),
    #[error("the module components do not form a direct sum")]
    NotDirectSum,
    #[error("R_{g} M_{h} is not contained in M_{gh}")]
    NotGraded { g: usize, h: usize, gh: usize },
    #[error("cyclic modules need a ring whose additive group is generated by unity")]
    NotCyclicBase,
    #[error("Z_{module} is not a module over a ring of characteristic {characteristic}")]
    Incompatible { module: usize, characteristic: usize },
}

/// A finite graded module over a graded ring, given by tables.
#[derive(Debug, Clone)]
pub struct GradedModule {
    base: Arc<GradedRing>,
    order: usize,
    add: Vec<usize>,
    zero: usize,
    action: Vec<usize>,
    components: Vec<ElementSet>,
}

impl GradedModule {
    /// `action[r * order + m]` is `r·m`. Checks the module axioms and the
    /// grading exhaustively.
    pub fn from_tables(
        base: &Arc<GradedRing>,
        order: usize,
        add: Vec<usize>,
        zero: usize,
        action: Vec<usize>,
        components: Vec<ElementSet>,
    ) -> Result<Self, ModuleError> {
        if order == 0 {
            return Err(ModuleError::Empty);
        }
        let n = base.order();
        for (name, table, expected) in [("addition", &add, order * order), ("action", &action, n * order)] {
            if table.len() != expected {
                return Err(ModuleError::TableShape {
                    table: name,
                    expected,
                    found: table.len(),
                });
            }
            if let Some(&bad) = table.iter().find(|&&x| x >= order) {
                return Err(ModuleError::OutOfRange(bad));
            }
        }
        if zero >= order {
            return Err(ModuleError::OutOfRange(zero));
        }
        let plus = |a: usize, b: usize| add[a * order + b];
        let act = |r: usize, m: usize| action[r * order + m];

        let group_ok = (0..order).all(|a| plus(zero, a) == a)
            && (0..order).all(|a| (0..order).any(|b| plus(a, b) == zero))
            && (0..order).all(|a| (0..order).all(|b| plus(a, b) == plus(b, a)))
            && (0..order).all(|a| {
                (0..order).all(|b| (0..order).all(|c| plus(plus(a, b), c) == plus(a, plus(b, c))))
            });
        if !group_ok {
            return Err(ModuleError::NotAbelianGroup);
        }
        for m in 0..order {
            if act(base.one(), m) != m {
                return Err(ModuleError::OneNotIdentity(m));
            }
        }
        for r in base.elements() {
            for m in 0..order {
                for m2 in 0..order {
                    if act(r, plus(m, m2)) != plus(act(r, m), act(r, m2)) {
                        return Err(ModuleError::NotBilinear { r, m });
                    }
                }
                for s in base.elements() {
                    if act(base.add(r, s), m) != plus(act(r, m), act(s, m)) {
                        return Err(ModuleError::NotBilinear { r, m });
                    }
                    if act(base.mul(r, s), m) != act(r, act(s, m)) {
                        return Err(ModuleError::NotAssociative { r, s, m });
                    }
                }
            }
        }

        let group = base.group();
        if components.len() != group.order() {
            return Err(ModuleError::ComponentCount {
                expected: group.order(),
                found: components.len(),
            });
        }
        for (g, c) in components.iter().enumerate() {
            if c.universe() != order || !is_subgroup(c, zero, plus) {
                return Err(ModuleError::NotSubgroup(g));
            }
        }
        direct_sum_table(order, zero, plus, &components).ok_or(ModuleError::NotDirectSum)?;
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                let ok = base
                    .component(g)
                    .iter()
                    .all(|r| components[h].iter().all(|m| components[gh].contains(act(r, m))));
                if !ok {
                    return Err(ModuleError::NotGraded { g, h, gh });
                }
            }
        }
        Ok(Self {
            base: Arc::clone(base),
            order,
            add,
            zero,
            action,
            components,
        })
    }

    /// The zero module, concentrated in the identity degree.
    pub fn zero_module(base: &Arc<GradedRing>) -> Self {
        let group = base.group();
        let components = group.elements().map(|_| ElementSet::singleton(1, 0)).collect();
        Self::from_tables(base, 1, vec![0], 0, vec![0; base.order()], components)
            .expect("the zero module is always valid")
    }

    /// R as a module over itself, with M_g = R_g.
    pub fn regular(base: &Arc<GradedRing>) -> Self {
        let ring = base.ring();
        Self::from_tables(
            base,
            ring.order(),
            ring.add_table().to_vec(),
            ring.zero(),
            ring.mul_table().to_vec(),
            base.grading().components().to_vec(),
        )
        .expect("the regular module is always valid")
    }

    /// Z_n as a module over a ring whose additive group is generated by 1
    /// (that is, a copy of Z_m with n | m), placed in the identity degree.
    pub fn cyclic(base: &Arc<GradedRing>, n: usize) -> Result<Self, ModuleError> {
        if n == 0 {
            return Err(ModuleError::Empty);
        }
        // integer value of each ring element as a multiple of 1
        let mut value = vec![usize::MAX; base.order()];
        let mut x = base.zero();
        let mut k = 0;
        loop {
            if value[x] != usize::MAX {
                break;
            }
            value[x] = k;
            x = base.add(x, base.one());
            k += 1;
        }
        if value.contains(&usize::MAX) {
            return Err(ModuleError::NotCyclicBase);
        }
        let characteristic = base.order();
        if !characteristic.is_multiple_of(n) {
            return Err(ModuleError::Incompatible {
                module: n,
                characteristic,
            });
        }
        let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let action = base
            .elements()
            .flat_map(|r| (0..n).map(move |m| (r, m)))
            .map(|(r, m)| value[r] * m % n)
            .collect();
        let group = base.group();
        let components = group
            .elements()
            .map(|g| {
                if g == group.identity() {
                    ElementSet::full(n)
                } else {
                    ElementSet::singleton(n, 0)
                }
            })
            .collect();
        Self::from_tables(base, n, add, 0, action, components)
    }

    pub fn base(&self) -> &Arc<GradedRing> {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    pub fn act(&self, r: usize, m: usize) -> usize {
        self.action[r * self.order + m]
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn action_table(&self) -> &[usize] {
        &self.action
    }

    pub fn component(&self, g: usize) -> &ElementSet {
        &self.components[g]
    }

    pub fn components(&self) -> &[ElementSet] {
        &self.components
    }

    /// Zd(M) = { a ∈ R : am = 0 for some nonzero m }.
    pub fn zero_divisors(&self) -> ElementSet {
        ElementSet::from_elements(
            self.base.order(),
            self.base.elements().filter(|&a| {
                (0..self.order).any(|m| m != self.zero && self.act(a, m) == self.zero)
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    fn zmod(n: usize) -> Arc<GradedRing> {
        Arc::new(GradedRing::trivially_graded(FiniteRing::zmod(n).unwrap()))
    }

    #[test]
    fn cyclic_modules() {
        let m = GradedModule::cyclic(&zmod(6), 2).unwrap();
        assert_eq!(m.act(5, 1), 1);
        assert_eq!(m.zero_divisors().to_vec(), vec![0, 2, 4]);
        assert!(matches!(
            GradedModule::cyclic(&zmod(6), 4),
            Err(ModuleError::Incompatible { .. })
        ));
        let base = Arc::new(GradedRing::trivially_graded(FiniteRing::product(&[2, 2]).unwrap()));
        assert_eq!(GradedModule::cyclic(&base, 2).err(), Some(ModuleError::NotCyclicBase));
    }

    #[test]
    fn zero_and_regular_modules() {
        let r = zmod(4);
        assert!(GradedModule::zero_module(&r).zero_divisors().is_empty());
        assert_eq!(GradedModule::regular(&r).zero_divisors().to_vec(), vec![0, 2]);
    }

    #[test]
    fn broken_action_is_rejected() {
        let r = zmod(2);
        // 1 acts as zero
        let err = GradedModule::from_tables(
            &r,
            2,
            vec![0, 1, 1, 0],
            0,
            vec![0, 0, 0, 0],
            vec![ElementSet::full(2)],
        );
        assert_eq!(err.err(), Some(ModuleError::OneNotIdentity(1)));
    }
}
