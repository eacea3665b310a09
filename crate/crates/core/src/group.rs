//! Finite grading groups given by their full multiplication table.

use thiserror::Error;

/// Largest group order accepted unless a caller passes its own cap.
pub const DEFAULT_MAX_GROUP_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("a group needs at least one element")]
    Empty,
    #[error("group order {order} exceeds the cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("multiplication table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("table entry {0} is not a group element")]
    OutOfRange(usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} is not a two-sided identity")]
    NoIdentity(usize),
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
}

/// How a group was constructed; used when writing ring-spec files.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Trivial,
    Cyclic(usize),
    Klein4,
    Table,
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    kind: GroupKind,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    abelian: bool,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.identity == other.identity && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    pub fn from_table(order: usize, table: Vec<usize>, identity: usize) -> Result<Self, GroupError> {
        Self::from_table_with_cap(order, table, identity, DEFAULT_MAX_GROUP_ORDER)
    }

    /// Validates the group axioms exhaustively.
    pub fn from_table_with_cap(
        order: usize,
        table: Vec<usize>,
        identity: usize,
        cap: usize,
    ) -> Result<Self, GroupError> {
        Self::build(GroupKind::Table, order, table, identity, cap)
    }

    fn build(
        kind: GroupKind,
        order: usize,
        table: Vec<usize>,
        identity: usize,
        cap: usize,
    ) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::Empty);
        }
        if order > cap {
            return Err(GroupError::TooLarge { order, cap });
        }
        if table.len() != order * order {
            return Err(GroupError::TableShape {
                expected: order * order,
                found: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(GroupError::OutOfRange(bad));
        }
        if identity >= order {
            return Err(GroupError::OutOfRange(identity));
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        if (0..order).any(|a| mul(identity, a) != a || mul(a, identity) != a) {
            return Err(GroupError::NoIdentity(identity));
        }
        let mut inverse = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or(GroupError::NoInverse(a))?;
            inverse.push(inv);
        }
        let abelian = (0..order).all(|a| (0..order).all(|b| mul(a, b) == mul(b, a)));
        Ok(Self {
            kind,
            order,
            table,
            identity,
            inverse,
            abelian,
        })
    }

    pub fn trivial() -> Self {
        Self::build(GroupKind::Trivial, 1, vec![0], 0, 1).expect("trivial group")
    }

    /// The cyclic group Z_k written additively on `{0, .., k - 1}`.
    pub fn cyclic(k: usize) -> Result<Self, GroupError> {
        if k == 0 {
            return Err(GroupError::Empty);
        }
        let table = (0..k * k).map(|i| (i / k + i % k) % k).collect();
        let kind = if k == 1 { GroupKind::Trivial } else { GroupKind::Cyclic(k) };
        Self::build(kind, k, table, 0, DEFAULT_MAX_GROUP_ORDER)
    }

    /// Z_2 x Z_2 on `{0, 1, 2, 3}` with multiplication given by XOR.
    pub fn klein4() -> Self {
        let table = (0..16).map(|i| (i / 4) ^ (i % 4)).collect();
        Self::build(GroupKind::Klein4, 4, table, 0, 4).expect("klein four-group")
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups_validate() {
        assert_eq!(FiniteGroup::trivial().order(), 1);
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(z4.inverse(1), 3);
        assert!(z4.is_abelian());
        let k = FiniteGroup::klein4();
        assert!((0..4).all(|g| k.inverse(g) == g));
    }

    #[test]
    fn non_abelian_table_is_detected() {
        // S_3 with elements ordered e, (12), (13), (23), (123), (132).
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let mut table = Vec::new();
        for a in perms {
            for b in perms {
                table.push(index([a[b[0]], a[b[1]], a[b[2]]]));
            }
        }
        let s3 = FiniteGroup::from_table(6, table, 0).unwrap();
        assert!(!s3.is_abelian());
    }

    #[test]
    fn rejects_broken_tables() {
        assert_eq!(
            FiniteGroup::from_table(2, vec![0, 1, 1, 1], 0),
            Err(GroupError::NoInverse(1))
        );
        assert!(matches!(
            FiniteGroup::cyclic(9),
            Err(GroupError::TooLarge { order: 9, cap: 8 })
        ));
        assert_eq!(
            FiniteGroup::from_table(2, vec![0, 1, 1], 0),
            Err(GroupError::TableShape { expected: 4, found: 3 })
        );
    }
}
