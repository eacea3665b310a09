//! Finite group-graded commutative rings, their graded ideals, and the
//! φ-prime, φ-r and related ideal classes over them.
//!
//! Rings are small and given by Cayley tables, so every predicate is decided
//! by exhaustive search.

pub mod classify;
pub mod constructions;
pub mod elements;
pub mod graded;
pub mod harness;
pub mod group;
pub mod ideal;
pub mod iso;
pub mod lattice;
pub mod phi;
pub mod ring;
pub mod ringspec;

pub use classify::{Classification, Classifier, Mutation, Verdict, Witness};
pub use elements::ElementSet;
pub use graded::{GradedRing, Grading};
pub use group::FiniteGroup;
pub use ideal::GradedIdeal;
pub use lattice::{enumerate_graded_ideals, IdealInventory};
pub use phi::PhiMap;
pub use ring::FiniteRing;
