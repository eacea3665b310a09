//! Ring constructions with their induced gradings and induced φ-maps.

mod idealize;
mod localize;
mod module;
mod quotient;

pub use idealize::{idealization, Idealization};
pub use localize::{localize, multiplicative_closure, LocalizationMap};
pub use module::{GradedModule, ModuleError};
pub use quotient::{quotient, QuotientMap};

use thiserror::Error;

use crate::classify::ClassifyError;
use crate::graded::GradingError;
use crate::ideal::IdealError;
use crate::phi::PhiError;
use crate::ring::RingError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("the ideal is not proper")]
    NotProper,
    #[error("idealization needs an abelian grading group")]
    NonAbelianGroup,
    #[error("element {0} of the multiplicative set is not homogeneous")]
    NotHomogeneous(usize),
    #[error("the set is not multiplicatively closed: {0} * {1} is missing")]
    NotMultiplicative(usize, usize),
    #[error("a multiplicative set must contain unity")]
    MissingOne,
    #[error("zero lies in the multiplicative set, so the localization is the zero ring")]
    ZeroRing,
    #[error("the ideal belongs to a different ring than the construction")]
    ParentMismatch,
    #[error("the ideal does not contain the kernel")]
    DoesNotContainKernel,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Phi(#[from] PhiError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}
