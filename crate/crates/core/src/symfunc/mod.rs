//! Symmetric functions over a coefficient field, with conversions between
//! the classical bases and fundamental quasisymmetric expansions.

pub mod basis;
pub mod character;
mod partition;
pub mod qsym;
mod sf;
mod special;

pub use basis::{convert, display_in, elementary, from_basis, homogeneous, schur, to_basis, Basis};
pub use character::character;
pub use partition::{compositions, partitions, partitions_with_length, Composition, Partition};
pub use qsym::{qsym_extract_schur, schur_to_fundamental, to_fundamental, QSymVector};
pub use sf::SymFunc;
pub use special::{biexponent, biexponent_qt, skew_schur, straighten};

use crate::coeff::CoeffError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: u32, max: u32 },
    #[error("not symmetric: M{first} and M{second} have different coefficients")]
    NotSymmetric { first: Composition, second: Composition },
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}
