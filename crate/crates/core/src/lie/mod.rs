//! Classical matrix Lie algebras, their modules and stabilisers.

pub mod algebra;
pub mod layout;
pub mod rep;
pub mod stabiliser;

pub use algebra::{ClassicalType, Factor, FormConvention, LieAlgebra};
pub use layout::{BlockKind, MatrixLayout};
pub use rep::Representation;
pub use stabiliser::{
    generic_stabiliser, generic_stabiliser_dim, is_abelian, sample_regular_point, stabiliser, subalgebra_index,
    GenericStabiliser, Subspace,
};
