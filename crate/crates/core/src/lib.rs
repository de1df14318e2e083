//! Exact computation of Zariski closures of finitely generated matrix
//! groups over the rationals and number fields.
//!
//! The result of [`zariski_closure`] is a basis of the Lie algebra of the
//! identity component together with one representative of each
//! component.

pub mod closure;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod jordan;
pub mod lattice;
pub mod liealg;
pub mod linalg;
pub mod membership;
pub mod multrel;
pub mod torus;

pub use closure::{
    lie_of_semisimple, lie_of_unipotent, member_connected, zariski_closure, ClosureConfig, ClosureFailure,
    ClosureTrace, GroupDescription,
};
pub use error::{Error, Result};
pub use field::{Field, NfElem, NumberField, Poly, Rationals, QQ};
pub use jordan::{additive_jordan, log_unipotent, multiplicative_jordan, JordanPair};
pub use lattice::{integer_kernel, IntegerLattice};
pub use liealg::{
    cartan_subalgebra, centralizer_in, conjugate_subalgebra, generated_subalgebra, split_semisimple_nilpotent,
    LieSubalgebra,
};
pub use linalg::{Matrix, Subspace};
pub use membership::{member, MembershipVerdict};
pub use multrel::{is_trivial_quick, relations, MultrelConfig, RelationLattice};
pub use torus::{diagonalize_toral, lattice_of_toral_algebra, toral_algebra_of_lattice, torus_contains, DiagonalizedTorus};
