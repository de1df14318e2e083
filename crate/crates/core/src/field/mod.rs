//! Exact scalars: rationals, number fields, polynomials and factorization.

pub mod complex;
pub mod cyclotomic;
mod embedding;
pub mod integer;
pub mod modp;
mod numfield;
mod poly;
mod rational;
pub mod splitting;
mod traits;
pub mod trager;
pub mod zassenhaus;

pub use embedding::Embedding;
pub use numfield::{monic_integral, NfElem, NumberField};
pub use poly::Poly;
pub use rational::{factor_over_q, integer_poly_to_rational, primitive_integer_poly, Rationals, QQ};
pub use splitting::{splitting_field, SplittingField};
pub use trager::factor_over_field;
pub use traits::Field;

pub use cyclotomic::is_root_of_unity;
