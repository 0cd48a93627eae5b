//! Exact linear algebra over the rationals and prime fields.

mod mat;
mod rat;
mod scalar;
mod search;
pub mod sparse;
mod subspace;
pub mod tensor;

pub use mat::{Echelon, Mat};
pub use scalar::{is_prime, Field, Scalar};
pub use search::{find_invertible_in_span, SearchOutcome};
pub use subspace::{
    coordinates_in, image, is_bijective, kernel, quotient, solve, Quotient, Subspace,
};
