//! Comodule algebras, relative Hopf modules and Hopf–Galois extensions.

mod algebra;
mod coaction;
mod extension;
pub mod fields;
mod module;
mod tensor;

pub use algebra::ComoduleAlgebra;
pub use coaction::{Coaction, Side};
pub use extension::{
    canonical_map, comodule_maps_from_hopf, has_normal_basis, is_hopf_galois, CanonicalMap,
    Extension, DEFAULT_SEARCH_BOUND,
};
pub use module::{check_relative_hopf_module, RelativeHopfModule};
pub use tensor::{cotensor, BalancedTensor};
