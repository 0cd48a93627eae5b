//! Augmented rings and the shifted Atiyah–Todd basis of `K⁰(ℂPⁿ)`.

mod atiyah_todd;
mod augmented;
mod intmat;
mod laurent;
mod shadow;
mod truncated;

pub use atiyah_todd::{
    at_base_change, at_base_change_inverse, at_table, augmentation_surjective, inverse_paths_agree,
    line_class, primary_identity, representation_action, ring_map, secondary_identity,
    spans_lattice, AtTable, Augmentation, KClassVector, ShiftedBasis,
};
pub use augmented::{
    augment, coreflect, laurent_to_truncated, projective_space, truncate, AugmentedMorphism,
    AugmentedRing, IntAlgebra, ModuleElem, ModuleModel, Ring, RingElem,
};
pub use intmat::IntMat;
pub use laurent::LaurentPoly;
pub use shadow::bundle_shadow;
pub use truncated::TruncatedPoly;

#[cfg(test)]
mod tests;
