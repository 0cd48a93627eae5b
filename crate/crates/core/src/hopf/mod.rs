//! Algebras and Hopf algebras given by structure constants.

mod algebra;
mod commutative;
mod cosemisimple;
mod data;
mod grading;
mod group;
mod map;
pub(crate) mod roots;
mod zoo;

pub use algebra::AlgebraData;
pub use commutative::{
    abelianization, ideal_generated, quotient_algebra, rational_characters, split_idempotents,
    trace_radical, Characters,
};
pub use cosemisimple::{coflatness, grouplikes, is_cosemisimple, left_integrals, Coflatness};
pub use data::{antipode_inverse, check_antipode_inverse, check_hopf, HopfData};
pub use grading::{Degree, GradingGroup};
pub use group::{FiniteGroup, MAX_GROUP_ORDER};
pub use map::{check_hopf_map, HopfMap};
pub use zoo::{
    build_dual_group_algebra, build_group_algebra, fourier_iso, primitive_root_of_unity,
    sweedler_h4, trivial_hopf,
};
