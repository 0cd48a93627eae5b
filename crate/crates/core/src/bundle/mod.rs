//! Left comodules, the action `M◁V` on relative Hopf modules and the
//! associated bundles `A□V`.

mod action;
mod associated;
mod comodule;

pub use action::triangle_action;
pub use associated::{
    bundle_tensor, certify_fgp, cotensor_bundle, AssociatedBundle, BundleProduct,
};
pub use comodule::LeftComodule;

#[cfg(test)]
mod tests;
