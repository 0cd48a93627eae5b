//! Exact finite-dimensional Hopf–Galois extensions, their morphisms,
//! associated bundles and the K-ring bookkeeping built on top of them.

pub mod bundle;
pub mod comodule;
pub mod error;
pub mod hopf;
pub mod kring;
pub mod linear;
pub mod morphism;
pub mod report;

pub use error::{Error, Result};
