//! Positivity classes of asymptotically log del Pezzo pairs, the conic
//! bundle of the `Beth` class, and the catalog of families.

pub mod catalog;
mod conic;
mod positivity;
mod sweep;
pub mod tables;

pub use catalog::{
    boundary_component_bound, families, family, identify_base, resolve, AutInfo, CatalogError, Family, KeeInfo,
    KeeReason, KeeStatus,
};
pub use conic::{conic_bundle, ConicBundle};
pub use positivity::{positivity_class, PositivityClass};
pub use sweep::{catalog_entries, sample_parameters, sweep, CatalogEntry, SweepRecord};
