//! Formal q-series.

pub mod identities;
pub mod series;

pub use identities::{
    character, compare_sides, delta, euler_phi, euler_phi_product, identity_sides, verify_identity,
    weyl_m3_alt, Identity, Model, Verification,
};
pub use series::{PuiseuxSeries, DENOM};
