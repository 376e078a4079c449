//! Strata of relative equilibria near a fixed point of a compact Lie
//! group action, computed exactly from highest-weight data.

pub mod classify;
pub mod config;
pub mod error;
pub mod float_oracle;
pub mod kernels;
pub mod lie;
pub mod linalg;
pub mod module;
pub mod pipeline;
pub mod report;
pub mod sparse;
pub mod strata;
pub mod surd;
pub mod weights;
