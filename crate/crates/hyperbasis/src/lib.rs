//! File formats, verification suites and the command-line front end for
//! `hyperbasis-core`.

pub mod format;
pub mod suites;

pub use hyperbasis_core as model;
