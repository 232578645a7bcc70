//! Counting homomorphisms, embeddings and sub-hypergraph patterns in small
//! hypergraphs, the motif bases relating them, fractional width invariants,
//! tensor products and interpolation of motif parameters.
//!
//! Hypergraphs have at most 64 vertices; vertex sets are bitmasks. Every
//! count is exact. The crate builds without `std` (it needs `alloc`).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algorithms;
pub mod basis;
pub mod canon;
pub mod counting;
pub mod error;
pub mod family;
pub mod hypergraph;
pub mod interpolate;
pub mod invariants;
pub mod linalg;
pub mod lp;
pub mod partition;
pub mod tensor;

pub use error::{Error, Result};
pub use hypergraph::{DeriveMode, Hypergraph, VertexSet, MAX_VERTICES};

/// Exact rationals used for coefficients, LP values and linear algebra.
pub type Rational = num_rational::BigRational;
