//! Exact computer algebra for simplicial power rings, cone-ring progression
//! matrices, Toeplitz normal forms and classifying maps of ring extensions.

pub mod gamma;
pub mod homotopy;
pub mod lattice;
pub mod power;
pub mod report;
pub mod rings;
pub mod simplicial;
pub mod suites;
pub mod toeplitz;
