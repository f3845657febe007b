//! Shapovalov-form values on the basic module of the twisted affine algebra
//! of type A_{2l}^{(2)}, computed three ways: through the reduced Fock space,
//! through an inner product on `Ω ⊗ Λ^{⊗l}`, and by a closed product formula.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: big integers, rationals, Laurent polynomials, quantum integers
//! * [`params`]: rank data and the Gram matrix
//! * [`partitions`]: p-strict partitions, residues, addable/removable nodes,
//!   multipartitions and colored tableaux
//! * [`barcore`]: bar-cores, bar-quotients and the RoCK condition
//! * [`weyl`]: weights, reflections and extremal vectors
//! * [`fock`]: the quantum and reduced Fock spaces
//! * [`symfunc`]: Schur and Schur P functions in a sparse tensor basis
//! * [`verify`]: cross-checks between the three computations

pub mod arith;
pub mod barcore;
pub mod error;
pub mod fock;
pub mod params;
pub mod partitions;
pub mod symfunc;
pub mod verify;
pub mod weyl;

pub use arith::{LaurentPoly, Rational};
pub use error::{Error, Result};
pub use params::GlobalParams;
pub use partitions::{ColoredComposition, Multipartition, Node, Partition};
