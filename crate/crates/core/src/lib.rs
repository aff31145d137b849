//! Exact computations with finite-dimensional Hopf algebras over the rationals:
//! Hopf-Galois extensions, their Hochschild and cyclic homology, and the
//! induced module and comodule structures.

pub mod constructions;
pub mod galois;
pub mod homology;
pub mod hopf;
pub mod instance;
pub mod linalg;
pub mod ops;
pub mod rep;
pub mod report;

pub use linalg::{Matrix, QuotientSpace, Rational, Subspace, Vector};
