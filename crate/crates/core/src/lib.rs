//! Exact certification of matrix D-stability.
//!
//! A real square matrix `A` is (positive) D-stable when `DA` has every
//! eigenvalue in the open right half-plane for every positive diagonal `D`.
//! This crate expands `det(A + iD)` through a delete/zero recursion into
//! polynomials whose coefficients are principal minors of `A`, and builds a
//! hierarchy of sufficient sign conditions on those polynomials. Necessary
//! conditions and a randomized falsifier cover the other direction.

pub mod certifier;
pub mod error;
pub mod falsifier;
pub mod harness;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod recursion;
pub mod report;

pub use error::{Error, Result};
pub use matrix::{IndexSet, Matrix, MinorTable, PClass};
pub use poly::{Monomial, Point, Poly, SignClass};
pub use rational::Rational;
pub use recursion::{DetPair, DetTree, NodeLabel, PairFG};
