//! Lorenz links, T-links and diagonal grid diagrams.
//!
//! A Lorenz link is the closure of the positive permutation braid of a
//! fixpoint-free shuffle. The same data can be packaged three ways: as a
//! nondecreasing vector of positive integers, as T-link parameters
//! `((p_1,q_1),...,(p_s,q_s))`, or as a diagonal grid diagram. This crate
//! builds all three, converts between them, and checks that classical link
//! invariants (component count, Alexander polynomial, Kauffman-bracket
//! polynomial) agree across the representations.

pub mod braid;
pub mod grid;
pub mod invariants;
pub mod laurent;
pub mod lorenz;
pub mod parse;
pub mod permutation;
pub mod planar;
pub mod verify;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
