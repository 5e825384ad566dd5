//! Exact enumeration of Cayley permutations, Burge words and Burge
//! matrices, together with the descent polynomial families they carry
//! (Eulerian, Caylerian, two-sided) and their gamma expansions.
//!
//! Everything here is exact: counts and coefficients are
//! arbitrary-precision integers, and the few places where division is
//! unavoidable (gamma tables, the ascent-set determinant, polynomial
//! fitting) work over exact rationals.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI
//! live in the companion `caylerian` crate.

#![no_std]

extern crate alloc;

pub mod burge;
pub mod cayley;
pub mod genburge;
pub mod polynomials;
pub mod prescribed;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
