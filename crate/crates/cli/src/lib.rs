//! Command-line companion to `caylerian-core`: enumeration, polynomial
//! computation, γ-extraction, series expansion, conjecture fitting, and
//! the exhaustive verification suite.

pub mod figures;
pub mod format;
pub mod guard;
pub mod verify;
