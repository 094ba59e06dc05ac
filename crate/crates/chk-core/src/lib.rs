//! Exact construction and verification toolkit for the two-variable
//! Chebyshev-Koornwinder (ChK) oscillator algebra.
//!
//! The crate builds the ChK polynomial family from its defining recurrences,
//! realizes the full operator catalog of the generalized ChK oscillator on a
//! truncated Fock space with exact Q(i,√2,√5) arithmetic, and mechanically
//! checks every numbered commutation relation, eigenvalue table, differential
//! representation and structural claim of the source article, adjudicating
//! printed forms against independently computed oracles.

pub mod catalog;
pub mod field;
pub mod fock;
pub mod poly;
pub mod quad;
pub mod relation;
pub mod structure;
