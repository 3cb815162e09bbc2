//! Pythagorean triples with numeric-palindrome components.
//!
//! The crate builds the structured families whose members carry
//! palindromic components at every index, searches for palindrome-bearing
//! triples three different ways (generator sweeps, palindrome-anchored
//! decomposition, exhaustive evidence scans), classifies triples by the
//! divisibility facts that constrain where palindromes can appear, and
//! re-verifies a bundled set of reference rows — including one published
//! row that fails the Pythagorean identity and is reported with its
//! unique correction.
//!
//! Public arithmetic is exact and arbitrary-precision throughout
//! ([`Natural`] is an alias for `num_bigint::BigUint`); fixed-width
//! integers are confined to search interiors, and every search hit is
//! re-validated through [`Triple::new`] on emission.

pub mod catalog;
pub mod cli;
pub mod digits;
pub mod error;
pub mod families;
pub mod search;
pub mod triples;

pub use digits::{DigitTemplate, Natural, Parity};
pub use error::{Error, Result};
pub use families::{FamilyId, FamilyMember};
pub use search::{AnchorRole, AnchoredQuery, EuclidQuery, Provenance, SearchHit};
pub use triples::{
    DigitParityForm, DivisibilityReport, EuclidParams, FactorForm, PalindromeProfile, Triple,
};
