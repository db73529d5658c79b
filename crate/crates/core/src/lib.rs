//! Exact base-φ numeration.
//!
//! Natural numbers written as sums of powers of the golden mean with digits
//! 0 and 1 and no two adjacent ones. The crate computes these expansions
//! exactly, generates the generalized Beatty sequences and morphism fixed
//! points that describe where each digit is 1, and checks those descriptions
//! against brute force over finite ranges.

pub mod error;
pub mod exact_arith;
pub mod expansion;
pub mod morphisms;
pub mod report;
pub mod sequences;
pub mod theorems;

pub use error::Error;
pub use exact_arith::PhiInt;
pub use expansion::{expand, expand_recursive, LucasInterval, PhiExpansion, SubInterval};
pub use morphisms::{gamma, gamma_plus, sigma, Letter, Morphism, Word};
pub use report::{Mismatch, ReportBuilder, VerificationReport};
pub use sequences::{fibonacci_word, FibWord, GbsParams};
pub use theorems::{DigitTable, TCode, TPlusCode};
