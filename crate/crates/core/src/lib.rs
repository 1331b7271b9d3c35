//! Query-model laboratory for string algorithms with a simulated quantum
//! comparator.
//!
//! Everything here is organised around a charged black-box [`oracle::StringTable`]:
//! algorithms may only look at input symbols through it, and every inspection
//! is tallied in a [`oracle::QueryLedger`]. On top of the oracle sit
//!
//! * [`grover`] — an exact simulation of Grover-style search (closed-form and
//!   statevector backends) plus the first-one search subroutine,
//! * [`compare`] — the boosted lexicographic string comparator,
//! * [`avl`] / [`heap`] / [`trie`] — comparator-driven containers and the
//!   classical prefix-tree baseline,
//! * [`problems`] — most-frequent string, string sorting and sequence
//!   intersection, each with its classical baseline,
//! * [`adversary`] — the executable lower-bound game for deterministic
//!   most-frequent-string algorithms,
//! * [`ground_truth`] — uncharged referee implementations used to judge
//!   answers.
//!
//! The crate is `no_std` (with `alloc`); all I/O, file formats and the CLI
//! live in the companion `qstrings-bench` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod adversary;
pub mod avl;
pub mod compare;
pub mod ground_truth;
pub mod grover;
pub mod heap;
pub mod oracle;
pub mod problems;
pub mod trie;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
