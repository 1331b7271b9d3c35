//! Experiment driver for the qstrings laboratory: dataset construction,
//! single runs with JSON reports, scaling sweeps with CSV output and
//! log-log slope fits, and the adversary game harness. The `qstrings`
//! binary is a thin CLI over this library.

pub mod fit;
pub mod report;
pub mod runner;
pub mod sweep;
