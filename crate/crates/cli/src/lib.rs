//! Command-line front end: single checks, grid sweeps and JSON reports.

pub mod checks;
pub mod cli;
pub mod report;
pub mod suite;
