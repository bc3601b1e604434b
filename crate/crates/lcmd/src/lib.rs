//! Std companion to `lcmd-core`: matrix and graph JSON, a rayon-backed
//! brute-force driver, the reference tables, and the `lcmd` command line.

pub mod cli;
pub mod json;
pub mod named;
pub mod parallel;
pub mod source;
pub mod tables;

pub use parallel::lcmd_brute_parallel;

/// Default thread count variable read by the CLI.
pub const THREADS_ENV: &str = "LCMD_THREADS";
