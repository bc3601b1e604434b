//! Exact least common multiple of all subdeterminants (`lcmd`) of the
//! Kronecker product `A ⊗ D(K_n)`, where `A` is an integer `m × 2` matrix and
//! `D(K_n)` is the signed incidence matrix of the complete graph on `n`
//! vertices.
//!
//! Two independent routes are provided:
//!
//! * [`closed_form`] evaluates the closed formula
//!   `lcm((lcmd A)^(n-1), LCM over collections of Π det A^{I,J})`;
//! * [`minors`] enumerates every square submatrix and folds `|det|` into an
//!   lcm, with optional rank-based pruning and deterministic chunking.
//!
//! [`witness`] builds explicit submatrices attaining the formula's factors.
//!
//! The crate is `no_std` and only needs `alloc`. Threading, file formats and
//! the command line live in the companion `lcmd` crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod closed_form;
pub mod error;
pub mod factor;
pub mod graph;
pub mod kron;
pub mod matrix;
pub mod minors;
pub mod witness;

mod smalldet;

pub use arith::{lcm_fold, LcmAccumulator};
pub use closed_form::{
    count_maximal_collections, det_pair, enumerate_collections, enumerate_pairs, lcmd_formula,
    lcmd_formula_2x2, lcmd_formula_with, reduce_identity_rows, Collection, CollectionMode,
    FormulaValue, Multiset, MultisetPair,
};
pub use error::{Error, Result};
pub use factor::{factor, FactoredInteger, DEFAULT_TRIAL_BOUND};
pub use graph::{complete_graph, incidence, SimpleGraph};
pub use kron::{kronecker, KronLayout};
pub use matrix::IntMatrix;
pub use minors::{
    enumerate_selectors, lcmd_brute, lcmd_small, BruteOptions, BrutePlan, SubmatrixSelector,
};
pub use witness::{collection_witness, path_quadrants, path_witness};

pub use num_bigint::{BigInt, BigUint};
