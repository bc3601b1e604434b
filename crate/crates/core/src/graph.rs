//! Simple graphs and their signed incidence matrices.
//!
//! Vertices are numbered `1..=n`. An edge `(u, v)` is stored with `u < v`
//! and its incidence column carries `+1` in row `u` and `-1` in row `v`.
//! Complete graphs list their edges lexicographically, which reproduces the
//! usual printed `D(K_4)`:
//!
//! ```text
//!  1  1  1  0  0  0
//! -1  0  0  1  1  0
//!  0 -1  0 -1  0  1
//!  0  0 -1  0 -1 -1
//! ```

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{domain_err, Result};
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Validates `1 <= u < v <= n` for every edge and rejects duplicates.
    /// Edges given as `(v, u)` with `v > u` are normalised.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            let (u, v) = if a <= b { (a, b) } else { (b, a) };
            if u == 0 || v > n {
                return Err(domain_err!(
                    "edge ({}, {}) outside vertices 1..={}",
                    a,
                    b,
                    n
                ));
            }
            if u == v {
                return Err(domain_err!("loop at vertex {}", u));
            }
            if out.contains(&(u, v)) {
                return Err(domain_err!("duplicate edge ({}, {})", u, v));
            }
            out.push((u, v));
        }
        Ok(Self { n, edges: out })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// `K_n` with edges in lexicographic order.
pub fn complete_graph(n: usize) -> Result<SimpleGraph> {
    if n == 0 {
        return Err(domain_err!("complete graph needs at least one vertex"));
    }
    let edges = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    Ok(SimpleGraph { n, edges })
}

/// 0-based column of edge `(u, v)`, `u < v`, in the lexicographic edge order
/// of `K_n`.
pub fn complete_edge_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(1 <= u && u < v && v <= n);
    // edges (a, *) for a < u come first: sum_{a=1}^{u-1} (n - a)
    (u - 1) * n - (u - 1) * u / 2 + (v - u - 1)
}

/// `|V| × |E|` signed incidence matrix.
pub fn incidence(g: &SimpleGraph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.n, g.edges.len());
    for (c, &(u, v)) in g.edges.iter().enumerate() {
        m.set(u - 1, c, BigInt::from(1));
        m.set(v - 1, c, BigInt::from(-1));
    }
    m
}
