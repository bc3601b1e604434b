//! Explicit submatrices of `A ⊗ D(K_n)` whose determinants attain the
//! factors of the closed formula.
//!
//! Rows of the product are addressed as (copy `i` of `A`'s rows, vertex
//! `v`) and columns as (copy `k` of `A`'s columns, edge `e`); see
//! [`KronLayout`]. Returned selectors are sorted, so the determinant of the
//! selected submatrix matches the prediction up to sign.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::closed_form::{det_pair, Collection};
use crate::error::{dim_err, domain_err, Error, Result};
use crate::graph::complete_edge_index;
use crate::kron::KronLayout;
use crate::matrix::IntMatrix;
use crate::minors::SubmatrixSelector;

fn check_two_columns(a: &IntMatrix) -> Result<()> {
    if a.cols() != 2 {
        return Err(dim_err!("expected 2 columns, got {}", a.cols()));
    }
    Ok(())
}

fn check_path_args(a: &IntMatrix, n: usize, i: usize, j: usize) -> Result<()> {
    check_two_columns(a)?;
    if n < 2 {
        return Err(domain_err!("path witness needs n >= 2"));
    }
    if !(1 <= i && i < j && j <= a.rows()) {
        return Err(domain_err!(
            "need 1 <= i < j <= {}, got ({}, {})",
            a.rows(),
            i,
            j
        ));
    }
    Ok(())
}

/// The `(2n−2) × (2n−2)` witness on the path `v_1 … v_n`: copies `i` and `j`
/// of vertices `v_1 … v_{n−1}` against both copies of every path edge. Its
/// determinant is `±(det A^{i,j})^(n−1)`.
pub fn path_witness(a: &IntMatrix, n: usize, i: usize, j: usize) -> Result<SubmatrixSelector> {
    check_path_args(a, n, i, j)?;
    let d = a.get(i - 1, 0) * a.get(j - 1, 1) - a.get(i - 1, 1) * a.get(j - 1, 0);
    if d.is_zero() {
        return Err(Error::DegenerateWitness(alloc::format!(
            "det A^{{{},{}}} = 0",
            i,
            j
        )));
    }
    let [q11, _, _, q22] = path_quadrants(a, n, i, j)?;
    let rows = [q11.rows(), q22.rows()].concat();
    let cols = [q11.cols(), q22.cols()].concat();
    SubmatrixSelector::from_unsorted(rows, cols)
}

/// The four `(n−1) × (n−1)` quadrants of the path witness, in the order
/// (copy `i`, first column), (copy `i`, second column), (copy `j`, first
/// column), (copy `j`, second column). Their determinants are
/// `±a_i1^(n−1)`, `±a_i2^(n−1)`, `±a_j1^(n−1)`, `±a_j2^(n−1)`.
pub fn path_quadrants(
    a: &IntMatrix,
    n: usize,
    i: usize,
    j: usize,
) -> Result<[SubmatrixSelector; 4]> {
    check_path_args(a, n, i, j)?;
    let layout = KronLayout::complete(a, n);
    let vertex_rows =
        |copy: usize| -> Vec<usize> { (1..n).map(|v| layout.row_of(copy, v)).collect() };
    let edge_cols = |copy: usize| -> Vec<usize> {
        (1..n)
            .map(|v| layout.col_of(copy, complete_edge_index(n, v, v + 1)))
            .collect()
    };
    let q = |r: usize, c: usize| SubmatrixSelector::new(vertex_rows(r), edge_cols(c));
    Ok([q(i, 1)?, q(i, 2)?, q(j, 1)?, q(j, 2)?])
}

/// Block-diagonal witness for a collection: pair `s` gets the next
/// `2|I_s|` unused vertices `w_1 … w_2p`, with odd `w_{2t−1}` in copy `I[t]`
/// and even `w_{2t}` in copy `J[t]`; edges `w_{2t−1}w_{2t}` go in the first
/// column copy, `w_{2t}w_{2t+1}` and the closing edge `w_1w_{2p}` in the
/// second. A single-element pair uses one edge in both column copies. Each
/// block has determinant `±det A^{I_s,J_s}`.
pub fn collection_witness(a: &IntMatrix, n: usize, k: &Collection) -> Result<SubmatrixSelector> {
    check_two_columns(a)?;
    if 2 * k.weight() > n {
        return Err(domain_err!(
            "collection weight {} too large for n = {}",
            k.weight(),
            n
        ));
    }
    for p in k.pairs() {
        if det_pair(a, p)?.is_zero() {
            return Err(Error::DegenerateWitness(alloc::format!("det A^{} = 0", p)));
        }
    }
    let layout = KronLayout::complete(a, n);
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    let mut next_vertex = 1;
    let edge = |u: usize, v: usize| complete_edge_index(n, u.min(v), u.max(v));
    for p in k.pairs() {
        let len = p.weight();
        let w = |t: usize| next_vertex + t - 1; // w_t, 1-based t
        for (t, (&ii, &jj)) in p
            .first()
            .elements()
            .iter()
            .zip(p.second().elements())
            .enumerate()
        {
            rows.push(layout.row_of(ii, w(2 * t + 1)));
            rows.push(layout.row_of(jj, w(2 * t + 2)));
            cols.push(layout.col_of(1, edge(w(2 * t + 1), w(2 * t + 2))));
        }
        for t in 1..len {
            cols.push(layout.col_of(2, edge(w(2 * t), w(2 * t + 1))));
        }
        cols.push(layout.col_of(2, edge(w(1), w(2 * len))));
        next_vertex += 2 * len;
    }
    SubmatrixSelector::from_unsorted(rows, cols)
}
