//! Kronecker product.

use crate::matrix::IntMatrix;

/// `A ⊗ B`: the block matrix whose `(i, j)` block is `a_ij · B`.
///
/// Indexing is 0-based: entry `(i·rows_B + r, j·cols_B + s)` equals
/// `A[i][j] · B[r][s]`.
pub fn kronecker(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (br, bc) = (b.rows(), b.cols());
    IntMatrix::from_fn(a.rows() * br, a.cols() * bc, |row, col| {
        a.get(row / br, col / bc) * b.get(row % br, col % bc)
    })
}

/// Block structure of a product `A ⊗ D(G)` with `G` on `graph_n` vertices.
///
/// Rows come in `a_rows` blocks of `graph_n`; columns in `a_cols` blocks of
/// `edges`. Any `graph_n` rows of one row block sum to zero and any
/// `graph_n` columns of one column block contain a cycle, so a nonsingular
/// square submatrix takes at most `graph_n − 1` rows from each row block and
/// at most `graph_n − 1` columns from each column block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KronLayout {
    pub a_rows: usize,
    pub a_cols: usize,
    pub graph_n: usize,
    pub edges: usize,
}

impl KronLayout {
    pub fn complete(a: &IntMatrix, n: usize) -> Self {
        Self {
            a_rows: a.rows(),
            a_cols: a.cols(),
            graph_n: n,
            edges: n * n.saturating_sub(1) / 2,
        }
    }

    pub fn rows(&self) -> usize {
        self.a_rows * self.graph_n
    }

    pub fn cols(&self) -> usize {
        self.a_cols * self.edges
    }

    /// Largest order a nonsingular submatrix can have: `min(m, k)·(n − 1)`,
    /// which is `2n − 2` for two-column `A`.
    pub fn max_nonsingular_order(&self) -> usize {
        let per_block = self.graph_n.saturating_sub(1);
        (self.a_rows.min(self.a_cols) * per_block)
            .min(self.rows())
            .min(self.cols())
    }

    /// 0-based product row for the `copy`-th (1-based) copy of vertex `v`.
    pub fn row_of(&self, copy: usize, vertex: usize) -> usize {
        (copy - 1) * self.graph_n + (vertex - 1)
    }

    /// 0-based product column for the `copy`-th (1-based) copy of edge
    /// `edge` (0-based edge column in `D(G)`).
    pub fn col_of(&self, copy: usize, edge: usize) -> usize {
        (copy - 1) * self.edges + edge
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, incidence};
    use num_bigint::BigInt;

    #[test]
    fn identity_left_factor() {
        let b = IntMatrix::from_rows(&[[1i64, 2, 3], [4, 5, 6]]).unwrap();
        assert_eq!(kronecker(&IntMatrix::identity(1), &b), b);
    }

    #[test]
    fn empty_right_factor() {
        let a = IntMatrix::from_rows(&[[1i64, 2], [3, 4], [5, 6]]).unwrap();
        let d1 = incidence(&complete_graph(1).unwrap());
        let p = kronecker(&a, &d1);
        assert_eq!((p.rows(), p.cols()), (3, 0));
    }

    #[test]
    fn example_product_rows() {
        // A = [[1,2],[3,4],[5,6]] against D(K_4): spot-check the printed layout.
        let a = IntMatrix::from_rows(&[[1i64, 2], [3, 4], [5, 6]]).unwrap();
        let p = kronecker(&a, &incidence(&complete_graph(4).unwrap()));
        assert_eq!((p.rows(), p.cols()), (12, 12));
        let row = |r: usize| {
            p.row(r)
                .iter()
                .map(|x| i64::try_from(x).unwrap())
                .collect::<alloc::vec::Vec<_>>()
        };
        assert_eq!(row(0), [1, 1, 1, 0, 0, 0, 2, 2, 2, 0, 0, 0]);
        assert_eq!(row(5), [-3, 0, 0, 3, 3, 0, -4, 0, 0, 4, 4, 0]);
        assert_eq!(row(11), [0, 0, -5, 0, -5, -5, 0, 0, -6, 0, -6, -6]);
    }

    #[test]
    fn entry_identity_exhaustive() {
        let a = IntMatrix::from_rows(&[[2i64, -1, 0], [3, 5, -7]]).unwrap();
        let b = IntMatrix::from_rows(&[[1i64, 4], [-2, 0], [6, 9]]).unwrap();
        let p = kronecker(&a, &b);
        for i in 0..2 {
            for j in 0..3 {
                for r in 0..3 {
                    for s in 0..2 {
                        let expect: BigInt = a.get(i, j) * b.get(r, s);
                        assert_eq!(p.get(i * 3 + r, j * 2 + s), &expect);
                    }
                }
            }
        }
    }

    #[test]
    fn layout_order_cap() {
        let a = IntMatrix::zeros(3, 2);
        let l = KronLayout::complete(&a, 4);
        assert_eq!((l.rows(), l.cols()), (12, 12));
        assert_eq!(l.max_nonsingular_order(), 6);
        assert_eq!(l.row_of(2, 1), 4);
        assert_eq!(l.col_of(2, 0), 6);
    }
}
