//! Brute-force `lcmd`: enumerate square submatrices and fold `|det|` into an
//! lcm.
//!
//! Selectors of one order are ranked lexicographically (row subset first,
//! then column subset) and orders are concatenated in increasing order. A
//! [`BrutePlan`] cuts that global stream into fixed-size chunks by rank;
//! each chunk folds into its own [`LcmAccumulator`] and chunk results merge
//! in any order to the same value.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::arith::LcmAccumulator;
use crate::error::{dim_err, domain_err, Result};
use crate::kron::KronLayout;
use crate::matrix::IntMatrix;
use crate::smalldet;

/// Row and column index sets (0-based, strictly increasing, equal length)
/// identifying a square submatrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubmatrixSelector {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl SubmatrixSelector {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(dim_err!(
                "{} rows vs {} columns selected",
                rows.len(),
                cols.len()
            ));
        }
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if !increasing(&rows) || !increasing(&cols) {
            return Err(domain_err!("selector indices must be strictly increasing"));
        }
        Ok(Self { rows, cols })
    }

    /// Sorts both index lists first; duplicates are still rejected.
    pub fn from_unsorted(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Result<Self> {
        rows.sort_unstable();
        cols.sort_unstable();
        Self::new(rows, cols)
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn submatrix(&self, m: &IntMatrix) -> Result<IntMatrix> {
        let in_rows = self.rows.last().is_none_or(|&r| r < m.rows());
        let in_cols = self.cols.last().is_none_or(|&c| c < m.cols());
        if !in_rows || !in_cols {
            return Err(dim_err!(
                "selector out of bounds for a {}x{} matrix",
                m.rows(),
                m.cols()
            ));
        }
        Ok(m.select(&self.rows, &self.cols))
    }

    pub fn det(&self, m: &IntMatrix) -> Result<BigInt> {
        self.submatrix(m)?.det()
    }
}

/// Options for [`lcmd_brute`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteOptions {
    /// Highest submatrix order to visit.
    pub max_order: Option<usize>,
    /// Skip selectors that are provably singular: row subsets of deficient
    /// rank and, when `layout` is known, orders above the block bound and
    /// selectors taking `n` or more rows (columns) from one block.
    pub prune_rank: bool,
    /// Selectors per work chunk.
    pub chunk_size: usize,
    /// Block structure when the matrix is `A ⊗ D(G)`.
    pub layout: Option<KronLayout>,
}

impl Default for BruteOptions {
    fn default() -> Self {
        Self {
            max_order: None,
            prune_rank: true,
            chunk_size: 4096,
            layout: None,
        }
    }
}

impl BruteOptions {
    pub fn for_layout(layout: KronLayout) -> Self {
        Self {
            layout: Some(layout),
            ..Self::default()
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at each step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Lexicographic rank → combination of `k` out of `n`.
fn unrank_combination(n: usize, k: usize, mut rank: u128, out: &mut Vec<usize>) {
    out.clear();
    let mut next = 0;
    for i in 0..k {
        let mut c = next;
        loop {
            let count = binomial(n - c - 1, k - i - 1).unwrap_or(u128::MAX);
            if rank < count {
                break;
            }
            rank -= count;
            c += 1;
        }
        out.push(c);
        next = c + 1;
    }
}

/// Advances to the lexicographic successor; false after the last one.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Streams every `order × order` selector of `m` in lexicographic order.
pub fn enumerate_selectors(m: &IntMatrix, order: usize) -> Result<Selectors> {
    if order > m.rows().min(m.cols()) {
        return Err(domain_err!(
            "order {} exceeds min({}, {})",
            order,
            m.rows(),
            m.cols()
        ));
    }
    Ok(Selectors {
        n_rows: m.rows(),
        n_cols: m.cols(),
        rows: (0..order).collect(),
        cols: (0..order).collect(),
        done: false,
    })
}

pub struct Selectors {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<usize>,
    cols: Vec<usize>,
    done: bool,
}

impl Iterator for Selectors {
    type Item = SubmatrixSelector;

    fn next(&mut self) -> Option<SubmatrixSelector> {
        if self.done {
            return None;
        }
        let out = SubmatrixSelector {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
        };
        if !next_combination(&mut self.cols, self.n_cols) {
            if next_combination(&mut self.rows, self.n_rows) {
                for (j, c) in self.cols.iter_mut().enumerate() {
                    *c = j;
                }
            } else {
                self.done = true;
            }
        }
        Some(out)
    }
}

#[derive(Debug, Clone, Copy)]
struct OrderSpan {
    order: usize,
    col_count: u128,
    offset: u128,
    total: u128,
}

/// Chunked work plan for the brute-force fold over one matrix.
#[derive(Debug, Clone)]
pub struct BrutePlan<'a> {
    matrix: &'a IntMatrix,
    opts: BruteOptions,
    small: Option<Vec<i64>>,
    spans: Vec<OrderSpan>,
    total: u128,
}

impl<'a> BrutePlan<'a> {
    pub fn new(matrix: &'a IntMatrix, opts: BruteOptions) -> Result<Self> {
        if opts.chunk_size == 0 {
            return Err(domain_err!("chunk size must be at least 1"));
        }
        if let Some(l) = opts.layout {
            if l.rows() != matrix.rows() || l.cols() != matrix.cols() {
                return Err(dim_err!(
                    "layout describes {}x{}, matrix is {}x{}",
                    l.rows(),
                    l.cols(),
                    matrix.rows(),
                    matrix.cols()
                ));
            }
        }
        let mut top = matrix.rows().min(matrix.cols());
        if let Some(k) = opts.max_order {
            top = top.min(k);
        }
        if opts.prune_rank {
            if let Some(l) = opts.layout {
                top = top.min(l.max_nonsingular_order());
            }
        }
        let mut spans = Vec::new();
        let mut offset: u128 = 0;
        if !matrix.is_zero() {
            for order in 1..=top {
                let too_big = || domain_err!("selector count overflows at order {}", order);
                let rc = binomial(matrix.rows(), order).ok_or_else(too_big)?;
                let cc = binomial(matrix.cols(), order).ok_or_else(too_big)?;
                let total = rc.checked_mul(cc).ok_or_else(too_big)?;
                spans.push(OrderSpan {
                    order,
                    col_count: cc,
                    offset,
                    total,
                });
                offset = offset.checked_add(total).ok_or_else(too_big)?;
            }
        }
        Ok(Self {
            matrix,
            opts,
            small: matrix.to_i64_entries(),
            spans,
            total: offset,
        })
    }

    /// Number of selectors in the stream (before per-selector pruning).
    pub fn total_selectors(&self) -> u128 {
        self.total
    }

    pub fn chunk_count(&self) -> u128 {
        self.total.div_ceil(self.opts.chunk_size as u128)
    }

    /// Folds the selectors with global rank in
    /// `[index·chunk_size, (index+1)·chunk_size)`.
    pub fn fold_chunk(&self, index: u128) -> LcmAccumulator {
        let chunk = self.opts.chunk_size as u128;
        let start = index.saturating_mul(chunk).min(self.total);
        let end = start.saturating_add(chunk).min(self.total);
        let mut acc = LcmAccumulator::new();
        let mut pos = start;
        let mut worker = ChunkWorker::new(self);
        while pos < end {
            let span = *self
                .spans
                .iter()
                .find(|s| pos < s.offset + s.total)
                .expect("rank inside stream");
            let span_end = end.min(span.offset + span.total);
            worker.run_span(&span, pos - span.offset, span_end - span.offset, &mut acc);
            pos = span_end;
        }
        acc
    }

    /// Sequential fold over every chunk.
    pub fn run(&self) -> BigUint {
        let mut acc = LcmAccumulator::new();
        for i in 0..self.chunk_count() {
            acc.merge(&self.fold_chunk(i));
        }
        acc.finish()
    }
}

struct ChunkWorker<'p, 'a> {
    plan: &'p BrutePlan<'a>,
    rows: Vec<usize>,
    cols: Vec<usize>,
    live: Vec<bool>,
    buf: Vec<i64>,
    block_count: Vec<usize>,
}

impl<'p, 'a> ChunkWorker<'p, 'a> {
    fn new(plan: &'p BrutePlan<'a>) -> Self {
        Self {
            plan,
            rows: Vec::new(),
            cols: Vec::new(),
            live: vec![false; plan.matrix.cols()],
            buf: Vec::new(),
            block_count: Vec::new(),
        }
    }

    fn run_span(&mut self, span: &OrderSpan, from: u128, to: u128, acc: &mut LcmAccumulator) {
        let m = self.plan.matrix;
        let k = span.order;
        let mut row_rank = from / span.col_count;
        unrank_combination(m.rows(), k, row_rank, &mut self.rows);
        unrank_combination(m.cols(), k, from % span.col_count, &mut self.cols);
        let mut pos = from;
        let mut row_alive = self.prepare_rows(k);
        while pos < to {
            if !row_alive {
                // skip the rest of this row subset
                pos = (row_rank + 1) * span.col_count;
                if pos >= to {
                    break;
                }
            } else {
                if self.columns_alive() {
                    self.push_det(k, acc);
                }
                pos += 1;
                if pos >= to {
                    break;
                }
                if next_combination(&mut self.cols, m.cols()) {
                    continue;
                }
            }
            row_rank += 1;
            next_combination(&mut self.rows, m.rows());
            for (j, c) in self.cols.iter_mut().enumerate() {
                *c = j;
            }
            row_alive = self.prepare_rows(k);
        }
    }

    fn prepare_rows(&mut self, k: usize) -> bool {
        let m = self.plan.matrix;
        for j in 0..m.cols() {
            self.live[j] = self.rows.iter().any(|&r| !m.get(r, j).is_zero());
        }
        if !self.plan.opts.prune_rank {
            return true;
        }
        if let Some(l) = self.plan.opts.layout {
            if !within_block_bound(
                &self.rows,
                l.graph_n,
                l.graph_n.saturating_sub(1),
                l.a_rows,
                &mut self.block_count,
            ) {
                return false;
            }
        }
        let live_cols = self.live.iter().filter(|&&x| x).count();
        if live_cols < k {
            return false;
        }
        row_rank(m, self.plan.small.as_deref(), &self.rows, &mut self.buf) == k
    }

    fn columns_alive(&mut self) -> bool {
        if !self.cols.iter().all(|&c| self.live[c]) {
            return false;
        }
        if self.plan.opts.prune_rank {
            if let Some(l) = self.plan.opts.layout {
                // Independent incidence columns form a forest: at most n − 1 edges.
                let limit = l.graph_n.saturating_sub(1);
                return within_block_bound(
                    &self.cols,
                    l.edges,
                    limit,
                    l.a_cols,
                    &mut self.block_count,
                );
            }
        }
        true
    }

    fn push_det(&mut self, k: usize, acc: &mut LcmAccumulator) {
        let m = self.plan.matrix;
        if let Some(small) = &self.plan.small {
            self.buf.clear();
            let nc = m.cols();
            for &r in &self.rows {
                for &c in &self.cols {
                    self.buf.push(small[r * nc + c]);
                }
            }
            if let Some(d) = smalldet::det_i64(k, &mut self.buf) {
                acc.push_u128(d.unsigned_abs() as u128);
                return;
            }
        }
        let d = m.select(&self.rows, &self.cols).det().expect("square");
        acc.push_big(d.magnitude());
    }
}

// At most `limit` of the indices may fall in any block of `block_len`
// consecutive indices.
fn within_block_bound(
    idx: &[usize],
    block_len: usize,
    limit: usize,
    blocks: usize,
    count: &mut Vec<usize>,
) -> bool {
    if block_len == 0 {
        return idx.is_empty();
    }
    count.clear();
    count.resize(blocks, 0);
    for &i in idx {
        let b = i / block_len;
        count[b] += 1;
        if count[b] > limit {
            return false;
        }
    }
    true
}

fn row_rank(m: &IntMatrix, small: Option<&[i64]>, rows: &[usize], buf: &mut Vec<i64>) -> usize {
    let nc = m.cols();
    if let Some(small) = small {
        buf.clear();
        for &r in rows {
            buf.extend_from_slice(&small[r * nc..(r + 1) * nc]);
        }
        if let Some(r) = smalldet::rank_i64(rows.len(), nc, buf) {
            return r;
        }
    }
    let cols: Vec<usize> = (0..nc).collect();
    m.select(rows, &cols).rank()
}

/// lcm of `|det|` over every square submatrix with non-zero determinant.
/// An identically zero (or empty) matrix gives 1.
pub fn lcmd_brute(m: &IntMatrix, opts: BruteOptions) -> Result<BigUint> {
    Ok(BrutePlan::new(m, opts)?.run())
}

/// `lcmd` of a two-column matrix from its entries and its `2 × 2` row-pair
/// minors.
pub fn lcmd_small(m: &IntMatrix) -> Result<BigUint> {
    if m.cols() != 2 {
        return Err(dim_err!("expected 2 columns, got {}", m.cols()));
    }
    let mut acc = LcmAccumulator::new();
    for e in m.entries() {
        acc.push_big(e.magnitude());
    }
    for i in 0..m.rows() {
        for j in i + 1..m.rows() {
            let d = m.get(i, 0) * m.get(j, 1) - m.get(i, 1) * m.get(j, 0);
            acc.push_big(d.magnitude());
        }
    }
    Ok(acc.finish())
}
