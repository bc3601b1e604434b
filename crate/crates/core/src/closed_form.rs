//! Closed-form `lcmd(A ⊗ D(K_n))` for a two-column integer matrix `A`:
//!
//! ```text
//! lcm( (lcmd A)^(n-1),  LCM over collections K of |Π_{(I,J)∈K} det A^{I,J}| )
//! ```
//!
//! where `I`, `J` are equal-size multisubsets of `[m]` with disjoint
//! supports, `A^{I,J} = [[a_I1, a_I2], [a_J1, a_J2]]` with `a_Ik = Π_{i∈I}
//! a_ik`, and a collection is a multiset of such pairs whose total weight
//! `Σ|I|` is at most `⌊n/2⌋`. Only maximal collections (weight exactly
//! `⌊n/2⌋`) need to be visited; [`CollectionMode::All`] visits every weight
//! as a cross-check.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};

use crate::arith::{lcm_pair, LcmAccumulator};
use crate::error::{dim_err, domain_err, Result};
use crate::matrix::IntMatrix;
use crate::minors::lcmd_small;

/// Sorted multiset of 1-based row indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset(Vec<usize>);

impl Multiset {
    pub fn new(mut items: Vec<usize>) -> Self {
        items.sort_unstable();
        Self(items)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn support_disjoint(&self, other: &Multiset) -> bool {
        // both sorted
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// `a_{I,col} = Π_{i∈I} a_{i,col}` (0-based column).
    fn column_product(&self, a: &IntMatrix, col: usize) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, &i| acc * a.get(i - 1, col))
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i)?;
        }
        f.write_str("}")
    }
}

/// Unordered pair of equal-size, support-disjoint multisubsets, stored with
/// `I ≤ J` lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultisetPair {
    i: Multiset,
    j: Multiset,
}

impl MultisetPair {
    pub fn new(i: Multiset, j: Multiset) -> Result<Self> {
        if i.len() != j.len() || i.is_empty() {
            return Err(domain_err!(
                "pair sides must be non-empty and equal in size: {} vs {}",
                i,
                j
            ));
        }
        if !i.support_disjoint(&j) {
            return Err(domain_err!("pair sides {} and {} share an index", i, j));
        }
        Ok(if i <= j {
            Self { i, j }
        } else {
            Self { i: j, j: i }
        })
    }

    pub fn first(&self) -> &Multiset {
        &self.i
    }

    pub fn second(&self) -> &Multiset {
        &self.j
    }

    /// `|I|`.
    pub fn weight(&self) -> usize {
        self.i.len()
    }
}

impl fmt::Display for MultisetPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// Multiset of pairs, in sorted canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Collection {
    pairs: Vec<MultisetPair>,
    weight: usize,
}

impl Collection {
    pub fn new(mut pairs: Vec<MultisetPair>) -> Self {
        pairs.sort();
        let weight = pairs.iter().map(MultisetPair::weight).sum();
        Self { pairs, weight }
    }

    pub fn pairs(&self) -> &[MultisetPair] {
        &self.pairs
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// `Π det A^{I,J}` over the pairs (1 for the empty collection).
    pub fn product(&self, a: &IntMatrix) -> Result<BigInt> {
        self.pairs
            .iter()
            .try_fold(BigInt::one(), |acc, p| Ok(acc * det_pair(a, p)?))
    }
}

/// `det A^{I,J} = a_I1·a_J2 − a_I2·a_J1`.
pub fn det_pair(a: &IntMatrix, pair: &MultisetPair) -> Result<BigInt> {
    if a.cols() != 2 {
        return Err(dim_err!("expected 2 columns, got {}", a.cols()));
    }
    let out_of_range = pair
        .i
        .elements()
        .iter()
        .chain(pair.j.elements())
        .any(|&x| x == 0 || x > a.rows());
    if out_of_range {
        return Err(domain_err!(
            "pair {} indexes outside 1..={}",
            pair,
            a.rows()
        ));
    }
    let (i1, i2) = (pair.i.column_product(a, 0), pair.i.column_product(a, 1));
    let (j1, j2) = (pair.j.column_product(a, 0), pair.j.column_product(a, 1));
    Ok(i1 * j2 - i2 * j1)
}

/// Every `p`-element multisubset of `[m]`, in lexicographic order.
fn multisubsets(m: usize, p: usize) -> Vec<Multiset> {
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    let mut cur = alloc::vec![1usize; p];
    loop {
        out.push(Multiset(cur.clone()));
        // next non-decreasing sequence over 1..=m
        let Some(pos) = (0..p).rev().find(|&k| cur[k] < m) else {
            return out;
        };
        let v = cur[pos] + 1;
        for c in &mut cur[pos..] {
            *c = v;
        }
    }
}

/// All canonical pairs of disjoint `p`-element multisubsets of `[m]`.
pub fn enumerate_pairs(m: usize, p: usize) -> Vec<MultisetPair> {
    if p == 0 {
        return Vec::new();
    }
    let sets = multisubsets(m, p);
    let mut out = Vec::new();
    for (x, i) in sets.iter().enumerate() {
        for j in &sets[x + 1..] {
            if i.support_disjoint(j) {
                out.push(MultisetPair {
                    i: i.clone(),
                    j: j.clone(),
                });
            }
        }
    }
    out
}

/// Number of maximal collections for `(m, n)`, without enumerating them:
/// the coefficient of `x^⌊n/2⌋` in `Π_p (1 − x^p)^(−c_p)` where `c_p` counts
/// the pairs of weight `p`. Saturates at `u128::MAX`.
pub fn count_maximal_collections(m: usize, n: usize) -> u128 {
    let cap = n / 2;
    if m < 2 {
        return 1;
    }
    let mut ways = alloc::vec![0u128; cap + 1];
    ways[0] = 1;
    for p in 1..=cap {
        let c = enumerate_pairs(m, p).len();
        // each of the c pairs of weight p may repeat any number of times
        for _ in 0..c {
            for w in p..=cap {
                ways[w] = ways[w].saturating_add(ways[w - p]);
            }
        }
    }
    ways[cap]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CollectionMode {
    /// Collections that cannot be extended: weight exactly `⌊n/2⌋`, or only
    /// the empty collection when no pairs exist (`m = 1`).
    Maximal,
    /// Every collection with `2·weight ≤ n`, the empty one included.
    All,
}

/// Streams canonical collections of pairs over `[m]` for `K_n`.
pub fn enumerate_collections(m: usize, n: usize, mode: CollectionMode) -> Collections {
    let cap = n / 2;
    let mut pairs = Vec::new();
    for p in 1..=cap {
        pairs.extend(enumerate_pairs(m, p));
    }
    let weights = pairs.iter().map(MultisetPair::weight).collect();
    Collections {
        pairs,
        walk: MultisetWalk::new(weights, cap),
        mode,
        cap,
    }
}

pub struct Collections {
    pairs: Vec<MultisetPair>,
    walk: MultisetWalk,
    mode: CollectionMode,
    cap: usize,
}

impl Iterator for Collections {
    type Item = Collection;

    fn next(&mut self) -> Option<Collection> {
        loop {
            let (seq, w) = self.walk.step()?;
            let keep = match self.mode {
                CollectionMode::All => true,
                CollectionMode::Maximal => w == self.cap || self.pairs.is_empty(),
            };
            if keep {
                return Some(Collection::new(
                    seq.iter().map(|&k| self.pairs[k].clone()).collect(),
                ));
            }
        }
    }
}

/// Pre-order walk over non-decreasing index sequences into `weights`
/// (which must be ascending) with total weight at most `cap`. Starts with
/// the empty sequence.
struct MultisetWalk {
    weights: Vec<usize>,
    cap: usize,
    seq: Vec<usize>,
    weight: usize,
    started: bool,
}

impl MultisetWalk {
    fn new(weights: Vec<usize>, cap: usize) -> Self {
        debug_assert!(weights.windows(2).all(|w| w[0] <= w[1]));
        Self {
            weights,
            cap,
            seq: Vec::new(),
            weight: 0,
            started: false,
        }
    }

    fn step(&mut self) -> Option<(&[usize], usize)> {
        if !self.started {
            self.started = true;
            return Some((&self.seq, 0));
        }
        // extend with the smallest admissible index
        let first = self.seq.last().copied().unwrap_or(0);
        if first < self.weights.len() && self.weight + self.weights[first] <= self.cap {
            self.seq.push(first);
            self.weight += self.weights[first];
            return Some((&self.seq, self.weight));
        }
        // otherwise bump the deepest position that can still grow
        while let Some(x) = self.seq.pop() {
            self.weight -= self.weights[x];
            let y = x + 1;
            if y < self.weights.len() && self.weight + self.weights[y] <= self.cap {
                self.seq.push(y);
                self.weight += self.weights[y];
                return Some((&self.seq, self.weight));
            }
        }
        None
    }
}

/// The closed formula together with its two lcm components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaValue {
    pub value: BigUint,
    /// `(lcmd A)^(n−1)`.
    pub lcmd_a_pow: BigUint,
    /// lcm of the non-zero collection products.
    pub collection_lcm: BigUint,
}

fn check_formula_input(a: &IntMatrix, n: usize) -> Result<()> {
    if a.cols() != 2 {
        return Err(dim_err!("expected 2 columns, got {}", a.cols()));
    }
    if n == 0 {
        return Err(domain_err!("n must be at least 1"));
    }
    if a.is_zero() {
        return Err(domain_err!("matrix is identically zero"));
    }
    Ok(())
}

/// Closed-form `lcmd(A ⊗ D(K_n))` over maximal collections.
pub fn lcmd_formula(a: &IntMatrix, n: usize) -> Result<FormulaValue> {
    lcmd_formula_with(a, n, CollectionMode::Maximal)
}

pub fn lcmd_formula_with(a: &IntMatrix, n: usize, mode: CollectionMode) -> Result<FormulaValue> {
    check_formula_input(a, n)?;
    let lcmd_a_pow = Pow::pow(lcmd_small(a)?, (n - 1) as u32);
    let collection_lcm = collection_lcm(a, n, mode)?;
    let value = lcm_pair(&lcmd_a_pow, &collection_lcm);
    Ok(FormulaValue {
        value,
        lcmd_a_pow,
        collection_lcm,
    })
}

// Pairs with equal |det| and weight give equal products, and a zero factor
// kills a product, so the walk runs over distinct non-zero (weight, |det|)
// atoms instead of raw pairs.
fn collection_lcm(a: &IntMatrix, n: usize, mode: CollectionMode) -> Result<BigUint> {
    let cap = n / 2;
    let mut atoms: Vec<(usize, BigUint)> = Vec::new();
    for p in 1..=cap {
        let mut level: Vec<BigUint> = Vec::new();
        for pair in enumerate_pairs(a.rows(), p) {
            let d = det_pair(a, &pair)?.magnitude().clone();
            if !d.is_zero() {
                level.push(d);
            }
        }
        level.sort();
        level.dedup();
        atoms.extend(level.into_iter().map(|d| (p, d)));
    }
    let mut acc = LcmAccumulator::new();
    let mut walk = MultisetWalk::new(atoms.iter().map(|x| x.0).collect(), cap);
    // products[k] = product of the first k atoms of the current sequence
    let mut products: Vec<BigUint> = Vec::new();
    while let Some((seq, w)) = walk.step() {
        products.truncate(seq.len());
        let next = match seq.last() {
            Some(&last) => &products[seq.len() - 1] * &atoms[last].1,
            None => BigUint::one(),
        };
        products.push(next);
        let keep = match mode {
            CollectionMode::All => true,
            CollectionMode::Maximal => w == cap,
        };
        if keep {
            acc.push_big(&products[seq.len()]);
        }
    }
    Ok(acc.finish())
}

/// Two-by-two shortcut:
/// `lcm((lcmd A)^(n−1), LCM_{p=2..⌊n/2⌋} |(a11·a22)^p − (a12·a21)^p|^⌊n/2p⌋)`.
///
/// This product form drops collections that mix pair sizes. It agrees with
/// [`lcmd_formula`] for every non-zero 2×2 matrix with entries in `[−3, 3]`
/// up to `n = 10`, but not in general: `[[-7, -9], [-9, -9]]` at `n = 6` has a
/// minor `2^6 · 3^6` (the collection `{({1,1},{2,2}), ({1},{2})}`) which this
/// form misses by a factor of 2. Prefer [`lcmd_formula`] when exactness matters.
pub fn lcmd_formula_2x2(a: &IntMatrix, n: usize) -> Result<FormulaValue> {
    check_formula_input(a, n)?;
    if a.rows() != 2 {
        return Err(dim_err!("expected a 2x2 matrix, got {}x2", a.rows()));
    }
    let lcmd_a_pow = Pow::pow(lcmd_small(a)?, (n - 1) as u32);
    let x = a.get(0, 0) * a.get(1, 1);
    let y = a.get(0, 1) * a.get(1, 0);
    let mut acc = LcmAccumulator::new();
    for p in 2..=n / 2 {
        let d: BigInt = Pow::pow(&x, p as u32) - Pow::pow(&y, p as u32);
        if !d.is_zero() {
            acc.push_big(&Pow::pow(d.magnitude(), (n / (2 * p)) as u32));
        }
    }
    let collection_lcm = acc.finish();
    let value = lcm_pair(&lcmd_a_pow, &collection_lcm);
    Ok(FormulaValue {
        value,
        lcmd_a_pow,
        collection_lcm,
    })
}

/// Drops rows equal to `(1, 0)` or `(0, 1)`, unless that would leave an
/// empty or identically zero matrix, in which case `a` comes back as is.
pub fn reduce_identity_rows(a: &IntMatrix) -> Result<IntMatrix> {
    if a.cols() != 2 {
        return Err(dim_err!("expected 2 columns, got {}", a.cols()));
    }
    let is_unit_row = |r: usize| {
        let (x, y) = (a.get(r, 0), a.get(r, 1));
        (x.is_one() && y.is_zero()) || (x.is_zero() && y.is_one())
    };
    let keep: Vec<usize> = (0..a.rows()).filter(|&r| !is_unit_row(r)).collect();
    let core = a.select(&keep, &[0, 1]);
    if core.rows() == 0 || core.is_zero() {
        return Ok(a.clone());
    }
    Ok(core)
}
