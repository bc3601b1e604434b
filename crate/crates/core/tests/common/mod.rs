//! Test-only oracles that share no code with the library.

#![allow(dead_code)]

use lcmd_core::{BigInt, BigUint, IntMatrix};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_i64(rng: &mut ChaCha8Rng, rows: usize, cols: usize, max: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-max..=max)).collect())
        .collect()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, max: i64) -> IntMatrix {
    IntMatrix::from_rows(&random_i64(rng, rows, cols, max)).unwrap()
}

pub fn random_nonzero(rng: &mut ChaCha8Rng, rows: usize, cols: usize, max: i64) -> IntMatrix {
    loop {
        let m = random_matrix(rng, rows, cols, max);
        if !m.is_zero() {
            return m;
        }
    }
}

pub fn to_i128(m: &IntMatrix) -> Vec<Vec<i128>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| i128::try_from(x).unwrap())
                .collect()
        })
        .collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0;
    for c in 0..n {
        if m[0][c] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let term = m[0][c] * cofactor_det(&minor);
        total += if c % 2 == 0 { term } else { -term };
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every square minor by cofactor expansion, capped at `max_order`.
pub fn naive_lcmd(m: &IntMatrix, max_order: usize) -> BigUint {
    let e = to_i128(m);
    let mut acc = BigUint::from(1u32);
    for k in 1..=m.rows().min(m.cols()).min(max_order) {
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let sub: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| e[r][c]).collect())
                    .collect();
                let d = cofactor_det(&sub);
                if d != 0 {
                    acc = acc.lcm(&BigInt::from(d).magnitude().clone());
                }
            }
        }
    }
    acc
}

/// Rank as the largest order of a non-vanishing minor.
pub fn naive_rank(m: &IntMatrix) -> usize {
    let e = to_i128(m);
    for k in (1..=m.rows().min(m.cols())).rev() {
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let sub: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| e[r][c]).collect())
                    .collect();
                if cofactor_det(&sub) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

pub fn mat(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows).unwrap()
}
