// Machine-integer Bareiss kernels for the brute-force hot loop. Each returns
// None on overflow; callers fall back to the BigInt routines.

pub(crate) fn det_i64(n: usize, a: &mut [i64]) -> Option<i64> {
    if n == 0 {
        return Some(1);
    }
    let mut negate = false;
    let mut prev: i64 = 1;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let p = match (k + 1..n).find(|&i| a[i * n + k] != 0) {
                Some(p) => p,
                None => return Some(0),
            };
            for j in k..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            let lead = a[i * n + k];
            if lead == 0 {
                if pivot != prev {
                    for j in k + 1..n {
                        let v = a[i * n + j].checked_mul(pivot)?;
                        a[i * n + j] = v / prev;
                    }
                }
                continue;
            }
            for j in k + 1..n {
                let v = a[i * n + j]
                    .checked_mul(pivot)?
                    .checked_sub(lead.checked_mul(a[k * n + j])?)?;
                a[i * n + j] = v / prev;
            }
        }
        prev = pivot;
    }
    let d = a[n * n - 1];
    Some(if negate { -d } else { d })
}

pub(crate) fn rank_i64(rows: usize, cols: usize, a: &mut [i64]) -> Option<usize> {
    let mut r = 0;
    let mut prev: i64 = 1;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let p = match (r..rows).find(|&i| a[i * cols + c] != 0) {
            Some(p) => p,
            None => continue,
        };
        if p != r {
            for j in c..cols {
                a.swap(r * cols + j, p * cols + j);
            }
        }
        let pivot = a[r * cols + c];
        for i in r + 1..rows {
            let lead = a[i * cols + c];
            for j in c + 1..cols {
                let v = a[i * cols + j]
                    .checked_mul(pivot)?
                    .checked_sub(lead.checked_mul(a[r * cols + j])?)?;
                a[i * cols + j] = v / prev;
            }
            a[i * cols + c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;
    use alloc::vec::Vec;
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn agrees_with_bigint_bareiss() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let n = rng.gen_range(0..=7);
            let cols = rng.gen_range(0..=7);
            let v: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-4..=4)).collect();
            let m = IntMatrix::new(n, n, v.iter().map(|&x| BigInt::from(x)).collect()).unwrap();
            let mut buf = v.clone();
            assert_eq!(
                BigInt::from(det_i64(n, &mut buf).unwrap()),
                m.det().unwrap()
            );

            let w: Vec<i64> = (0..n * cols)
                .map(|_| rng.gen_range(-2..=2) * rng.gen_range(0..=1))
                .collect();
            let mr = IntMatrix::new(n, cols, w.iter().map(|&x| BigInt::from(x)).collect()).unwrap();
            let mut buf = w.clone();
            assert_eq!(rank_i64(n, cols, &mut buf).unwrap(), mr.rank());
        }
    }

    #[test]
    fn overflow_is_reported() {
        let big = i64::MAX / 2;
        let mut a = [big, big - 1, 3, big];
        assert_eq!(det_i64(2, &mut a), None);
    }
}
