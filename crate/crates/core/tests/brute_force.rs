mod common;

use common::*;
use lcmd_core::{
    complete_graph, incidence, kronecker, lcmd_brute, lcmd_small, BigInt, BigUint, BruteOptions,
    BrutePlan, IntMatrix, KronLayout, LcmAccumulator,
};
use rand::seq::SliceRandom;
use rand::Rng;

fn plain() -> BruteOptions {
    BruteOptions {
        prune_rank: false,
        ..BruteOptions::default()
    }
}

fn brute(m: &IntMatrix) -> BigUint {
    lcmd_brute(m, plain()).unwrap()
}

#[test]
fn two_column_shortcut_agrees() {
    let mut r = rng(20);
    for _ in 0..200 {
        let rows = r.gen_range(1..=5);
        let a = random_matrix(&mut r, rows, 2, 5);
        assert_eq!(
            lcmd_brute(&a, BruteOptions::default()).unwrap(),
            lcmd_small(&a).unwrap(),
            "{a}"
        );
    }
}

#[test]
fn brute_matches_naive_minors() {
    let mut r = rng(21);
    for _ in 0..150 {
        let (rows, cols) = (r.gen_range(1..=5), r.gen_range(1..=5));
        let m = random_matrix(&mut r, rows, cols, 4);
        let expected = naive_lcmd(&m, usize::MAX);
        assert_eq!(brute(&m), expected, "{m}");
        assert_eq!(
            lcmd_brute(&m, BruteOptions::default()).unwrap(),
            expected,
            "{m}"
        );
    }
}

fn permuted(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> IntMatrix {
    IntMatrix::from_fn(rows.len(), cols.len(), |i, j| {
        m.get(rows[i], cols[j]).clone()
    })
}

#[test]
fn invariant_under_permutation_duplication_identity_and_transpose() {
    let mut r = rng(22);
    for _ in 0..60 {
        let (rows, cols) = (r.gen_range(1..=4), r.gen_range(1..=4));
        let m = random_nonzero(&mut r, rows, cols, 4);
        let base = brute(&m);

        let mut rp: Vec<usize> = (0..rows).collect();
        let mut cp: Vec<usize> = (0..cols).collect();
        rp.shuffle(&mut r);
        cp.shuffle(&mut r);
        assert_eq!(brute(&permuted(&m, &rp, &cp)), base, "permutation of {m}");

        let mut dup_rows: Vec<usize> = (0..rows).collect();
        dup_rows.push(r.gen_range(0..rows));
        dup_rows.sort();
        assert_eq!(
            brute(&permuted(&m, &dup_rows, &(0..cols).collect::<Vec<_>>())),
            base
        );
        let mut dup_cols: Vec<usize> = (0..cols).collect();
        dup_cols.push(r.gen_range(0..cols));
        assert_eq!(
            brute(&permuted(&m, &(0..rows).collect::<Vec<_>>(), &dup_cols)),
            base
        );

        let with_rows = m.vstack(&IntMatrix::identity(cols)).unwrap();
        assert_eq!(brute(&with_rows), base, "identity rows under {m}");
        let with_cols = m.hstack(&IntMatrix::identity(rows)).unwrap();
        assert_eq!(brute(&with_cols), base, "identity columns beside {m}");

        assert_eq!(brute(&m.transpose()), base, "transpose of {m}");
    }
}

#[test]
fn order_cap_is_sound() {
    let mut r = rng(23);
    let n = 3;
    for rows in 1..=3 {
        for _ in 0..8 {
            let a = random_nonzero(&mut r, rows, 2, 3);
            let p = kronecker(&a, &incidence(&complete_graph(n).unwrap()));
            let layout = KronLayout::complete(&a, n);
            let full = brute(&p);
            assert_eq!(
                lcmd_brute(&p, BruteOptions::for_layout(layout)).unwrap(),
                full,
                "{a}"
            );
            // every minor above the cap vanishes
            let cap = 2 * n - 2;
            for k in cap + 1..=p.rows().min(p.cols()) {
                let above = BruteOptions {
                    max_order: Some(k),
                    ..plain()
                };
                let below = BruteOptions {
                    max_order: Some(k - 1),
                    ..plain()
                };
                assert_eq!(
                    lcmd_brute(&p, above).unwrap(),
                    lcmd_brute(&p, below).unwrap()
                );
            }
            if rows <= 2 {
                assert_eq!(full, naive_lcmd(&p, usize::MAX));
            }
        }
    }
}

#[test]
fn chunked_folds_are_deterministic() {
    let a = mat(&[&[1, -2], &[3, 1]]);
    let p = kronecker(&a, &incidence(&complete_graph(4).unwrap()));
    let layout = KronLayout::complete(&a, 4);
    let base = lcmd_brute(&p, BruteOptions::for_layout(layout)).unwrap();
    for chunk in [1, 7, 64] {
        let plan = BrutePlan::new(
            &p,
            BruteOptions {
                chunk_size: chunk,
                ..BruteOptions::for_layout(layout)
            },
        )
        .unwrap();
        let mut acc = LcmAccumulator::new();
        // interleave odd and even chunks to mimic out-of-order workers
        for i in (0..plan.chunk_count())
            .filter(|i| i % 2 == 1)
            .chain((0..plan.chunk_count()).filter(|i| i % 2 == 0))
        {
            acc.merge(&plan.fold_chunk(i));
        }
        assert_eq!(acc.finish(), base, "chunk {chunk}");
    }
}

#[test]
fn transposing_the_queen_matrix_changes_the_value() {
    let mq = mat(&[&[1, 1], &[1, -1], &[1, 0], &[0, 1]]);
    let mqt = mat(&[&[1, 1, 1, 0], &[1, -1, 0, 1]]);
    let mb = mat(&[&[1, 1], &[1, -1]]);
    let d = incidence(&complete_graph(4).unwrap());
    let run = |a: &IntMatrix| {
        lcmd_brute(
            &kronecker(a, &d),
            BruteOptions::for_layout(KronLayout::complete(a, 4)),
        )
        .unwrap()
    };
    assert_eq!(run(&mqt), BigUint::from(24u32));
    assert_eq!(run(&mq), BigUint::from(8u32));
    assert_eq!(run(&mb), BigUint::from(8u32));
    // lcmd of the factor itself is transposition invariant
    assert_eq!(brute(&mq), brute(&mqt));
}

#[test]
fn zero_minors_are_skipped() {
    let m = mat(&[&[2, 4], &[1, 2]]);
    assert_eq!(brute(&m), BigUint::from(4u32));
    assert_eq!(m.det().unwrap(), BigInt::from(0));
}
