mod common;

use common::*;
use lcmd_core::{
    collection_witness, complete_graph, det_pair, enumerate_pairs, incidence, kronecker,
    lcmd_formula, lcmd_formula_2x2, lcmd_small, reduce_identity_rows, BigUint, Collection,
    IntMatrix, Multiset, MultisetPair,
};
use num_integer::Integer;
use num_traits::Zero;
use rand::Rng;

fn divides(a: &BigUint, b: &BigUint) -> bool {
    (b % a).is_zero()
}

#[test]
fn collection_component_divides_pair_power_product() {
    let mut r = rng(30);
    for m in 1..=3 {
        for _ in 0..10 {
            let a = random_nonzero(&mut r, m, 2, 3);
            for n in 1..=6 {
                let mut bound = BigUint::from(1u32);
                for p in 1..=n / 2 {
                    for pair in enumerate_pairs(m, p) {
                        let d = det_pair(&a, &pair).unwrap();
                        if !d.is_zero() {
                            bound *= d.magnitude().pow((n / (2 * p)) as u32);
                        }
                    }
                }
                let v = lcmd_formula(&a, n).unwrap();
                assert!(divides(&v.collection_lcm, &bound), "A = {a}, n = {n}");
            }
        }
    }
}

#[test]
fn first_component_divides_value() {
    let mut r = rng(31);
    for _ in 0..40 {
        let rows = r.gen_range(1..=4);
        let a = random_nonzero(&mut r, rows, 2, 3);
        for n in 1..=7 {
            let v = lcmd_formula(&a, n).unwrap();
            let pow = lcmd_small(&a).unwrap().pow((n - 1) as u32);
            assert_eq!(v.lcmd_a_pow, pow);
            assert!(divides(&pow, &v.value));
            assert_eq!(v.value, v.lcmd_a_pow.lcm(&v.collection_lcm));
        }
    }
}

#[test]
fn adjoined_identity_rows_leave_formula_unchanged() {
    let mut r = rng(32);
    let e1 = mat(&[&[1, 0]]);
    let e2 = mat(&[&[0, 1]]);
    for _ in 0..30 {
        let rows = r.gen_range(1..=3);
        let a = random_nonzero(&mut r, rows, 2, 3);
        let variants: [IntMatrix; 3] = [
            a.vstack(&e1).unwrap(),
            e2.vstack(&a).unwrap(),
            a.vstack(&e1).unwrap().vstack(&e2).unwrap(),
        ];
        for v in &variants {
            let reduced = reduce_identity_rows(v).unwrap();
            for n in 2..=6 {
                assert_eq!(
                    lcmd_formula(&reduced, n).unwrap().value,
                    lcmd_formula(v, n).unwrap().value,
                    "A' = {v}, n = {n}"
                );
            }
        }
    }
}

#[test]
fn two_by_two_product_form_agrees_on_small_entries() {
    for e in 0..7i64.pow(4) {
        let v: Vec<i64> = (0..4).map(|k| (e / 7i64.pow(k)) % 7 - 3).collect();
        let a = mat(&[&v[..2], &v[2..]]);
        if a.is_zero() {
            continue;
        }
        for n in 1..=10 {
            assert_eq!(
                lcmd_formula_2x2(&a, n).unwrap().value,
                lcmd_formula(&a, n).unwrap().value,
                "A = {a}, n = {n}"
            );
        }
    }
}

#[test]
fn product_form_misses_mixed_collections() {
    let a = mat(&[&[-7, -9], &[-9, -9]]);
    let k = Collection::new(vec![
        MultisetPair::new(Multiset::new(vec![1, 1]), Multiset::new(vec![2, 2])).unwrap(),
        MultisetPair::new(Multiset::new(vec![1]), Multiset::new(vec![2])).unwrap(),
    ]);
    let p = kronecker(&a, &incidence(&complete_graph(6).unwrap()));
    let minor = collection_witness(&a, 6, &k).unwrap().det(&p).unwrap();
    assert_eq!(minor.magnitude(), &BigUint::from(46656u32));
    let full = lcmd_formula(&a, 6).unwrap().value;
    let short = lcmd_formula_2x2(&a, 6).unwrap().value;
    assert!(divides(minor.magnitude(), &full));
    assert!(!divides(minor.magnitude(), &short));
    assert_eq!(full, short * 2u32);
}
