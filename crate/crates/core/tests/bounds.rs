mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use latpyr::bounds::{batyrev_threshold, check_all, main_threshold, volume_threshold, Conclusion};
use latpyr::generators::{paper_example, standard_simplex};
use latpyr::pyramids::standard_pyramid;

use common::polytope_strategy;

/// `C(n, k)` by Pascal's rule, independent of the library's product formula.
fn pascal(n: usize, k: usize) -> BigInt {
    let mut row = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = vec![BigInt::from(1); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

#[test]
fn thresholds_match_pascal() {
    for d in 0..5usize {
        for v in 1..8u64 {
            let expect = BigInt::from(4 * d) * pascal(2 * d + v as usize - 1, 2 * d);
            assert_eq!(batyrev_threshold(v, d), expect, "d={d} V={v}");
            assert_eq!(volume_threshold(v, d), BigInt::from((v as i64 - 1) * (2 * d as i64 + 1)));
        }
        for c in 0..5usize {
            assert_eq!(main_threshold(c, d), BigInt::from((c * (2 * d + 1) + 4 * d) as i64 - 1));
        }
    }
}

#[test]
fn high_fold_pyramids_satisfy_hypotheses() {
    let bases = [paper_example(2).unwrap(), standard_simplex(1)];
    let mut satisfied = 0;
    for b in &bases {
        for l in [4, 8] {
            let p = standard_pyramid(b, l);
            for r in check_all(&p).unwrap() {
                assert!(!r.is_violation(), "{r:?}");
                if r.hypothesis_satisfied && r.name.ends_with("theorem") {
                    satisfied += 1;
                    assert_eq!(r.conclusion, Conclusion::Holds);
                }
            }
        }
    }
    assert!(satisfied >= 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn no_violations(p in polytope_strategy(1..=4, 2)) {
        for r in check_all(&p).unwrap() {
            prop_assert!(!r.is_violation(), "{:?}", r);
            prop_assert_eq!(r.c, p.num_vertices() - p.dimension() - 1);
        }
    }
}
