mod common;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use latpyr::circuits::{check_circuit_bound, coloops, combinatorial_pyramid_apexes, enumerate_circuits};
use latpyr::pyramids::standard_pyramid;
use latpyr::{IndexSet, LatticePolytope};

use common::{brute_force_circuits, polytope_strategy, rank, to_i128};

fn lifted(p: &LatticePolytope, i: usize) -> Vec<i128> {
    let mut r = to_i128(&p.intrinsic_vertices()[i]);
    r.push(1);
    r
}

#[test]
fn pyramid_over_square_has_the_apex_only() {
    let sq = LatticePolytope::from_coords(&[[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap();
    let p = standard_pyramid(&sq, 1);
    assert_eq!(combinatorial_pyramid_apexes(&p), IndexSet::from([0]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matches_subset_scan(p in polytope_strategy(1..=4, 2)) {
        let members: Vec<Vec<usize>> = enumerate_circuits(&p).iter().map(|c| c.members().to_vec()).collect();
        prop_assert_eq!(members, brute_force_circuits(&p));
    }

    #[test]
    fn relations_are_exact_and_minimal(p in polytope_strategy(1..=4, 2)) {
        for c in enumerate_circuits(&p) {
            // Σ z_k (v_k, 1) = 0 coordinatewise, which also balances the two sides.
            let size = p.dimension() + 1;
            for r in 0..size {
                let s: i128 = c.members().iter().zip(c.relation())
                    .map(|(&i, z)| lifted(&p, i)[r] * to_i128(std::slice::from_ref(z))[0])
                    .sum();
                prop_assert_eq!(s, 0);
            }
            let pos: BigInt = c.coefficients().iter().zip(c.relation()).filter(|(_, z)| **z > BigInt::zero()).map(|(a, _)| a.clone()).sum();
            let neg: BigInt = c.coefficients().iter().zip(c.relation()).filter(|(_, z)| **z < BigInt::zero()).map(|(a, _)| a.clone()).sum();
            prop_assert_eq!(pos, neg);
            prop_assert!(c.relation()[0] > BigInt::zero());
            prop_assert!(c.relation().iter().all(|z| !z.is_zero()));
            let g = c.relation().iter().fold(BigInt::zero(), |g, z| num_integer::Integer::gcd(&g, z));
            prop_assert_eq!(g, BigInt::from(1));
            for skip in c.members() {
                let rows: Vec<Vec<i128>> = c.members().iter().filter(|&i| i != skip).map(|&i| lifted(&p, i)).collect();
                prop_assert_eq!(rank(&rows), rows.len());
            }
            prop_assert_eq!(
                c.positive_part().union(&c.negative_part()).copied().collect::<IndexSet>(),
                c.member_set()
            );
        }
    }

    #[test]
    fn circuit_size_lemma(p in polytope_strategy(1..=5, 2)) {
        let v = check_circuit_bound(&p).unwrap();
        prop_assert!(v.holds(), "{:?}", v);
        prop_assert!(v.max_size <= p.dimension() + 2);
    }

    #[test]
    fn coloops_are_in_no_circuit(p in polytope_strategy(1..=4, 2)) {
        let comb = combinatorial_pyramid_apexes(&p);
        prop_assert_eq!(coloops(&p), comb);
    }
}
