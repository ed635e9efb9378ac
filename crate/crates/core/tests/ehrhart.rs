#![allow(clippy::int_plus_one)]

mod common;

use itertools::Itertools;
use num_bigint::BigInt;
use proptest::prelude::*;

use latpyr::bounds::triangulated_volume;
use latpyr::ehrhart::{codegree_by_interior, hstar, hstar_via_interpolation, lattice_point_counts};
use latpyr::generators::{paper_example, standard_simplex};
use latpyr::linalg::{solve_rational, IntMatrix};
use latpyr::{LatticePoint, Rational};

use common::{bbox_count, polytope_strategy};

#[test]
fn paper_example_family() {
    for d in 2..=4 {
        let p = paper_example(d).unwrap();
        let h = hstar_via_interpolation(&p).unwrap();
        let mut expect = vec![0u64; 2 * d];
        expect[0] = 1;
        expect[d] = 1;
        assert_eq!(h.coefficients(), expect.as_slice());
        assert_eq!(h.codegree(), d);
        assert_eq!(codegree_by_interior(&p), d);
        assert_eq!(p.count_lattice_points(1), 2 * d as u64);
    }
}

#[test]
fn paper_example_interior_point() {
    let p = paper_example(2).unwrap();
    let pts = p.interior_lattice_points(2);
    assert_eq!(pts, vec![latpyr::LatticePoint::from_i64(&[1, 1, 1, -2])]);
}

#[test]
fn simplex_counts_match_scan() {
    let s = standard_simplex(3);
    for k in 0..4 {
        assert_eq!(s.count_lattice_points(k), bbox_count(&s, k as i64, false));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_matches_bounding_box_scan(p in polytope_strategy(1..=3, 2), k in 0i64..=3) {
        prop_assert_eq!(p.count_lattice_points(k as u64), bbox_count(&p, k, false));
        prop_assert_eq!(p.lattice_points(k as u64).len() as u64, bbox_count(&p, k, false));
        if k >= 1 {
            prop_assert_eq!(p.interior_lattice_points(k as u64).len() as u64, bbox_count(&p, k, true));
        }
    }

    #[test]
    fn basic_identities(p in polytope_strategy(1..=4, 2)) {
        let h = hstar_via_interpolation(&p).unwrap();
        let n = p.dimension() as u64;
        prop_assert_eq!(h.get(0), 1);
        prop_assert_eq!(h.get(1) + n + 1, p.count_lattice_points(1));
        prop_assert_eq!(BigInt::from(h.volume()), triangulated_volume(&p));
        prop_assert_eq!(h.codegree(), codegree_by_interior(&p));
        prop_assert_eq!(h.degree() == 0, h.volume() == 1);
        prop_assert_eq!(&h, &hstar(&p).unwrap());
        if h.degree() >= 1 {
            let d = h.degree();
            prop_assert!(1 + h.get(1) <= h.get(d - 1) + h.get(d));
        }
        // h*_d counts interior points of codeg·P.
        let c = h.codegree() as u64;
        prop_assert_eq!(p.interior_lattice_points(c).len() as u64, h.get(h.degree()));
    }

    #[test]
    fn counts_are_monotone(p in polytope_strategy(1..=4, 2)) {
        let counts = lattice_point_counts(&p, 4);
        prop_assert!(counts.windows(2).all(|w| w[0] <= w[1]));
        for v in p.lattice_points(1) {
            prop_assert!(p.contains(&v));
        }
        for v in p.vertices() {
            prop_assert!(p.lattice_points(1).contains(v));
        }
    }

    #[test]
    fn stanley_monotonicity(p in polytope_strategy(1..=4, 2), mask in any::<u16>()) {
        // Q = conv of a vertex subset that still spans aff(P), or any subset
        // with zero padding when it does not.
        let idx: Vec<usize> = (0..p.num_vertices()).filter(|i| mask & (1 << (i % 16)) != 0).collect();
        prop_assume!(!idx.is_empty());
        let q = p.sub_polytope(&idx).unwrap();
        let hq = hstar(&q).unwrap();
        let hp = hstar(&p).unwrap();
        prop_assert!(hq.le_coefficientwise(&hp), "{:?} vs {:?}", hq, hp);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hrep_vertex_duality(p in polytope_strategy(2..=3, 2)) {
        prop_assume!(p.dimension() == p.ambient_dim());
        let n = p.dimension();
        let h = p.hrep();
        for ineq in &h.inequalities {
            let tight = p.vertices().iter().filter(|v| ineq.slack(v.coords()) == BigInt::from(0)).count();
            prop_assert!(tight >= n);
        }
        let mut found = std::collections::BTreeSet::new();
        for subset in h.inequalities.iter().combinations(n) {
            let rows: Vec<Vec<BigInt>> = subset.iter().map(|q| q.normal.clone()).collect();
            let m = IntMatrix::from_rows(&rows).unwrap();
            let rhs: Vec<Rational> = subset.iter().map(|q| Rational::from_integer(q.offset.clone())).collect();
            let Ok(Some(x)) = solve_rational(&m, &rhs) else { continue };
            if !x.iter().all(|c| c.is_integer()) {
                continue;
            }
            let x: Vec<BigInt> = x.iter().map(|c| c.to_integer()).collect();
            if h.contains(&x) {
                found.insert(LatticePoint::new(x));
            }
        }
        let verts: std::collections::BTreeSet<_> = p.vertices().iter().cloned().collect();
        prop_assert_eq!(found, verts);
    }
}
