mod common;

use proptest::prelude::*;

use latpyr::boxpoints::{simplex_support, EmbeddedSimplex};
use latpyr::circuits::combinatorial_pyramid_apexes;
use latpyr::ehrhart::hstar;
use latpyr::generators::paper_example;
use latpyr::pyramids::{apex_indices, decompose, is_apex_general, is_apex_simplex, standard_pyramid};
use latpyr::IndexSet;

use common::{polytope_strategy, simplex_strategy};

#[test]
fn paper_example_has_no_apex() {
    for d in 2..=4 {
        let p = paper_example(d).unwrap();
        assert!(apex_indices(&p).is_empty());
        assert_eq!(decompose(&p).fold_count(), 0);
    }
}

#[test]
fn apex_of_pyramid_over_paper_example() {
    let p = standard_pyramid(&paper_example(3).unwrap(), 1);
    let s = EmbeddedSimplex::from_polytope(&p).unwrap();
    assert!(is_apex_simplex(&s, 0).unwrap());
    assert_eq!(apex_indices(&p), IndexSet::from([0]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pyramids_preserve_hstar(b in polytope_strategy(1..=3, 2), l in 1usize..=3) {
        let p = standard_pyramid(&b, l);
        prop_assert_eq!(p.dimension(), b.dimension() + l);
        prop_assert_eq!(p.num_vertices(), b.num_vertices() + l);
        let (hp, hb) = (hstar(&p).unwrap(), hstar(&b).unwrap());
        prop_assert_eq!(hp.padded(p.dimension() + 1), hb.padded(p.dimension() + 1));
        let dec = decompose(&p);
        prop_assert!(dec.fold_count() >= l);
        prop_assert!(hstar(&dec.base).unwrap().same_polynomial(&hb));
        prop_assert!(hstar(&dec.reconstruct()).unwrap().same_polynomial(&hb));
        prop_assert_eq!(decompose(&dec.base).fold_count(), 0);
    }

    #[test]
    fn apex_iff_volume_is_kept(p in polytope_strategy(1..=4, 2)) {
        let vol = hstar(&p).unwrap().volume();
        for (i, v) in p.vertices().iter().enumerate() {
            let apex = is_apex_general(&p, v).unwrap();
            let keeps_volume = p.dimension() >= 1 && {
                let q = p.without_vertex(i).unwrap();
                q.dimension() + 1 == p.dimension() && hstar(&q).unwrap().volume() == vol
            };
            prop_assert_eq!(apex, keeps_volume, "vertex {}", i);
        }
    }

    #[test]
    fn simplex_apex_three_way(p in simplex_strategy(1..=4, 3, 60)) {
        let s = EmbeddedSimplex::from_polytope(&p).unwrap();
        let support = simplex_support(&s);
        let general = apex_indices(&p);
        for i in 0..p.num_vertices() {
            prop_assert_eq!(is_apex_simplex(&s, i).unwrap(), !support.contains(&i));
            prop_assert_eq!(general.contains(&i), !support.contains(&i));
        }
        // The first stripped apex is the first index outside the support.
        let dec = decompose(&p);
        let first_outside = (0..p.num_vertices()).find(|i| !support.contains(i));
        prop_assert_eq!(dec.apexes.first(), first_outside.map(|i| &p.vertices()[i]));
    }

    #[test]
    fn lattice_apexes_are_combinatorial_apexes(p in polytope_strategy(1..=4, 2)) {
        let comb = combinatorial_pyramid_apexes(&p);
        prop_assert!(apex_indices(&p).is_subset(&comb));
    }
}
