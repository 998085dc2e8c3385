use mirrorcert::plane::{
    build_plane, ccs_gon, collineation_generators, enumerate_12gons, full_group, pair_orbits, preserves_incidence,
};
use proptest::prelude::*;

#[test]
fn small_planes_have_the_right_shape() {
    for q in [2usize, 3, 4, 5, 7, 8, 9] {
        let p = build_plane(q).unwrap();
        let n = q * q + q + 1;
        assert_eq!(p.n(), n, "q = {q}");
        for l in n..2 * n {
            assert_eq!(p.points_on(l).len(), q + 1);
        }
        for x in 0..n {
            assert_eq!(p.lines_through(x).len(), q + 1);
        }
        // two points span exactly one line
        for x in 0..n.min(6) {
            for y in x + 1..n {
                let common = p.lines_through(x).iter().filter(|l| p.incident(y, **l)).count();
                assert_eq!(common, 1);
            }
        }
        for g in collineation_generators(&p) {
            assert!(preserves_incidence(&p, &g.permutation(&p)));
        }
    }
}

#[test]
fn non_prime_powers_are_rejected() {
    for q in [0usize, 1, 6, 10, 12] {
        assert!(build_plane(q).is_err(), "q = {q}");
    }
}

#[test]
fn orbits_on_vertex_pairs_and_12_gons() {
    let p = build_plane(3).unwrap();
    let g = full_group(&p, true);
    assert_eq!(g.order(100_000), 11232);
    assert_eq!(pair_orbits(&p, &g).len(), 3);
    let gons = enumerate_12gons(&p);
    assert_eq!(gons.len(), 468);
    let sorted = |v: [usize; 12]| {
        let mut v = v;
        v.sort();
        v
    };
    let labelled = sorted(ccs_gon(&p).unwrap().vertices);
    assert_eq!(gons.iter().filter(|x| sorted(x.vertices) == labelled).count(), 1);
}

proptest! {
    #[test]
    fn polarity_is_an_involution(v in 0usize..26) {
        let p = build_plane(3).unwrap();
        prop_assert_eq!(p.dual_vertex(p.dual_vertex(v)), v);
        prop_assert_ne!(p.is_point(v), p.is_point(p.dual_vertex(v)));
        for u in 0..26 {
            prop_assert_eq!(p.adjacent(u, v), p.adjacent(p.dual_vertex(u), p.dual_vertex(v)));
        }
    }

    #[test]
    fn group_elements_preserve_incidence(k in 0usize..11232) {
        let p = build_plane(3).unwrap();
        let elems = full_group(&p, true).elements(20_000);
        prop_assert!(preserves_incidence(&p, &elems[k]));
    }
}
