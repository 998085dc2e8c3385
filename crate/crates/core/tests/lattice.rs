use mirrorcert::exactnum::Eisenstein;
use mirrorcert::leechlat::{build_default, ip_e, scale_e, unit_ratio, Lattice, LatticeVector, Sigma};
use mirrorcert::plane::{full_group, preserves_incidence};
use mirrorcert::reflect::{reflect_e, Reflection};
use proptest::prelude::*;
use std::sync::OnceLock;

fn lat() -> &'static Lattice {
    static L: OnceLock<Lattice> = OnceLock::new();
    L.get_or_init(build_default)
}

fn combo(coeffs: &[(i64, i64)]) -> Vec<Eisenstein> {
    let l = lat();
    let mut v = vec![Eisenstein::from_int(0); l.dim()];
    for (k, &(a, b)) in coeffs.iter().enumerate() {
        let s = scale_e(Eisenstein::new(a, b), l.root(k % l.num_roots()));
        for (x, y) in v.iter_mut().zip(s) {
            *x += y;
        }
    }
    v
}

#[test]
fn roots_have_norm_minus_three_and_lie_in_l() {
    let l = lat();
    for r in l.roots() {
        assert_eq!(ip_e(r, r), Eisenstein::from_int(-3));
        assert!(l.contains_e(r));
        assert!(l.is_primitive(r));
    }
}

/// Inner products of simple roots only depend on the incidence graph, so
/// every collineation permutes them compatibly.
#[test]
fn collineations_preserve_root_inner_products() {
    let l = lat();
    let g = full_group(l.plane(), false);
    let elems = g.elements(20_000);
    assert_eq!(elems.len(), 5616);
    for p in elems.iter().step_by(97) {
        assert!(preserves_incidence(l.plane(), p));
        for u in 0..l.num_roots() {
            for v in 0..l.num_roots() {
                let (pu, pv) = (p[u] as usize, p[v] as usize);
                assert_eq!(ip_e(l.root(pu), l.root(pv)), ip_e(l.root(u), l.root(v)));
            }
        }
    }
}

#[test]
fn sigma_permutes_simple_mirrors() {
    let l = lat();
    let s = Sigma::new(l).unwrap();
    let mut hit = vec![false; l.num_roots()];
    for r in l.roots() {
        let img = s.apply_e(r).to_e().expect("σ is integral");
        let k = (0..l.num_roots())
            .find(|&k| unit_ratio(&img, l.root(k)).is_some())
            .expect("image is a simple root up to a unit");
        hit[k] = true;
    }
    assert!(hit.iter().all(|&h| h));
}

#[test]
fn rho_bar_is_equidistant() {
    let l = lat();
    let rb = l.rho_bar();
    let first = l.rho(0).ip(&rb).norm2();
    for v in 1..l.num_roots() {
        assert_eq!(l.rho(v).ip(&rb).norm2(), first);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reflections_are_isometries_of_order_three(
        k in 0usize..26,
        a in prop::collection::vec((-3i64..4, -3i64..4), 6),
        b in prop::collection::vec((-3i64..4, -3i64..4), 6),
    ) {
        let l = lat();
        let (x, y) = (combo(&a), combo(&b));
        let r = l.root(k);
        let fx = reflect_e(r, Eisenstein::OMEGA, &x).unwrap();
        let fy = reflect_e(r, Eisenstein::OMEGA, &y).unwrap();
        prop_assert_eq!(ip_e(&fx, &fy), ip_e(&x, &y));
        prop_assert!(l.contains_e(&fx));
        let f3 = reflect_e(r, Eisenstein::OMEGA, &reflect_e(r, Eisenstein::OMEGA, &fx).unwrap()).unwrap();
        prop_assert_eq!(f3, x);
    }

    #[test]
    fn reflection_inverse(k in 0usize..26, a in prop::collection::vec((-3i64..4, -3i64..4), 5)) {
        let l = lat();
        let x = combo(&a);
        let f = Reflection::simple(l, k);
        prop_assert_eq!(f.inverse().apply(&f.apply(&x)), x);
    }

    #[test]
    fn membership_routes_agree(a in prop::collection::vec((-4i64..5, -4i64..5), 8), n in 0i64..3, m in 0i64..3) {
        let l = lat();
        let v = combo(&a);
        prop_assert!(l.contains_e(&v));
        // perturbing one reference coordinate by a non-multiple of p̄ usually leaves L
        let mut w = v.clone();
        w[1] += Eisenstein::new(n, m);
        prop_assert_eq!(l.contains_e(&w), l.contains_fast(&w));
        prop_assert_eq!(l.membership(&LatticeVector::from_e(&w)), l.contains_e(&w));
    }
}
