use mirrorcert::autoform::enumerate_roots;
use mirrorcert::certify::{self, PairKind, RootPair};
use mirrorcert::chgeom::{
    cosh2_dist, dist, projections, sinh2_point_mirror, triangle_mirror_intersect, zero_convex_combination,
    Intersection, ZeroCombination,
};
use mirrorcert::exactnum::{Cyclo12, Eisenstein, RealQ3};
use mirrorcert::leechlat::{build_default, scale_e, Lattice, LatticeVector};
use mirrorcert::reflect::reflect_apply;
use proptest::prelude::*;
use std::sync::OnceLock;

fn lat() -> &'static Lattice {
    static L: OnceLock<Lattice> = OnceLock::new();
    L.get_or_init(build_default)
}

/// A point of ℂH¹³ near ρ̄: Nρ̄ plus a small combination of simple roots.
fn point(n: i64, coeffs: &[(usize, i64, i64)]) -> LatticeVector {
    let l = lat();
    let mut v = l.rho_bar().scale(&Cyclo12::from_int(n));
    for &(k, a, b) in coeffs {
        v = &v + &LatticeVector::from_e(&scale_e(Eisenstein::new(a, b), l.root(k)));
    }
    v
}

fn coeffs() -> impl Strategy<Value = Vec<(usize, i64, i64)>> {
    prop::collection::vec((0usize..26, -1i64..2, -1i64..2), 0..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn triangle_inequality(a in coeffs(), b in coeffs(), c in coeffs()) {
        let (x, y, z) = (point(12, &a), point(12, &b), point(12, &c));
        prop_assume!(x.norm().is_positive() && y.norm().is_positive() && z.norm().is_positive());
        let (dxy, dyz, dxz) = (dist(&x, &y).unwrap(), dist(&y, &z).unwrap(), dist(&x, &z).unwrap());
        prop_assert!(dxz <= dxy + dyz + 1e-9);
        prop_assert!(dxy >= 0.0);
    }

    #[test]
    fn reflections_preserve_distance_exactly(a in coeffs(), b in coeffs(), k in 0usize..26, inv in any::<bool>()) {
        let (x, y) = (point(12, &a), point(12, &b));
        prop_assume!(x.norm().is_positive() && y.norm().is_positive());
        let r = LatticeVector::from_e(lat().root(k));
        let w = if inv { Cyclo12::omega().conj() } else { Cyclo12::omega() };
        let (fx, fy) = (reflect_apply(&r, &w, &x), reflect_apply(&r, &w, &y));
        prop_assert_eq!(cosh2_dist(&fx, &fy).unwrap(), cosh2_dist(&x, &y).unwrap());
    }

    #[test]
    fn scaling_a_point_does_not_move_it(a in coeffs(), u in 0usize..6, s in 1i64..5) {
        let x = point(12, &a);
        prop_assume!(x.norm().is_positive());
        let c = &Cyclo12::from(Eisenstein::units()[u]) * &Cyclo12::from_int(s);
        prop_assert!(cosh2_dist(&x, &x.scale(&c)).unwrap().is_one());
    }
}

#[test]
fn simple_mirrors_are_equidistant_from_rho_bar() {
    let l = lat();
    let rb = l.rho_bar();
    let d0 = sinh2_point_mirror(&rb, &l.rho(0)).unwrap();
    assert!(d0.is_positive());
    for v in 0..l.num_roots() {
        assert_eq!(sinh2_point_mirror(&rb, &l.rho(v)).unwrap(), d0);
        assert_eq!(sinh2_point_mirror(&rb, &LatticeVector::from_e(l.root(v))).unwrap(), d0);
    }
}

/// Roots above the height bound cannot meet the region around ρ̄ cut out by the pair.
#[test]
fn high_roots_miss_the_triangle() {
    let l = lat();
    let rb = l.rho_bar();
    let shell = enumerate_roots(l, 3.0).unwrap();
    let bound = RealQ3::from_ints(5, 0); // ht² > 5 > 2.18²
    let high: Vec<_> = shell.roots.iter().filter(|s| l.height_sq(&s.root) > bound).take(50).collect();
    assert_eq!(high.len(), 50);
    for kind in PairKind::ALL {
        let pair = RootPair::representative(l, kind);
        let pr = projections(&rb, &pair.rho1, &pair.rho2).unwrap();
        for s in &high {
            let r = LatticeVector::from_e(&s.root);
            assert_eq!(triangle_mirror_intersect(&r, [&rb, &pr.p1, &pr.q]), Intersection::Empty, "{kind:?}");
        }
    }
}

#[test]
fn pair_mirrors_touch_the_triangle() {
    let l = lat();
    let rb = l.rho_bar();
    let pair = RootPair::representative(l, PairKind::Incident);
    let pr = projections(&rb, &pair.rho1, &pair.rho2).unwrap();
    let r1 = LatticeVector::from_e(&pair.r1);
    assert!(matches!(triangle_mirror_intersect(&r1, [&rb, &pr.p1, &pr.q]), Intersection::Edge { .. }));
    assert!(pr.q.ip(&pair.rho1).is_zero() && pr.q.ip(&pair.rho2).is_zero());
}

#[test]
fn zero_combinations() {
    let one = Cyclo12::one();
    let i = Cyclo12::i();
    assert_eq!(zero_convex_combination(&[one.clone(), i.clone(), &one + &i]), ZeroCombination::None);
    assert_eq!(zero_convex_combination(&[one.clone(), -one.clone(), i.clone()]), ZeroCombination::Nontrivial);
    assert_eq!(
        zero_convex_combination(&[one.clone(), Cyclo12::zero(), i.clone()]),
        ZeroCombination::VertexOnly { indices: vec![2] }
    );
    let w = Cyclo12::omega();
    assert_eq!(zero_convex_combination(&[one.clone(), w.clone(), &w * &w]), ZeroCombination::Nontrivial);
}

#[test]
fn certificates_reject_a_bad_epsilon() {
    let l = lat();
    let pair = RootPair::representative(l, PairKind::Orthogonal);
    assert!(certify::perturb_certificate(l, &pair, &num_rational::BigRational::from_integer(0.into())).is_err());
}

#[test]
fn delta_r_holds_at_every_simple_vertex() {
    let dr = certify::delta_r_all(lat());
    assert_eq!(dr.len(), 26);
    assert!(dr.iter().all(|d| d.holds));
}
