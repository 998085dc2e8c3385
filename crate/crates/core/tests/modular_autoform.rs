use mirrorcert::autoform::{
    self, e_m, enumerate_roots, lift, restrict_to_f, shell_around, AutoformError, CenterChoice, SeriesParams,
};
use mirrorcert::certify::{candidate_mirrors, projective_key};
use mirrorcert::exactnum::{Cyclo12, Eisenstein};
use mirrorcert::leechlat::{build_default, Lattice, LatticeVector, Sigma};
use mirrorcert::modular::{
    self, beta_fwd, beta_inv, explicit_extension, extension_lambda, in_aut_f, inner_product_direct,
    inner_product_via_beta, random_autf, random_gamma13, random_sl2, rng_for, UnimodularMatrix,
};
use mirrorcert::reflect::reflect_apply;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;
use std::collections::BTreeSet;
use std::sync::OnceLock;

fn lat() -> &'static Lattice {
    static L: OnceLock<Lattice> = OnceLock::new();
    L.get_or_init(build_default)
}

fn tau() -> impl Strategy<Value = Cyclo12> {
    (-6i64..7, 1i64..5, 1i64..9, 1i64..5).prop_map(|(a, da, b, db)| {
        let re = Cyclo12::from_rational(BigRational::new(a.into(), da.into()));
        &re + &Cyclo12::i().scale(&BigRational::new(b.into(), db.into()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_tests_agree(seed in any::<u64>()) {
        let mut rng = rng_for(seed, 1);
        let g = random_sl2(&mut rng, 12);
        let v = in_aut_f(&g).unwrap();
        prop_assert!(v.consistent());
        let h = random_autf(&mut rng);
        prop_assert!(in_aut_f(&h).unwrap().member());
    }

    #[test]
    fn aut_f_is_a_group(seed in any::<u64>()) {
        let mut rng = rng_for(seed, 2);
        let (g, h) = (random_autf(&mut rng), random_autf(&mut rng));
        prop_assert!(in_aut_f(&g.mul(&h)).unwrap().member());
        prop_assert!(in_aut_f(&g.inv()).unwrap().member());
        prop_assert!(g.mul(&g.inv()).is_projective_identity());
    }

    #[test]
    fn gamma13_extends_and_lambda_is_multiplicative(seed in any::<u64>()) {
        let mut rng = rng_for(seed, 3);
        let (g, h) = (random_gamma13(&mut rng), random_gamma13(&mut rng));
        prop_assert!(g.in_gamma(13));
        let lg = extension_lambda(&g).unwrap();
        prop_assert!(lg.extends && lg.consistent());
        let (a, b) = (random_autf(&mut rng), random_autf(&mut rng));
        let (la, lb, lab) = (extension_lambda(&a).unwrap(), extension_lambda(&b).unwrap(), extension_lambda(&a.mul(&b)).unwrap());
        prop_assert_eq!(lab.phi, la.phi * lb.phi);
        prop_assert!(extension_lambda(&g.mul(&h)).unwrap().extends);
    }

    #[test]
    fn automorphy_factor_is_a_cocycle(seed in any::<u64>(), t in tau()) {
        let mut rng = rng_for(seed, 4);
        let (g, h) = (random_sl2(&mut rng, 8), random_sl2(&mut rng, 8));
        let ht = h.apply_exact(&t).unwrap();
        prop_assert_eq!(g.mul(&h).cocycle(&t), &g.cocycle(&ht) * &h.cocycle(&t));
        prop_assert_eq!(g.mul(&h).apply_exact(&t).unwrap(), g.apply_exact(&ht).unwrap());
    }

    #[test]
    fn chart_round_trip_and_inner_products(t in tau(), u in tau()) {
        let (a, b) = beta_inv(&t).unwrap();
        prop_assert_eq!(beta_fwd(&a, &b).unwrap(), t.clone());
        let (c, d) = beta_inv(&u).unwrap();
        prop_assert_eq!(inner_product_via_beta((&a, &b), (&c, &d)), inner_product_direct((&a, &b), (&c, &d)));
    }

    #[test]
    fn mobius_maps_preserve_chart_distance(seed in any::<u64>(), t in tau(), u in tau()) {
        let mut rng = rng_for(seed, 5);
        let g = random_sl2(&mut rng, 6);
        let (tc, uc) = (t.to_complex(), u.to_complex());
        let d = modular::dist_h2(tc, uc);
        let dg = modular::dist_h2(g.apply(tc), g.apply(uc));
        prop_assert!((d - dg).abs() <= 1e-7 * (1.0 + d));
    }

    #[test]
    fn unit_scaling_is_exact(k in 0usize..130, u in 0usize..6, m in 1u32..4, t in tau()) {
        let l = lat();
        let c = &candidate_mirrors(l)[k];
        let z = lift(l, &t).unwrap();
        let base = LatticeVector::from_e(&c.root).ip(&z).pow(6 * m);
        let scaled = mirrorcert::leechlat::scale_e(Eisenstein::units()[u], &c.root);
        prop_assert_eq!(LatticeVector::from_e(&scaled).ip(&z).pow(6 * m), base);
    }
}

#[test]
fn bad_matrices_are_rejected() {
    assert!(UnimodularMatrix::new(2, 0, 0, 1).is_err());
    assert!(UnimodularMatrix::new(0, 0, 0, 0).is_err());
    assert!(UnimodularMatrix::new(1, 1, 0, 1).is_ok());
}

#[test]
fn explicit_lifts_are_isometries_of_l() {
    let l = lat();
    let sigma = Sigma::new(l).unwrap();
    let mut rng = rng_for(11, 0);
    for _ in 0..5 {
        let g = random_gamma13(&mut rng);
        let images = explicit_extension(l, &sigma, &g).expect("Γ(13) extends");
        let basis: Vec<LatticeVector> = l.basis().iter().map(|b| LatticeVector::from_e(b)).collect();
        for i in 0..basis.len() {
            assert!(l.membership(&images[i]));
            for j in 0..basis.len() {
                assert_eq!(images[i].ip(&images[j]), basis[i].ip(&basis[j]));
            }
        }
    }
}

#[test]
fn low_roots_are_the_candidate_mirrors() {
    let l = lat();
    let shell = enumerate_roots(l, 2.2).unwrap();
    let got: BTreeSet<_> = shell.roots.iter().map(|s| projective_key(&s.root)).collect();
    let want: BTreeSet<_> = candidate_mirrors(l).iter().map(|c| projective_key(&c.root)).collect();
    assert_eq!(got.len(), 130);
    assert_eq!(got, want);
}

#[test]
fn rho_bar_shell_is_sigma_stable() {
    let l = lat();
    let sigma = Sigma::new(l).unwrap();
    let shell = shell_around(l, &l.rho_bar(), 3.0).unwrap();
    let keys: BTreeSet<_> = shell.roots.iter().map(|s| projective_key(&s.root)).collect();
    assert_eq!(keys.len(), shell.roots.len());
    for s in &shell.roots {
        let img = sigma.apply_e(&s.root).to_e().expect("integral");
        assert!(keys.contains(&projective_key(&img)));
    }
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn series_is_invariant_under_simple_reflections() {
    let l = lat();
    let params = SeriesParams { m: 2, bound: 2.5, center: CenterChoice::Point };
    let z = lift(l, &Cyclo12::i().scale_int(2)).unwrap();
    let f = e_m(l, &z, &params).unwrap();
    for k in [0usize, 5, 13, 20] {
        let r = LatticeVector::from_e(l.root(k));
        let fz = reflect_apply(&r, &Cyclo12::omega(), &z);
        let g = e_m(l, &fz, &params).unwrap();
        assert_eq!(g.roots, f.roots);
        assert!(rel(g.value, f.value) < 1e-9, "root {k}: {} vs {}", g.value, f.value);
    }
}

/// z(i) is a multiple cρ̄, so E_m(z(i)) = c^{−6m} E_m(ρ̄).
#[test]
fn restriction_at_i_is_a_multiple_of_the_value_at_rho_bar() {
    let l = lat();
    let rb = l.rho_bar();
    let params = SeriesParams { m: 2, bound: 2.5, center: CenterChoice::Point };
    let z = lift(l, &Cyclo12::i()).unwrap();
    let c = rb.ip(&z).div(&Cyclo12::from_real(&rb.norm())).unwrap();
    assert_eq!(rb.scale(&c), z);
    let at_i = restrict_to_f(l, &Cyclo12::i(), &params).unwrap();
    let at_rho = e_m(l, &rb, &params).unwrap();
    let expected = at_rho.value * c.to_complex().powi(-12);
    assert!(rel(at_i.value, expected) < 1e-9);
}

#[test]
fn series_errors() {
    let l = lat();
    let z = lift(l, &Cyclo12::i()).unwrap();
    let bad = SeriesParams { m: 2, bound: autoform::MAX_BOUND + 1.0, center: CenterChoice::Point };
    assert!(matches!(e_m(l, &z, &bad), Err(AutoformError::CapExceeded(_))));
    let m0 = SeriesParams { m: 0, ..SeriesParams::default() };
    assert!(matches!(e_m(l, &z, &m0), Err(AutoformError::BadExponent)));
}
