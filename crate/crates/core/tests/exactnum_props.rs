use mirrorcert::exactnum::{fmt_rational, parse_rational, Cyclo12, Eisenstein, RealQ3};
use num_rational::BigRational;
use proptest::prelude::*;

fn eis() -> impl Strategy<Value = Eisenstein> {
    (-50i64..50, -50i64..50).prop_map(|(a, b)| Eisenstein::new(a, b))
}

fn cyc() -> impl Strategy<Value = Cyclo12> {
    prop::array::uniform4((-20i64..20, 1i64..6)).prop_map(|c| {
        let r = |(n, d): (i64, i64)| BigRational::new(n.into(), d.into());
        Cyclo12::new(r(c[0]), r(c[1]), r(c[2]), r(c[3]))
    })
}

fn real() -> impl Strategy<Value = RealQ3> {
    (-30i64..30, 1i64..7, -30i64..30, 1i64..7).prop_map(|(a, da, b, db)| {
        RealQ3::new(BigRational::new(a.into(), da.into()), BigRational::new(b.into(), db.into()))
    })
}

proptest! {
    #[test]
    fn eisenstein_ring_laws(x in eis(), y in eis(), z in eis()) {
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
        prop_assert_eq!((x * y).conj(), x.conj() * y.conj());
    }

    #[test]
    fn eisenstein_division(x in eis(), y in eis()) {
        prop_assume!(!y.is_zero());
        let (q, r) = x.div_rem(&y).unwrap();
        prop_assert_eq!(q * y + r, x);
        prop_assert!(r.norm() < y.norm());
        let g = x.gcd(&y);
        prop_assert!(g.divides(&x) && g.divides(&y));
        prop_assert_eq!((x * y).div_exact(&y), Some(x));
    }

    #[test]
    fn cyclo_field_laws(x in cyc(), y in cyc(), z in cyc()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x * &y).norm2(), &x.norm2() * &y.norm2());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn cyclo_embedding_is_a_homomorphism(x in cyc(), y in cyc()) {
        let p = (&x * &y).to_complex();
        let q = x.to_complex() * y.to_complex();
        prop_assert!((p - q).norm() <= 1e-9 * (1.0 + q.norm()));
        let s = (&x + &y).to_complex();
        prop_assert!((s - x.to_complex() - y.to_complex()).norm() <= 1e-9 * (1.0 + s.norm()));
    }

    #[test]
    fn realq3_order_matches_floats(x in real(), y in real()) {
        let (fx, fy) = (x.to_f64(), y.to_f64());
        if (fx - fy).abs() > 1e-9 {
            prop_assert_eq!(x < y, fx < fy);
        }
        prop_assert_eq!((&x * &y).to_f64().signum() * (fx * fy).signum() >= 0.0, true);
        prop_assert_eq!(x.signum() >= 0, fx >= -1e-12);
    }

    #[test]
    fn rational_strings_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let r = BigRational::new(n.into(), d.into());
        prop_assert_eq!(parse_rational(&fmt_rational(&r)).unwrap(), r);
    }

    #[test]
    fn cyclo_strings_round_trip(x in cyc()) {
        prop_assert_eq!(Cyclo12::from_strings(&x.to_strings()).unwrap(), x);
    }
}

#[test]
fn named_constants() {
    let w = Cyclo12::omega();
    assert!((&(&w * &w) + &(&w + &Cyclo12::one())).is_zero());
    assert_eq!(&Cyclo12::i() * &Cyclo12::i(), Cyclo12::from_int(-1));
    assert_eq!(&Cyclo12::sqrt3() * &Cyclo12::sqrt3(), Cyclo12::from_int(3));
    // pξ = √3
    assert_eq!(&Cyclo12::from(Eisenstein::P) * &Cyclo12::xi(), Cyclo12::sqrt3());
    assert_eq!(Cyclo12::xi().pow(12), Cyclo12::one());
    assert!(Eisenstein::units().iter().all(|u| u.is_unit() && u.pow(6) == Eisenstein::from_int(1)));
}
