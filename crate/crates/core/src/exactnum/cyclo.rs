//! ℚ(ζ₁₂) in the power basis (1, ζ, ζ², ζ³), ζ = e^{iπ/6}, ζ⁴ = ζ² − 1.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Eisenstein, ExactError, RealQ3};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclo12 {
    c: [BigRational; 4],
}

pub type Cyclo12Number = Cyclo12;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn fmt_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational, ExactError> {
    let bad = || ExactError::Parse(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl Cyclo12 {
    pub fn new(c0: BigRational, c1: BigRational, c2: BigRational, c3: BigRational) -> Self {
        Cyclo12 { c: [c0, c1, c2, c3] }
    }

    pub fn from_ints(c0: i64, c1: i64, c2: i64, c3: i64) -> Self {
        Cyclo12::new(q(c0), q(c1), q(c2), q(c3))
    }

    pub fn zero() -> Self {
        Cyclo12::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Cyclo12::from_ints(1, 0, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Cyclo12::from_ints(n, 0, 0, 0)
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyclo12::new(r, q(0), q(0), q(0))
    }

    pub fn zeta() -> Self {
        Cyclo12::from_ints(0, 1, 0, 0)
    }

    /// ω = ζ² − 1.
    pub fn omega() -> Self {
        Cyclo12::from_ints(-1, 0, 1, 0)
    }

    /// ξ = e^{−iπ/6} = ζ − ζ³.
    pub fn xi() -> Self {
        Cyclo12::from_ints(0, 1, 0, -1)
    }

    pub fn i() -> Self {
        Cyclo12::from_ints(0, 0, 0, 1)
    }

    /// √3 = 2ζ − ζ³.
    pub fn sqrt3() -> Self {
        Cyclo12::from_ints(0, 2, 0, -1)
    }

    /// θ = ω − ω̄ = i√3 = 2ζ² − 1.
    pub fn theta() -> Self {
        Cyclo12::from_ints(-1, 0, 2, 0)
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }

    pub fn conj(&self) -> Self {
        let [c0, c1, c2, c3] = &self.c;
        Cyclo12::new(c0 + c2, c1.clone(), -c2, -c1 - c3)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclo12 { c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r] }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&q(n))
    }

    pub fn is_real(&self) -> bool {
        self.c[2].is_zero() && self.c[1] == -(&self.c[3] * q(2))
    }

    /// The value as `a + b√3` when real.
    pub fn to_real(&self) -> Option<RealQ3> {
        if self.is_real() {
            Some(RealQ3::new(self.c[0].clone(), -self.c[3].clone()))
        } else {
            None
        }
    }

    pub fn from_real(r: &RealQ3) -> Self {
        let (a, b) = (r.a().clone(), r.b().clone());
        // a + b√3 = a + 2bζ − bζ³
        Cyclo12::new(a, &b * q(2), q(0), -b)
    }

    /// `x · x̄`, always a non-negative element of ℚ(√3).
    pub fn norm2(&self) -> RealQ3 {
        (self * &self.conj()).to_real().expect("x·x̄ is real")
    }

    /// Real part, as an element of ℚ(√3).
    pub fn re(&self) -> RealQ3 {
        let two = (self + &self.conj()).to_real().expect("x + x̄ is real");
        two.scale(&BigRational::new(1.into(), 2.into()))
    }

    /// Imaginary part, as an element of ℚ(√3).
    pub fn im(&self) -> RealQ3 {
        let d = (self - &self.conj()) * Cyclo12::i();
        // (x − x̄)·i = −2 Im(x)
        d.to_real().expect("(x − x̄)i is real").scale(&BigRational::new((-1).into(), 2.into()))
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm2();
        let ninv = n.inv()?;
        Ok(self.conj() * Cyclo12::from_real(&ninv))
    }

    pub fn div(&self, other: &Cyclo12) -> Result<Self, ExactError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclo12::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        let s3 = 3f64.sqrt();
        let z = [
            Complex64::new(1.0, 0.0),
            Complex64::new(s3 / 2.0, 0.5),
            Complex64::new(0.5, s3 / 2.0),
            Complex64::new(0.0, 1.0),
        ];
        self.c.iter().zip(z.iter()).map(|(c, z)| z * c.to_f64().unwrap_or(f64::NAN)).sum()
    }

    /// `a + bω` embeds as `(a − b) + bζ²`.
    pub fn to_eisenstein(&self) -> Option<Eisenstein> {
        if !self.c[1].is_zero() || !self.c[3].is_zero() {
            return None;
        }
        let a = &self.c[0] + &self.c[2];
        let b = &self.c[2];
        if !a.is_integer() || !b.is_integer() {
            return None;
        }
        Some(Eisenstein::new(a.to_integer().to_i64()?, b.to_integer().to_i64()?))
    }

    /// Whether the value lies in ℚ(ω) (no ζ, ζ³ components).
    pub fn in_q_omega(&self) -> bool {
        self.c[1].is_zero() && self.c[3].is_zero()
    }

    pub fn to_strings(&self) -> [String; 4] {
        [fmt_rational(&self.c[0]), fmt_rational(&self.c[1]), fmt_rational(&self.c[2]), fmt_rational(&self.c[3])]
    }

    pub fn from_strings(s: &[String]) -> Result<Self, ExactError> {
        if s.len() != 4 {
            return Err(ExactError::Parse(format!("{s:?}")));
        }
        Ok(Cyclo12::new(parse_rational(&s[0])?, parse_rational(&s[1])?, parse_rational(&s[2])?, parse_rational(&s[3])?))
    }
}

impl From<Eisenstein> for Cyclo12 {
    fn from(e: Eisenstein) -> Self {
        Cyclo12::from_ints(e.a - e.b, 0, e.b, 0)
    }
}

impl From<&RealQ3> for Cyclo12 {
    fn from(r: &RealQ3) -> Self {
        Cyclo12::from_real(r)
    }
}

impl Default for Cyclo12 {
    fn default() -> Self {
        Cyclo12::zero()
    }
}

impl<'a> Add<&'a Cyclo12> for &'a Cyclo12 {
    type Output = Cyclo12;
    fn add(self, o: &Cyclo12) -> Cyclo12 {
        Cyclo12 { c: [&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2], &self.c[3] + &o.c[3]] }
    }
}

impl<'a> Sub<&'a Cyclo12> for &'a Cyclo12 {
    type Output = Cyclo12;
    fn sub(self, o: &Cyclo12) -> Cyclo12 {
        Cyclo12 { c: [&self.c[0] - &o.c[0], &self.c[1] - &o.c[1], &self.c[2] - &o.c[2], &self.c[3] - &o.c[3]] }
    }
}

impl<'a> Mul<&'a Cyclo12> for &'a Cyclo12 {
    type Output = Cyclo12;
    fn mul(self, o: &Cyclo12) -> Cyclo12 {
        let mut d: [BigRational; 7] = Default::default();
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                if !y.is_zero() {
                    d[i + j] += x * y;
                }
            }
        }
        let [d0, d1, d2, d3, d4, d5, d6] = d;
        // ζ⁴ = ζ² − 1, ζ⁵ = ζ³ − ζ, ζ⁶ = −1
        Cyclo12 { c: [d0 - &d4 - d6, d1 - &d5, d2 + d4, d3 + d5] }
    }
}

impl Neg for &Cyclo12 {
    type Output = Cyclo12;
    fn neg(self) -> Cyclo12 {
        Cyclo12 { c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]] }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo12> for Cyclo12 {
            type Output = Cyclo12;
            fn $m(self, o: Cyclo12) -> Cyclo12 {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Cyclo12> for Cyclo12 {
            type Output = Cyclo12;
            fn $m(self, o: &Cyclo12) -> Cyclo12 {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Cyclo12> for &'a Cyclo12 {
            type Output = Cyclo12;
            fn $m(self, o: Cyclo12) -> Cyclo12 {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclo12 {
    type Output = Cyclo12;
    fn neg(self) -> Cyclo12 {
        -&self
    }
}

impl AddAssign<&Cyclo12> for Cyclo12 {
    fn add_assign(&mut self, o: &Cyclo12) {
        for (a, b) in self.c.iter_mut().zip(o.c.iter()) {
            *a += b;
        }
    }
}

impl SubAssign<&Cyclo12> for Cyclo12 {
    fn sub_assign(&mut self, o: &Cyclo12) {
        for (a, b) in self.c.iter_mut().zip(o.c.iter()) {
            *a -= b;
        }
    }
}

impl std::iter::Sum for Cyclo12 {
    fn sum<I: Iterator<Item = Cyclo12>>(iter: I) -> Self {
        let mut acc = Cyclo12::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl fmt::Display for Cyclo12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "ζ", "ζ²", "ζ³"];
        let mut first = true;
        for (c, n) in self.c.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if n.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{n}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Cyclo12 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclo12 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        Cyclo12::from_strings(&v).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_times_p_is_sqrt3() {
        let p: Cyclo12 = Eisenstein::P.into();
        assert_eq!(Cyclo12::xi() * p, Cyclo12::sqrt3());
        assert!((Cyclo12::sqrt3().to_complex().re - 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn theta_is_i_sqrt3() {
        let w = Cyclo12::omega();
        assert_eq!(&w - &w.conj(), Cyclo12::from_ints(-1, 0, 2, 0));
        assert_eq!(Cyclo12::theta(), Cyclo12::i() * Cyclo12::sqrt3());
    }

    #[test]
    fn basic_identities() {
        let z = Cyclo12::zeta();
        assert_eq!(z.pow(12), Cyclo12::one());
        assert_eq!(z.pow(6), -Cyclo12::one());
        assert_eq!(Cyclo12::sqrt3() * Cyclo12::sqrt3(), Cyclo12::from_int(3));
        assert_eq!(Cyclo12::omega().pow(3), Cyclo12::one());
        assert_eq!(Cyclo12::xi().pow(2), -Cyclo12::omega());
    }

    #[test]
    fn inverse_of_sum() {
        let x = Cyclo12::from_ints(4, 2, 0, -1); // 4 + √3
        let y = x.inv().unwrap();
        assert!((x * y).is_one());
        assert!(Cyclo12::zero().inv().is_err());
    }

    #[test]
    fn serde_round_trip() {
        let x = Cyclo12::new(BigRational::new(1.into(), 3.into()), q(-2), q(0), q(5));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"["1/3","-2/1","0/1","5/1"]"#);
        let y: Cyclo12 = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn eisenstein_round_trip() {
        let e = Eisenstein::new(3, -7);
        let c: Cyclo12 = e.into();
        assert_eq!(c.to_eisenstein(), Some(e));
        assert!((c.to_complex() - e.to_complex()).norm() < 1e-12);
    }
}
